#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace koszul {

using Weight = std::vector<std::int64_t>;

/// Partial flag variety of successive quotients of V, dim V = n. The blocks
/// list the quotient ranks from the top; whatever remains is the universal
/// subbundle. Grass_k(V) of k-dimensional quotients has blocks {k}; the
/// incidence variety inside P^r x Grass_i(V) has blocks {1, i-1}.
struct FlagSignature {
    std::size_t n = 0;
    std::vector<std::size_t> quotient_blocks;

    static FlagSignature grassmannian(std::size_t n, std::size_t k);
    static FlagSignature incidence(std::size_t i, std::size_t r);

    /// Quotient blocks followed by the subbundle block (omitted when empty).
    std::vector<std::size_t> blocks() const;
    /// Dimension of the flag variety.
    std::size_t dimension() const;
    void validate() const;
};

/// Weights list one entry per basis vector of V, quotient blocks first.
/// A bundle is homogeneous and irreducible when its weight is weakly
/// decreasing inside every block; Q on a Grassmannian is (1, 0, .., 0 | 0, .., 0).
void validate_weight(const FlagSignature& sig, const Weight& w);

/// Parses "1,1,0|0,0,0,0". Block sizes are taken from the bars.
Weight parse_weight(const std::string& text, std::vector<std::size_t>* block_sizes = nullptr);
std::string format_weight(const FlagSignature& sig, const Weight& w);

struct BottResult {
    bool zero = true;
    std::size_t degree = 0;
    /// Dominant GL(V) weight of the only nonzero cohomology group.
    Weight weight;
    mpz_class dim = 0;

    nlohmann::json to_json() const;
};

/// Bott's algorithm with rho = (n-1, ..., 0): a repeated entry in w + rho
/// kills all cohomology; otherwise sorting takes l inversions and the
/// cohomology sits in degree l alone.
BottResult bott_cohomology(const FlagSignature& sig, const Weight& w);

/// prod_{i<j} (l_i - l_j + j - i) / (j - i). Requires a weakly decreasing input.
mpz_class weyl_dim(const Weight& lambda);

Weight canonical_weight(const FlagSignature& sig);
/// Weight of the dual bundle: negate and reverse inside each block.
Weight dual_weight(const FlagSignature& sig, const Weight& w);
/// Weight of E^dual (x) K; its cohomology in degree dim - l has the dimension of H^l(E).
Weight serre_dual(const FlagSignature& sig, const Weight& w);

/// Direct image along the projection forgetting everything but the first
/// quotient block: the fibre is the flag variety of the remaining blocks
/// inside a space of dimension n - b_1, acted on by the trailing entries.
/// The leading entries are returned untouched as the weight of the base.
struct RelativeBottResult {
    Weight base_weight;
    BottResult fibre;
};
RelativeBottResult relative_bott(const FlagSignature& sig, const Weight& w);

/// Weights of Lambda^j of the tautological bundles on Grass_k(V).
Weight wedge_quotient_weight(std::size_t n, std::size_t k, std::size_t j);
Weight wedge_sub_dual_weight(std::size_t n, std::size_t k, std::size_t j);

struct PieceCheck {
    std::string bundle;
    Weight weight;
    BottResult global;
    RelativeBottResult relative;
};

struct TermCheck {
    std::string kind; // "product" or "incidence"
    std::size_t j = 0;
    std::string description;
    std::vector<PieceCheck> pieces;
    /// "exact": every piece is concentrated in one degree and dimensions match;
    /// "euler": pieces land in different degrees, only the Euler characteristic is certified;
    /// "fail": a mismatch.
    std::string status;
    mpz_class expected;
    mpz_class computed;
    /// Rank of the direct image to P^r, from relative Bott on the fibres.
    mpz_class relative_rank;
    bool relative_concentrated = true;

    nlohmann::json to_json() const;
};

struct Theorem25Report {
    std::size_t i = 0;
    std::size_t r = 0;
    std::vector<TermCheck> terms;

    bool product_terms_green() const;
    bool all_consistent() const;
    nlohmann::json to_json() const;
};

/// Term-by-term direct-image check of the geometric Koszul complex on
/// P^r x Grass_i(V). Product terms O(-j) (x) Lambda^{n-j} S^dual for j = i..n,
/// incidence terms O(-j) (x) Lambda^j Q restricted to the incidence variety,
/// filtered by 0 -> K -> Q -> O(1) -> 0, for j = 0..i-1.
Theorem25Report verify_theorem25_terms(std::size_t i, std::size_t r);

/// Restriction of sections H^0(P^r x Grass_i, O(a) (x) Lambda^k Q) -> H^0(I, same)
/// for k <= i-1, compared at the level of dimensions and vanishing.
struct RestrictionCheck {
    std::size_t i, r, k;
    std::int64_t twist;
    mpz_class grassmannian_side;
    mpz_class incidence_side;
    bool higher_vanish;
    bool holds() const { return higher_vanish && grassmannian_side == incidence_side; }
};
RestrictionCheck check_section_restriction(std::size_t i, std::size_t r, std::size_t k, std::int64_t twist);

} // namespace koszul
