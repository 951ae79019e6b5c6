#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace koszul {

/// Sum c_i h^i in A(P^n) = Q[h]/(h^{n+1}), h the hyperplane class.
class ChowClass {
public:
    explicit ChowClass(std::size_t n) : coeffs_(n + 1, 0) {}
    ChowClass(std::size_t n, std::vector<mpq_class> coeffs);

    static ChowClass constant(std::size_t n, const mpq_class& c);
    /// exp(a h) = ch(O(a)).
    static ChowClass exp_hyperplane(std::size_t n, std::int64_t a);
    /// td(P^n) = (h / (1 - e^{-h}))^{n+1}.
    static ChowClass todd(std::size_t n);

    std::size_t n() const { return coeffs_.size() - 1; }
    const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }
    mpq_class& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass scaled(const mpq_class& c) const;
    /// Adams operation on a Chern character: multiplies the h^j part by t^j.
    ChowClass adams(std::int64_t t) const;
    /// Coefficient of h^n.
    const mpq_class& top() const { return coeffs_.back(); }

    bool operator==(const ChowClass& o) const { return coeffs_ == o.coeffs_; }
    std::string to_string() const;

private:
    void check_same(const ChowClass& o) const;
    std::vector<mpq_class> coeffs_;
};

/// One term m * O(a) sitting in homological position l of a resolution.
struct ResolutionTerm {
    std::size_t position = 0;
    mpz_class multiplicity;
    std::int64_t twist = 0;
};

/// A vector bundle on P^n known through its Chern character and, when it
/// was built that way, the resolution that produced it.
struct BundleDescriptor {
    std::string name;
    mpz_class rank;
    ChowClass ch;
    std::vector<ResolutionTerm> resolution;

    std::size_t n() const { return ch.n(); }
    nlohmann::json to_json() const;
};

BundleDescriptor line_bundle(std::size_t n, std::int64_t a);
BundleDescriptor from_resolution(std::string name, std::size_t n, std::vector<ResolutionTerm> terms);
BundleDescriptor tensor(const BundleDescriptor& a, const BundleDescriptor& b);
BundleDescriptor twist(const BundleDescriptor& b, std::int64_t a);

/// ch of the i-th exterior power via Adams operations and the recursion
/// i ch(L^i B) = sum_{t=1}^{i} (-1)^{t+1} ch(L^{i-t} B) psi^t(ch B).
BundleDescriptor wedge_ch(const BundleDescriptor& b, std::size_t i);

/// chi = coefficient of h^n in ch * td; throws std::logic_error when not integral.
mpz_class euler_char(const BundleDescriptor& b);
/// Alternating sum of chi over the resolution terms.
mpz_class resolution_euler_char(const BundleDescriptor& b);

/// Chern classes c_0..c_n from ch by Newton's identities (p_t = t! ch_t).
std::vector<mpq_class> chern_classes(const ChowClass& ch);

/// Bundles attached to a K3 of genus g = 2k - sigma through its rank-two
/// Lazarsfeld-Mukai bundle E, living on P = P^{e-1}, e = h0(E) = g - k + 2.
struct LMBundles {
    int k;
    int sigma;
    int g;
    int e;
    std::size_t dim_P;
    /// h0(L) = r + 1
    int h0_L;

    LMBundles(int k, int sigma);

    /// 0 -> O(-2) -> H0(E) (x) O(-1) -> H0(L) (x) O -> Q' -> 0
    BundleDescriptor quotient() const;
    /// 0 -> O(-2) -> H0(E) (x) O(-1) -> S' -> 0
    BundleDescriptor sub() const;
    /// L_0 = O, L_1 = Q', and for j >= 2
    /// 0 -> h0((j-1)L) O(-2) -> h0(E (x) L^{j-1}) O(-1) -> h0(jL) O -> L_j -> 0.
    BundleDescriptor ladder(int j) const;
    /// Linear resolution F_l of Lambda^i Q', an independent route to wedge_ch.
    BundleDescriptor wedge_quotient_resolution(std::size_t i) const;

    /// h0(X, mL) = 2 + m^2 (g - 1) for m >= 1.
    mpz_class h0_multiple(int m) const;
    /// h0(X, E (x) L^m) = chi = ch_2 + 2 rank.
    mpz_class h0_twisted_E(int m) const;
};

struct Assertion {
    std::string claim;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string justification;

    nlohmann::json to_json() const;
};

struct ChernReport {
    std::string check;
    int k = 0;
    int sigma = 0;
    std::vector<Assertion> assertions;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

/// chi(Lambda^i Q') for i <= k, chi(Lambda^i Q' (x) L_j) for i <= k-2-sigma
/// and j = 1..3, both F-route and lambda-route, and for sigma = 1 the count
/// Lambda^k H0(L) = S^{k-1} H0(E) + h0(Lambda^k Q').
ChernReport verify_theorem44_dims(int k, int sigma);

/// Literal form of the exterior-power count: chi(Lambda^i Q') = C(2k+1-sigma, i)
/// for every i <= k, with no exception for sigma = 1.
ChernReport exterior_power_counts(int k, int sigma);

/// sigma = 0: rank S' = k+1, c1(S') = -(e-2) h, rank Q' = k, and
/// c_j(Lambda^2 S' (x) O(2)) = 0 for k+1 <= j <= dim P.
ChernReport verify_tango_constraints(int k);

/// sum_{j=0}^{k} (-1)^j ch(Lambda^{k-j} Q' (x) L_j) = 0.
ChernReport verify_ladder_complex(int k, int sigma);

} // namespace koszul
