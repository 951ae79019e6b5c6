#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

/// splitmix64 stream. The algorithm is fixed so that a seed reproduces the
/// same coefficients in every implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold)
                return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Raised when a random choice produced a degenerate model. Another seed
/// will almost surely work.
class RegenerateSeed : public std::runtime_error {
public:
    RegenerateSeed(const std::string& what, std::uint64_t seed)
        : std::runtime_error(what + "; regenerate seed"), seed_(seed)
    {
    }
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

enum class ModelKind { RationalNormalCurve, Veronese, CompleteIntersectionK3, MukaiK3, HyperplaneSection };

struct ModelSpec {
    ModelKind kind = ModelKind::RationalNormalCurve;
    /// rnc: degree d. veronese: (n, d).
    int n = 0;
    int d = 0;
    /// ci: degrees of the defining forms.
    std::vector<int> degrees;
    /// mukai: genus 6 or 8.
    int mukai_genus = 0;
    /// section: the K3 being cut.
    std::shared_ptr<const ModelSpec> base;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    std::uint64_t seed = 0;

    /// "rnc:3", "veronese:2,2", "ci:2,3", "mukai:6", "section:ci:2,3".
    static ModelSpec parse(const std::string& text, FieldSpec field = FieldSpec::prime(kDefaultPrime),
                           std::uint64_t seed = 0);
    std::string to_string() const;

    bool is_k3() const { return kind == ModelKind::CompleteIntersectionK3 || kind == ModelKind::MukaiK3; }
    bool is_canonical_curve() const { return kind == ModelKind::HyperplaneSection; }
    /// Sectional genus for K3 kinds and for their hyperplane sections.
    int genus() const;
    /// Embedding dimension r of X in P^r.
    std::size_t ambient_dim() const;
    /// Declared Hilbert function h(0..top).
    std::vector<std::uint64_t> hilbert(std::size_t top) const;
};

/// Lazarsfeld-Mukai numerology for a K3 of genus g = 2k - sigma.
struct LMInvariants {
    int g = 0;
    int k = 0;
    int sigma = 0;
    int r = 0;
    int pencil_degree = 0;
    int h0_A = 0;
    int h1_A = 0;
    /// e = h0(E) = h0(A) + h1(A) = g - k + 2
    int e = 0;
    int dim_P = 0;
    int rank_Q = 0;
    int rank_S = 0;
    int c2_E = 0;
    /// dimension of the linear span of a section's zero scheme
    int zero_scheme_span = 0;
    std::int64_t L_squared = 0;
};

LMInvariants lm_invariants(int genus);
LMInvariants lm_invariants(const ModelSpec& spec);

/// Builds the ideal and checks its Hilbert function in degrees <= 3.
Presentation build(const ModelSpec& spec);

/// Cuts a K3 model in P^g by a random hyperplane x_g = sum c_i x_i.
/// The result is a canonical curve of genus g in P^{g-1}.
Presentation hyperplane_section(const Presentation& P, std::uint64_t seed);

struct ModelInfo {
    std::string example;
    std::string description;
};

std::vector<ModelInfo> list_models();

/// Canonical model for the vanishing statements with k = 2, 3, 4 (sigma = 0).
ModelSpec even_genus_model(int k, FieldSpec field, std::uint64_t seed);

/// Plucker quadrics of G(2, n) in the coordinates p_ij (i < j), indexed colexicographically.
std::vector<Polynomial> plucker_quadrics(std::size_t n);

} // namespace koszul
