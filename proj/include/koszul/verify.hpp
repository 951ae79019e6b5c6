#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszul/koszul.hpp"
#include "koszul/models.hpp"

namespace koszul {

/// status: "pass", "fail", "special_member_candidate" (a vanishing claim that
/// failed on one random member), "info" (reported, not asserted) or "skipped".
struct ReportEntry {
    std::string assertion;
    std::string expected;
    std::string computed;
    std::string status;
    std::optional<std::uint64_t> seed;

    bool failed() const { return status == "fail" || status == "special_member_candidate"; }
    nlohmann::json to_json() const;
};

struct VerificationReport {
    std::string claim;
    std::string model;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    std::vector<std::uint64_t> seeds;
    std::vector<ReportEntry> entries;
    std::vector<std::string> notes;
    /// Seeds actually used, after regeneration of degenerate draws.
    std::map<std::uint64_t, std::uint64_t> effective_seed;
    std::map<std::uint64_t, double> seed_wall_clock_s;
    double wall_clock_s = 0;

    /// No entry failed; info and skipped entries do not count.
    bool all_pass() const;
    nlohmann::json to_json() const;
};

/// Rejects characteristics the vanishing statement for k does not cover:
/// p <= k or p | k+1.
void check_characteristic(int k, const FieldSpec& field);

/// For each seed: K_{k-2,2} = 0, K_{k-1,1} = C(2k-1, k-2), K_{k,1} = 0 on the
/// even-genus model g = 2k. Only the three cells are computed.
VerificationReport verify_theorem45(int k, const FieldSpec& field, const std::vector<std::uint64_t>& seeds);

/// Odd-genus bookkeeping for g = 5, k = 3 on the (2,2,2) complete intersection.
/// Asserts the boundary dimensions, C(2k,k) = C(2k-1,k-1) + C(2k-1,k) for k <= 10
/// and K_{1,1} = 3; reports K_{3,1}, K_{1,2} and the cokernel dimension implied
/// by the resolution of M without asserting anything about surjectivity.
VerificationReport verify_remark46(const FieldSpec& field, const std::vector<std::uint64_t>& seeds);

/// dim K_{p,1} = dim K_{r-2-p,2} for every p with both cells computed.
VerificationReport verify_duality(const BettiTable& table);

/// Tables of a K3 and of a hyperplane-section canonical curve agree for
/// p <= p_max (default g - 2) and q <= q_max.
VerificationReport verify_hyperplane_principle(const ModelSpec& spec, std::uint64_t seed,
                                               std::optional<std::size_t> p_max = std::nullopt,
                                               std::size_t q_max = 3);

} // namespace koszul
