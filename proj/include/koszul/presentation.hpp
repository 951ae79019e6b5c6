#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszul/field.hpp"
#include "koszul/polynomial.hpp"

namespace koszul {

/// An embedded variety X in P^r given by homogeneous generators of its ideal.
/// V = H^0(L) has dimension r + 1 and its basis is the list of variables.
class Presentation {
public:
    Presentation(std::size_t ambient_dim, std::vector<Polynomial> generators, FieldSpec field,
                 std::string label, std::vector<std::string> variables = {},
                 std::optional<std::vector<std::uint64_t>> hilbert_hint = std::nullopt);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t nvars() const { return ambient_dim_ + 1; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const FieldSpec& field() const { return field_; }
    const std::string& label() const { return label_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::optional<std::vector<std::uint64_t>>& hilbert_hint() const { return hilbert_hint_; }

    /// A linear generator means the ambient space is not minimal.
    bool has_linear_generators() const { return has_linear_; }

    /// Same ideal data over another field (coefficients are reinterpreted).
    Presentation with_field(FieldSpec field) const;

    nlohmann::json to_json() const;
    static Presentation from_json(const nlohmann::json& doc);

    /// Stable 64-bit FNV-1a hash of the canonical JSON text.
    std::uint64_t content_hash() const;

private:
    std::size_t ambient_dim_;
    std::vector<Polynomial> generators_;
    FieldSpec field_;
    std::string label_;
    std::vector<std::string> variables_;
    std::optional<std::vector<std::uint64_t>> hilbert_hint_;
    bool has_linear_ = false;
};

std::uint64_t fnv1a64(std::string_view bytes);

} // namespace koszul
