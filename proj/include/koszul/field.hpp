#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace koszul {

/// Raised when a computation cannot finish inside its resource limits
/// (memory budget, coefficient growth). Never used for wrong answers.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Z/p for a prime p < 2^62. Elements are canonical residues in [0, p).
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }

    Element add(Element a, Element b) const
    {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const
    {
        if (small_)
            return (a * b) % p_;
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    Element from_int(std::int64_t v) const;
    /// Reduces a rational; throws std::domain_error if p divides the denominator.
    Element from_rational(const mpq_class& q) const;
    std::string to_string(Element a) const { return std::to_string(a); }
    Element parse(std::string_view text) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
    bool small_;
};

/// The rational numbers, backed by GMP.
class RationalField {
public:
    using Element = mpq_class;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;

    Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }
    std::string to_string(const Element& a) const { return a.get_str(); }
    Element parse(std::string_view text) const;

    bool operator==(const RationalField&) const { return true; }
};

/// Runtime description of the working field: GF(p) or Q.
class FieldSpec {
public:
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec{0}; }
    /// Parses "gfp:<p>" or "qq".
    static FieldSpec parse(std::string_view text);

    bool is_prime() const { return p_ != 0; }
    bool is_rational() const { return p_ == 0; }
    /// 0 for Q.
    std::uint64_t characteristic() const { return p_; }
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

inline constexpr std::uint64_t kDefaultPrime = 65537;

/// Calls fn(PrimeField) or fn(RationalField) according to spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.is_prime())
        return std::forward<Fn>(fn)(PrimeField(spec.characteristic()));
    return std::forward<Fn>(fn)(RationalField{});
}

template <class F>
FieldSpec spec_of(const F& field)
{
    if constexpr (std::is_same_v<F, PrimeField>)
        return FieldSpec::prime(field.characteristic());
    else
        return FieldSpec::rationals();
}

} // namespace koszul
