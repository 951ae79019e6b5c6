#include "koszul/field.hpp"

#include <array>
#include <charconv>

namespace koszul {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0)
            return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p < (std::uint64_t{1} << 32))
{
    if (p >= (std::uint64_t{1} << 62))
        throw std::invalid_argument("prime field characteristic must be below 2^62");
    if (!is_prime_u64(p))
        throw std::invalid_argument("not a prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const
{
    return powmod(a, e, p_);
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0)
        throw std::domain_error("division by zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on signed 128-bit to stay exact for p < 2^62
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p_;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const
{
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0)
        m += static_cast<std::int64_t>(p_);
    return static_cast<Element>(m);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    const mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % pz;
    if (num < 0)
        num += pz;
    const mpz_class den = q.get_den() % pz;
    if (den == 0)
        throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes in GF(" +
                                std::to_string(p_) + ")");
    auto to_u64 = [](const mpz_class& z) { return static_cast<std::uint64_t>(z.get_ui()); };
    return mul(to_u64(num), inv(to_u64(den)));
}

PrimeField::Element PrimeField::parse(std::string_view text) const
{
    return from_rational(RationalField{}.parse(text));
}

RationalField::Element RationalField::inv(const Element& a) const
{
    if (sgn(a) == 0)
        throw std::domain_error("division by zero in Q");
    return 1 / a;
}

RationalField::Element RationalField::parse(std::string_view text) const
{
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    q.canonicalize();
    return q;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    PrimeField check(p); // validates
    (void)check;
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "qq" || text == "QQ")
        return rationals();
    constexpr std::string_view prefix = "gfp:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw std::invalid_argument("bad field characteristic in '" + std::string(text) + "'");
        return prime(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected gfp:<p> or qq)");
}

std::string FieldSpec::to_string() const
{
    return is_prime() ? "gfp:" + std::to_string(p_) : "qq";
}

} // namespace koszul
