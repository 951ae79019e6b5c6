#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace koszul {

using Exponents = std::vector<std::uint16_t>;

std::size_t total_degree(const Exponents& e);

/// Degree-m monomials in n variables in graded lexicographic order
/// (x0^m first, x_{n-1}^m last).
std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t m);

/// Binomial coefficient; 0 when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Polynomial with rational coefficients in a fixed number of variables.
/// Coefficients are field-independent; reduction into GF(p) happens later.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const mpq_class& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const mpq_class& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial pow(unsigned e) const;

    /// Returns the common degree, or -1 if the polynomial is zero or not homogeneous.
    int homogeneous_degree() const;

    /// Replaces variable i with images[i]; all images share one variable count.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    std::string to_string(const std::vector<std::string>& names) const;

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    std::size_t nvars_;
    std::map<Exponents, mpq_class> terms_;
};

/// Parses expressions such as "x0*x2 - x1^2" or "3/2*(a+b)^2 - c*d".
/// A "/" is only accepted inside a numeric literal.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

std::vector<std::string> default_variable_names(std::size_t nvars);

} // namespace koszul
