#include "koszul/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace koszul {

std::size_t total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

namespace {

void enumerate(std::size_t var, std::size_t remaining, Exponents& cur, std::vector<Exponents>& out)
{
    if (var + 1 == cur.size()) {
        cur[var] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        return;
    }
    for (std::size_t e = remaining + 1; e-- > 0;) {
        cur[var] = static_cast<std::uint16_t>(e);
        enumerate(var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

} // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t m)
{
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (m == 0)
            out.emplace_back();
        return out;
    }
    Exponents cur(nvars, 0);
    enumerate(0, m, cur, out);
    return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    return static_cast<std::uint64_t>(r);
}

Polynomial Polynomial::constant(std::size_t nvars, const mpq_class& c)
{
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i)
{
    if (i >= nvars)
        throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c)
{
    if (e.size() != nvars_)
        throw std::invalid_argument("monomial has wrong number of variables");
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::operator-() const
{
    return scaled(-1);
}

Polynomial Polynomial::scaled(const mpq_class& c) const
{
    Polynomial r(nvars_);
    if (sgn(c) == 0)
        return r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(e, v * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomials live in different rings");
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] = static_cast<std::uint16_t>(a[i] + b[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

int Polynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return -1;
    const auto d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d)
            return -1;
    return static_cast<int>(d);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (images.size() != nvars_)
        throw std::invalid_argument("substitution needs one image per variable");
    const std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
    Polynomial r(target_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0)
                term = term * images[i].pow(e[i]);
        r = r + term;
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // highest monomial first in graded lex order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names.at(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    Polynomial expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-')
            negate = text_[pos_++] == '-';
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        while (true) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            Polynomial t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (true) {
            skip_space();
            if (peek() != '*')
                return acc;
            ++pos_;
            acc = acc * factor();
        }
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("exponent expected");
            return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Polynomial primary()
    {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (peek() != ')')
                fail("')' expected");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (peek() == '/') {
                ++pos_;
                std::size_t den_start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (den_start == pos_)
                    fail("denominator expected");
            }
            mpq_class q(std::string(text_.substr(start, pos_ - start)));
            if (q.get_den() == 0)
                fail("zero denominator");
            q.canonicalize();
            return Polynomial::constant(names_.size(), q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name)
                    return Polynomial::variable(names_.size(), i);
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail("unexpected end of input");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                                    " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names)
{
    return Parser(text, names).parse();
}

std::vector<std::string> default_variable_names(std::size_t nvars)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nvars; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

} // namespace koszul
