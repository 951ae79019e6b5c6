#include "koszul/chowrr.hpp"

#include <stdexcept>

namespace koszul {

namespace {

mpz_class binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return c;
}

mpz_class factorial(std::size_t t)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(t));
    return f;
}

mpz_class as_integer(const mpq_class& q, const std::string& what)
{
    if (q.get_den() != 1)
        throw std::logic_error(what + " is not integral: " + q.get_str());
    return q.get_num();
}

Assertion equal(std::string claim, const mpz_class& lhs, const mpz_class& rhs, std::string why)
{
    return {std::move(claim), lhs.get_str(), rhs.get_str(), lhs == rhs, std::move(why)};
}

Assertion equal(std::string claim, const ChowClass& lhs, const ChowClass& rhs, std::string why)
{
    return {std::move(claim), lhs.to_string(), rhs.to_string(), lhs == rhs, std::move(why)};
}

} // namespace

ChowClass::ChowClass(std::size_t n, std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(n + 1, 0);
}

ChowClass ChowClass::constant(std::size_t n, const mpq_class& c)
{
    ChowClass out(n);
    out.coeffs_[0] = c;
    return out;
}

ChowClass ChowClass::exp_hyperplane(std::size_t n, std::int64_t a)
{
    ChowClass out(n);
    mpq_class term = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        out.coeffs_[i] = term;
        term *= mpq_class(static_cast<long>(a));
        term /= mpq_class(static_cast<long>(i + 1));
    }
    return out;
}

ChowClass ChowClass::todd(std::size_t n)
{
    // (1 - e^{-h}) / h = sum_m (-1)^m h^m / (m+1)!
    std::vector<mpq_class> f(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        f[m] = mpq_class(factorial(m + 1));
        f[m] = (m % 2 == 0 ? 1 : -1) / f[m];
    }
    std::vector<mpq_class> g(n + 1, 0);
    g[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        mpq_class s = 0;
        for (std::size_t i = 1; i <= m; ++i)
            s += f[i] * g[m - i];
        g[m] = -s;
    }
    ChowClass base(n, g);
    ChowClass out = constant(n, 1);
    for (std::size_t t = 0; t <= n; ++t)
        out = out * base;
    return out;
}

void ChowClass::check_same(const ChowClass& o) const
{
    if (o.coeffs_.size() != coeffs_.size())
        throw std::invalid_argument("Chow classes live on different projective spaces");
}

ChowClass ChowClass::operator+(const ChowClass& o) const
{
    check_same(o);
    ChowClass out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] += o.coeffs_[i];
    return out;
}

ChowClass ChowClass::operator-(const ChowClass& o) const
{
    check_same(o);
    ChowClass out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

ChowClass ChowClass::operator*(const ChowClass& o) const
{
    check_same(o);
    ChowClass out(n());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return out;
}

ChowClass ChowClass::scaled(const mpq_class& c) const
{
    ChowClass out(*this);
    for (auto& x : out.coeffs_)
        x *= c;
    return out;
}

ChowClass ChowClass::adams(std::int64_t t) const
{
    ChowClass out(*this);
    mpq_class power = 1;
    for (auto& x : out.coeffs_) {
        x *= power;
        power *= mpq_class(static_cast<long>(t));
    }
    return out;
}

std::string ChowClass::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!out.empty())
            out += sgn(coeffs_[i]) < 0 ? " - " : " + ";
        else if (sgn(coeffs_[i]) < 0)
            out += "-";
        mpq_class a = abs(coeffs_[i]);
        if (i == 0 || a != 1)
            out += a.get_str();
        if (i > 0)
            out += (i == 0 || a != 1 ? "*" : "") + std::string("h") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : out;
}

nlohmann::json BundleDescriptor::to_json() const
{
    nlohmann::json res = nlohmann::json::array();
    for (const auto& t : resolution)
        res.push_back({{"position", t.position}, {"multiplicity", t.multiplicity.get_str()}, {"twist", t.twist}});
    std::vector<std::string> ch_text;
    for (const auto& c : ch.coeffs())
        ch_text.push_back(c.get_str());
    return {{"name", name}, {"P", n()}, {"rank", rank.get_str()}, {"ch", ch_text}, {"resolution", res}};
}

BundleDescriptor line_bundle(std::size_t n, std::int64_t a)
{
    return {"O(" + std::to_string(a) + ")", 1, ChowClass::exp_hyperplane(n, a), {{0, 1, a}}};
}

BundleDescriptor from_resolution(std::string name, std::size_t n, std::vector<ResolutionTerm> terms)
{
    ChowClass ch(n);
    for (const auto& t : terms) {
        auto piece = ChowClass::exp_hyperplane(n, t.twist).scaled(mpq_class(t.multiplicity));
        ch = t.position % 2 == 0 ? ch + piece : ch - piece;
    }
    const auto rank = as_integer(ch[0], "rank of " + name);
    if (rank < 0)
        throw std::logic_error("negative rank for " + name);
    return {std::move(name), rank, std::move(ch), std::move(terms)};
}

BundleDescriptor tensor(const BundleDescriptor& a, const BundleDescriptor& b)
{
    return {a.name + " (x) " + b.name, a.rank * b.rank, a.ch * b.ch, {}};
}

BundleDescriptor twist(const BundleDescriptor& b, std::int64_t a)
{
    std::vector<ResolutionTerm> res = b.resolution;
    for (auto& t : res)
        t.twist += a;
    return {b.name + "(" + std::to_string(a) + ")", b.rank, b.ch * ChowClass::exp_hyperplane(b.n(), a),
            std::move(res)};
}

BundleDescriptor wedge_ch(const BundleDescriptor& b, std::size_t i)
{
    if (mpz_class(static_cast<unsigned long>(i)) > b.rank)
        throw std::invalid_argument("exterior power exceeds the rank");
    std::vector<ChowClass> powers{ChowClass::constant(b.n(), 1)};
    for (std::size_t m = 1; m <= i; ++m) {
        ChowClass acc(b.n());
        for (std::size_t t = 1; t <= m; ++t) {
            auto term = powers[m - t] * b.ch.adams(static_cast<std::int64_t>(t));
            acc = t % 2 == 1 ? acc + term : acc - term;
        }
        powers.push_back(acc.scaled(mpq_class(1, static_cast<unsigned long>(m))));
    }
    const auto rank = binom(b.rank.get_si(), static_cast<std::int64_t>(i));
    return {"wedge^" + std::to_string(i) + " " + b.name, rank, powers[i], {}};
}

mpz_class euler_char(const BundleDescriptor& b)
{
    return as_integer((b.ch * ChowClass::todd(b.n())).top(), "Euler characteristic of " + b.name);
}

mpz_class resolution_euler_char(const BundleDescriptor& b)
{
    if (b.resolution.empty())
        throw std::invalid_argument(b.name + " carries no resolution");
    const auto n = static_cast<std::int64_t>(b.n());
    mpz_class chi = 0;
    for (const auto& t : b.resolution) {
        // chi(O(a)) = C(a + n, n) as a polynomial in a
        mpz_class c;
        if (t.twist >= 0)
            c = binom(t.twist + n, n);
        else if (t.twist >= -n)
            c = 0;
        else
            c = (n % 2 == 0 ? 1 : -1) * binom(-t.twist - 1, n);
        chi += (t.position % 2 == 0 ? 1 : -1) * t.multiplicity * c;
    }
    return chi;
}

std::vector<mpq_class> chern_classes(const ChowClass& ch)
{
    const std::size_t n = ch.n();
    std::vector<mpq_class> p(n + 1, 0);
    for (std::size_t t = 1; t <= n; ++t)
        p[t] = ch[t] * mpq_class(factorial(t));
    std::vector<mpq_class> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        mpq_class s = 0;
        for (std::size_t t = 1; t <= j; ++t)
            s += (t % 2 == 1 ? 1 : -1) * c[j - t] * p[t];
        c[j] = s / mpq_class(static_cast<long>(j));
    }
    return c;
}

LMBundles::LMBundles(int k_, int sigma_) : k(k_), sigma(sigma_)
{
    if (k < 2 || (sigma != 0 && sigma != 1))
        throw std::invalid_argument("need k >= 2 and sigma in {0, 1}");
    g = 2 * k - sigma;
    e = g - k + 2;
    dim_P = static_cast<std::size_t>(e - 1);
    h0_L = g + 1;
}

BundleDescriptor LMBundles::quotient() const
{
    return from_resolution("Q'", dim_P, {{0, h0_L, 0}, {1, e, -1}, {2, 1, -2}});
}

BundleDescriptor LMBundles::sub() const
{
    return from_resolution("S'", dim_P, {{0, e, -1}, {1, 1, -2}});
}

mpz_class LMBundles::h0_multiple(int m) const
{
    if (m < 0)
        return 0;
    if (m == 0)
        return 1;
    return 2 + mpz_class(m) * m * (g - 1);
}

mpz_class LMBundles::h0_twisted_E(int m) const
{
    // ch2(E (x) L^m) = (c1^2 - 2 c2)/2 + m L^2 + m^2 L^2 with c1 = L, c2 = k+1
    const mpz_class L2 = 2 * g - 2;
    const mpz_class ch2 = L2 / 2 - (k + 1) + mpz_class(m) * L2 + mpz_class(m) * m * L2;
    return ch2 + 4;
}

BundleDescriptor LMBundles::ladder(int j) const
{
    if (j < 0)
        return from_resolution("L_" + std::to_string(j), dim_P, {});
    if (j == 0)
        return from_resolution("L_0", dim_P, {{0, 1, 0}});
    if (j == 1) {
        auto q = quotient();
        q.name = "L_1";
        return q;
    }
    return from_resolution("L_" + std::to_string(j), dim_P,
                           {{0, h0_multiple(j), 0}, {1, h0_twisted_E(j - 1), -1}, {2, h0_multiple(j - 1), -2}});
}

BundleDescriptor LMBundles::wedge_quotient_resolution(std::size_t i) const
{
    const auto ii = static_cast<std::int64_t>(i);
    std::vector<ResolutionTerm> terms;
    for (std::int64_t l = 0; l <= ii + 1; ++l) {
        mpz_class m = 0;
        if (l <= ii)
            m += binom(h0_L, ii - l) * binom(e + l - 1, l);
        if (l >= 2)
            m += binom(h0_L, ii - l + 1) * binom(e + l - 3, l - 2);
        if (m != 0)
            terms.push_back({static_cast<std::size_t>(l), m, -l});
    }
    return from_resolution("wedge^" + std::to_string(i) + " Q' (linear resolution)", dim_P, std::move(terms));
}

nlohmann::json Assertion::to_json() const
{
    return {{"claim", claim}, {"lhs", lhs}, {"rhs", rhs}, {"status", pass ? "pass" : "fail"},
            {"justification", justification}};
}

bool ChernReport::all_pass() const
{
    for (const auto& a : assertions)
        if (!a.pass)
            return false;
    return true;
}

nlohmann::json ChernReport::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& a : assertions)
        list.push_back(a.to_json());
    return {{"check", check}, {"k", k}, {"sigma", sigma}, {"status", all_pass() ? "pass" : "fail"},
            {"assertions", list}};
}

ChernReport verify_theorem44_dims(int k, int sigma)
{
    const LMBundles lm(k, sigma);
    ChernReport report{"thm44", k, sigma, {}};
    auto& out = report.assertions;
    const auto Q = lm.quotient();
    const std::string ks = std::to_string(k);

    out.push_back(equal("rank Q'", Q.rank, k, "alternating rank count of the resolution"));
    for (int i = 0; i <= k; ++i) {
        const std::string is = std::to_string(i);
        const auto lam = wedge_ch(Q, static_cast<std::size_t>(i));
        const auto res = lm.wedge_quotient_resolution(static_cast<std::size_t>(i));
        out.push_back(equal("ch(wedge^" + is + " Q') by Adams operations = by linear resolution", lam.ch, res.ch,
                            "two independent constructions"));
        const auto chi = euler_char(lam);
        out.push_back(equal("chi(wedge^" + is + " Q') by Riemann-Roch = resolution alternating sum", chi,
                            resolution_euler_char(res), "additivity of chi"));
        if (i <= k - sigma)
            out.push_back(equal("h0(wedge^" + is + " Q') = C(r+1," + is + ")", chi, binom(lm.h0_L, i),
                                "0-regular, so h0 = chi"));
    }
    if (sigma == 1) {
        const auto top = wedge_ch(Q, static_cast<std::size_t>(k));
        out.push_back(equal("wedge^" + ks + " Q' = O(k-1)", top.ch,
                            ChowClass::exp_hyperplane(lm.dim_P, k - 1), "determinant of Q'"));
        const auto sym = binom(lm.e + k - 2, k - 1);
        out.push_back(equal("dim wedge^k H0(L) = dim S^{k-1} H0(E) + h0(wedge^k Q')", binom(lm.h0_L, k),
                            sym + euler_char(top), "short exact sequence of sections; O(k-1) has h0 = chi"));
        out.push_back(equal("C(2k,k) = C(2k-1,k-1) + C(2k-1,k)", binom(2 * k, k),
                            binom(2 * k - 1, k - 1) + binom(2 * k - 1, k), "Pascal"));
    }
    for (int j = 1; j <= 3; ++j) {
        const auto Lj = lm.ladder(j);
        const std::string js = std::to_string(j);
        out.push_back(equal("rank L_" + js, Lj.rank, j == 1 ? k : k + 1, "alternating rank count"));
        out.push_back(equal("h0(L_" + js + ") = h0(" + js + "L)", euler_char(Lj), lm.h0_multiple(j),
                            "linear resolution with h0 surjective on the last map"));
        for (int i = 0; i <= k - 2 - sigma; ++i) {
            const std::string is = std::to_string(i);
            const auto prod = tensor(wedge_ch(Q, static_cast<std::size_t>(i)), Lj);
            out.push_back(equal("chi(wedge^" + is + " Q' (x) L_" + js + ") = C(r+1," + is + ") h0(" + js + "L)",
                                euler_char(prod), binom(lm.h0_L, i) * lm.h0_multiple(j),
                                "linear resolution ending in O(-i-3), i + 3 <= dim P + 1"));
        }
    }
    return report;
}

ChernReport exterior_power_counts(int k, int sigma)
{
    const LMBundles lm(k, sigma);
    ChernReport report{"wedge-counts", k, sigma, {}};
    const auto Q = lm.quotient();
    for (int i = 0; i <= k; ++i) {
        const std::string is = std::to_string(i);
        report.assertions.push_back(equal("chi(wedge^" + is + " Q') = C(2k+1-sigma," + is + ")",
                                          euler_char(wedge_ch(Q, static_cast<std::size_t>(i))),
                                          binom(2 * k + 1 - sigma, i), "Riemann-Roch"));
    }
    return report;
}

ChernReport verify_tango_constraints(int k)
{
    const LMBundles lm(k, 0);
    ChernReport report{"tango", k, 0, {}};
    auto& out = report.assertions;
    const auto S = lm.sub();
    const auto Q = lm.quotient();
    const auto cS = chern_classes(S.ch);
    out.push_back(equal("rank S' = k+1", S.rank, k + 1, "alternating rank count"));
    out.push_back(equal("rank Q' = k", Q.rank, k, "(r+1) - rank S'"));
    out.push_back(equal("c1(S') = -(e-2)", as_integer(cS[1], "c1(S')"), -(lm.e - 2), "resolution"));
    out.push_back(equal("det S' = O(-(e-2))", wedge_ch(S, static_cast<std::size_t>(k + 1)).ch,
                        ChowClass::exp_hyperplane(lm.dim_P, -(lm.e - 2)), "top exterior power"));
    out.push_back(equal("dim P = k+1", lm.dim_P, k + 1, "e - 1 with e = k + 2"));
    const auto W = twist(wedge_ch(S, 2), 2);
    const auto c = chern_classes(W.ch);
    for (std::size_t j = 0; j < c.size(); ++j)
        out.push_back(equal("c" + std::to_string(j) + "(wedge^2 S' (x) O(2)) integral", c[j].get_den(), 1,
                            "Chern classes of a bundle"));
    for (std::size_t j = static_cast<std::size_t>(k + 1); j <= lm.dim_P; ++j)
        out.push_back(equal("c" + std::to_string(j) + "(wedge^2 S' (x) O(2)) = 0",
                            as_integer(c[j], "Chern class"), 0, "quotient of a trivial bundle by S' has rank k"));
    return report;
}

ChernReport verify_ladder_complex(int k, int sigma)
{
    const LMBundles lm(k, sigma);
    ChernReport report{"ladder", k, sigma, {}};
    const auto Q = lm.quotient();
    ChowClass sum(lm.dim_P);
    for (int j = 0; j <= k; ++j) {
        const auto term = tensor(wedge_ch(Q, static_cast<std::size_t>(k - j)), lm.ladder(j)).ch;
        sum = j % 2 == 0 ? sum + term : sum - term;
    }
    report.assertions.push_back(equal("sum_j (-1)^j ch(wedge^{k-j} Q' (x) L_j) = 0", sum, ChowClass(lm.dim_P),
                                      "exact complex of bundles; needs k+1 invertible"));
    return report;
}

} // namespace koszul
