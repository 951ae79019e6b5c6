#include "koszul/models.hpp"

#include <numeric>
#include <sstream>

#include "koszul/graded_ring.hpp"
#include "koszul/wedge.hpp"

namespace koszul {

namespace {

constexpr std::uint64_t kSectionSalt = 0x5ec7105ec7105ec7ULL;
constexpr long kRationalCoefficientRange = 10;

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer list: " + text);
        }
        if (used != item.size())
            throw std::invalid_argument("bad integer list: " + text);
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

mpq_class draw(SplitMix64& rng, const FieldSpec& field)
{
    if (field.is_prime())
        return mpq_class(mpz_class(static_cast<unsigned long>(rng.below(field.characteristic()))));
    const auto width = static_cast<std::uint64_t>(2 * kRationalCoefficientRange + 1);
    return mpq_class(static_cast<long>(rng.below(width)) - kRationalCoefficientRange);
}

Polynomial random_form(std::size_t nvars, std::size_t degree, SplitMix64& rng, const FieldSpec& field)
{
    Polynomial f(nvars);
    for (const auto& e : monomials_of_degree(nvars, degree))
        f.add_term(e, draw(rng, field));
    return f;
}

Polynomial random_linear_form(std::size_t nvars, SplitMix64& rng, const FieldSpec& field)
{
    return random_form(nvars, 1, rng, field);
}

Presentation rational_normal_curve(int d, const FieldSpec& field)
{
    if (d < 1)
        throw std::invalid_argument("rational normal curve needs degree >= 1");
    const auto n = static_cast<std::size_t>(d) + 1;
    auto x = [n](std::size_t i) { return Polynomial::variable(n, i); };
    std::vector<Polynomial> gens;
    // 2x2 minors of [x0 .. x_{d-1}; x1 .. x_d]
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            gens.push_back(x(i) * x(j + 1) - x(i + 1) * x(j));
    return Presentation(static_cast<std::size_t>(d), std::move(gens), field, "rnc:" + std::to_string(d));
}

Presentation veronese(int n, int d, const FieldSpec& field)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("veronese needs n >= 1 and d >= 1");
    const auto source = monomials_of_degree(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(d));
    const std::size_t N = source.size();
    std::map<Exponents, std::vector<std::pair<std::size_t, std::size_t>>> classes;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a; b < N; ++b) {
            Exponents s = source[a];
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = static_cast<std::uint16_t>(s[i] + source[b][i]);
            classes[s].emplace_back(a, b);
        }
    auto z = [N](std::size_t i) { return Polynomial::variable(N, i); };
    std::vector<Polynomial> gens;
    for (const auto& [sum, pairs] : classes)
        for (std::size_t t = 1; t < pairs.size(); ++t)
            gens.push_back(z(pairs[0].first) * z(pairs[0].second) - z(pairs[t].first) * z(pairs[t].second));
    return Presentation(N - 1, std::move(gens), field, "veronese:" + std::to_string(n) + "," + std::to_string(d));
}

Presentation complete_intersection(const ModelSpec& spec, SplitMix64& rng)
{
    const std::size_t nvars = spec.ambient_dim() + 1;
    std::vector<Polynomial> gens;
    for (int d : spec.degrees)
        gens.push_back(random_form(nvars, static_cast<std::size_t>(d), rng, spec.field));
    return Presentation(spec.ambient_dim(), std::move(gens), spec.field, spec.to_string());
}

/// Plucker quadrics of G(2,n) pulled back along a random linear map P^g -> P^{C(n,2)-1}.
Presentation mukai(const ModelSpec& spec, SplitMix64& rng)
{
    const std::size_t n = spec.mukai_genus == 6 ? 5 : 6;
    const std::size_t nvars = spec.ambient_dim() + 1;
    const std::size_t plucker_vars = n * (n - 1) / 2;
    std::vector<Polynomial> images;
    for (std::size_t c = 0; c < plucker_vars; ++c)
        images.push_back(random_linear_form(nvars, rng, spec.field));
    std::vector<Polynomial> gens;
    for (const auto& q : plucker_quadrics(n))
        gens.push_back(q.substitute(images));
    if (spec.mukai_genus == 6)
        gens.push_back(random_form(nvars, 2, rng, spec.field));
    for (const auto& g : gens)
        if (g.is_zero())
            throw RegenerateSeed("pulled-back quadric vanished identically", spec.seed);
    return Presentation(spec.ambient_dim(), std::move(gens), spec.field, spec.to_string());
}

Presentation section_of(const Presentation& P, SplitMix64& rng, std::uint64_t seed)
{
    const std::size_t r = P.ambient_dim();
    if (r < 3)
        throw std::invalid_argument("hyperplane section needs a K3 model in P^g with g >= 3");
    const FieldSpec& field = P.field();
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r; ++i)
        images.push_back(Polynomial::variable(r, i));
    Polynomial last(r);
    for (std::size_t i = 0; i < r; ++i) {
        Exponents e(r, 0);
        e[i] = 1;
        last.add_term(e, draw(rng, field));
    }
    images.push_back(std::move(last));

    std::vector<Polynomial> gens;
    for (const auto& g : P.generators()) {
        auto h = g.substitute(images);
        bool vanishes = h.is_zero();
        if (!vanishes && field.is_prime()) {
            PrimeField f(field.characteristic());
            vanishes = std::all_of(h.terms().begin(), h.terms().end(),
                                   [&](const auto& t) { return f.from_rational(t.second) == 0; });
        }
        if (vanishes)
            throw RegenerateSeed("hyperplane contains a generator's zero set", seed);
        gens.push_back(std::move(h));
    }
    std::vector<std::string> names(P.variables().begin(), P.variables().end() - 1);
    const auto g = static_cast<std::uint64_t>(r);
    std::vector<std::uint64_t> hint{1, g};
    for (std::uint64_t m = 2; m <= 4; ++m)
        hint.push_back((2 * m - 1) * (g - 1));
    Presentation C(r - 1, std::move(gens), field, "section:" + P.label(), std::move(names), hint);
    std::vector<std::uint64_t> declared(hint.begin(), hint.begin() + 4);
    if (!check_hilbert(C, declared).empty())
        throw RegenerateSeed("hyperplane section has the wrong Hilbert function", seed);
    return C;
}

} // namespace

std::vector<Polynomial> plucker_quadrics(std::size_t n)
{
    const WedgeIndex pairs(n, 2);
    const std::size_t nvars = pairs.size();
    auto p = [&](std::uint32_t i, std::uint32_t j) {
        const std::uint32_t s[2] = {i, j};
        return Polynomial::variable(nvars, pairs.rank(s));
    };
    std::vector<Polynomial> out;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k)
                for (std::uint32_t l = k + 1; l < n; ++l)
                    out.push_back(p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k));
    return out;
}

ModelSpec ModelSpec::parse(const std::string& text, FieldSpec field, std::uint64_t seed)
{
    ModelSpec s;
    s.field = field;
    s.seed = seed;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("model spec needs the form kind:args, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (kind == "rnc") {
        auto v = parse_int_list(args);
        if (v.size() != 1 || v[0] < 1)
            throw std::invalid_argument("rnc:<d> with d >= 1");
        s.kind = ModelKind::RationalNormalCurve;
        s.d = v[0];
    } else if (kind == "veronese") {
        auto v = parse_int_list(args);
        if (v.size() != 2 || v[0] < 1 || v[1] < 1)
            throw std::invalid_argument("veronese:<n>,<d> with n, d >= 1");
        s.kind = ModelKind::Veronese;
        s.n = v[0];
        s.d = v[1];
    } else if (kind == "ci") {
        auto v = parse_int_list(args);
        std::sort(v.begin(), v.end());
        const int sum = std::accumulate(v.begin(), v.end(), 0);
        if (v.front() < 2 || sum != static_cast<int>(v.size()) + 3)
            throw std::invalid_argument("ci degrees must be >= 2 and sum to (number of forms) + 3 for a K3");
        s.kind = ModelKind::CompleteIntersectionK3;
        s.degrees = v;
    } else if (kind == "mukai") {
        auto v = parse_int_list(args);
        if (v.size() != 1 || (v[0] != 6 && v[0] != 8))
            throw std::invalid_argument("mukai:<g> supports g = 6 and g = 8");
        s.kind = ModelKind::MukaiK3;
        s.mukai_genus = v[0];
    } else if (kind == "section") {
        auto base = std::make_shared<ModelSpec>(parse(args, field, seed));
        if (!base->is_k3())
            throw std::invalid_argument("section: needs a K3 model");
        s.kind = ModelKind::HyperplaneSection;
        s.base = std::move(base);
    } else {
        throw std::invalid_argument("unknown model kind '" + kind + "'");
    }
    return s;
}

std::string ModelSpec::to_string() const
{
    switch (kind) {
    case ModelKind::RationalNormalCurve:
        return "rnc:" + std::to_string(d);
    case ModelKind::Veronese:
        return "veronese:" + std::to_string(n) + "," + std::to_string(d);
    case ModelKind::CompleteIntersectionK3: {
        std::string out = "ci:";
        for (std::size_t i = 0; i < degrees.size(); ++i)
            out += (i ? "," : "") + std::to_string(degrees[i]);
        return out;
    }
    case ModelKind::MukaiK3:
        return "mukai:" + std::to_string(mukai_genus);
    case ModelKind::HyperplaneSection:
        return "section:" + base->to_string();
    }
    return {};
}

int ModelSpec::genus() const
{
    switch (kind) {
    case ModelKind::CompleteIntersectionK3: {
        const int degree = std::accumulate(degrees.begin(), degrees.end(), 1, std::multiplies<>());
        return degree / 2 + 1;
    }
    case ModelKind::MukaiK3:
        return mukai_genus;
    case ModelKind::HyperplaneSection:
        return base->genus();
    default:
        throw std::invalid_argument("genus is defined for K3 models and their sections only");
    }
}

std::size_t ModelSpec::ambient_dim() const
{
    switch (kind) {
    case ModelKind::RationalNormalCurve:
        return static_cast<std::size_t>(d);
    case ModelKind::Veronese:
        return static_cast<std::size_t>(binomial(n + d, n)) - 1;
    case ModelKind::CompleteIntersectionK3:
        return degrees.size() + 2;
    case ModelKind::MukaiK3:
        return static_cast<std::size_t>(mukai_genus);
    case ModelKind::HyperplaneSection:
        return base->ambient_dim() - 1;
    }
    return 0;
}

std::vector<std::uint64_t> ModelSpec::hilbert(std::size_t top) const
{
    std::vector<std::uint64_t> h;
    for (std::uint64_t m = 0; m <= top; ++m) {
        switch (kind) {
        case ModelKind::RationalNormalCurve:
            h.push_back(static_cast<std::uint64_t>(d) * m + 1);
            break;
        case ModelKind::Veronese:
            h.push_back(binomial(static_cast<std::int64_t>(n + d * static_cast<int>(m)), n));
            break;
        case ModelKind::CompleteIntersectionK3:
        case ModelKind::MukaiK3: {
            const auto g = static_cast<std::uint64_t>(genus());
            h.push_back(m == 0 ? 1 : 2 + m * m * (g - 1));
            break;
        }
        case ModelKind::HyperplaneSection: {
            const auto g = static_cast<std::uint64_t>(genus());
            h.push_back(m == 0 ? 1 : m == 1 ? g : (2 * m - 1) * (g - 1));
            break;
        }
        }
    }
    return h;
}

LMInvariants lm_invariants(int genus)
{
    if (genus < 3)
        throw std::invalid_argument("Lazarsfeld-Mukai numerology needs genus >= 3");
    LMInvariants v;
    v.g = genus;
    v.k = (genus + 1) / 2;
    v.sigma = 2 * v.k - genus;
    v.r = genus;
    v.pencil_degree = v.k + 1;
    v.h0_A = 2;
    v.h1_A = genus - v.k;
    v.e = v.h0_A + v.h1_A;
    v.dim_P = v.e - 1;
    v.rank_S = v.e - 1;
    v.rank_Q = (v.r + 1) - v.rank_S;
    v.c2_E = v.k + 1;
    v.zero_scheme_span = v.k - 1;
    v.L_squared = 2 * genus - 2;
    return v;
}

LMInvariants lm_invariants(const ModelSpec& spec)
{
    if (!spec.is_k3())
        throw std::invalid_argument("Lazarsfeld-Mukai invariants need a K3 model, got " + spec.to_string());
    return lm_invariants(spec.genus());
}

Presentation build(const ModelSpec& spec)
{
    SplitMix64 rng(spec.seed);
    auto attach_hint = [&](const Presentation& P) {
        return Presentation(P.ambient_dim(), P.generators(), P.field(), P.label(), P.variables(),
                            spec.hilbert(4));
    };
    std::optional<Presentation> P;
    switch (spec.kind) {
    case ModelKind::RationalNormalCurve:
        P = attach_hint(rational_normal_curve(spec.d, spec.field));
        break;
    case ModelKind::Veronese:
        P = attach_hint(veronese(spec.n, spec.d, spec.field));
        break;
    case ModelKind::CompleteIntersectionK3:
        P = attach_hint(complete_intersection(spec, rng));
        break;
    case ModelKind::MukaiK3:
        P = attach_hint(mukai(spec, rng));
        break;
    case ModelKind::HyperplaneSection: {
        auto K = build(*spec.base);
        return hyperplane_section(K, spec.seed);
    }
    }
    if (!check_hilbert(*P, spec.hilbert(3)).empty())
        throw RegenerateSeed(spec.to_string() + " with seed " + std::to_string(spec.seed) +
                                 " has the wrong Hilbert function",
                             spec.seed);
    return *P;
}

Presentation hyperplane_section(const Presentation& P, std::uint64_t seed)
{
    SplitMix64 rng(seed ^ kSectionSalt);
    return section_of(P, rng, seed);
}

std::vector<ModelInfo> list_models()
{
    return {
        {"rnc:<d>", "rational normal curve of degree d in P^d (2x2 minors); Eagon-Northcott reference"},
        {"veronese:<n>,<d>", "d-uple Veronese embedding of P^n (binomial quadrics)"},
        {"ci:4", "quartic K3 in P^3, genus 3 (k=2, sigma=1)"},
        {"ci:2,3", "(2,3) complete-intersection K3 in P^4, genus 4 (k=2, sigma=0)"},
        {"ci:2,2,2", "(2,2,2) complete-intersection K3 in P^5, genus 5 (k=3, sigma=1)"},
        {"mukai:6", "G(2,5) linear section plus a quadric, K3 of genus 6 in P^6 (k=3, sigma=0)"},
        {"mukai:8", "G(2,6) linear section, K3 of genus 8 in P^8 (k=4, sigma=0)"},
        {"section:<K3 spec>", "random hyperplane section of a K3 model: canonical curve of genus g in P^{g-1}"},
    };
}

ModelSpec even_genus_model(int k, FieldSpec field, std::uint64_t seed)
{
    switch (k) {
    case 2:
        return ModelSpec::parse("ci:2,3", field, seed);
    case 3:
        return ModelSpec::parse("mukai:6", field, seed);
    case 4:
        return ModelSpec::parse("mukai:8", field, seed);
    default:
        throw std::invalid_argument("even-genus models exist for k = 2, 3, 4");
    }
}

} // namespace koszul
