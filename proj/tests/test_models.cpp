#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koszul/graded_ring.hpp"
#include "koszul/models.hpp"
#include "koszul/wedge.hpp"
#include "oracle.hpp"

using namespace koszul;

TEST_CASE("splitmix64 reference stream")
{
    // first outputs for seed 0 from the published reference implementation
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);

    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.below(7);
        CHECK(x < 7);
        CHECK(x == b.below(7));
    }
}

TEST_CASE("model spec parsing")
{
    CHECK(ModelSpec::parse("rnc:3").d == 3);
    const auto v = ModelSpec::parse("veronese:2,2");
    CHECK(v.n == 2);
    CHECK(v.d == 2);
    CHECK(v.ambient_dim() == 5);
    const auto ci = ModelSpec::parse("ci:2,3");
    CHECK(ci.degrees == std::vector<int>{2, 3});
    CHECK(ci.ambient_dim() == 4);
    CHECK(ci.genus() == 4);
    CHECK(ModelSpec::parse("ci:4").genus() == 3);
    CHECK(ModelSpec::parse("ci:2,2,2").genus() == 5);
    CHECK(ModelSpec::parse("mukai:6").ambient_dim() == 6);
    CHECK(ModelSpec::parse("mukai:8").genus() == 8);
    const auto s = ModelSpec::parse("section:mukai:6");
    CHECK(s.is_canonical_curve());
    CHECK(s.genus() == 6);
    CHECK(s.ambient_dim() == 5);
    for (const char* text : {"rnc:3", "veronese:2,3", "ci:2,2,2", "mukai:8", "section:ci:2,3"})
        CHECK(ModelSpec::parse(text).to_string() == text);

    for (const char* bad : {"", "rnc", "rnc:0", "rnc:x", "rnc:3,4", "veronese:2", "ci:2,2", "ci:1,4",
                            "ci:3,3", "mukai:7", "section:rnc:3", "torus:1", "ci:2,,3"})
        CHECK_THROWS_AS(ModelSpec::parse(bad), std::invalid_argument);
}

TEST_CASE("Lazarsfeld-Mukai numerology")
{
    const auto g4 = lm_invariants(4);
    CHECK(g4.k == 2);
    CHECK(g4.sigma == 0);
    CHECK(g4.e == 4);
    CHECK(g4.dim_P == 3);
    CHECK(g4.rank_Q == 2);
    CHECK(g4.rank_S == 3);

    const auto g5 = lm_invariants(5);
    CHECK(g5.k == 3);
    CHECK(g5.sigma == 1);
    CHECK(g5.e == 4);
    CHECK(g5.dim_P == 3);

    const auto g6 = lm_invariants(6);
    CHECK(g6.e == 5);
    CHECK(g6.dim_P == 4);
    CHECK(g6.pencil_degree == 4);
    CHECK(g6.c2_E == 4);

    for (int g = 3; g <= 30; ++g) {
        const auto v = lm_invariants(g);
        CHECK(v.g == 2 * v.k - v.sigma);
        CHECK(v.e == v.g - v.k + 2);
        CHECK(v.rank_Q == v.k);
        CHECK(v.rank_Q + v.rank_S == v.g + 1);
        CHECK(v.h0_A - v.h1_A == v.pencil_degree + 1 - v.g);
        CHECK(v.L_squared == 2 * g - 2);
    }
    CHECK_THROWS_AS(lm_invariants(2), std::invalid_argument);
    CHECK_THROWS_AS(lm_invariants(ModelSpec::parse("rnc:3")), std::invalid_argument);
    CHECK(lm_invariants(ModelSpec::parse("mukai:8")).k == 4);
}

TEST_CASE("Plucker quadrics vanish on decomposable vectors")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (std::size_t n = 4; n <= 6; ++n) {
        const auto quadrics = plucker_quadrics(n);
        CHECK(quadrics.size() == oracle::choose(static_cast<std::int64_t>(n), 4));
        const WedgeIndex pairs(n, 2);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<long> a(n), b(n);
            for (auto& x : a)
                x = coef(rng);
            for (auto& x : b)
                x = coef(rng);
            std::vector<Polynomial> point(pairs.size());
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) {
                    const std::uint32_t s[2] = {i, j};
                    point[pairs.rank(s)] = Polynomial::constant(0, mpq_class(a[i] * b[j] - a[j] * b[i]));
                }
            for (const auto& q : quadrics)
                CHECK(q.substitute(point).is_zero());
        }
    }
}

TEST_CASE("bundled models have the declared quadric counts")
{
    for (int g : {6, 8}) {
        const auto spec = ModelSpec::parse("mukai:" + std::to_string(g), FieldSpec::prime(65537), 3);
        const auto P = build(spec);
        CHECK(P.generators().size() == (g == 6 ? 6u : 15u));
        CoordinateRing R(P, PrimeField(65537), 2);
        const auto sym2 = static_cast<std::size_t>((g + 1) * (g + 2) / 2);
        // h0(2L) = 4g - 2 on a K3
        CHECK(sym2 - R.dim(2) == (g == 6 ? 6u : 15u));
        CHECK(R.dim(2) == static_cast<std::size_t>(4 * g - 2));
    }
}

TEST_CASE("models are deterministic in the seed")
{
    for (const char* text : {"ci:2,3", "mukai:6", "section:ci:2,3"}) {
        const auto a = build(ModelSpec::parse(text, FieldSpec::prime(65537), 11));
        const auto b = build(ModelSpec::parse(text, FieldSpec::prime(65537), 11));
        const auto c = build(ModelSpec::parse(text, FieldSpec::prime(65537), 12));
        CHECK(a.content_hash() == b.content_hash());
        CHECK(a.content_hash() != c.content_hash());
    }
    const auto q = build(ModelSpec::parse("ci:2,3", FieldSpec::rationals(), 5));
    for (const auto& g : q.generators())
        for (const auto& [e, c] : g.terms()) {
            CHECK(c.get_den() == 1);
            CHECK(abs(c) <= 10);
        }
}

TEST_CASE("hyperplane sections are canonical curves")
{
    const auto spec = ModelSpec::parse("section:mukai:6", FieldSpec::prime(65537), 1);
    const auto C = build(spec);
    CHECK(C.ambient_dim() == 5);
    CHECK(check_hilbert(C, {1, 6, 15, 25}).empty());
    CHECK(spec.hilbert(4) == std::vector<std::uint64_t>{1, 6, 15, 25, 35});
    const auto K = build(ModelSpec::parse("ci:2,3", FieldSpec::prime(65537), 2));
    const auto direct = hyperplane_section(K, 9);
    CHECK(direct.ambient_dim() == 3);
    CHECK(check_hilbert(direct, {1, 4, 9, 15}).empty());
}

TEST_CASE("even-genus models")
{
    CHECK(even_genus_model(2, FieldSpec::prime(65537), 0).to_string() == "ci:2,3");
    CHECK(even_genus_model(3, FieldSpec::prime(65537), 0).to_string() == "mukai:6");
    CHECK(even_genus_model(4, FieldSpec::prime(65537), 0).to_string() == "mukai:8");
    CHECK_THROWS_AS(even_genus_model(5, FieldSpec::prime(65537), 0), std::invalid_argument);
    CHECK(list_models().size() >= 7);
}
