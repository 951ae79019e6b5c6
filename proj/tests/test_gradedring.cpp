#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include <unistd.h>

#include "koszul/graded_ring.hpp"
#include "koszul/models.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

Presentation twisted_cubic(FieldSpec f = FieldSpec::rationals())
{
    const std::vector<std::string> names{"a", "b", "c", "d"};
    return Presentation(3,
                        {parse_polynomial("a*c - b^2", names), parse_polynomial("a*d - b*c", names),
                         parse_polynomial("b*d - c^2", names)},
                        f, "twisted cubic", names);
}

/// dim I_m computed densely over Q: span of generator times monomial.
std::size_t dense_ideal_dim(const Presentation& P, std::size_t m)
{
    auto monos = monomials_of_degree(P.nvars(), m);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index[monos[i]] = i;
    oracle::DenseQ rows;
    for (const auto& g : P.generators()) {
        const auto d = static_cast<std::size_t>(g.homogeneous_degree());
        if (d > m)
            continue;
        for (const auto& mu : monomials_of_degree(P.nvars(), m - d)) {
            std::vector<mpq_class> row(monos.size());
            for (const auto& [e, c] : g.terms()) {
                Exponents s = e;
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] = static_cast<std::uint16_t>(s[i] + mu[i]);
                row[index.at(s)] += c;
            }
            rows.push_back(std::move(row));
        }
    }
    return oracle::dense_rank(rows);
}

template <class F>
void check_ring_structure(const CoordinateRing<F>& R)
{
    const F& f = R.field();
    for (std::size_t m = 0; m <= R.top_degree(); ++m) {
        const auto& piece = R.piece(m);
        CHECK(piece.dim() + piece.ideal_dim == piece.ambient_monomial_count);
        // reduction is the identity on the standard monomials
        for (std::size_t k = 0; k < piece.quotient_basis.size(); ++k) {
            const auto& row = piece.reduction[piece.quotient_basis[k]];
            REQUIRE(row.size() == 1);
            CHECK(row[0].col == k);
            CHECK(f.is_one(row[0].value));
        }
    }
    // every generator multiple reduces to zero
    for (const auto& g : R.presentation().generators()) {
        const auto d = static_cast<std::size_t>(g.homogeneous_degree());
        if (d > R.top_degree())
            continue;
        std::vector<typename F::Element> acc(R.dim(static_cast<std::int64_t>(d)), f.zero());
        for (const auto& [e, c] : g.terms())
            for (const auto& entry : R.reduce(e))
                acc[entry.col] = f.add(acc[entry.col], f.mul(f.from_rational(c), entry.value));
        for (const auto& v : acc)
            CHECK(f.is_zero(v));
    }
    // x_i x_j = x_j x_i as maps R_a -> R_{a+2}
    for (std::size_t a = 0; a + 2 <= R.top_degree(); ++a)
        for (std::size_t i = 0; i < R.nvars(); ++i)
            for (std::size_t j = i + 1; j < R.nvars(); ++j)
                CHECK(R.mult(a, i).multiply(R.mult(a + 1, j)) == R.mult(a, j).multiply(R.mult(a + 1, i)));
    // R_a (x) V -> R_{a+1} is onto
    for (std::size_t a = 0; a < R.top_degree(); ++a) {
        std::vector<SparseRow<F>> rows;
        for (std::size_t i = 0; i < R.nvars(); ++i)
            for (const auto& row : R.mult(a, i).rows())
                rows.push_back(row);
        const auto nrows = rows.size();
        SparseMatrix<F> stacked(f, nrows, R.dim(static_cast<std::int64_t>(a + 1)), std::move(rows));
        CHECK(rank(stacked) == R.dim(static_cast<std::int64_t>(a + 1)));
    }
}

} // namespace

TEST_CASE("polynomial parsing and printing")
{
    const std::vector<std::string> names{"x", "y", "z"};
    auto f = parse_polynomial("x*z - y^2", names);
    CHECK(f.homogeneous_degree() == 2);
    CHECK(f.to_string(names) == "x*z - y^2");
    auto g = parse_polynomial("3/2*(x+y)^2 - 2*x*y", names);
    CHECK(g.to_string(names) == "3/2*x^2 + x*y + 3/2*y^2");
    CHECK(parse_polynomial("x + y^2", names).homogeneous_degree() == -1);
    CHECK(parse_polynomial("x - x", names).is_zero());
    CHECK_THROWS(parse_polynomial("x * / y", names));
    CHECK_THROWS(parse_polynomial("w^2", names));
    CHECK_THROWS(parse_polynomial("x/y", names));
    CHECK(parse_polynomial(f.to_string(names), names) == f);
}

TEST_CASE("presentation validation")
{
    const std::vector<std::string> names{"x", "y", "z"};
    auto P2 = [&](std::vector<std::string> gens) {
        std::vector<Polynomial> polys;
        for (const auto& g : gens)
            polys.push_back(parse_polynomial(g, names));
        return Presentation(2, polys, FieldSpec::prime(7), "t", names);
    };
    CHECK_THROWS(P2({"x^2 + y"}));
    CHECK_THROWS(P2({"x - x"}));
    CHECK_THROWS(P2({"7*x^2"}));
    CHECK_THROWS(P2({"1"}));
    CHECK(P2({"x"}).has_linear_generators());
    CHECK_FALSE(P2({"x*y"}).has_linear_generators());
}

TEST_CASE("presentation json round trip")
{
    auto P = twisted_cubic(FieldSpec::prime(65537));
    auto doc = P.to_json();
    auto Q = Presentation::from_json(doc);
    CHECK(Q.to_json() == doc);
    CHECK(Q.content_hash() == P.content_hash());
    CHECK(P.with_field(FieldSpec::rationals()).content_hash() != P.content_hash());
}

TEST_CASE("empty ideal gives the polynomial ring")
{
    Presentation P(3, {}, FieldSpec::rationals(), "P3");
    CoordinateRing R(P, RationalField{}, 4);
    for (std::size_t m = 0; m <= 4; ++m) {
        CHECK(R.piece(m).ideal_dim == 0);
        CHECK(R.dim(static_cast<std::int64_t>(m)) == oracle::choose(3 + static_cast<std::int64_t>(m), 3));
    }
    // V -> Sym^1 V is the identity indexing
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(R.mult(0, i).row(0).size() == 1);
        CHECK(R.mult(0, i).row(0)[0].col == i);
    }
    check_ring_structure(R);
}

TEST_CASE("twisted cubic graded pieces")
{
    auto P = twisted_cubic();
    const MonomialBasis basis(4, 2);
    auto ideal = ideal_degree_piece(P, RationalField{}, basis);
    CHECK(ideal.pivots.size() == 3);
    CHECK(dense_ideal_dim(P, 2) == 3);
    CoordinateRing R(P, RationalField{}, 4);
    for (std::size_t m = 0; m <= 4; ++m) {
        CHECK(R.piece(m).ideal_dim == dense_ideal_dim(P, m));
        CHECK(R.dim(static_cast<std::int64_t>(m)) == 3 * m + 1);
    }
    CHECK(R.dim(-1) == 0);
    check_ring_structure(R);
    CoordinateRing Rp(P.with_field(FieldSpec::prime(65537)), PrimeField(65537), 4);
    check_ring_structure(Rp);
}

TEST_CASE("complete intersection pieces match the Hilbert series oracle")
{
    for (std::string text : {"ci:2,3", "ci:2,2,2", "ci:4"}) {
        auto spec = ModelSpec::parse(text, FieldSpec::prime(65537), 3);
        auto P = build(spec);
        auto h = hilbert_function(P, 4);
        auto expected = oracle::ci_hilbert(P.nvars(), spec.degrees, 4);
        for (std::size_t m = 0; m <= 4; ++m)
            CHECK(static_cast<std::int64_t>(h[m]) == expected[m]);
    }
    auto P = build(ModelSpec::parse("ci:2,3", FieldSpec::prime(65537), 0));
    CHECK(hilbert_function(P, 2)[2] == 14);
}

TEST_CASE("bundled models reproduce their Hilbert functions")
{
    const FieldSpec f = FieldSpec::prime(65537);
    for (std::string text : {"rnc:3", "rnc:4", "veronese:2,2", "veronese:1,3", "ci:2,3", "ci:2,2,2", "ci:4",
                             "mukai:6", "mukai:8", "section:ci:2,3", "section:mukai:6"}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto spec = ModelSpec::parse(text, f, seed);
            auto P = build(spec);
            CAPTURE(text);
            CAPTURE(seed);
            CHECK(check_hilbert(P, spec.hilbert(4)).empty());
        }
    }
}

TEST_CASE("ring structure on K3 models")
{
    const FieldSpec f = FieldSpec::prime(65537);
    for (std::string text : {"ci:2,3", "mukai:6", "section:mukai:6"}) {
        auto P = build(ModelSpec::parse(text, f, 1));
        CoordinateRing R(P, PrimeField(65537), 3);
        check_ring_structure(R);
    }
    auto P6 = build(ModelSpec::parse("mukai:6", f, 0));
    CoordinateRing R(P6, PrimeField(65537), 3);
    CHECK(R.piece(2).ideal_dim == 6);
    CHECK(R.dim(3) == 47);
    CHECK(R.piece(3).ambient_monomial_count == 84);
}

TEST_CASE("piece cache round trip leaves values unchanged")
{
    const auto dir = std::filesystem::temp_directory_path() / ("koszul-test-cache-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    {
        PieceCache cache(dir);
        auto P = build(ModelSpec::parse("ci:2,3", FieldSpec::prime(65537), 4));
        CoordinateRing cold(P, PrimeField(65537), 3, &cache);
        CHECK(cache.misses() == 4);
        CoordinateRing warm(P, PrimeField(65537), 3, &cache);
        CHECK(cache.hits() == 4);
        for (std::size_t m = 0; m <= 3; ++m) {
            CHECK(warm.piece(m).quotient_basis == cold.piece(m).quotient_basis);
            for (std::size_t i = 0; i < P.nvars(); ++i)
                if (m < 3)
                    CHECK(warm.mult(m, i) == cold.mult(m, i));
        }
        // a relabelled copy shares the entries
        Presentation renamed(P.ambient_dim(), P.generators(), P.field(), "other label", P.variables(),
                             P.hilbert_hint());
        CoordinateRing again(renamed, PrimeField(65537), 3, &cache);
        CHECK(cache.hits() == 8);
    }
    std::filesystem::remove_all(dir);
}
