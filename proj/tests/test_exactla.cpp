#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "koszul/eliminate.hpp"
#include "koszul/matrix_market.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

struct RandomSparse {
    std::vector<std::vector<std::int64_t>> dense;
    std::vector<Triplet<RationalField>> rational;
};

RandomSparse random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int range)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> value(-range, range);
    RandomSparse out;
    out.dense.assign(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (coin(rng) < density) {
                int v = value(rng);
                out.dense[i][j] = v;
                if (v != 0)
                    out.rational.push_back({i, j, mpq_class(v)});
            }
    return out;
}

oracle::DenseQ to_q(const std::vector<std::vector<std::int64_t>>& a)
{
    oracle::DenseQ q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto v : a[i])
            q[i].emplace_back(static_cast<long>(v));
    return q;
}

SparseMatrix<PrimeField> to_prime(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& a)
{
    std::vector<Triplet<PrimeField>> t;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0)
                t.push_back({i, j, f.from_int(a[i][j])});
    return SparseMatrix<PrimeField>::from_triplets(f, a.size(), a.empty() ? 0 : a[0].size(), std::move(t));
}

/// Low-rank product of two random factors so that rank deficiency is common.
std::vector<std::vector<std::int64_t>> low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                std::size_t inner)
{
    auto a = random_sparse(rng, rows, inner, 0.4, 3).dense;
    auto b = random_sparse(rng, inner, cols, 0.4, 3).dense;
    std::vector<std::vector<std::int64_t>> c(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace

TEST_CASE("primality test on known values")
{
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(65537));
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64(2305843009213693951ULL)); // 2^61 - 1
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(65536));
    CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
    CHECK_THROWS_AS(FieldSpec::prime(65535), std::invalid_argument);
}

TEST_CASE("prime field arithmetic")
{
    for (std::uint64_t p : {7ULL, 65537ULL, 2305843009213693951ULL}) {
        PrimeField f(p);
        std::mt19937_64 rng(p);
        for (int t = 0; t < 200; ++t) {
            auto a = rng() % p;
            if (a == 0)
                continue;
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.pow(a, p - 1) == 1);
        }
    }
    PrimeField f(7);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_rational(mpq_class(1, 2)) == 4);
    CHECK_THROWS_AS(f.from_rational(mpq_class(1, 7)), std::domain_error);
}

TEST_CASE("field spec parsing")
{
    CHECK(FieldSpec::parse("gfp:65537") == FieldSpec::prime(65537));
    CHECK(FieldSpec::parse("qq").is_rational());
    CHECK(FieldSpec::parse("gfp:1000003").to_string() == "gfp:1000003");
    CHECK_THROWS(FieldSpec::parse("gfp:10"));
    CHECK_THROWS(FieldSpec::parse("reals"));
}

TEST_CASE("sparse matrix rejects malformed rows")
{
    PrimeField f(7);
    using Row = SparseRow<PrimeField>;
    CHECK_THROWS(SparseMatrix<PrimeField>(f, 1, 3, {Row{{1, 2}, {0, 1}}}));
    CHECK_THROWS(SparseMatrix<PrimeField>(f, 1, 3, {Row{{1, 0}}}));
    CHECK_THROWS(SparseMatrix<PrimeField>(f, 1, 3, {Row{{3, 1}}}));
    auto m = SparseMatrix<PrimeField>::from_triplets(f, 2, 2, {{0, 0, 3}, {0, 0, 4}, {1, 1, 2}});
    CHECK(m.nnz() == 1);
    CHECK(m.at(1, 1) == 2);
}

TEST_CASE("rank of small fixed matrices")
{
    CHECK(rank(SparseMatrix<PrimeField>::identity(PrimeField(7), 5)) == 5);
    RationalField q;
    auto m = SparseMatrix<RationalField>::from_triplets(
        q, 2, 2, {{0, 0, mpq_class(1)}, {0, 1, mpq_class(2)}, {1, 0, mpq_class(2)}, {1, 1, mpq_class(4)}});
    CHECK(rank(m) == 1);
    CHECK(kernel_dim(m) == 1);
    CHECK(rank(SparseMatrix<RationalField>::zero(q, 4, 6)) == 0);
}

TEST_CASE("rank agrees with a dense oracle on random instances")
{
    std::mt19937_64 rng(12345);
    const std::int64_t p = 65537;
    PrimeField f(p);
    RationalField q;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 18, cols = 1 + rng() % 18, inner = 1 + rng() % 10;
        auto dense = low_rank(rng, rows, cols, inner);
        const auto expected_q = oracle::dense_rank(to_q(dense));
        const auto expected_p = oracle::dense_rank_mod(dense, p);

        std::vector<Triplet<RationalField>> t;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (dense[i][j] != 0)
                    t.push_back({i, j, mpq_class(static_cast<long>(dense[i][j]))});
        auto mq = SparseMatrix<RationalField>::from_triplets(q, rows, cols, t);
        auto mp = to_prime(f, dense);
        CHECK(rank(mq) == expected_q);
        CHECK(rank(mp) == expected_p);
        CHECK(row_echelon(mq).pivots.size() == expected_q);
    }
}

TEST_CASE("rational elimination handles non-integral entries")
{
    std::mt19937_64 rng(99);
    RationalField q;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        oracle::DenseQ dense(n, std::vector<mpq_class>(n));
        std::vector<Triplet<RationalField>> t;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (rng() % 3 == 0)
                    continue;
                mpq_class v(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(1 + rng() % 5));
                v.canonicalize();
                dense[i][j] = v;
                if (v != 0)
                    t.push_back({i, j, v});
            }
        // force a dependency: last row = first + 2/3 * second
        for (std::size_t j = 0; j < n; ++j)
            dense[n - 1][j] = dense[0][j] + mpq_class(2, 3) * dense[1][j];
        std::erase_if(t, [&](const auto& e) { return e.row == n - 1; });
        for (std::size_t j = 0; j < n; ++j)
            if (dense[n - 1][j] != 0)
                t.push_back({n - 1, j, dense[n - 1][j]});
        auto m = SparseMatrix<RationalField>::from_triplets(q, n, n, t);
        CHECK(rank(m) == oracle::dense_rank(dense));
    }
}

TEST_CASE("property: rank is invariant under transpose")
{
    std::mt19937_64 rng(7);
    PrimeField f(65537);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = to_prime(f, low_rank(rng, 1 + rng() % 25, 1 + rng() % 25, 1 + rng() % 12));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("property: rank of a product is bounded by its factors")
{
    std::mt19937_64 rng(8);
    PrimeField f(65537);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t a = 1 + rng() % 15, b = 1 + rng() % 15, c = 1 + rng() % 15;
        auto A = to_prime(f, low_rank(rng, a, b, 1 + rng() % 8));
        auto B = to_prime(f, low_rank(rng, b, c, 1 + rng() % 8));
        CHECK(rank(A.multiply(B)) <= std::min(rank(A), rank(B)));
    }
}

TEST_CASE("row echelon form is reduced and canonical")
{
    std::mt19937_64 rng(21);
    PrimeField f(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
        auto dense = low_rank(rng, rows, cols, 1 + rng() % 6);
        auto m = to_prime(f, dense);
        auto e = row_echelon(m);
        REQUIRE(e.reduced.nrows() == e.pivots.size());
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            CHECK(e.reduced.row(k).front().col == e.pivots[k]);
            CHECK(e.reduced.row(k).front().value == 1);
            for (std::size_t i = 0; i < e.pivots.size(); ++i)
                if (i != k)
                    CHECK(e.reduced.at(i, e.pivots[k]) == 0);
            if (k > 0)
                CHECK(e.pivots[k - 1] < e.pivots[k]);
        }
        // shuffling the input rows does not change the result
        std::vector<std::vector<std::int64_t>> shuffled = dense;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto e2 = row_echelon(to_prime(f, shuffled));
        CHECK(e2.pivots == e.pivots);
        CHECK(e2.reduced == e.reduced);
    }
    auto z = row_echelon(SparseMatrix<PrimeField>::zero(f, 3, 3));
    CHECK(z.pivots.empty());
    auto id = row_echelon(SparseMatrix<PrimeField>::identity(f, 4));
    CHECK(id.pivots == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("matrix market round trip")
{
    std::mt19937_64 rng(3);
    PrimeField f(65537);
    auto m = to_prime(f, low_rank(rng, 9, 7, 4));
    std::stringstream buf;
    write_matrix_market(buf, m);
    CHECK(buf.str().rfind("%%MatrixMarket", 0) == 0);
    CHECK(read_matrix_market(buf, f) == m);

    RationalField q;
    auto mq = SparseMatrix<RationalField>::from_triplets(q, 2, 2, {{0, 1, mpq_class(-3, 4)}, {1, 0, mpq_class(5)}});
    std::stringstream bq;
    write_matrix_market(bq, mq);
    CHECK(read_matrix_market(bq, q) == mq);
}

TEST_CASE("accumulator column order must be a permutation")
{
    PrimeField f(7);
    CHECK_THROWS(RankAccumulator<PrimeField>(f, 3, {0, 0, 1}));
    CHECK_THROWS(RankAccumulator<RationalField>(RationalField{}, 2, {1, 2}));
}
