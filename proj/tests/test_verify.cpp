#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/verify.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

nlohmann::json without_timing(nlohmann::json j)
{
    j.erase("wall_clock_s");
    j.erase("seed_wall_clock_s");
    return j;
}

const ReportEntry* find(const VerificationReport& r, const std::string& what, std::optional<std::uint64_t> seed)
{
    for (const auto& e : r.entries)
        if (e.assertion == what && e.seed == seed)
            return &e;
    return nullptr;
}

} // namespace

TEST_CASE("k = 2 vanishing matches the complete-intersection resolution")
{
    // Koszul resolution of (2,3): K_{1,1} = 1, K_{1,2} = 1, K_{2,3} = 1, all else 0
    const auto ci = oracle::ci_betti({2, 3});
    const auto report = verify_theorem45(2, FieldSpec::prime(65537), {1, 2, 3, 4, 5});
    CHECK(report.all_pass());
    CHECK(report.entries.size() == 15);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto k02 = find(report, "K_{0,2} = 0", seed);
        auto k11 = find(report, "K_{1,1} = C(2k-1,k-2)", seed);
        auto k21 = find(report, "K_{2,1} = 0", seed);
        REQUIRE(k02);
        REQUIRE(k11);
        REQUIRE(k21);
        CHECK(k11->computed == std::to_string(ci.at({1, 1})));
        CHECK(k02->computed == "0");
        CHECK(k21->computed == "0");
    }
    CHECK(report.to_json()["status"] == "pass");
}

TEST_CASE("k = 3 on the genus-6 model")
{
    const auto report = verify_theorem45(3, FieldSpec::prime(65537), {7});
    CHECK(report.all_pass());
    CHECK(find(report, "K_{2,1} = C(2k-1,k-2)", 7)->computed == "5");
    CHECK(find(report, "K_{1,2} = 0", 7)->computed == "0");
    CHECK(find(report, "K_{3,1} = 0", 7)->computed == "0");
}

TEST_CASE("characteristic restrictions")
{
    CHECK_THROWS_AS(verify_theorem45(3, FieldSpec::prime(2), {1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem45(4, FieldSpec::prime(5), {1}), std::invalid_argument);
    CHECK_NOTHROW(check_characteristic(4, FieldSpec::prime(7)));
    CHECK_NOTHROW(check_characteristic(4, FieldSpec::rationals()));
    CHECK_THROWS_AS(check_characteristic(3, FieldSpec::prime(3)), std::invalid_argument);
}

TEST_CASE("reports are reproducible from claim, field and seed")
{
    const auto a = verify_theorem45(2, FieldSpec::prime(65537), {9, 10});
    const auto b = verify_theorem45(2, FieldSpec::prime(65537), {9, 10});
    CHECK(without_timing(a.to_json()) == without_timing(b.to_json()));
}

TEST_CASE("odd-genus bookkeeping")
{
    const auto report = verify_remark46(FieldSpec::prime(65537), {1, 2});
    CHECK(report.all_pass());
    CHECK(find(report, "dim M from its resolution", std::nullopt)->computed == "16");
    CHECK(find(report, "dim S^{k-1} H0(E)", std::nullopt)->computed == "10");
    CHECK(find(report, "dim wedge^k H0(L)", std::nullopt)->computed == "20");
    for (std::uint64_t seed : {1, 2}) {
        CHECK(find(report, "K_{k-2,1} = K_{1,1}", seed)->computed == "3");
        const auto k31 = find(report, "K_{3,1}", seed);
        REQUIRE(k31);
        CHECK(k31->status == "info");
        // Koszul resolution of three quadrics
        CHECK(find(report, "K_{k-2,2} = K_{1,2}", seed)->computed ==
              std::to_string(oracle::ci_betti({2, 2, 2}).count({1, 2}) ? 1 : 0));
    }
    std::size_t pascal = 0;
    for (const auto& e : report.entries)
        if (e.assertion.rfind("C(2k,k)", 0) == 0) {
            ++pascal;
            CHECK(e.status == "pass");
        }
    CHECK(pascal == 10);
}

TEST_CASE("duality on K3 tables")
{
    const auto P = build(ModelSpec::parse("mukai:6", FieldSpec::prime(65537), 4));
    BettiOptions opt;
    opt.p_max = 4;
    opt.q_max = 2;
    const auto table = betti_table(P, opt);
    const auto report = verify_duality(table);
    CHECK(report.all_pass());
    CHECK(find(report, "K_{3,1} = K_{1,2}", std::nullopt)->computed == "0");
    CHECK(find(report, "K_{2,1} = K_{2,2}", std::nullopt)->computed == "5");
    CHECK(find(report, "K_{0,1} = K_{4,2}", std::nullopt)->status == "pass");

    opt.p_max = 2;
    const auto partial = verify_duality(betti_table(P, opt));
    CHECK(find(partial, "K_{3,1} = K_{1,2}", std::nullopt)->status == "skipped");
    CHECK(partial.all_pass());

    const auto g4 = betti_table(build(ModelSpec::parse("ci:2,3", FieldSpec::prime(65537), 4)), {.p_max = 2, .q_max = 2});
    const auto r4 = verify_duality(g4);
    CHECK(r4.all_pass());
    CHECK(find(r4, "K_{2,1} = K_{0,2}", std::nullopt)->computed == "0");
}

TEST_CASE("hyperplane principle at genus 4")
{
    const auto report = verify_hyperplane_principle(ModelSpec::parse("ci:2,3", FieldSpec::prime(65537)), 3);
    CHECK(report.all_pass());
    CHECK(find(report, "K_{0,0}(X) = K_{0,0}(C)", 3)->computed == "1");
    CHECK(find(report, "K_{1,2}(X) = K_{1,2}(C)", 3)->computed == "1");
    CHECK_THROWS_AS(verify_hyperplane_principle(ModelSpec::parse("rnc:3"), 0), std::invalid_argument);
}
