#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "pfhodge/errors.hpp"
#include "pfhodge/hodge_calc.hpp"

#include <algorithm>

using namespace testsupport;

namespace {

VHSProfile case2_pullback(int d)
{
    return pullback_profile(hypergeometric_profile(Qs({"1/10", "3/10", "7/10", "9/10"})), monomial_cover(d));
}

std::vector<std::int64_t> H(std::initializer_list<std::int64_t> xs) { return xs; }

}  // namespace

TEST_CASE("case-2 degree 5 pullback")
{
    auto v = case2_pullback(5);
    auto c1 = cokernel_lengths(v, 1);
    CHECK(c1.total == 2);
    for (const auto& p : c1.points)
        if (point_key(p.point) == "inf[e=5]") CHECK(p.length == 2);
    auto t = antisym_targets(v);
    REQUIRE(t.size() == 2);
    CHECK(t[1] == -1);
    auto deg = solve_degrees(v);
    CHECK(deg.degrees[1] == 1);
    CHECK(deg.degrees[2] == -2);
    auto h = hodge_numbers(v);
    CHECK(h.h == H({0, 1, 2, 1, 0}));
    CHECK(h.total_rank == 4);
}

TEST_CASE("case-2 degree 10 pullback")
{
    auto v = case2_pullback(10);
    // inf has identity monodromy: apparent with 7 - 3 - 1 = 3, or counted in
    // Delta with floor(7) - floor(3) = 4; x_1 - x_2 = 6 either way
    CHECK(cokernel_lengths(v, 1).total == 3);
    CHECK(delta_size(v) - 2 - cokernel_lengths(v, 1).total == 6);
    auto retagged = v;
    for (auto& p : retagged.points)
        if (point_key(p.point) == "inf[e=10]") {
            CHECK(p.kind == PointKind::APPARENT);
            p = make_local_data(p.point, 1, p.exponents, PointKind::ACTUAL, diag({0, 0, 0, 0}));
        }
    CHECK(cokernel_lengths(retagged, 1).total == 4);
    CHECK(delta_size(retagged) - 2 - cokernel_lengths(retagged, 1).total == 6);
    CHECK(antisym_targets(v)[1] == 0);
    CHECK(solve_degrees(v).degrees[1] == 3);
    CHECK(solve_degrees(retagged).degrees == solve_degrees(v).degrees);
    CHECK(hodge_numbers(v).h == H({0, 1, 3, 1, 0}));
    CHECK(hodge_numbers(retagged).h == H({0, 1, 3, 1, 0}));
}

TEST_CASE("nonsingular and apparent cokernels")
{
    VHSProfile v{1, {make_local_data(FiniteRational{0}, 1, {0, 0}, PointKind::ACTUAL, JordanType({{0, 2}})),
                     make_local_data(FiniteRational{2}, 1, {0, 1}, PointKind::NONSINGULAR),
                     make_local_data(FiniteRational{3}, 2, {0, 3}, PointKind::APPARENT)}};
    auto c = cokernel_lengths(v, 0);
    CHECK(c.points[1].length == 0);
    CHECK(c.points[2].length == 2);
    CHECK(c.total == 4);
    v.points.push_back(make_local_data(FiniteRational{4}, 1, {0, 0}, PointKind::APPARENT));
    try {
        cokernel_lengths(v, 0);
        FAIL("expected rejection");
    } catch (const InconsistentProfile& e) {
        CHECK(std::string(e.what()).find("exponents not admissible") != std::string::npos);
    }
    CHECK_THROWS(cokernel_lengths(v, 1));
}

TEST_CASE("mirror quartic identity cover")
{
    auto v = quartic_profile();
    auto t = antisym_targets(v);
    CHECK(t[1] / 2 == -1);
    auto deg = solve_degrees(v);
    CHECK(deg.degrees[1] == -1);
    CHECK(deg.degrees[2] == -1);
    CHECK(k3_degree_formula(v) == -1);
    CHECK(k3_degree_formula_all_points(v) == -1);
    CHECK(quartic_Dg({1}) == -1);
    CHECK(quartic_Dg_corollary(v) == -1);
    CHECK(hodge_numbers(v).h[3] == 0);
}

TEST_CASE("all-unipotent profile has zero antisymmetry targets")
{
    VHSProfile v{3, {make_local_data(FiniteRational{0}, 1, {0, 0, 0, 0}, PointKind::ACTUAL, JordanType({{0, 4}})),
                     make_local_data(Infinity{}, 3, {0, 1, 1, 2}, PointKind::ACTUAL, JordanType({{0, 2}, {0, 1}, {0, 1}}))}};
    for (const auto& x : antisym_targets(v)) CHECK(x == 0);
}

TEST_CASE("h0 of line bundles")
{
    CHECK(h0_line_bundle(-2) == 0);
    CHECK(h0_line_bundle(-1) == 0);
    CHECK(h0_line_bundle(0) == 1);
    CHECK(h0_line_bundle(3) == 4);
}

TEST_CASE("quintic closed forms")
{
    auto q1 = quintic_degree_formulas({1}, 1);
    CHECK(q1.ell0 == 1);
    CHECK(q1.e21 == 0);
    CHECK(q1.e30 == 0);
    auto q5 = quintic_degree_formulas({5}, 5);
    CHECK(q5.ell0 == 0);
    CHECK(q5.e30 == 1);
    CHECK(q5.e21 == 2);
    auto q10 = quintic_degree_formulas({10}, 10);
    CHECK(q10.e30 == 2);
    CHECK(q10.e21 == 4);
}

TEST_CASE("quintic closed forms agree with the engine on random covers")
{
    std::mt19937_64 rng(5);
    const auto base = quintic_profile();
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        auto c = random_cover(rng, {FiniteRational{0}, FiniteRational{1}, Infinity{}}, 12);
        auto v = pullback_profile(base, c);
        auto deg = solve_degrees(v);
        auto y = partition_over(c, Infinity{});
        auto q = quintic_degree_formulas(y, c.degree);
        CHECK(BigRational(deg.degrees[0]) == q.e30);
        CHECK(BigRational(deg.degrees[1]) == q.e21);
        CHECK(deg.degrees[0] + deg.degrees[3] == -q.ell0);
        auto h = hodge_numbers(v, deg);
        CHECK((h.h[0] == 1) == quintic_cy_condition(y));
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("quartic divisor agrees with the engine on random covers")
{
    std::mt19937_64 rng(9);
    const auto base = quartic_profile();
    for (int it = 0; it < 300; ++it) {
        auto c = random_cover(rng, {FiniteRational{0}, FiniteRational{-1}, Infinity{}}, 12);
        auto v = pullback_profile(base, c);
        auto deg = solve_degrees(v);
        auto Dg = quartic_Dg(partition_over(c, Infinity{}));
        CHECK(-2 - deg.degrees[2] == Dg);
        CHECK(quartic_Dg_corollary(v) == Dg);
        CHECK(k3_degree_formula(v) == deg.degrees[2]);
        CHECK(k3_degree_formula_all_points(v) == deg.degrees[2]);
        CHECK(hodge_numbers(v, deg).h[3] == h0_line_bundle(Dg));
    }
}

TEST_CASE("quartic corollary cases")
{
    for (int y1 = 1; y1 <= 4; ++y1)
        for (int y2 = 1; y2 <= 4; ++y2) CHECK(quartic_Dg({y1, y2}) == 0);
    for (int y = 5; y <= 8; ++y) CHECK(quartic_Dg({y}) == 0);
    CHECK(quartic_Dg({4}) == -1);
    CHECK(quartic_Dg({9}) == 1);
}

TEST_CASE("elliptic closed form agrees with the engine")
{
    std::mt19937_64 rng(13);
    const auto base = legendre_profile();
    for (int it = 0; it < 100; ++it) {
        auto c = random_cover(rng, {FiniteRational{0}, FiniteRational{1}, Infinity{}}, 10);
        auto v = pullback_profile(base, c);
        auto deg = solve_degrees(v);
        CHECK(elliptic_degree_formula(v) == deg.degrees[1]);
        CHECK(elliptic_degree_formula_all_points(v) == deg.degrees[1]);
        CHECK(-deg.degrees[0] - deg.degrees[1] == count_strictly_quasi_unipotent(v));
    }
}

TEST_CASE("elliptic closed form on random admissible Kodaira data")
{
    // (weights, Jordan type) per Table 1 row, shifted by random integers
    struct Type { std::vector<BigRational> w; JordanType j; };
    const std::vector<Type> types = {
        {{0, 0}, JordanType({{0, 2}})},
        {Qs({"1/2", "1/2"}), JordanType({{Q("1/2"), 2}})},
        {Qs({"1/6", "5/6"}), diag(Qs({"1/6", "5/6"}))},
        {Qs({"1/4", "3/4"}), diag(Qs({"1/4", "3/4"}))},
        {Qs({"1/3", "2/3"}), diag(Qs({"1/3", "2/3"}))},
    };
    std::mt19937_64 rng(17);
    int integral = 0;
    for (int it = 0; it < 400; ++it) {
        VHSProfile v{1, {}};
        int n = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            const auto& t = types[rng() % types.size()];
            long s0 = static_cast<long>(rng() % 3) - 1, s1 = s0 + static_cast<long>(rng() % 2);
            std::vector<BigRational> mu = {t.w[0] + s0, t.w[1] + s1};
            v.points.push_back(make_local_data(FiniteRational{i}, 1, mu, PointKind::ACTUAL, t.j));
        }
        int m = static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) {
            long a = static_cast<long>(rng() % 3), k = 1 + static_cast<long>(rng() % 3);
            v.points.push_back(make_local_data(FiniteRational{100 + i}, 1, {a, a + k}, PointKind::APPARENT));
        }
        auto closed = elliptic_degree_formula(v);
        if (is_integer(closed)) {
            ++integral;
            CHECK(solve_degrees(v).degrees[1] == closed);
        } else {
            CHECK_THROWS_AS(solve_degrees(v), InconsistentProfile);
        }
    }
    CHECK(integral >= 20);
}

TEST_CASE("degrees are twist invariant")
{
    std::mt19937_64 rng(21);
    const auto base = quintic_profile();
    for (int it = 0; it < 50; ++it) {
        auto v = pullback_profile(base, random_cover(rng, {FiniteRational{0}, FiniteRational{1}, Infinity{}}, 10));
        auto before = solve_degrees(v).degrees;
        auto& p = v.points[rng() % v.points.size()];
        if (p.kind == PointKind::NONSINGULAR) continue;
        long shift = static_cast<long>(rng() % 7) - 3;
        for (auto& m : p.exponents) m += shift;
        CHECK(solve_degrees(v).degrees == before);
    }
}

TEST_CASE("apparent and actual tags give the same output for identity monodromy")
{
    std::mt19937_64 rng(23);
    const VHSProfile bases[] = {quintic_profile(), quartic_profile(), legendre_profile(),
                                hypergeometric_profile(Qs({"1/2", "1/2", "1/2", "1/2"}))};
    int retagged = 0;
    for (const auto& base : bases)
        for (int it = 0; it < 40; ++it) {
            auto v = pullback_profile(base, random_cover(rng, {FiniteRational{0}, FiniteRational{1}, FiniteRational{-1}, Infinity{}}, 8));
            HodgeNumbers h1;
            try {
                h1 = hodge_numbers(v);
            } catch (const InconsistentProfile&) {
                continue;
            }
            auto d1 = solve_degrees(v).degrees;
            for (auto& p : v.points)
                if (p.kind == PointKind::APPARENT) {
                    std::vector<JordanBlock> ones(p.exponents.size(), JordanBlock{0, 1});
                    p = make_local_data(p.point, p.orbit_size, p.exponents, PointKind::ACTUAL, JordanType(ones));
                    ++retagged;
                }
            CHECK(solve_degrees(v).degrees == d1);
            auto h2 = hodge_numbers(v);
            CHECK(h2.h == h1.h);
            CHECK(h2.total_rank == h1.total_rank);
        }
    CHECK(retagged > 0);
}

TEST_CASE("Hodge numbers are palindromic and sum to the total rank")
{
    std::mt19937_64 rng(29);
    const VHSProfile bases[] = {quintic_profile(), quartic_profile(), legendre_profile(),
                                hypergeometric_profile(Qs({"1/3", "1/3", "2/3", "2/3"}))};
    for (const auto& base : bases)
        for (int it = 0; it < 40; ++it) {
            auto v = pullback_profile(base, random_cover(rng, {FiniteRational{0}, FiniteRational{1}, FiniteRational{-1}, Infinity{}}, 8));
            auto h = hodge_numbers(v);
            auto r = h.h;
            std::reverse(r.begin(), r.end());
            CHECK(r == h.h);
            std::int64_t sum = 0;
            for (auto x : h.h) sum += x;
            CHECK(sum == h.total_rank);
        }
}

TEST_CASE("rejections")
{
    VHSProfile two{1, {make_local_data(FiniteRational{0}, 1, {0, 0}, PointKind::ACTUAL, JordanType({{0, 2}})),
                       make_local_data(Infinity{}, 1, {0, 0}, PointKind::ACTUAL, JordanType({{0, 2}}))}};
    try {
        hodge_numbers(two);
        FAIL("expected rejection");
    } catch (const InconsistentProfile& e) {
        CHECK(std::string(e.what()) == "profile not of VHS origin as annotated");
    }
    VHSProfile one{1, {make_local_data(FiniteRational{0}, 1, {0, 0}, PointKind::ACTUAL, JordanType({{0, 2}}))}};
    CHECK_THROWS_AS(solve_degrees(one), InconsistentProfile);
}
