#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfhodge/analysis.hpp"

#include <random>

using namespace pfhodge;

namespace {

BigRational Q(const char* s) { return parse_rational(s); }
UniPoly P(const char* s) { return parse_unipoly(s); }

std::vector<BigRational> Qs(std::initializer_list<const char*> xs)
{
    std::vector<BigRational> v;
    for (auto x : xs) v.push_back(Q(x));
    return v;
}

const char* kQuintic = "del^4 - t*(del+1/5)*(del+2/5)*(del+3/5)*(del+4/5)";
const char* kCase2 = "del^4 - t*(del+1/10)*(del+3/10)*(del+7/10)*(del+9/10)";
const char* kQuartic = "del^3 + t*(del+1/4)*(del+1/2)*(del+3/4)";

const SchemeRow& row_at(const RiemannScheme& s, const PointId& p)
{
    for (const auto& r : s.rows)
        if (r.point == p) return r;
    FAIL("point missing: " << point_key(p));
    throw;
}

}  // namespace

TEST_CASE("parse_operator examples")
{
    auto L = parse_operator(kQuintic);
    CHECK(L.order() == 4);
    CHECK(L.form() == OpForm::DELTA);
    // delta^4 - t(delta^4 + 2 delta^3 + ...) normalized by 1 - t: g_1 = -2t/(1-t)
    CHECK(L.coeff(1) == RatFunc(P("2*t"), P("t-1")));
    auto D2 = parse_operator("D^2");
    CHECK(D2.order() == 2);
    CHECK(D2.form() == OpForm::DDT);
    CHECK(D2.coeff(1).is_zero());
    CHECK(D2.coeff(2).is_zero());
    auto K = parse_operator(kQuartic);
    CHECK(K.order() == 3);
    CHECK(K.form() == OpForm::DELTA);
    CHECK(parse_operator("(t^2-1)/t*D^2 + D") == parse_operator("D^2 + t/(t^2-1)*D"));
    CHECK(parse_operator("\xCE\xB4^2 \xE2\x88\x92 t*\xCE\xB4") == parse_operator("del^2 - t*del"));
}

TEST_CASE("parse_operator errors carry positions")
{
    try {
        parse_operator("D^2 + del");
        FAIL("mixed forms accepted");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_operator("D^2 +"), ParseError);
    CHECK_THROWS_AS(parse_operator("D^2 - D^2 + t"), ParseError);
    CHECK_THROWS_AS(parse_operator("t^2 + 1"), ParseError);
    CHECK_THROWS_AS(parse_operator("D/t"), ParseError);
    CHECK_THROWS_AS(parse_operator("D^2 + 1/0"), ParseError);
    CHECK_THROWS_AS(parse_operator("D^2 $"), ParseError);
    CHECK_THROWS_AS(parse_operator("x*D"), ParseError);
}

TEST_CASE("operator printing round trips through the parser")
{
    for (const char* text : {kQuintic, kCase2, kQuartic, "D^2 + 1/t*D + 1/(t^2-1)", "D^3 - 3/2*t*D + 7"}) {
        auto L = parse_operator(text);
        CHECK(parse_operator(to_string(L)) == L);
    }
}

TEST_CASE("delta form rewriting")
{
    auto d = to_delta_form(parse_operator("D^2"));
    CHECK(d == parse_operator("del^2 - del"));
    auto q = parse_operator(kQuintic);
    CHECK(to_delta_form(q) == q);
    for (const char* text : {"D^2", "D^2 + 1/t*D + 1/(t^2-1)", "D^3 - 3/2*t*D + 7", "D^4 + 1/(t-2)*D^2"}) {
        auto L = parse_operator(text);
        CHECK(to_ddt_form(to_delta_form(L)) == L);
    }
    CHECK(to_delta_form(to_ddt_form(q)) == q);
}

TEST_CASE("singular points")
{
    auto sp = singular_points(parse_operator(kQuintic));
    REQUIRE(sp.size() == 3);
    CHECK(sp[0].point == PointId{FiniteRational{Q("0")}});
    CHECK(sp[1].point == PointId{FiniteRational{Q("1")}});
    CHECK(sp[2].point == PointId{Infinity{}});
    for (const auto& s : sp) CHECK(s.classification == PointClass::REGULAR_SINGULAR);

    auto k3 = singular_points(parse_operator(kQuartic));
    REQUIRE(k3.size() == 3);
    CHECK(k3[0].point == PointId{FiniteRational{Q("-1")}});
    CHECK(k3[1].point == PointId{FiniteRational{Q("0")}});

    // s = 1/t turns D^2 into D_s^2 + (2/s) D_s: regular singular, exponents -1 and 0
    auto d2 = singular_points(parse_operator("D^2"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].point == PointId{Infinity{}});
    CHECK(d2[0].classification == PointClass::REGULAR_SINGULAR);
    CHECK(characteristic_exponents(parse_operator("D^2"), Infinity{}) == Qs({"-1", "0"}));

    // D - 1 at infinity: delta_s + 1/s has a pole of order 1 > 0 in delta form
    CHECK(classify_point(parse_operator("D - 1"), Infinity{}) == PointClass::IRREGULAR);
    CHECK_THROWS_AS(riemann_scheme(parse_operator("D - 1")), IrregularSingularity);
    CHECK(classify_point(parse_operator("D^2 + 1/t^3"), FiniteRational{Q("0")}) == PointClass::IRREGULAR);
}

TEST_CASE("indicial polynomials of the quintic family")
{
    auto L = parse_operator(kQuintic);
    CHECK(std::get<UniPoly>(indicial_polynomial(L, FiniteRational{Q("0")})) == P("t^4"));
    CHECK(std::get<UniPoly>(indicial_polynomial(L, Infinity{})) ==
          P("t-1/5") * P("t-2/5") * P("t-3/5") * P("t-4/5"));
    CHECK(std::get<UniPoly>(indicial_polynomial(L, FiniteRational{Q("1")})) == P("t") * P("t-1") * P("t-1") * P("t-2"));
    CHECK(characteristic_exponents(L, Infinity{}) == Qs({"1/5", "2/5", "3/5", "4/5"}));
    CHECK(characteristic_exponents(parse_operator(kCase2), Infinity{}) == Qs({"1/10", "3/10", "7/10", "9/10"}));
}

TEST_CASE("exponents at nonsingular points are consecutive integers")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    for (const char* text : {kQuintic, kCase2, kQuartic, "D^2 + 1/t*D + 1/(t^2-1)"}) {
        auto L = parse_operator(text);
        for (int trial = 0; trial < 10; ++trial) {
            BigRational a = make_rational(num(rng), den(rng));
            if (classify_point(L, FiniteRational{a}) != PointClass::NONSINGULAR) continue;
            auto mu = characteristic_exponents(L, FiniteRational{a});
            for (int j = 0; j < L.order(); ++j) CHECK(mu[j] == BigRational(j));
        }
    }
}

TEST_CASE("Riemann schemes as printed")
{
    auto s = riemann_scheme(parse_operator(kQuintic));
    REQUIRE(s.rows.size() == 3);
    CHECK(s.rows[0].exponents == Qs({"0", "0", "0", "0"}));
    CHECK(s.rows[1].exponents == Qs({"0", "1", "1", "2"}));
    CHECK(s.rows[2].exponents == Qs({"1/5", "2/5", "3/5", "4/5"}));

    auto k = riemann_scheme(parse_operator(kQuartic));
    CHECK(row_at(k, FiniteRational{Q("0")}).exponents == Qs({"0", "0", "0"}));
    CHECK(row_at(k, Infinity{}).exponents == Qs({"1/4", "1/2", "3/4"}));
    CHECK(row_at(k, FiniteRational{Q("-1")}).exponents == Qs({"0", "1/2", "1"}));

    auto pulled = riemann_scheme(pullback_operator_monomial(parse_operator(kCase2), 5));
    REQUIRE(pulled.rows.size() == 4);
    CHECK(row_at(pulled, FiniteRational{Q("0")}).exponents == Qs({"0", "0", "0", "0"}));
    CHECK(row_at(pulled, FiniteRational{Q("1")}).exponents == Qs({"0", "1", "1", "2"}));
    const auto& cyc = row_at(pulled, ClosedPoint{P("t^4+t^3+t^2+t+1")});
    CHECK(cyc.orbit_size == 4);
    CHECK(cyc.exponents == Qs({"0", "1", "1", "2"}));
    CHECK(row_at(pulled, Infinity{}).exponents == Qs({"1/2", "3/2", "7/2", "9/2"}));

    auto grouped = group_scheme_rows(pulled);
    REQUIRE(grouped.rows.size() == 3);
    CHECK(grouped.rows[1].point == PointId{ClosedPoint{P("t^5-1")}});
    CHECK(grouped.rows[1].orbit_size == 5);
    int total = 0;
    for (const auto& r : grouped.rows) total += r.orbit_size;
    CHECK(total == 7);
}

TEST_CASE("closed points split when conjugates disagree")
{
    // residue 1 at the roots of t^2-2 and 2 at the roots of t^2+1: one pole-order class,
    // two exponent patterns (0,0) and (-1,0)
    auto L = parse_operator("D^2 + ((2*t)/(t^2-2) + (4*t)/(t^2+1))*D");
    auto sp = singular_points(L);
    REQUIRE(sp.size() == 2);
    CHECK(sp[0].point == PointId{ClosedPoint{P("t^4-t^2-2")}});
    CHECK_THROWS_AS(characteristic_exponents(L, ClosedPoint{P("t^4-t^2-2")}), SplitRequired);
    auto s = riemann_scheme(L);
    CHECK(row_at(s, ClosedPoint{P("t^2-2")}).exponents == Qs({"0", "0"}));
    CHECK(row_at(s, ClosedPoint{P("t^2+1")}).exponents == Qs({"-1", "0"}));
    CHECK(row_at(s, ClosedPoint{P("t^2+1")}).orbit_size == 2);
    CHECK(fuchs_relation(L, s).ok());

    // residue 1/(2 sqrt 2) at t = sqrt 2: exponents 0 and 1 - res are irrational
    CHECK_THROWS_AS(characteristic_exponents(parse_operator("D^2 + 1/(t^2-2)*D"), ClosedPoint{P("t^2-2")}),
                    IrrationalExponents);
}

TEST_CASE("Fuchs relation gate")
{
    for (const char* text : {kQuintic, kCase2, kQuartic, "D^2", "D^2 + (2*t)/(t^2-2)*D", "del^2 - t*del*(del+1)"}) {
        auto L = parse_operator(text);
        auto s = riemann_scheme(L);
        auto f = fuchs_relation(L, s);
        CHECK(f.ok());
    }
    auto pulled = pullback_operator_monomial(parse_operator(kCase2), 10);
    CHECK(fuchs_relation(pulled, riemann_scheme(pulled)).ok());
}

TEST_CASE("twist shifts exponents by the order of h")
{
    auto L = parse_operator("D^2");
    CHECK(twist(L, RatFunc::constant(1)) == L);
    auto T = twist(L, RatFunc(P("t")));
    // solutions t and t^2: y'' - (2/t) y' + (2/t^2) y
    CHECK(T == parse_operator("D^2 - 2/t*D + 2/t^2"));
    CHECK(characteristic_exponents(T, FiniteRational{Q("0")}) == Qs({"1", "2"}));

    auto q = parse_operator(kCase2);
    for (int e : {-2, 1, 3}) {
        RatFunc h = e > 0 ? RatFunc(UniPoly::monomial(BigRational(1), e)) : RatFunc(P("1"), UniPoly::monomial(BigRational(1), -e));
        auto tq = twist(q, h);
        CHECK(tq.form() == OpForm::DELTA);
        auto s0 = riemann_scheme(q), s1 = riemann_scheme(tq);
        REQUIRE(s0.rows.size() == s1.rows.size());
        for (std::size_t r = 0; r < s0.rows.size(); ++r) {
            const auto& a = s0.rows[r].exponents;
            const auto& b = s1.rows[r].exponents;
            for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] - a[i - 1] == b[i] - b[i - 1]);
        }
        CHECK(row_at(s1, FiniteRational{Q("0")}).exponents.front() == BigRational(e));
        CHECK(row_at(s1, Infinity{}).exponents.front() == Q("1/10") - BigRational(e));
    }
}

TEST_CASE("monomial pullback")
{
    auto L = parse_operator(kCase2);
    CHECK(pullback_operator_monomial(L, 1) == L);
    for (int k : {2, 3, 5}) {
        auto M = pullback_operator_monomial(L, k);
        auto base0 = characteristic_exponents(L, FiniteRational{Q("0")});
        auto baseInf = characteristic_exponents(L, Infinity{});
        auto m0 = characteristic_exponents(M, FiniteRational{Q("0")});
        auto mInf = characteristic_exponents(M, Infinity{});
        for (std::size_t i = 0; i < base0.size(); ++i) {
            CHECK(m0[i] == BigRational(k) * base0[i]);
            CHECK(mInf[i] == BigRational(k) * baseInf[i]);
        }
        // the general chain-rule pullback along s^k agrees with the delta-form shortcut
        CHECK(pullback_operator(L, RatFunc(UniPoly::monomial(BigRational(1), k))) == to_ddt_form(M));
    }
}

TEST_CASE("Frobenius apparent check")
{
    // a nonsingular point is apparent
    CHECK(frobenius_apparent_check(parse_operator(kQuintic), FiniteRational{Q("1/2")}) == FrobeniusResult::APPARENT);

    // delta(delta-1) - t(delta+1): exponents 0,1; at N = 1 the obstruction is -P_1(0) = -1
    CHECK(frobenius_apparent_check(parse_operator("del*(del-1) - t*(del+1)"), FiniteRational{Q("0")}) ==
          FrobeniusResult::HAS_LOG);
    // delta(delta-1) - t*delta: the obstruction vanishes (y = 1 and a second power series)
    CHECK(frobenius_apparent_check(parse_operator("del*(del-1) - t*del"), FiniteRational{Q("0")}) ==
          FrobeniusResult::APPARENT);

    // delta^2 - t delta(delta+1) has solutions 1 and log(t/(1-t)): logarithmic at 0 and at 1,
    // holomorphic at infinity (s = 1/t gives 1 and -log(1-s)).
    auto L = parse_operator("del^2 - t*del*(del+1)");
    CHECK(frobenius_apparent_check(L, FiniteRational{Q("0")}) == FrobeniusResult::HAS_LOG);
    CHECK(frobenius_apparent_check(L, FiniteRational{Q("1")}) == FrobeniusResult::HAS_LOG);
    CHECK(frobenius_apparent_check(invert_coordinate(L), FiniteRational{Q("0")}) == FrobeniusResult::APPARENT);

    CHECK(frobenius_apparent_check(parse_operator("del*(del-1) - t*(del+1)"), FiniteRational{Q("0")}, 0) ==
          FrobeniusResult::INCONCLUSIVE);
    CHECK_THROWS_AS(frobenius_apparent_check(parse_operator(kQuartic), FiniteRational{Q("-1")}), Error);

    // ramification point of t = 1/2 + s^3 over a nonsingular point
    auto g = RatFunc(P("t^3+1/2"));
    auto M = pullback_operator(parse_operator(kQuintic), g);
    CHECK(characteristic_exponents(M, FiniteRational{Q("0")}) == Qs({"0", "3", "6", "9"}));
    CHECK(frobenius_apparent_check(M, FiniteRational{Q("0")}) == FrobeniusResult::APPARENT);
}
