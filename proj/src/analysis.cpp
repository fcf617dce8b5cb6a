#include "pfhodge/analysis.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pfhodge {

const char* to_string(PointClass c)
{
    switch (c) {
    case PointClass::NONSINGULAR: return "nonsingular";
    case PointClass::REGULAR_SINGULAR: return "regular singular";
    case PointClass::IRREGULAR: return "irregular";
    }
    return "?";
}

const char* to_string(FrobeniusResult r)
{
    switch (r) {
    case FrobeniusResult::APPARENT: return "APPARENT";
    case FrobeniusResult::HAS_LOG: return "HAS_LOG";
    case FrobeniusResult::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

std::vector<BigRational> falling_factorial_coeffs(int k)
{
    UniPoly p = UniPoly::constant(1);
    for (int j = 0; j < k; ++j) p *= UniPoly::linear_root(BigRational(j));
    return p.coefficients();
}

// sum_i c_i T(T-1)...(T-n+i+1), c_0 = 1
template <class Coeff, class Add, class Scale>
std::vector<Coeff> assemble_indicial(int n, const std::vector<Coeff>& c, Coeff zero, Add add, Scale scale)
{
    std::vector<Coeff> out(static_cast<std::size_t>(n) + 1, zero);
    for (int i = 0; i <= n; ++i) {
        auto ff = falling_factorial_coeffs(n - i);
        for (std::size_t j = 0; j < ff.size(); ++j) out[j] = add(out[j], scale(c[i], ff[j]));
    }
    return out;
}

int pole_order_at(const RatFunc& f, const BigRational& a)
{
    if (f.is_zero()) return 0;
    return std::max(0, -f.valuation_at(a));
}

// Multiplicity of the (uniform) roots of squarefree q in d; splits if not uniform.
int uniform_multiplicity(const UniPoly& d, const UniPoly& q)
{
    int v = 0;
    UniPoly r = d;
    for (;;) {
        UniPoly g = poly_gcd(r, q);
        if (g.degree() == 0) return v;
        if (g.degree() < q.degree()) throw SplitRequired(QuotientSplit{g, (q / g).monic()});
        r = r / q;
        ++v;
    }
}

std::vector<int> pole_orders_closed(const DifferentialOperator& d, const UniPoly& q)
{
    std::vector<int> v;
    for (int i = 1; i <= d.order(); ++i) v.push_back(d.coeff(i).is_zero() ? 0 : uniform_multiplicity(d.coeff(i).den(), q));
    return v;
}

PointClass classify_orders(const std::vector<int>& v)
{
    bool pole = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > static_cast<int>(i) + 1) return PointClass::IRREGULAR;
        if (v[i] > 0) pole = true;
    }
    return pole ? PointClass::REGULAR_SINGULAR : PointClass::NONSINGULAR;
}

PointClass classify_rational(const DifferentialOperator& d, const BigRational& a)
{
    std::vector<int> v;
    for (int i = 1; i <= d.order(); ++i) v.push_back(pole_order_at(d.coeff(i), a));
    return classify_orders(v);
}

UniPoly indicial_rational(const DifferentialOperator& d, const BigRational& a, const std::string& key)
{
    const int n = d.order();
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int i = 1; i <= n; ++i) {
        const RatFunc& f = d.coeff(i);
        if (f.is_zero()) continue;
        int v = pole_order_at(f, a);
        if (v > i) throw IrregularSingularity(key);
        if (v < i) continue;
        RatFunc local = ratfunc_shift(f, a) * RatFunc(UniPoly::monomial(BigRational(1), i));
        c[i] = local.evaluate(BigRational(0));
    }
    auto coeffs = assemble_indicial<BigRational>(
        n, c, BigRational(0), [](const BigRational& x, const BigRational& y) { return BigRational(x + y); },
        [](const BigRational& x, const BigRational& s) { return BigRational(x * s); });
    return UniPoly(coeffs);
}

QuotientPoly indicial_closed(const DifferentialOperator& d, const UniPoly& q, const std::string& key)
{
    const int n = d.order();
    auto v = pole_orders_closed(d, q);
    std::vector<QuotientElement> c(static_cast<std::size_t>(n) + 1, QuotientElement::from_rational(q, BigRational(0)));
    c[0] = QuotientElement::from_rational(q, BigRational(1));
    for (int i = 1; i <= n; ++i) {
        if (v[i - 1] > i) throw IrregularSingularity(key);
        if (v[i - 1] < i) continue;
        const RatFunc& f = d.coeff(i);
        // (t-x)^i N/D at a root x of q where x has multiplicity i in D: N(x) i! / D^{(i)}(x)
        UniPoly di = f.den();
        for (int k = 0; k < i; ++k) di = di.derivative();
        auto inv = quotient_invert(QuotientElement(q, di));
        if (auto* s = std::get_if<QuotientSplit>(&inv)) throw SplitRequired(*s);
        c[i] = QuotientElement(q, f.num()) * std::get<QuotientElement>(inv) * BigRational(factorial(i));
    }
    return assemble_indicial<QuotientElement>(
        n, c, QuotientElement::from_rational(q, BigRational(0)),
        [](const QuotientElement& x, const QuotientElement& y) { return x + y; },
        [](const QuotientElement& x, const BigRational& s) { return x * s; });
}

PointId point_from_factor(const UniPoly& f)
{
    UniPoly m = f.monic();
    if (m.degree() == 1) return FiniteRational{BigRational(-m.coeff(0))};
    return ClosedPoint{m};
}

}  // namespace

std::vector<SingularPoint> singular_points(const DifferentialOperator& L)
{
    DifferentialOperator d = to_ddt_form(L);
    UniPoly all = UniPoly::constant(1);
    for (const auto& f : d.coefficients()) all = poly_lcm(all, f.den());
    UniPoly sf = squarefree_part(all);
    std::vector<SingularPoint> out;
    if (sf.degree() >= 1) {
        RationalRoots rr = rational_roots(sf);
        for (const auto& [a, m] : rr.roots) out.push_back({FiniteRational{a}, classify_rational(d, a)});
        std::vector<UniPoly> pieces;
        if (rr.cofactor.degree() >= 1) pieces.push_back(rr.cofactor);
        for (const auto& f : d.coefficients()) {
            UniPoly r = f.den();
            for (;;) {
                UniPoly a = poly_gcd(rr.cofactor, r);
                if (a.degree() == 0) break;
                std::vector<UniPoly> next;
                for (const auto& p : pieces) {
                    UniPoly g = poly_gcd(p, a);
                    if (g.degree() > 0 && g.degree() < p.degree()) {
                        next.push_back(g);
                        next.push_back((p / g).monic());
                    } else {
                        next.push_back(p);
                    }
                }
                pieces = std::move(next);
                r = r / a;
            }
        }
        std::sort(pieces.begin(), pieces.end(), [](const UniPoly& x, const UniPoly& y) {
            return point_less(ClosedPoint{x}, ClosedPoint{y});
        });
        for (const auto& q : pieces) out.push_back({ClosedPoint{q}, classify_orders(pole_orders_closed(d, q))});
    }
    out.push_back({Infinity{}, classify_point(L, Infinity{})});
    return out;
}

PointClass classify_point(const DifferentialOperator& L, const PointId& p)
{
    if (std::holds_alternative<Infinity>(p)) return classify_point(invert_coordinate(L), FiniteRational{BigRational(0)});
    DifferentialOperator d = to_ddt_form(L);
    if (const auto* f = std::get_if<FiniteRational>(&p)) return classify_rational(d, f->a);
    if (const auto* c = std::get_if<ClosedPoint>(&p)) return classify_orders(pole_orders_closed(d, c->q));
    throw Error("cannot analyze a labeled point: " + point_key(p));
}

IndicialPolynomial indicial_polynomial(const DifferentialOperator& L, const PointId& p)
{
    const std::string key = point_key(p);
    if (std::holds_alternative<Infinity>(p))
        return indicial_rational(to_ddt_form(invert_coordinate(L)), BigRational(0), key);
    DifferentialOperator d = to_ddt_form(L);
    if (const auto* f = std::get_if<FiniteRational>(&p)) return indicial_rational(d, f->a, key);
    if (const auto* c = std::get_if<ClosedPoint>(&p)) return indicial_closed(d, c->q, key);
    throw Error("cannot analyze a labeled point: " + key);
}

std::vector<BigRational> characteristic_exponents(const DifferentialOperator& L, const PointId& p)
{
    const int n = L.order();
    IndicialPolynomial ind = indicial_polynomial(L, p);
    std::vector<BigRational> out;
    if (const auto* u = std::get_if<UniPoly>(&ind)) {
        RationalRoots rr = rational_roots(*u);
        out = expand_roots(rr);
        if (static_cast<int>(out.size()) != n) throw IrrationalExponents(point_key(p), to_string(rr.cofactor, "T"));
        return out;
    }
    const auto& qp = std::get<QuotientPoly>(ind);
    for (const auto& [r, m] : rational_roots_over_quotient(qp))
        for (int i = 0; i < m; ++i) out.push_back(r);
    if (static_cast<int>(out.size()) != n)
        throw IrrationalExponents(point_key(p), to_string(rational_roots(norm_polynomial(qp)).cofactor, "T"));
    return out;
}

RiemannScheme riemann_scheme(const DifferentialOperator& L)
{
    RiemannScheme s;
    s.order = L.order();
    std::deque<SingularPoint> work;
    for (auto& sp : singular_points(L)) work.push_back(std::move(sp));
    while (!work.empty()) {
        SingularPoint sp = std::move(work.front());
        work.pop_front();
        if (sp.classification == PointClass::IRREGULAR) throw IrregularSingularity(point_key(sp.point));
        if (sp.classification == PointClass::NONSINGULAR) continue;
        try {
            auto mu = characteristic_exponents(L, sp.point);
            s.rows.push_back({sp.point, orbit_of(sp.point), std::move(mu)});
        } catch (const SplitRequired& e) {
            for (const auto& f : {e.split.factor, e.split.cofactor}) {
                PointId q = point_from_factor(f);
                work.push_back({q, classify_point(L, q)});
            }
        }
    }
    std::sort(s.rows.begin(), s.rows.end(), [](const SchemeRow& a, const SchemeRow& b) { return point_less(a.point, b.point); });
    return s;
}

RiemannScheme group_scheme_rows(const RiemannScheme& s)
{
    RiemannScheme out;
    out.order = s.order;
    std::vector<std::pair<std::vector<BigRational>, UniPoly>> groups;
    std::vector<std::size_t> members;
    for (const auto& row : s.rows) {
        UniPoly factor;
        if (const auto* f = std::get_if<FiniteRational>(&row.point))
            factor = UniPoly::linear_root(f->a);
        else if (const auto* c = std::get_if<ClosedPoint>(&row.point))
            factor = c->q;
        else {
            out.rows.push_back(row);
            continue;
        }
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == row.exponents; });
        if (it == groups.end()) {
            groups.emplace_back(row.exponents, factor);
            members.push_back(1);
        } else {
            it->second *= factor;
            ++members[static_cast<std::size_t>(it - groups.begin())];
        }
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
        PointId p = point_from_factor(groups[i].second);
        out.rows.push_back({p, orbit_of(p), groups[i].first});
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const SchemeRow& a, const SchemeRow& b) { return point_less(a.point, b.point); });
    return out;
}

FuchsCheck fuchs_relation(const DifferentialOperator& L, const RiemannScheme& s)
{
    const int n = L.order();
    const BigRational half = make_rational(n * (n - 1), 2);
    FuchsCheck fc;
    fc.expected = -BigRational(n * (n - 1));
    for (const auto& row : s.rows) {
        BigRational sum(0);
        for (const auto& m : row.exponents) sum += m;
        fc.scheme_sum += BigRational(row.orbit_size) * (sum - half);
    }
    // Finite part: -(sum of residues of f_1) = -(coefficient of 1/t of f_1 at infinity).
    DifferentialOperator d = to_ddt_form(L);
    const RatFunc& f1 = d.coeff(1);
    BigRational c_minus1(0);
    if (!f1.is_zero()) {
        UniPoly r = f1.num() % f1.den();
        if (!r.is_zero() && r.degree() == f1.den().degree() - 1) c_minus1 = r.leading() / f1.den().leading();
    }
    // Infinity: sum of exponents there is g_1(infinity) for the delta-form coefficient g_1.
    BigRational g1_inf = to_delta_form(L).coeff(1).value_at_infinity();
    fc.residue_route = -c_minus1 + g1_inf - half;
    return fc;
}

FrobeniusResult frobenius_apparent_check(const DifferentialOperator& L, const FiniteRational& p,
                                         std::optional<int> truncation_order)
{
    const int n = L.order();
    auto mu = characteristic_exponents(L, p);
    for (const auto& m : mu)
        if (!is_integer(m)) throw Error("not a candidate apparent singularity: exponent " + to_string(m));
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i] == mu[i - 1]) return FrobeniusResult::HAS_LOG;
    const BigRational rho = mu.front();
    const int span = static_cast<int>(to_int64(mu.back() - mu.front()));
    const int trunc = truncation_order.value_or(span + n + 4);
    if (trunc < span) return FrobeniusResult::INCONCLUSIVE;

    DifferentialOperator local = to_delta_form(translate_operator(L, p.a));
    std::vector<std::vector<BigRational>> g;  // g[i][m], g_0 = 1
    g.push_back(std::vector<BigRational>(static_cast<std::size_t>(trunc) + 1));
    g[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        const RatFunc& gi = local.coeff(i);
        if (!gi.is_zero() && gi.den().coeff(0) == 0) throw IrregularSingularity(point_key(PointId{p}));
        g.push_back(gi.is_zero() ? std::vector<BigRational>(static_cast<std::size_t>(trunc) + 1)
                                 : series_at_zero(gi, trunc + 1));
    }
    auto P = [&](int m, const BigRational& x) {
        BigRational acc(0);
        for (int i = 0; i <= n; ++i) {
            BigRational term = g[i][m];
            if (term == 0) continue;
            BigRational pw(1);
            for (int k = 0; k < n - i; ++k) pw *= x;
            acc += term * pw;
        }
        return acc;
    };

    // Each coefficient c_N is a vector over the free parameters (c_0 and one per resonance).
    std::map<int, int> resonance;  // N -> parameter index
    for (int j = 1; j < n; ++j) resonance[static_cast<int>(to_int64(mu[j] - rho))] = j;
    using Vec = std::vector<BigRational>;
    std::vector<Vec> c(static_cast<std::size_t>(trunc) + 1, Vec(static_cast<std::size_t>(n)));
    c[0][0] = 1;
    for (int N = 1; N <= trunc; ++N) {
        Vec rhs(static_cast<std::size_t>(n));
        for (int m = 1; m <= N; ++m) {
            BigRational pm = P(m, rho + BigRational(N - m));
            if (pm == 0) continue;
            for (int k = 0; k < n; ++k) rhs[k] += pm * c[N - m][k];
        }
        auto it = resonance.find(N);
        if (it != resonance.end()) {
            for (const auto& x : rhs)
                if (x != 0) return FrobeniusResult::HAS_LOG;
            c[N][it->second] = 1;
        } else {
            BigRational p0 = P(0, rho + BigRational(N));
            for (int k = 0; k < n; ++k) c[N][k] = -rhs[k] / p0;
        }
    }
    return FrobeniusResult::APPARENT;
}

}  // namespace pfhodge
