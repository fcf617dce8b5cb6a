#include "pfhodge/hodge_calc.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>

namespace pfhodge {

std::vector<int> kodaira_spencer_indices(int weight)
{
    if (weight == 1 || weight == 2) return {0};
    if (weight == 3) return {0, 1};
    throw InconsistentProfile("weight must be 1, 2 or 3");
}

CokernelReport cokernel_lengths(const VHSProfile& v, int i)
{
    auto idx = kodaira_spencer_indices(v.weight);
    if (std::find(idx.begin(), idx.end(), i) == idx.end())
        throw Error("Kodaira-Spencer index " + std::to_string(i) + " not used in weight " + std::to_string(v.weight));
    CokernelReport r;
    r.index = i;
    for (const auto& d : v.points) {
        const auto& lo = d.exponents.at(static_cast<std::size_t>(i));
        const auto& hi = d.exponents.at(static_cast<std::size_t>(i) + 1);
        BigRational len = 0;
        switch (d.kind) {
        case PointKind::NONSINGULAR: break;
        case PointKind::APPARENT:
            len = hi - lo - 1;
            if (len < 0) throw InconsistentProfile("exponents not admissible at " + point_key(d.point));
            break;
        case PointKind::ACTUAL: len = BigRational(floor_of(hi) - floor_of(lo)); break;
        }
        PointCokernel pc{d.point, d.orbit_size, to_int64(len)};
        r.total += pc.length * d.orbit_size;
        r.points.push_back(std::move(pc));
    }
    return r;
}

std::vector<BigRational> antisym_targets(const VHSProfile& v)
{
    const int l = v.weight;
    std::vector<BigRational> out;
    for (int i = 0; i <= l - i; ++i) {
        BigRational s = 0;
        for (const auto& d : v.points) {
            if (d.kind != PointKind::ACTUAL) continue;
            s += d.orbit_size * (parabolic_weight(d, i) + parabolic_weight(d, l - i));
        }
        out.push_back(-s);
    }
    return out;
}

int delta_size(const VHSProfile& v)
{
    int n = 0;
    for (const auto& d : v.points)
        if (d.kind == PointKind::ACTUAL) n += d.orbit_size;
    return n;
}

namespace {

using Row = std::vector<BigRational>;

// Square system, unique solution expected.
std::vector<BigRational> solve_exact(std::vector<Row> a, std::vector<BigRational> b)
{
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw InconsistentProfile("inconsistent profile: singular degree system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            BigRational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<BigRational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace

DegreeVector solve_degrees(const VHSProfile& v)
{
    validate_profile(v);
    const int l = v.weight;
    const std::size_t n = static_cast<std::size_t>(l) + 1;
    const BigRational delta = delta_size(v);
    std::vector<Row> a;
    std::vector<BigRational> b;
    // theta_i: x_{i+1} + |Delta| - 2 = x_i + C_i
    for (int i : kodaira_spencer_indices(l)) {
        Row r(n, 0);
        r[static_cast<std::size_t>(i) + 1] = 1;
        r[static_cast<std::size_t>(i)] = -1;
        a.push_back(r);
        b.push_back(BigRational(cokernel_lengths(v, i).total) - delta + 2);
    }
    auto targets = antisym_targets(v);
    for (int i = 0; i <= l - i; ++i) {
        Row r(n, 0);
        r[static_cast<std::size_t>(i)] += 1;
        r[static_cast<std::size_t>(l - i)] += 1;
        a.push_back(r);
        b.push_back(targets[static_cast<std::size_t>(i)]);
    }
    auto x = solve_exact(std::move(a), std::move(b));
    DegreeVector out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_integer(x[i]))
            throw InconsistentProfile("inconsistent profile: deg E^{" + std::to_string(l - static_cast<int>(i)) + "," +
                                      std::to_string(i) + "} = " + to_string(x[i]) + " is not an integer");
        out.degrees.push_back(to_int64(x[i]));
    }
    return out;
}

std::int64_t total_rank(const VHSProfile& v)
{
    std::int64_t r = 0;
    for (const auto& d : v.points) {
        if (d.kind != PointKind::ACTUAL) continue;
        if (!d.monodromy) throw MissingAnnotation("missing Jordan annotation at " + point_key(d.point), {point_key(d.point)});
        r += static_cast<std::int64_t>(d.orbit_size) * fixed_space_defect(*d.monodromy);
    }
    return r - 2 * (v.weight + 1);
}

std::int64_t h0_line_bundle(std::int64_t m)
{
    return std::max<std::int64_t>(0, m + 1);
}

HodgeNumbers hodge_numbers(const VHSProfile& v)
{
    return hodge_numbers(v, solve_degrees(v));
}

HodgeNumbers hodge_numbers(const VHSProfile& v, const DegreeVector& deg)
{
    const int l = v.weight;
    HodgeNumbers out;
    out.total_rank = total_rank(v);
    const std::int64_t top = h0_line_bundle(-2 - deg.degrees.at(static_cast<std::size_t>(l)));
    const std::int64_t tot = out.total_rank;
    auto bad = [] { return InconsistentProfile("profile not of VHS origin as annotated"); };
    if (l == 1) {
        out.h = {top, tot - 2 * top, top};
    } else if (l == 2) {
        if ((tot - 2 * top) % 2 != 0) throw bad();
        const std::int64_t mid = (tot - 2 * top) / 2;
        out.h = {top, mid, mid, top};
    } else {
        const std::int64_t a = deg.degrees[0], b = deg.degrees[1];
        std::int64_t ii = 0, iii = 0, iv = 0;
        for (const auto& d : v.points) {
            if (d.kind != PointKind::ACTUAL) continue;
            Weight3Class c = classify_weight3(d);
            if (c.in_II) ii += d.orbit_size;
            if (c.in_III) iii += d.orbit_size;
            // A non-unipotent point only counts when E^{2,1} has nonzero parabolic weight there.
            if (c.in_IV && parabolic_weight(d, 1) != 0) iv += d.orbit_size;
        }
        const std::int64_t h13 = -2 + b - a + ii + iii + iv;
        out.h = {top, h13, tot - 2 * top - 2 * h13, h13, top};
    }
    for (auto x : out.h)
        if (x < 0) throw bad();
    return out;
}

namespace {

struct DeltaSums {
    BigRational apparent;  // sum over apparent points of mu_2 - mu_1 - 1
    BigRational actual;    // sum over actual points of floor mu_2 - floor mu_1 - 1
    BigRational all;       // floor form over every listed point
};

DeltaSums delta_sums(const VHSProfile& v)
{
    DeltaSums s;
    for (const auto& d : v.points) {
        const auto& m1 = d.exponents[0];
        const auto& m2 = d.exponents[1];
        const BigRational fl = BigRational(floor_of(m2) - floor_of(m1) - 1) * d.orbit_size;
        s.all += fl;
        if (d.kind == PointKind::APPARENT) s.apparent += (m2 - m1 - 1) * d.orbit_size;
        if (d.kind == PointKind::ACTUAL) s.actual += fl;
    }
    return s;
}

void require_weight(const VHSProfile& v, int l)
{
    if (v.weight != l) throw Error("closed form needs a weight-" + std::to_string(l) + " profile");
}

}  // namespace

BigRational elliptic_degree_formula(const VHSProfile& v)
{
    require_weight(v, 1);
    auto s = delta_sums(v);
    return (2 - BigRational(count_strictly_quasi_unipotent(v)) + s.actual + s.apparent) / 2;
}

BigRational elliptic_degree_formula_all_points(const VHSProfile& v)
{
    require_weight(v, 1);
    return (2 - BigRational(count_strictly_quasi_unipotent(v)) + delta_sums(v).all) / 2;
}

BigRational k3_degree_formula(const VHSProfile& v)
{
    require_weight(v, 2);
    auto c = counts_k3(v);
    auto s = delta_sums(v);
    return 2 + make_rational(c.a_half, 2) - c.a_f + s.apparent + s.actual;
}

BigRational k3_degree_formula_all_points(const VHSProfile& v)
{
    require_weight(v, 2);
    auto c = counts_k3(v);
    return 2 + make_rational(c.a_half, 2) - c.a_f + delta_sums(v).all;
}

QuinticDegrees quintic_degree_formulas(const std::vector<int>& y_inf, int d)
{
    QuinticDegrees q;
    long s32 = 0, s21 = 0;
    for (int y : y_inf) {
        if (y % 5 != 0) ++q.ell0;
        s32 += 3 * y / 5 - 2 * y / 5;
        s21 += 2 * y / 5 - y / 5;
    }
    q.e21 = make_rational(d - q.ell0 - s32, 2);
    q.e30 = q.e21 - s21;
    return q;
}

bool quintic_cy_condition(const std::vector<int>& y_inf)
{
    long d = 0, ell0 = 0, s32 = 0, s21 = 0;
    for (int y : y_inf) {
        d += y;
        if (y % 5 != 0) ++ell0;
        s32 += 3 * y / 5 - 2 * y / 5;
        s21 += 2 * y / 5 - y / 5;
    }
    BigRational lhs = make_rational(d + ell0 - s32, 2) - s21;
    return lhs == 2;
}

std::int64_t quartic_Dg(const std::vector<int>& y_inf)
{
    std::int64_t af = 0, s = 0;
    for (int y : y_inf) {
        if (y % 4 != 0) ++af;
        s += y / 4;
    }
    return af - 2 + s;
}

BigRational quartic_Dg_corollary(const VHSProfile& v)
{
    require_weight(v, 2);
    auto c = counts_k3_from_exponents(v);
    auto s = delta_sums(v);
    return BigRational(c.a_f) - 4 - make_rational(c.a_half, 2) - s.apparent - s.actual;
}

}  // namespace pfhodge
