#include "pfhodge/base_change.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pfhodge {

std::vector<int> partition_over(const CoverSpec& c, const PointId& p)
{
    for (const auto& [q, parts] : c.branch)
        if (q == p) return parts;
    return std::vector<int>(static_cast<std::size_t>(c.degree), 1);
}

void validate_cover(const CoverSpec& c)
{
    if (c.degree < 1) throw CoverError("cover degree must be positive");
    long ramification = 0;
    for (std::size_t i = 0; i < c.branch.size(); ++i) {
        const auto& [p, parts] = c.branch[i];
        for (std::size_t j = 0; j < i; ++j)
            if (c.branch[j].first == p) throw CoverError("branch point " + point_key(p) + " listed twice");
        long sum = 0;
        for (int y : parts) {
            if (y < 1) throw CoverError("ramification index must be positive over " + point_key(p));
            sum += y;
            ramification += static_cast<long>(orbit_of(p)) * (y - 1);
        }
        if (sum != c.degree)
            throw CoverError("partition sum ≠ degree over " + point_key(p) + " (" + std::to_string(sum) + " vs " +
                             std::to_string(c.degree) + ")");
    }
    for (int e : c.free_ramification) {
        if (e < 2 || e > c.degree) throw CoverError("free ramification order " + std::to_string(e) + " out of range");
        ramification += e - 1;
    }
    const long delta = ramification - (2L * c.degree - 2);
    if (delta != 0) throw CoverError("Riemann–Hurwitz violated by Δ = " + std::to_string(delta));
}

JordanType jordan_power(const JordanType& j, int e)
{
    std::vector<JordanBlock> out;
    for (const auto& b : j.blocks()) out.push_back({frac_of(b.alpha * e), b.size});
    return JordanType(std::move(out));
}

std::vector<std::pair<BigRational, BigRational>> power_collisions(const JordanType& j, int e)
{
    std::vector<std::pair<BigRational, BigRational>> out;
    const auto& b = j.blocks();
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = x + 1; y < b.size(); ++y) {
            if (b[x].alpha == b[y].alpha) continue;
            if (b[x].size < 2 && b[y].size < 2) continue;
            if (frac_of(b[x].alpha * e) != frac_of(b[y].alpha * e)) continue;
            std::pair<BigRational, BigRational> pr{b[x].alpha, b[y].alpha};
            if (std::find(out.begin(), out.end(), pr) == out.end()) out.push_back(pr);
        }
    return out;
}

namespace {

std::vector<BigRational> standard_exponents(int weight, int e)
{
    std::vector<BigRational> mu;
    for (int i = 0; i <= weight; ++i) mu.push_back(make_rational(static_cast<long>(i) * e));
    return mu;
}

std::vector<LocalData> pull_point(const LocalData& d, const std::vector<int>& parts, bool keep_ids)
{
    std::map<int, int> total, seen;
    for (int e : parts) ++total[e];
    std::vector<LocalData> out;
    for (int e : parts) {
        PointId id = d.point;
        if (!keep_ids) {
            std::string label = point_key(d.point) + "[e=" + std::to_string(e) + "]";
            if (total[e] > 1) label += "#" + std::to_string(++seen[e]);
            id = Labeled{label};
        }
        std::vector<BigRational> mu;
        for (const auto& m : d.exponents) mu.push_back(m * e);
        if (d.kind == PointKind::ACTUAL) {
            JordanType j = jordan_power(*d.monodromy, e);
            if (j.is_identity())
                out.push_back(make_local_data(id, d.orbit_size, std::move(mu), PointKind::APPARENT, j));
            else
                out.push_back(make_local_data(id, d.orbit_size, std::move(mu), PointKind::ACTUAL, j));
        } else {
            PointKind k = d.kind == PointKind::NONSINGULAR && e == 1 ? PointKind::NONSINGULAR : PointKind::APPARENT;
            out.push_back(make_local_data(id, d.orbit_size, std::move(mu), k, d.monodromy));
        }
    }
    return out;
}

}  // namespace

VHSProfile pullback_profile(const VHSProfile& v, const CoverSpec& c)
{
    validate_cover(c);
    const bool keep_ids = c.degree == 1;
    VHSProfile out{v.weight, {}};
    for (const auto& d : v.points) {
        auto pulled = pull_point(d, partition_over(c, d.point), keep_ids);
        out.points.insert(out.points.end(), pulled.begin(), pulled.end());
    }
    // Ramified base points the profile does not list are nonsingular there.
    for (const auto& [p, parts] : c.branch) {
        bool listed = std::any_of(v.points.begin(), v.points.end(), [&](const LocalData& d) { return d.point == p; });
        if (listed) continue;
        if (std::all_of(parts.begin(), parts.end(), [](int y) { return y == 1; })) continue;
        LocalData base = make_local_data(p, orbit_of(p), standard_exponents(v.weight, 1), PointKind::NONSINGULAR);
        for (auto& q : pull_point(base, parts, keep_ids))
            if (q.kind != PointKind::NONSINGULAR) out.points.push_back(std::move(q));
    }
    std::map<int, int> total, seen;
    for (int e : c.free_ramification) ++total[e];
    for (int e : c.free_ramification) {
        std::string label = "free[e=" + std::to_string(e) + "]#" + std::to_string(++seen[e]);
        out.points.push_back(make_local_data(Labeled{label}, 1, standard_exponents(v.weight, e), PointKind::APPARENT));
    }
    return out;
}

CoverSpec monomial_cover(int k)
{
    return CoverSpec{k, {{FiniteRational{make_rational(0)}, {k}}, {Infinity{}, {k}}}, {}};
}

}  // namespace pfhodge
