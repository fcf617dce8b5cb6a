#include "pfhodge/enumerate.hpp"

#include "pfhodge/datasets.hpp"
#include "pfhodge/errors.hpp"
#include "pfhodge/hodge_calc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace pfhodge {

namespace {

const FamilyRecord& search_family(const std::string& family)
{
    const FamilyRecord& f = find_family(family);
    if (f.id != "dm1" && f.id != "quartic")
        throw Error("enumeration supports the quintic and quartic families, not '" + family + "'");
    return f;
}

PointId other_finite_point(const FamilyRecord& f)
{
    return f.id == "quartic" ? PointId{FiniteRational{-1}} : PointId{FiniteRational{1}};
}

std::string render(const std::vector<int>& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

// phi = -1 - deg E^{0,l}; h^{top,0} = max(0, phi).
class Phi {
public:
    explicit Phi(const FamilyRecord& f) : family_(f), base_(family_profile(f)) {}

    std::int64_t operator()(std::vector<int> y)
    {
        std::sort(y.begin(), y.end());
        auto it = cache_.find(y);
        if (it != cache_.end()) return it->second;
        CoverSpec c = canonical_cover(y);
        c.branch[1].first = other_finite_point(family_);
        auto v = pullback_profile(base_, c);
        auto deg = solve_degrees(v);
        std::int64_t phi = -1 - deg.degrees.back();
        cache_.emplace(y, phi);
        return phi;
    }

private:
    const FamilyRecord& family_;
    VHSProfile base_;
    std::map<std::vector<int>, std::int64_t> cache_;
};

bool matches(std::int64_t phi, int target)
{
    return std::max<std::int64_t>(0, phi) == target;
}

}  // namespace

CoverSpec canonical_cover(const std::vector<int>& y_inf)
{
    int d = 0;
    for (int y : y_inf) d += y;
    CoverSpec c;
    c.degree = d;
    c.branch.emplace_back(FiniteRational{0}, std::vector<int>{d});
    c.branch.emplace_back(FiniteRational{1}, std::vector<int>(static_cast<std::size_t>(d), 1));
    c.branch.emplace_back(Infinity{}, y_inf);
    c.free_ramification.assign(y_inf.size() - 1, 2);
    return c;
}

std::int64_t top_hodge_number(const std::string& family, const std::vector<int>& y_inf)
{
    Phi phi(search_family(family));
    return std::max<std::int64_t>(0, phi(y_inf));
}

EnumerationResult enumerate_cy_infinity_profiles(const SearchConfig& cfg)
{
    if (cfg.max_part < 1 || cfg.max_parts < 1) throw Error("caps must be positive");
    if (cfg.target < 0) throw Error("target must be nonnegative");
    const FamilyRecord& f = search_family(cfg.family);
    Phi phi(f);
    EnumerationResult res;

    // Additive model phi(y) = kappa + sum g(y_i), checked against the pipeline.
    const std::int64_t kappa = 2 * phi({1}) - phi({1, 1});
    const int window = 2 * cfg.max_part;
    std::vector<std::int64_t> g(static_cast<std::size_t>(window) + 1, 0);
    for (int y = 1; y <= window; ++y) g[static_cast<std::size_t>(y)] = phi({y}) - kappa;

    const int pair_window = std::min(cfg.max_part, 16), triple_window = std::min(cfg.max_part, 8);
    for (int a = 1; a <= pair_window; ++a)
        for (int b = a; b <= pair_window; ++b) {
            if (phi({a, b}) != kappa + g[a] + g[b])
                res.warnings.push_back("additivity fails on " + render({a, b}));
            for (int c = b; c <= triple_window && b <= triple_window; ++c)
                if (phi({a, b, c}) != kappa + g[a] + g[b] + g[c])
                    res.warnings.push_back("additivity fails on " + render({a, b, c}));
        }
    for (int y = 1; y <= window; ++y) {
        if (g[static_cast<std::size_t>(y)] < 1) res.warnings.push_back("part contribution not positive at y=" + std::to_string(y));
        if (y > 1 && g[static_cast<std::size_t>(y)] < g[static_cast<std::size_t>(y) - 1])
            res.warnings.push_back("part contribution not monotone at y=" + std::to_string(y));
    }

    // target 0 admits every phi <= 0
    const std::int64_t budget = std::max<std::int64_t>(cfg.target, 0);
    if (kappa + g[static_cast<std::size_t>(cfg.max_part)] <= budget)
        res.warnings.push_back("max_part " + std::to_string(cfg.max_part) + " too small: parts at the cap still fit the target");
    if (kappa + cfg.max_parts < budget)
        res.warnings.push_back("max_parts " + std::to_string(cfg.max_parts) + " too small for the target");

    std::vector<int> current;
    std::function<void(int, std::int64_t)> walk = [&](int min_part, std::int64_t value) {
        if (!current.empty() && matches(value, cfg.target)) res.profiles.push_back(current);
        if (static_cast<int>(current.size()) >= cfg.max_parts) return;
        for (int y = min_part; y <= cfg.max_part; ++y) {
            const std::int64_t next = value + g[static_cast<std::size_t>(y)];
            if (next > budget) break;  // g is positive and nondecreasing
            current.push_back(y);
            walk(y, next);
            current.pop_back();
        }
    };
    walk(1, kappa);
    std::sort(res.profiles.begin(), res.profiles.end());

    for (const auto& p : res.profiles)
        if (!matches(phi(p), cfg.target)) res.warnings.push_back("pipeline disagrees on " + render(p));
    return res;
}

IndependenceReport verify_independence(const std::string& family, int samples, std::uint64_t seed)
{
    const FamilyRecord& f = search_family(family);
    const VHSProfile base = family_profile(f);
    const PointId other = other_finite_point(f);
    std::mt19937_64 rng(seed);
    auto random_partition = [&](int d) {
        std::vector<int> parts;
        for (int r = d; r > 0;) {
            int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
            parts.push_back(x);
            r -= x;
        }
        std::sort(parts.begin(), parts.end());
        return parts;
    };
    IndependenceReport rep;
    std::map<std::vector<int>, std::int64_t> seen;
    while (rep.samples < samples) {
        const int d = 1 + static_cast<int>(rng() % 12);
        auto y = random_partition(d);
        CoverSpec c;
        c.degree = d;
        c.branch = {{FiniteRational{0}, random_partition(d)}, {other, random_partition(d)}, {Infinity{}, y}};
        long r = 2L * d - 2;
        for (const auto& [p, parts] : c.branch)
            for (int e : parts) r -= e - 1;
        if (r < 0) continue;
        while (r > 0) {
            long x = 1 + static_cast<long>(rng() % static_cast<unsigned long>(std::min<long>(r, d - 1)));
            c.free_ramification.push_back(static_cast<int>(x + 1));
            r -= x;
        }
        ++rep.samples;
        const auto h = hodge_numbers(pullback_profile(base, c)).h.front();
        auto [it, fresh] = seen.emplace(y, h);
        if (!fresh && it->second != h)
            rep.counterexamples.push_back("infinity profile " + render(y) + " gives " + std::to_string(it->second) + " and " +
                                          std::to_string(h));
    }
    return rep;
}

}  // namespace pfhodge
