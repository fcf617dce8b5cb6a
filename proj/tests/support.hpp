#ifndef PFHODGE_TEST_SUPPORT_HPP
#define PFHODGE_TEST_SUPPORT_HPP

#include "pfhodge/base_change.hpp"

#include <random>
#include <vector>

namespace testsupport {

using namespace pfhodge;

inline BigRational Q(const char* s) { return parse_rational(s); }

inline std::vector<BigRational> Qs(std::initializer_list<const char*> xs)
{
    std::vector<BigRational> v;
    for (auto x : xs) v.push_back(Q(x));
    return v;
}

inline JordanType diag(const std::vector<BigRational>& alphas)
{
    std::vector<JordanBlock> b;
    for (const auto& a : alphas) b.push_back({a, 1});
    return JordanType(b);
}

// delta^4 - t prod(delta + alpha_i), written out by hand.
inline VHSProfile hypergeometric_profile(const std::vector<BigRational>& alphas)
{
    VHSProfile v{3, {}};
    v.points.push_back(make_local_data(FiniteRational{0}, 1, {0, 0, 0, 0}, PointKind::ACTUAL, JordanType({{0, 4}})));
    v.points.push_back(
        make_local_data(FiniteRational{1}, 1, {0, 1, 1, 2}, PointKind::ACTUAL, JordanType({{0, 2}, {0, 1}, {0, 1}})));
    std::vector<JordanBlock> b;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i > 0 && alphas[i] == alphas[i - 1])
            ++b.back().size;
        else
            b.push_back({alphas[i], 1});
    }
    v.points.push_back(make_local_data(Infinity{}, 1, alphas, PointKind::ACTUAL, JordanType(b)));
    return v;
}

inline VHSProfile quintic_profile() { return hypergeometric_profile(Qs({"1/5", "2/5", "3/5", "4/5"})); }

inline VHSProfile quartic_profile()
{
    VHSProfile v{2, {}};
    v.points.push_back(make_local_data(FiniteRational{0}, 1, {0, 0, 0}, PointKind::ACTUAL, JordanType({{0, 3}})));
    v.points.push_back(make_local_data(FiniteRational{-1}, 1, Qs({"0", "1/2", "1"}), PointKind::ACTUAL, diag(Qs({"0", "1/2", "0"}))));
    v.points.push_back(make_local_data(Infinity{}, 1, Qs({"1/4", "1/2", "3/4"}), PointKind::ACTUAL, diag(Qs({"1/4", "1/2", "3/4"}))));
    return v;
}

inline VHSProfile legendre_profile()
{
    VHSProfile v{1, {}};
    v.points.push_back(make_local_data(FiniteRational{0}, 1, {0, 0}, PointKind::ACTUAL, JordanType({{0, 2}})));
    v.points.push_back(make_local_data(FiniteRational{1}, 1, {0, 0}, PointKind::ACTUAL, JordanType({{0, 2}})));
    v.points.push_back(make_local_data(Infinity{}, 1, Qs({"1/2", "1/2"}), PointKind::ACTUAL, JordanType({{Q("1/2"), 2}})));
    return v;
}

inline std::vector<int> random_partition(std::mt19937_64& rng, int d)
{
    std::vector<int> parts;
    int r = d;
    while (r > 0) {
        int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
        parts.push_back(x);
        r -= x;
    }
    return parts;
}

// Random Riemann-Hurwitz-consistent cover over the given branch points; the
// remaining ramification is made free.
inline CoverSpec random_cover(std::mt19937_64& rng, const std::vector<PointId>& branch, int max_degree)
{
    for (;;) {
        CoverSpec c;
        c.degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
        long r = 2L * c.degree - 2;
        for (const auto& p : branch) {
            auto parts = random_partition(rng, c.degree);
            for (int y : parts) r -= y - 1;
            c.branch.emplace_back(p, parts);
        }
        if (r < 0) continue;
        while (r > 0) {
            long x = 1 + static_cast<long>(rng() % static_cast<unsigned long>(std::min<long>(r, c.degree - 1)));
            c.free_ramification.push_back(static_cast<int>(x + 1));
            r -= x;
        }
        return c;
    }
}

}  // namespace testsupport

#endif
