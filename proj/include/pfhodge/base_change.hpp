#ifndef PFHODGE_BASE_CHANGE_HPP
#define PFHODGE_BASE_CHANGE_HPP

#include "pfhodge/local_data.hpp"

#include <utility>
#include <vector>

namespace pfhodge {

// Degree-d cover of the line. Base points not listed are unramified; extra
// ramification away from the listed points is given as a list of orders.
struct CoverSpec {
    int degree = 1;
    std::vector<std::pair<PointId, std::vector<int>>> branch;
    std::vector<int> free_ramification;
};

// Partition for a base point: the listed one, or d ones.
std::vector<int> partition_over(const CoverSpec& c, const PointId& p);

// Checks partitions and genus-0 Riemann-Hurwitz; throws CoverError.
// A closed branch point counts orbit_of(p) times.
void validate_cover(const CoverSpec& c);

// (alpha, size) -> (frac(e alpha), size)
JordanType jordan_power(const JordanType& j, int e);

// Pairs of distinct alphas sharing a block size >= 2 that become equal after
// raising to the e-th power. Nonempty means the size-preserving rule is
// being applied outside the listed types.
std::vector<std::pair<BigRational, BigRational>> power_collisions(const JordanType& j, int e);

// Point ids: base key + "[e=<e>]", with "#k" when a part value repeats;
// free points are "free[e=<e>]#k". A degree-1 cover keeps the base ids.
VHSProfile pullback_profile(const VHSProfile& v, const CoverSpec& c);

// t = s^k, totally ramified over 0 and infinity.
CoverSpec monomial_cover(int k);

}  // namespace pfhodge

#endif
