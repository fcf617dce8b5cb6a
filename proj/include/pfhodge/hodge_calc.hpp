#ifndef PFHODGE_HODGE_CALC_HPP
#define PFHODGE_HODGE_CALC_HPP

#include "pfhodge/local_data.hpp"

#include <cstdint>
#include <vector>

namespace pfhodge {

struct PointCokernel {
    PointId point;
    int orbit_size = 1;
    std::int64_t length = 0;
};

struct CokernelReport {
    int index = 0;
    std::vector<PointCokernel> points;
    std::int64_t total = 0;  // orbit-weighted
};

// Kodaira-Spencer indices used by the degree system: {0} for weight 1, 2 and
// {0, 1} for weight 3.
std::vector<int> kodaira_spencer_indices(int weight);

CokernelReport cokernel_lengths(const VHSProfile& v, int i);

// Entry i (0 <= i <= l/2) is the required value of
// deg E^{l-i,i} + deg E^{i,l-i}.
std::vector<BigRational> antisym_targets(const VHSProfile& v);

// Orbit-weighted number of ACTUAL points.
int delta_size(const VHSProfile& v);

struct DegreeVector {
    std::vector<std::int64_t> degrees;  // degrees[i] = deg E^{l-i,i}
};

DegreeVector solve_degrees(const VHSProfile& v);

struct HodgeNumbers {
    std::vector<std::int64_t> h;  // h^{l+1,0}, ..., h^{0,l+1}
    std::int64_t total_rank = 0;
};

std::int64_t total_rank(const VHSProfile& v);

HodgeNumbers hodge_numbers(const VHSProfile& v);
HodgeNumbers hodge_numbers(const VHSProfile& v, const DegreeVector& deg);

// h^0(P^1, O(m))
std::int64_t h0_line_bundle(std::int64_t m);

// Closed forms, kept as independent routes to the engine's numbers.
BigRational elliptic_degree_formula(const VHSProfile& v);
BigRational elliptic_degree_formula_all_points(const VHSProfile& v);
BigRational k3_degree_formula(const VHSProfile& v);
BigRational k3_degree_formula_all_points(const VHSProfile& v);

struct QuinticDegrees {
    BigRational e30;  // a = deg E^{3,0}
    BigRational e21;  // b = deg E^{2,1}
    int ell0 = 0;     // #{i : 5 does not divide y_i}
};

// Cover of degree d of the mirror quintic family with ramification y over inf.
QuinticDegrees quintic_degree_formulas(const std::vector<int>& y_inf, int d);

// The CY condition in closed form; true iff h^{3,0} = 1.
bool quintic_cy_condition(const std::vector<int>& y_inf);

// Mirror quartic family: a_f - 2 + sum floor(y_i / 4), a_f = #{i : 4 does not divide y_i}.
std::int64_t quartic_Dg(const std::vector<int>& y_inf);
// Same divisor degree from a pulled-back profile:
// a_f - 4 - a_half/2 - sum over apparent (mu_2 - mu_1 - 1) - sum over actual (floor mu_2 - floor mu_1 - 1).
BigRational quartic_Dg_corollary(const VHSProfile& v);

}  // namespace pfhodge

#endif
