#ifndef PFHODGE_LOCAL_DATA_HPP
#define PFHODGE_LOCAL_DATA_HPP

#include "pfhodge/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfhodge {

// Eigenvalue exp(2 pi i alpha) with alpha in [0, 1).
struct JordanBlock {
    BigRational alpha;
    int size = 1;
    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

class JordanType {
public:
    JordanType() = default;
    // Reduces alphas mod 1 and sorts blocks (alpha ascending, size descending).
    explicit JordanType(std::vector<JordanBlock> blocks);

    const std::vector<JordanBlock>& blocks() const { return blocks_; }
    int rank() const;
    bool is_identity() const;
    bool has_nonzero_alpha() const;
    // alpha -> total size
    std::vector<std::pair<BigRational, int>> eigenvalue_multiset() const;

    friend bool operator==(const JordanType&, const JordanType&) = default;

private:
    std::vector<JordanBlock> blocks_;
};

std::string to_string(const JordanType& j);

// rank minus the number of blocks with eigenvalue 1
int fixed_space_defect(const JordanType& j);

enum class PointKind { NONSINGULAR, APPARENT, ACTUAL };

const char* to_string(PointKind k);
PointKind parse_point_kind(std::string_view s);

struct LocalData {
    PointId point;
    int orbit_size = 1;
    std::vector<BigRational> exponents;  // ascending
    PointKind kind = PointKind::ACTUAL;
    std::optional<JordanType> monodromy;
};

// Sorts the exponents and checks the kind invariants; throws InconsistentProfile.
LocalData make_local_data(PointId point, int orbit_size, std::vector<BigRational> exponents, PointKind kind,
                          std::optional<JordanType> monodromy = std::nullopt);

struct VHSProfile {
    int weight = 0;
    std::vector<LocalData> points;
};

// weight in {1,2,3}, exponent counts, at least one ACTUAL point, Jordan ranks.
void validate_profile(const VHSProfile& v);

// Parabolic weight of E^{l-i,i}: frac(mu_{i+1}).
BigRational parabolic_weight(const LocalData& d, int i);

enum class KodairaClass { I_n, I_n_star, II, III, IV };
const char* to_string(KodairaClass k);
KodairaClass classify_elliptic(const LocalData& d);

enum class K3Class { T_un, T_un2, T_i, minus_T_i, T_i2, T_omega, T_omega2, T_nod };
const char* to_string(K3Class k);
K3Class classify_k3(const LocalData& d);

struct Weight3Class {
    bool in_II = false;
    bool in_III = false;
    bool in_IV = false;
};
Weight3Class classify_weight3(const LocalData& d);

struct K3Counts {
    int a_half = 0;
    int a_f = 0;
    friend bool operator==(const K3Counts&, const K3Counts&) = default;
};
// From the Table 2 class of each ACTUAL point, orbit-weighted.
K3Counts counts_k3(const VHSProfile& v);
// a_half = #{frac(mu_2) = 1/2}, a_f = #{frac(mu_1) != 0} over ACTUAL points.
K3Counts counts_k3_from_exponents(const VHSProfile& v);

// Orbit-weighted number of ACTUAL points with a nonzero Jordan alpha.
int count_strictly_quasi_unipotent(const VHSProfile& v);

}  // namespace pfhodge

#endif
