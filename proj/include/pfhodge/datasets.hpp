#ifndef PFHODGE_DATASETS_HPP
#define PFHODGE_DATASETS_HPP

#include "pfhodge/analysis.hpp"
#include "pfhodge/local_data.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfhodge {

using Annotations = std::map<std::string, JordanType>;  // point key -> Jordan type

struct FamilyRecord {
    std::string id;
    std::string operator_text;
    int weight = 0;
    Annotations annotations;
    std::vector<std::pair<std::string, std::vector<BigRational>>> scheme;  // stored, audited by hand
    std::vector<BigRational> alphas;  // hypergeometric parameters, empty otherwise
    std::string monodromy;            // "thin", "arithmetic" or empty
    int table3_row = 0;               // 0 when not in Table 3
};

// dm1..dm14, quartic, legendre.
const std::vector<FamilyRecord>& builtin_families();

// Accepts the ids above and the alias "quintic" for dm1.
const FamilyRecord& find_family(const std::string& id);

// Profile of an operator: annotated points are ACTUAL (APPARENT when the
// annotation is the identity); unannotated finite rational points with
// integer exponents that pass the Frobenius check are APPARENT. Anything
// else is reported through MissingAnnotation.
VHSProfile profile_from_operator(const DifferentialOperator& L, const Annotations& annotations);

VHSProfile family_profile(const FamilyRecord& f);

struct ExpectedRow {
    int row = 0;
    int d = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<std::int64_t> hodge;
    bool gray = false;  // previously blank cell
};

// 55 checks: every printed (row, d) cell, with row 3's d = 2k materialized for k = 1..5.
const std::vector<ExpectedRow>& expected_table3();

std::string table3_family_id(int row);

struct Table1Row {
    std::string fibre;
    BigRational w10, w01;
    KodairaClass kodaira;
};
const std::vector<Table1Row>& table1_rows();

struct Table2Row {
    std::string matrix;
    BigRational w20, w11, w02;
    JordanType jordan;
    K3Class k3;
};
const std::vector<Table2Row>& table2_rows();

// Printed CY lists, parts ascending, sorted lexicographically.
std::vector<std::vector<int>> expected_quintic_cy_profiles();
std::vector<std::vector<int>> expected_quintic_target0_profiles();
std::vector<std::vector<int>> expected_quartic_cy_profiles();

}  // namespace pfhodge

#endif
