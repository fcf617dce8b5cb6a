#ifndef PFHODGE_ANALYSIS_HPP
#define PFHODGE_ANALYSIS_HPP

#include "pfhodge/operator.hpp"
#include "pfhodge/point.hpp"
#include "pfhodge/quotient.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace pfhodge {

enum class PointClass { NONSINGULAR, REGULAR_SINGULAR, IRREGULAR };

const char* to_string(PointClass c);

struct SingularPoint {
    PointId point;
    PointClass classification;
};

// Denominator roots of the d/dt coefficients (rational points, then closed
// points grouped by pole-order pattern) followed by infinity, which is always
// listed.
std::vector<SingularPoint> singular_points(const DifferentialOperator& L);

PointClass classify_point(const DifferentialOperator& L, const PointId& p);

// Rational coefficients at rational points and infinity; quotient-ring
// coefficients at closed points.
using IndicialPolynomial = std::variant<UniPoly, QuotientPoly>;

IndicialPolynomial indicial_polynomial(const DifferentialOperator& L, const PointId& p);

// Sorted, with multiplicity. Throws IrrationalExponents, IrregularSingularity,
// or SplitRequired (closed points whose conjugates disagree).
std::vector<BigRational> characteristic_exponents(const DifferentialOperator& L, const PointId& p);

struct SchemeRow {
    PointId point;
    int orbit_size = 1;
    std::vector<BigRational> exponents;
};

struct RiemannScheme {
    int order = 0;
    std::vector<SchemeRow> rows;
};

// Rows for every singular point; closed points are split on demand.
RiemannScheme riemann_scheme(const DifferentialOperator& L);

// Merges finite rows with identical exponents into a single closed point
// whose modulus is the product (e.g. 1 and t^4+t^3+t^2+t+1 become t^5-1).
RiemannScheme group_scheme_rows(const RiemannScheme& s);

struct FuchsCheck {
    BigRational scheme_sum;    // sum of orbit * (sum mu - n(n-1)/2)
    BigRational residue_route; // same quantity from residues of f_1 and g_1 at infinity
    BigRational expected;      // -n(n-1)
    bool ok() const { return scheme_sum == residue_route && scheme_sum == expected; }
};

FuchsCheck fuchs_relation(const DifferentialOperator& L, const RiemannScheme& s);

enum class FrobeniusResult { APPARENT, HAS_LOG, INCONCLUSIVE };

const char* to_string(FrobeniusResult r);

// Default truncation: mu_max - mu_min + n + 4.
FrobeniusResult frobenius_apparent_check(const DifferentialOperator& L, const FiniteRational& p,
                                         std::optional<int> truncation_order = std::nullopt);

}  // namespace pfhodge

#endif
