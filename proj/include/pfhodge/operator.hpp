#ifndef PFHODGE_OPERATOR_HPP
#define PFHODGE_OPERATOR_HPP

#include "pfhodge/ratfunc.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfhodge {

// D = d/dt, DELTA = t*d/dt
enum class OpForm { DDT, DELTA };

// Noncommutative sum of c_k(t) X^k with the coefficient acting on the left.
class OperatorPoly {
public:
    explicit OperatorPoly(OpForm form) : form_(form) {}
    OperatorPoly(OpForm form, std::vector<RatFunc> coeffs);
    static OperatorPoly function(OpForm form, const RatFunc& f);
    static OperatorPoly generator(OpForm form);  // X

    OpForm form() const { return form_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFunc>& coefficients() const { return c_; }
    RatFunc coeff(int k) const;

    OperatorPoly& operator+=(const OperatorPoly& o);
    OperatorPoly& operator-=(const OperatorPoly& o);
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
    // Composition, using X b = b X + b' (D) or b X + t b' (DELTA).
    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
    OperatorPoly left_multiply(const RatFunc& f) const;

private:
    void trim();
    OpForm form_;
    std::vector<RatFunc> c_;
};

// Monic operator X^n + sum_i f_i X^{n-i}; coeffs[i-1] holds f_i.
class DifferentialOperator {
public:
    DifferentialOperator(OpForm form, std::vector<RatFunc> coeffs);
    // Divides by the leading coefficient; order 0 or zero operators are rejected.
    static DifferentialOperator from_poly(const OperatorPoly& p);

    int order() const { return static_cast<int>(f_.size()); }
    OpForm form() const { return form_; }
    // f_i for 1 <= i <= n
    const RatFunc& coeff(int i) const { return f_.at(static_cast<std::size_t>(i) - 1); }
    const std::vector<RatFunc>& coefficients() const { return f_; }
    OperatorPoly to_poly() const;

    friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b)
    {
        return a.form_ == b.form_ && a.f_ == b.f_;
    }

private:
    OpForm form_;
    std::vector<RatFunc> f_;
};

// Grammar: + - * / ^ and parentheses over integers, t, D, del (or δ).
// Division is only allowed between functions of t.
DifferentialOperator parse_operator(std::string_view text);

std::string to_string(const DifferentialOperator& L);

DifferentialOperator to_delta_form(const DifferentialOperator& L);
DifferentialOperator to_ddt_form(const DifferentialOperator& L);

// Operator annihilating h*y for every solution y of L, in L's form.
DifferentialOperator twist(const DifferentialOperator& L, const RatFunc& h);

// t = s^k, delta form with coefficients k^i g_i(s^k).
DifferentialOperator pullback_operator_monomial(const DifferentialOperator& L, int k);

// t = g(s) for a nonconstant rational g, returned in d/ds form.
DifferentialOperator pullback_operator(const DifferentialOperator& L, const RatFunc& g);

// Coordinate change t = a + u, in L's form (DELTA input is converted first).
DifferentialOperator translate_operator(const DifferentialOperator& L, const BigRational& a);

// s = 1/t, delta form in s: coefficients (-1)^i g_i(1/s).
DifferentialOperator invert_coordinate(const DifferentialOperator& L);

}  // namespace pfhodge

#endif
