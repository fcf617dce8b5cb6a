#ifndef PFHODGE_RATFUNC_HPP
#define PFHODGE_RATFUNC_HPP

#include "pfhodge/unipoly.hpp"

#include <optional>
#include <string>

namespace pfhodge {

// num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(UniPoly::constant(1)) {}
    RatFunc(const UniPoly& num);  // NOLINT(google-explicit-constructor)
    RatFunc(const UniPoly& num, const UniPoly& den);
    static RatFunc constant(const BigRational& c) { return RatFunc(UniPoly::constant(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }

    // Throws Error when t = x is a pole.
    BigRational evaluate(const BigRational& x) const;
    RatFunc derivative() const;
    RatFunc inverse() const;

    // Order of vanishing at t = a (negative for poles); zero function is an error.
    int valuation_at(const BigRational& a) const;
    // deg den - deg num: order of vanishing at infinity.
    int valuation_at_infinity() const;
    // Value at infinity when finite.
    BigRational value_at_infinity() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    UniPoly num_;
    UniPoly den_;
};

RatFunc ratfunc_pow(const RatFunc& f, int e);
RatFunc ratfunc_shift(const RatFunc& f, const BigRational& a);
// f(t^k)
RatFunc ratfunc_inflate(const RatFunc& f, int k);
// f(1/t)
RatFunc ratfunc_invert_variable(const RatFunc& f);
// f(g(t))
RatFunc ratfunc_compose(const RatFunc& f, const RatFunc& g);

// Power-series coefficients c_0..c_{terms-1} of f at t = 0; requires f holomorphic at 0.
std::vector<BigRational> series_at_zero(const RatFunc& f, int terms);

std::string to_string(const RatFunc& f, std::string_view var = "t");

}  // namespace pfhodge

#endif
