#ifndef PFHODGE_UNIPOLY_HPP
#define PFHODGE_UNIPOLY_HPP

#include "pfhodge/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfhodge {

// Dense univariate polynomial over Q, lowest degree first, never with a
// trailing zero coefficient.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs);

    static UniPoly constant(const BigRational& c);
    static UniPoly monomial(const BigRational& c, int k);
    static UniPoly variable() { return monomial(BigRational(1), 1); }
    // t - a
    static UniPoly linear_root(const BigRational& a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    BigRational coeff(int k) const;
    BigRational leading() const;
    const std::vector<BigRational>& coefficients() const { return c_; }

    BigRational evaluate(const BigRational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const BigRational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const BigRational& s) { return a *= s; }
    friend UniPoly operator*(const BigRational& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<BigRational> c_;
};

struct PolyDivision {
    UniPoly quotient;
    UniPoly remainder;
};

PolyDivision divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient part
UniPoly operator%(const UniPoly& a, const UniPoly& b);

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
    UniPoly gcd;  // monic
    UniPoly s;    // s*a + t*b = gcd
    UniPoly t;
};
ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b);

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b);
UniPoly poly_pow(const UniPoly& p, int e);
UniPoly poly_shift(const UniPoly& p, const BigRational& a);
// p(t^k)
UniPoly poly_inflate(const UniPoly& p, int k);
// p(q(t))
UniPoly poly_compose(const UniPoly& p, const UniPoly& q);
// t^n p(1/t) for n >= deg p
UniPoly poly_reverse(const UniPoly& p, int n);
UniPoly squarefree_part(const UniPoly& p);
// multiplicity of t = a as a root of p (p nonzero)
int root_multiplicity(const UniPoly& p, const BigRational& a);
// largest k with t^k | p
int low_order(const UniPoly& p);

struct RationalRoots {
    std::vector<std::pair<BigRational, int>> roots;  // ascending
    UniPoly cofactor;                                // monic, no rational roots
};
RationalRoots rational_roots(const UniPoly& p);

// Expanded roots with multiplicity, ascending.
std::vector<BigRational> expand_roots(const RationalRoots& r);

// Compact canonical text: "t^4+t^3-1/2*t+3".
std::string to_string(const UniPoly& p, std::string_view var = "t");

// Terms "c", "c*t^k", "t^k", "t" joined by + and -, c an integer or a/b.
UniPoly parse_unipoly(std::string_view text, std::string_view var = "t");

}  // namespace pfhodge

#endif
