#ifndef PFHODGE_QUOTIENT_HPP
#define PFHODGE_QUOTIENT_HPP

#include "pfhodge/errors.hpp"
#include "pfhodge/unipoly.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace pfhodge {

// Element of Q[x]/(q) for a monic squarefree q of degree >= 2. The ring is a
// product of fields; a zero divisor exposes a factorization of q.
class QuotientElement {
public:
    QuotientElement(const UniPoly& modulus, const UniPoly& residue);
    static QuotientElement from_rational(const UniPoly& modulus, const BigRational& c);
    // The class of x itself.
    static QuotientElement generator(const UniPoly& modulus);

    const UniPoly& modulus() const { return mod_; }
    const UniPoly& residue() const { return res_; }
    bool is_zero() const { return res_.is_zero(); }

    QuotientElement& operator+=(const QuotientElement& o);
    QuotientElement& operator-=(const QuotientElement& o);
    QuotientElement& operator*=(const QuotientElement& o);
    QuotientElement& operator*=(const BigRational& s);
    friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
    friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
    friend QuotientElement operator*(QuotientElement a, const QuotientElement& b) { return a *= b; }
    friend QuotientElement operator*(QuotientElement a, const BigRational& s) { return a *= s; }
    friend bool operator==(const QuotientElement& a, const QuotientElement& b)
    {
        return a.mod_ == b.mod_ && a.res_ == b.res_;
    }

private:
    void check_same(const QuotientElement& o) const;
    UniPoly mod_;
    UniPoly res_;
};

// modulus = factor * cofactor, both monic and nonconstant.
struct QuotientSplit {
    UniPoly factor;
    UniPoly cofactor;
};

class SplitRequired : public Error {
public:
    explicit SplitRequired(QuotientSplit s)
        : Error("closed point " + to_string(s.factor * s.cofactor) + " splits as (" + to_string(s.factor) +
                ")*(" + to_string(s.cofactor) + ")"),
          split(std::move(s)) {}
    QuotientSplit split;
};

// Inverse, or the split exposed by a zero divisor. Zero throws Error.
std::variant<QuotientElement, QuotientSplit> quotient_invert(const QuotientElement& x);

// Split data when x is a nonzero zero divisor, nothing when x is a unit or zero.
std::optional<QuotientSplit> zero_divisor_split(const QuotientElement& x);

// Polynomial in T with quotient-ring coefficients, lowest degree first.
using QuotientPoly = std::vector<QuotientElement>;

QuotientElement evaluate_at(const QuotientPoly& p, const BigRational& r);
QuotientPoly derivative_in_T(const QuotientPoly& p);

// det of multiplication by x on Q[x]/(q)
BigRational quotient_norm(const QuotientElement& x);
// Norm polynomial N(T) = prod over roots a of q of P(a, T).
UniPoly norm_polynomial(const QuotientPoly& p);

// Rational T-roots common to every root of the modulus, with multiplicity,
// ascending. Throws SplitRequired if a zero divisor appears.
std::vector<std::pair<BigRational, int>> rational_roots_over_quotient(const QuotientPoly& p);

}  // namespace pfhodge

#endif
