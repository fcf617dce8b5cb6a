#include "pfhodge/ratfunc.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>

namespace pfhodge {

RatFunc::RatFunc(const UniPoly& num) : num_(num), den_(UniPoly::constant(1)) {}

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) { normalize(); }

void RatFunc::normalize()
{
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    BigRational lead = den_.leading();
    if (lead != 1) {
        BigRational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

BigRational RatFunc::evaluate(const BigRational& x) const
{
    BigRational d = den_.evaluate(x);
    if (d == 0) throw Error("evaluation at a pole t = " + x.get_str());
    BigRational r = num_.evaluate(x) / d;
    return r;
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw Error("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

int RatFunc::valuation_at(const BigRational& a) const
{
    if (is_zero()) throw Error("valuation of the zero rational function");
    return root_multiplicity(num_, a) - root_multiplicity(den_, a);
}

int RatFunc::valuation_at_infinity() const
{
    if (is_zero()) throw Error("valuation of the zero rational function");
    return den_.degree() - num_.degree();
}

BigRational RatFunc::value_at_infinity() const
{
    if (is_zero()) return BigRational(0);
    int v = valuation_at_infinity();
    if (v < 0) throw Error("rational function has a pole at infinity");
    if (v > 0) return BigRational(0);
    BigRational r = num_.leading() / den_.leading();
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc ratfunc_pow(const RatFunc& f, int e)
{
    if (e < 0) return ratfunc_pow(f.inverse(), -e);
    return RatFunc(poly_pow(f.num(), e), poly_pow(f.den(), e));
}

RatFunc ratfunc_shift(const RatFunc& f, const BigRational& a)
{
    return RatFunc(poly_shift(f.num(), a), poly_shift(f.den(), a));
}

RatFunc ratfunc_inflate(const RatFunc& f, int k)
{
    return RatFunc(poly_inflate(f.num(), k), poly_inflate(f.den(), k));
}

RatFunc ratfunc_invert_variable(const RatFunc& f)
{
    if (f.is_zero()) return f;
    int dn = f.num().degree(), dd = f.den().degree();
    int n = std::max(dn, dd);
    // N(1/t)/D(1/t) = t^{n-dn} rev(N) / (t^{n-dd} rev(D)) with both scaled by t^n
    UniPoly num = poly_reverse(f.num(), n);
    UniPoly den = poly_reverse(f.den(), n);
    return RatFunc(num, den);
}

RatFunc ratfunc_compose(const RatFunc& f, const RatFunc& g)
{
    // Homogenize: f = N/D with n = max degree, f(g) = sum N_k g^k / sum D_k g^k.
    int n = std::max(f.num().degree(), f.den().degree());
    UniPoly p = g.num(), q = g.den();
    std::vector<UniPoly> ppow{UniPoly::constant(1)}, qpow{UniPoly::constant(1)};
    for (int k = 1; k <= n; ++k) {
        ppow.push_back(ppow.back() * p);
        qpow.push_back(qpow.back() * q);
    }
    UniPoly num, den;
    for (int k = 0; k <= n; ++k) {
        UniPoly mono = ppow[k] * qpow[n - k];
        num += mono * f.num().coeff(k);
        den += mono * f.den().coeff(k);
    }
    return RatFunc(num, den);
}

std::vector<BigRational> series_at_zero(const RatFunc& f, int terms)
{
    BigRational d0 = f.den().coeff(0);
    if (d0 == 0) throw Error("series_at_zero: pole at 0");
    std::vector<BigRational> out(static_cast<std::size_t>(std::max(terms, 0)));
    for (int k = 0; k < terms; ++k) {
        BigRational acc = f.num().coeff(k);
        for (int j = 1; j <= std::min(k, f.den().degree()); ++j) acc -= f.den().coeff(j) * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

std::string to_string(const RatFunc& f, std::string_view var)
{
    if (f.is_polynomial()) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace pfhodge
