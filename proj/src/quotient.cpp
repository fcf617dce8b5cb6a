#include "pfhodge/quotient.hpp"

#include <algorithm>

namespace pfhodge {

namespace {

void validate_modulus(const UniPoly& q)
{
    if (q.degree() < 2) throw Error("quotient modulus must have degree >= 2: " + to_string(q));
    if (q.leading() != 1) throw Error("quotient modulus must be monic: " + to_string(q));
    if (poly_gcd(q, q.derivative()).degree() != 0)
        throw Error("quotient modulus must be squarefree: " + to_string(q));
}

}  // namespace

QuotientElement::QuotientElement(const UniPoly& modulus, const UniPoly& residue)
    : mod_(modulus), res_(residue % modulus)
{
    validate_modulus(mod_);
}

QuotientElement QuotientElement::from_rational(const UniPoly& modulus, const BigRational& c)
{
    return QuotientElement(modulus, UniPoly::constant(c));
}

QuotientElement QuotientElement::generator(const UniPoly& modulus)
{
    return QuotientElement(modulus, UniPoly::variable());
}

void QuotientElement::check_same(const QuotientElement& o) const
{
    if (!(mod_ == o.mod_)) throw Error("quotient elements with different moduli");
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& o)
{
    check_same(o);
    res_ += o.res_;
    return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& o)
{
    check_same(o);
    res_ -= o.res_;
    return *this;
}

QuotientElement& QuotientElement::operator*=(const QuotientElement& o)
{
    check_same(o);
    res_ = (res_ * o.res_) % mod_;
    return *this;
}

QuotientElement& QuotientElement::operator*=(const BigRational& s)
{
    res_ *= s;
    return *this;
}

std::optional<QuotientSplit> zero_divisor_split(const QuotientElement& x)
{
    if (x.is_zero()) return std::nullopt;
    UniPoly g = poly_gcd(x.residue(), x.modulus());
    if (g.degree() == 0) return std::nullopt;
    return QuotientSplit{g, (x.modulus() / g).monic()};
}

std::variant<QuotientElement, QuotientSplit> quotient_invert(const QuotientElement& x)
{
    if (x.is_zero()) throw Error("zero element not invertible");
    ExtendedGcd e = poly_xgcd(x.residue(), x.modulus());
    if (e.gcd.degree() > 0) return QuotientSplit{e.gcd, (x.modulus() / e.gcd).monic()};
    return QuotientElement(x.modulus(), e.s);
}

QuotientElement evaluate_at(const QuotientPoly& p, const BigRational& r)
{
    if (p.empty()) throw Error("evaluate_at: empty polynomial");
    QuotientElement acc = QuotientElement::from_rational(p.front().modulus(), BigRational(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= r;
        acc += *it;
    }
    return acc;
}

QuotientPoly derivative_in_T(const QuotientPoly& p)
{
    QuotientPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * BigRational(static_cast<long>(k)));
    return d;
}

namespace {

BigRational determinant(std::vector<std::vector<BigRational>> a)
{
    const std::size_t n = a.size();
    BigRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return BigRational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            BigRational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// Newton divided differences through (x_i, y_i).
UniPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys)
{
    const std::size_t n = xs.size();
    std::vector<BigRational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc *= UniPoly::linear_root(xs[i]);
        acc += UniPoly::constant(dd[i]);
    }
    return acc;
}

}  // namespace

BigRational quotient_norm(const QuotientElement& x)
{
    const UniPoly& q = x.modulus();
    const int m = q.degree();
    std::vector<std::vector<BigRational>> mat(m, std::vector<BigRational>(m));
    UniPoly col = x.residue();
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) mat[i][j] = col.coeff(i);
        col = (col * UniPoly::variable()) % q;
    }
    return determinant(std::move(mat));
}

UniPoly norm_polynomial(const QuotientPoly& p)
{
    if (p.empty()) return {};
    const int m = p.front().modulus().degree();
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<BigRational> xs, ys;
    for (int k = 0; k <= m * n; ++k) {
        xs.emplace_back(k);
        ys.push_back(quotient_norm(evaluate_at(p, BigRational(k))));
    }
    return interpolate(xs, ys);
}

std::vector<std::pair<BigRational, int>> rational_roots_over_quotient(const QuotientPoly& p)
{
    if (p.empty() || std::all_of(p.begin(), p.end(), [](const auto& c) { return c.is_zero(); }))
        throw Error("rational_roots_over_quotient: zero polynomial");
    const UniPoly& q = p.front().modulus();
    UniPoly norm = norm_polynomial(p);
    if (norm.is_zero()) {
        // P vanishes identically at some root of q: the coefficients share a factor with q.
        UniPoly g = q;
        for (const auto& c : p) g = poly_gcd(g, c.residue());
        throw SplitRequired(QuotientSplit{g, (q / g).monic()});
    }
    std::vector<std::pair<BigRational, int>> out;
    for (const auto& [r, bound] : rational_roots(norm).roots) {
        QuotientPoly d = p;
        int mult = 0;
        while (!d.empty()) {
            QuotientElement v = evaluate_at(d, r);
            if (!v.is_zero()) {
                if (auto s = zero_divisor_split(v)) throw SplitRequired(*s);
                break;
            }
            ++mult;
            d = derivative_in_T(d);
        }
        if (mult > 0) out.emplace_back(r, mult);
    }
    return out;
}

}  // namespace pfhodge
