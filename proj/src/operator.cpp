#include "pfhodge/operator.hpp"

#include "pfhodge/errors.hpp"

#include <cctype>

namespace pfhodge {

namespace {

RatFunc t_function() { return RatFunc(UniPoly::variable()); }

// d/dt or t*d/dt applied to a coefficient
RatFunc derivation(OpForm form, const RatFunc& b)
{
    RatFunc d = b.derivative();
    return form == OpForm::DDT ? d : t_function() * d;
}

// Falling factorial X(X-1)...(X-k+1) as coefficients in X.
std::vector<BigRational> falling_factorial(int k)
{
    UniPoly p = UniPoly::constant(1);
    for (int j = 0; j < k; ++j) p *= UniPoly::linear_root(BigRational(j));
    std::vector<BigRational> v(p.coefficients());
    v.resize(static_cast<std::size_t>(k) + 1);
    return v;
}

// Stirling numbers of the second kind S(k, j), 0 <= j <= k <= n.
std::vector<std::vector<BigInt>> stirling2(int n)
{
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
    s[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j) s[k][j] = s[k - 1][j - 1] + BigInt(j) * s[k - 1][j];
    return s;
}

}  // namespace

OperatorPoly::OperatorPoly(OpForm form, std::vector<RatFunc> coeffs) : form_(form), c_(std::move(coeffs)) { trim(); }

OperatorPoly OperatorPoly::function(OpForm form, const RatFunc& f) { return OperatorPoly(form, {f}); }

OperatorPoly OperatorPoly::generator(OpForm form)
{
    return OperatorPoly(form, {RatFunc(), RatFunc::constant(1)});
}

void OperatorPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFunc OperatorPoly::coeff(int k) const
{
    if (k < 0 || k > order()) return RatFunc();
    return c_[k];
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o)
{
    if (o.form_ != form_ && !o.is_zero() && !is_zero()) throw Error("adding operators of different forms");
    if (is_zero()) form_ = o.form_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o)
{
    OperatorPoly neg = o.left_multiply(RatFunc::constant(-1));
    return *this += neg;
}

OperatorPoly OperatorPoly::left_multiply(const RatFunc& f) const
{
    std::vector<RatFunc> c;
    for (const auto& x : c_) c.push_back(f * x);
    return OperatorPoly(form_, std::move(c));
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b)
{
    if (a.is_zero() || b.is_zero()) return OperatorPoly(a.form_);
    if (a.form_ != b.form_) throw Error("composing operators of different forms");
    const OpForm form = a.form_;
    std::vector<RatFunc> out(static_cast<std::size_t>(a.order() + b.order()) + 1);
    for (int k = 0; k <= b.order(); ++k) {
        // derivatives of b_k, computed once per k
        std::vector<RatFunc> der{b.c_[k]};
        for (int m = 1; m <= a.order(); ++m) der.push_back(derivation(form, der.back()));
        for (int j = 0; j <= a.order(); ++j) {
            if (a.c_[j].is_zero()) continue;
            for (int m = 0; m <= j; ++m) {
                if (der[m].is_zero()) continue;
                out[j - m + k] += a.c_[j] * der[m] * RatFunc::constant(BigRational(binomial(j, m)));
            }
        }
    }
    return OperatorPoly(form, std::move(out));
}

DifferentialOperator::DifferentialOperator(OpForm form, std::vector<RatFunc> coeffs)
    : form_(form), f_(std::move(coeffs))
{
    if (f_.empty()) throw Error("operator of order 0");
}

DifferentialOperator DifferentialOperator::from_poly(const OperatorPoly& p)
{
    if (p.is_zero()) throw Error("zero operator");
    if (p.order() == 0) throw Error("operator has order 0");
    const int n = p.order();
    RatFunc inv = p.coeff(n).inverse();
    std::vector<RatFunc> f;
    for (int i = 1; i <= n; ++i) f.push_back(inv * p.coeff(n - i));
    return DifferentialOperator(p.form(), std::move(f));
}

OperatorPoly DifferentialOperator::to_poly() const
{
    const int n = order();
    std::vector<RatFunc> c(static_cast<std::size_t>(n) + 1);
    c[n] = RatFunc::constant(1);
    for (int i = 1; i <= n; ++i) c[n - i] = f_[i - 1];
    return OperatorPoly(form_, std::move(c));
}

std::string to_string(const DifferentialOperator& L)
{
    const std::string x = L.form() == OpForm::DDT ? "D" : "del";
    const int n = L.order();
    auto power = [&](int k) { return k == 1 ? x : x + "^" + std::to_string(k); };
    std::string s = power(n);
    for (int i = 1; i <= n; ++i) {
        const RatFunc& f = L.coeff(i);
        if (f.is_zero()) continue;
        std::string c = to_string(f);
        if (!f.is_polynomial() || f.num().degree() > 0 || f.num().coeff(0) < 0) c = "(" + c + ")";
        s += "+" + c;
        if (i < n) s += "*" + power(n - i);
    }
    return s;
}

namespace {

class OperatorReader {
public:
    explicit OperatorReader(std::string_view text) : s_(text) {}

    DifferentialOperator read()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        if (!v.form) fail_at(s_.size(), "operator has order 0 (no D or del)");
        if (v.p.is_zero()) fail_at(s_.size(), "zero operator");
        if (v.p.order() == 0) fail_at(s_.size(), "operator has order 0");
        return DifferentialOperator::from_poly(v.p);
    }

private:
    struct Value {
        std::optional<OpForm> form;  // empty for pure functions of t
        OperatorPoly p{OpForm::DDT};
    };

    Value expr()
    {
        Value acc = term();
        for (;;) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('+'))
                acc = combine(acc, term(), at, [](const OperatorPoly& a, const OperatorPoly& b) { return a + b; });
            else if (accept_minus())
                acc = combine(acc, term(), at, [](const OperatorPoly& a, const OperatorPoly& b) { return a - b; });
            else
                return acc;
        }
    }

    Value term()
    {
        Value acc = unary();
        for (;;) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('*')) {
                acc = combine(acc, unary(), at, [](const OperatorPoly& a, const OperatorPoly& b) { return a * b; });
            } else if (accept('/')) {
                Value rhs = unary();
                if (acc.form || rhs.form) fail_at(at, "division is only defined between functions of t");
                if (rhs.p.is_zero()) fail_at(at, "division by zero");
                acc.p = OperatorPoly::function(OpForm::DDT, acc.p.coeff(0) / rhs.p.coeff(0));
            } else {
                return acc;
            }
        }
    }

    Value unary()
    {
        skip_ws();
        if (accept_minus()) {
            Value v = unary();
            v.p = v.p.left_multiply(RatFunc::constant(-1));
            return v;
        }
        if (accept('+')) return unary();
        return power();
    }

    Value power()
    {
        Value base = primary();
        skip_ws();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (e > 10000) fail_at(at, "exponent too large");
        Value r;
        r.form = base.form;
        r.p = OperatorPoly::function(base.form.value_or(OpForm::DDT), RatFunc::constant(1));
        for (long k = 0; k < e; ++k) r.p = r.p * base.p;
        return r;
    }

    Value primary()
    {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        std::size_t at = pos_;
        char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            BigInt z(std::string(s_.substr(at, pos_ - at)), 10);
            return {std::nullopt, OperatorPoly::function(OpForm::DDT, RatFunc::constant(BigRational(z)))};
        }
        if (accept('(')) {
            Value v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (accept_word("del") || accept_word("\xCE\xB4")) return {OpForm::DELTA, OperatorPoly::generator(OpForm::DELTA)};
        if (accept_word("D")) return {OpForm::DDT, OperatorPoly::generator(OpForm::DDT)};
        if (accept_word("t")) return {std::nullopt, OperatorPoly::function(OpForm::DDT, t_function())};
        fail("expected a number, t, D, del or '('");
    }

    template <class Op>
    Value combine(const Value& a, const Value& b, std::size_t at, Op op)
    {
        if (a.form && b.form && *a.form != *b.form) fail_at(at, "mixed D and del in one operator");
        std::optional<OpForm> form = a.form ? a.form : b.form;
        OpForm f = form.value_or(OpForm::DDT);
        return {form, op(retag(a.p, f), retag(b.p, f))};
    }

    static OperatorPoly retag(const OperatorPoly& p, OpForm f)
    {
        if (p.form() == f) return p;
        return OperatorPoly(f, p.coefficients());
    }

    bool accept(char ch)
    {
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_minus()
    {
        if (accept('-')) return true;
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view w)
    {
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
        pos_ = end;
        return true;
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) { throw ParseError(at, msg); }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

DifferentialOperator parse_operator(std::string_view text) { return OperatorReader(text).read(); }

DifferentialOperator to_delta_form(const DifferentialOperator& L)
{
    if (L.form() == OpForm::DELTA) return L;
    const int n = L.order();
    // t^n L = sum_k c_k t^{n-k} (t^k D^k), with t^k D^k = delta(delta-1)...(delta-k+1)
    std::vector<RatFunc> g(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        RatFunc ck = k == n ? RatFunc::constant(1) : L.coeff(n - k);
        if (ck.is_zero()) continue;
        RatFunc scaled = ck * RatFunc(UniPoly::monomial(BigRational(1), n - k));
        auto ff = falling_factorial(k);
        for (int j = 0; j <= k; ++j)
            if (ff[j] != 0) g[j] += scaled * RatFunc::constant(ff[j]);
    }
    return DifferentialOperator::from_poly(OperatorPoly(OpForm::DELTA, std::move(g)));
}

DifferentialOperator to_ddt_form(const DifferentialOperator& L)
{
    if (L.form() == OpForm::DDT) return L;
    const int n = L.order();
    auto S = stirling2(n);
    // delta^k = sum_j S(k, j) t^j D^j
    std::vector<RatFunc> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        RatFunc gk = k == n ? RatFunc::constant(1) : L.coeff(n - k);
        if (gk.is_zero()) continue;
        for (int j = 0; j <= k; ++j) {
            if (S[k][j] == 0) continue;
            c[j] += gk * RatFunc(UniPoly::monomial(BigRational(S[k][j]), j));
        }
    }
    return DifferentialOperator::from_poly(OperatorPoly(OpForm::DDT, std::move(c)));
}

DifferentialOperator twist(const DifferentialOperator& L, const RatFunc& h)
{
    if (h.is_zero()) throw Error("twist by the zero function");
    OperatorPoly p = L.to_poly() * OperatorPoly::function(L.form(), h.inverse());
    return DifferentialOperator::from_poly(p);
}

DifferentialOperator pullback_operator_monomial(const DifferentialOperator& L, int k)
{
    if (k < 1) throw Error("pullback degree must be positive");
    DifferentialOperator d = to_delta_form(L);
    std::vector<RatFunc> g;
    BigRational kp(1);
    for (int i = 1; i <= d.order(); ++i) {
        kp *= k;
        g.push_back(ratfunc_inflate(d.coeff(i), k) * RatFunc::constant(kp));
    }
    return DifferentialOperator(OpForm::DELTA, std::move(g));
}

DifferentialOperator pullback_operator(const DifferentialOperator& L, const RatFunc& g)
{
    if (g.is_constant()) throw Error("pullback along a constant map");
    DifferentialOperator d = to_ddt_form(L);
    const int n = d.order();
    // d/dt = (1/g') d/ds
    OperatorPoly Y = OperatorPoly::function(OpForm::DDT, g.derivative().inverse()) * OperatorPoly::generator(OpForm::DDT);
    OperatorPoly power = OperatorPoly::function(OpForm::DDT, RatFunc::constant(1));
    OperatorPoly total(OpForm::DDT);
    for (int k = 0; k <= n; ++k) {
        RatFunc c = k == n ? RatFunc::constant(1) : ratfunc_compose(d.coeff(n - k), g);
        if (!c.is_zero()) total += power.left_multiply(c);
        if (k < n) power = power * Y;
    }
    return DifferentialOperator::from_poly(total);
}

DifferentialOperator translate_operator(const DifferentialOperator& L, const BigRational& a)
{
    DifferentialOperator d = to_ddt_form(L);
    std::vector<RatFunc> f;
    for (const auto& c : d.coefficients()) f.push_back(ratfunc_shift(c, a));
    return DifferentialOperator(OpForm::DDT, std::move(f));
}

DifferentialOperator invert_coordinate(const DifferentialOperator& L)
{
    DifferentialOperator d = to_delta_form(L);
    std::vector<RatFunc> g;
    for (int i = 1; i <= d.order(); ++i) {
        RatFunc gi = ratfunc_invert_variable(d.coeff(i));
        g.push_back(i % 2 ? -gi : gi);
    }
    return DifferentialOperator(OpForm::DELTA, std::move(g));
}

}  // namespace pfhodge
