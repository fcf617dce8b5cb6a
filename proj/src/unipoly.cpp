#include "pfhodge/unipoly.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>
#include <cctype>

namespace pfhodge {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly(std::vector<BigRational>{c}); }

UniPoly UniPoly::monomial(const BigRational& c, int k)
{
    std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const BigRational& a)
{
    return UniPoly(std::vector<BigRational>{BigRational(-a), BigRational(1)});
}

BigRational UniPoly::coeff(int k) const
{
    if (k < 0 || k > degree()) return BigRational(0);
    return c_[k];
}

BigRational UniPoly::leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

BigRational UniPoly::evaluate(const BigRational& x) const
{
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return {};
    BigRational inv = 1 / leading();
    return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

UniPoly UniPoly::operator-() const { return *this * BigRational(-1); }

PolyDivision divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<BigRational> r = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - db) + 1);
    BigRational inv_lead = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        BigRational f = r[k] * inv_lead;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
    BigRational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    return (a / poly_gcd(a, b) * b).monic();
}

UniPoly poly_pow(const UniPoly& p, int e)
{
    UniPoly r = UniPoly::constant(1), base = p;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

UniPoly poly_shift(const UniPoly& p, const BigRational& a)
{
    // Horner in the shifted variable: p(t+a) = (...(c_n (t+a) + c_{n-1})(t+a) + ...)
    UniPoly lin(std::vector<BigRational>{a, BigRational(1)});
    UniPoly acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= lin;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly poly_inflate(const UniPoly& p, int k)
{
    if (p.is_zero()) return {};
    std::vector<BigRational> v(static_cast<std::size_t>(p.degree()) * k + 1);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(i) * k] = p.coeff(i);
    return UniPoly(std::move(v));
}

UniPoly poly_compose(const UniPoly& p, const UniPoly& q)
{
    UniPoly acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= q;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly poly_reverse(const UniPoly& p, int n)
{
    if (p.degree() > n) throw Error("poly_reverse: degree exceeds target");
    std::vector<BigRational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= p.degree(); ++i) v[n - i] = p.coeff(i);
    return UniPoly(std::move(v));
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_constant()) return p.is_zero() ? UniPoly() : UniPoly::constant(1);
    return (p / poly_gcd(p, p.derivative())).monic();
}

int root_multiplicity(const UniPoly& p, const BigRational& a)
{
    if (p.is_zero()) throw Error("root multiplicity of the zero polynomial");
    return low_order(poly_shift(p, a));
}

int low_order(const UniPoly& p)
{
    const auto& c = p.coefficients();
    int k = 0;
    while (k < static_cast<int>(c.size()) && c[k] == 0) ++k;
    return k;
}

namespace {

// Prime factorization by trial division; the integers met here are small
// products of small primes (content and leading coefficients of indicial
// and denominator polynomials).
std::vector<std::pair<BigInt, int>> factor_integer(BigInt n)
{
    std::vector<std::pair<BigInt, int>> out;
    if (n < 0) n = -n;
    auto take = [&](const BigInt& p) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    take(BigInt(2));
    take(BigInt(3));
    const unsigned long limit = 20000000UL;
    for (unsigned long p = 5; n > 1; p += 6) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            out.emplace_back(n, 1);
            n = 1;
            break;
        }
        if (BigInt(p) * p > n) break;
        if (p > limit) throw Error("integer too large to factor by trial division: " + n.get_str());
        take(BigInt(p));
        take(BigInt(p + 2));
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<BigInt> divisors(const BigInt& n)
{
    std::vector<BigInt> ds{BigInt(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t base = ds.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Integer primitive multiple of p.
std::vector<BigInt> integer_coefficients(const UniPoly& p)
{
    BigInt l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> z;
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        BigRational s = c * BigRational(l);
        z.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& x : z) x /= g;
    return z;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p)
{
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    RationalRoots out;
    int k = low_order(p);
    UniPoly rest(std::vector<BigRational>(p.coefficients().begin() + k, p.coefficients().end()));
    if (k > 0) out.roots.emplace_back(BigRational(0), k);

    UniPoly sf = squarefree_part(rest);
    std::vector<BigRational> found;
    if (sf.degree() >= 1) {
        auto z = integer_coefficients(sf);
        auto num_divs = divisors(z.front());
        auto den_divs = divisors(z.back());
        UniPoly work = sf;
        for (const auto& q : den_divs) {
            for (const auto& n : num_divs) {
                for (int sgn : {1, -1}) {
                    if (work.degree() < 1) break;
                    BigRational r = make_rational(BigInt(sgn * n), q);
                    if (std::find(found.begin(), found.end(), r) != found.end()) continue;
                    if (work.evaluate(r) == 0) {
                        found.push_back(r);
                        work = work / UniPoly::linear_root(r);
                    }
                }
            }
        }
    }
    for (const auto& r : found) {
        int m = 0;
        UniPoly lin = UniPoly::linear_root(r);
        while (true) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++m;
        }
        out.roots.emplace_back(r, m);
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cofactor = rest.monic();
    return out;
}

std::vector<BigRational> expand_roots(const RationalRoots& r)
{
    std::vector<BigRational> v;
    for (const auto& [x, m] : r.roots)
        for (int i = 0; i < m; ++i) v.push_back(x);
    return v;
}

std::string to_string(const UniPoly& p, std::string_view var)
{
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        BigRational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        BigRational a = neg ? BigRational(-c) : c;
        if (neg)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (k == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str() + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

namespace {

class PolyTextReader {
public:
    PolyTextReader(std::string_view text, std::string_view var) : s_(text), var_(var) {}

    UniPoly read()
    {
        UniPoly acc;
        skip_ws();
        bool first = true;
        while (pos_ < s_.size() || first) {
            int sign = 1;
            if (accept_minus())
                sign = -1;
            else if (accept('+'))
                sign = 1;
            else if (!first)
                fail("expected '+' or '-'");
            acc += read_term() * BigRational(sign);
            first = false;
            skip_ws();
        }
        return acc;
    }

private:
    UniPoly read_term()
    {
        skip_ws();
        BigRational c(1);
        bool have_coeff = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            c = read_number();
            have_coeff = true;
            skip_ws();
            if (accept('/')) {
                skip_ws();
                BigRational d = read_number();
                if (d == 0) fail("zero denominator");
                c /= d;
                skip_ws();
            }
            if (!accept('*')) return UniPoly::constant(c);
            skip_ws();
        }
        if (s_.compare(pos_, var_.size(), var_) != 0)
            fail(have_coeff ? "expected variable after '*'" : "expected a term");
        pos_ += var_.size();
        skip_ws();
        int k = 1;
        if (accept('^')) {
            skip_ws();
            BigRational e = read_number();
            k = static_cast<int>(to_int64(e));
        }
        return UniPoly::monomial(c, k);
    }

    BigRational read_number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return BigRational(BigInt(std::string(s_.substr(start, pos_ - start)), 10));
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

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

    std::string_view s_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_unipoly(std::string_view text, std::string_view var)
{
    return PolyTextReader(text, var).read();
}

}  // namespace pfhodge
