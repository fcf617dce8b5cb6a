#include "pfhodge/rational.hpp"

#include "pfhodge/errors.hpp"

#include <cctype>

namespace pfhodge {

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw Error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational make_rational(long num, long den)
{
    return make_rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw Error("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw Error("malformed rational '" + std::string(whole) + "'");
    BigInt z(std::string(s.substr(i)), 10);
    return neg ? BigInt(-z) : z;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

BigRational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(s, text));
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
    return make_rational(num, den);
}

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt floor_of(const BigRational& q)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceil_of(const BigRational& q)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigRational frac_of(const BigRational& q)
{
    BigRational r = q - BigRational(floor_of(q));
    return r;
}

std::int64_t to_int64(const BigInt& z)
{
    if (!z.fits_slong_p()) throw Error("integer out of range: " + z.get_str());
    return z.get_si();
}

std::int64_t to_int64(const BigRational& q)
{
    if (!is_integer(q)) throw Error("expected an integer, got " + q.get_str());
    return to_int64(q.get_num());
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace pfhodge
