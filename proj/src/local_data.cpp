#include "pfhodge/local_data.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>
#include <map>

namespace pfhodge {

JordanType::JordanType(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks))
{
    for (auto& b : blocks_) {
        if (b.size < 1) throw InconsistentProfile("Jordan block of nonpositive size");
        b.alpha = frac_of(b.alpha);
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& x, const JordanBlock& y) {
        if (x.alpha != y.alpha) return x.alpha < y.alpha;
        return x.size > y.size;
    });
}

int JordanType::rank() const
{
    int r = 0;
    for (const auto& b : blocks_) r += b.size;
    return r;
}

bool JordanType::is_identity() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const JordanBlock& b) { return b.alpha == 0 && b.size == 1; });
}

bool JordanType::has_nonzero_alpha() const
{
    return std::any_of(blocks_.begin(), blocks_.end(), [](const JordanBlock& b) { return b.alpha != 0; });
}

std::vector<std::pair<BigRational, int>> JordanType::eigenvalue_multiset() const
{
    std::vector<std::pair<BigRational, int>> out;
    for (const auto& b : blocks_) {
        if (!out.empty() && out.back().first == b.alpha)
            out.back().second += b.size;
        else
            out.emplace_back(b.alpha, b.size);
    }
    return out;
}

std::string to_string(const JordanType& j)
{
    std::string s = "[";
    for (std::size_t i = 0; i < j.blocks().size(); ++i) {
        if (i) s += ", ";
        s += "(" + to_string(j.blocks()[i].alpha) + ", " + std::to_string(j.blocks()[i].size) + ")";
    }
    return s + "]";
}

int fixed_space_defect(const JordanType& j)
{
    int unit_blocks = 0;
    for (const auto& b : j.blocks())
        if (b.alpha == 0) ++unit_blocks;
    return j.rank() - unit_blocks;
}

const char* to_string(PointKind k)
{
    switch (k) {
    case PointKind::NONSINGULAR: return "nonsingular";
    case PointKind::APPARENT: return "apparent";
    case PointKind::ACTUAL: return "actual";
    }
    return "?";
}

PointKind parse_point_kind(std::string_view s)
{
    if (s == "nonsingular") return PointKind::NONSINGULAR;
    if (s == "apparent") return PointKind::APPARENT;
    if (s == "actual") return PointKind::ACTUAL;
    throw Error("unknown point kind '" + std::string(s) + "'");
}

LocalData make_local_data(PointId point, int orbit_size, std::vector<BigRational> exponents, PointKind kind,
                          std::optional<JordanType> monodromy)
{
    const std::string key = point_key(point);
    if (orbit_size < 1) throw InconsistentProfile("orbit size must be positive at " + key);
    std::sort(exponents.begin(), exponents.end());
    if (kind != PointKind::ACTUAL) {
        for (const auto& m : exponents)
            if (!is_integer(m)) throw InconsistentProfile("non-integer exponent at " + std::string(to_string(kind)) + " point " + key);
    } else {
        if (!monodromy) throw MissingAnnotation("missing Jordan annotation at " + key, {key});
        std::map<BigRational, int> fr, jd;
        for (const auto& m : exponents) ++fr[frac_of(m)];
        for (const auto& [a, n] : monodromy->eigenvalue_multiset()) jd[a] += n;
        if (fr != jd)
            throw InconsistentProfile("exponent fractions at " + key + " do not match Jordan annotation " + to_string(*monodromy));
    }
    return LocalData{std::move(point), orbit_size, std::move(exponents), kind, std::move(monodromy)};
}

void validate_profile(const VHSProfile& v)
{
    if (v.weight < 1 || v.weight > 3) throw InconsistentProfile("weight must be 1, 2 or 3");
    const std::size_t rank = static_cast<std::size_t>(v.weight) + 1;
    bool actual = false;
    for (const auto& d : v.points) {
        if (d.exponents.size() != rank)
            throw InconsistentProfile("point " + point_key(d.point) + " has " + std::to_string(d.exponents.size()) +
                                      " exponents, expected " + std::to_string(rank));
        if (d.kind == PointKind::ACTUAL) {
            actual = true;
            if (!d.monodromy) throw MissingAnnotation("missing Jordan annotation at " + point_key(d.point), {point_key(d.point)});
            if (static_cast<std::size_t>(d.monodromy->rank()) != rank)
                throw InconsistentProfile("Jordan annotation at " + point_key(d.point) + " has the wrong rank");
        }
    }
    if (!actual) throw InconsistentProfile("profile has no actual singular point");
}

BigRational parabolic_weight(const LocalData& d, int i)
{
    return frac_of(d.exponents.at(static_cast<std::size_t>(i)));
}

const char* to_string(KodairaClass k)
{
    switch (k) {
    case KodairaClass::I_n: return "I_n";
    case KodairaClass::I_n_star: return "I_n*";
    case KodairaClass::II: return "II or II*";
    case KodairaClass::III: return "III or III*";
    case KodairaClass::IV: return "IV or IV*";
    }
    return "?";
}

namespace {

std::pair<BigRational, BigRational> unordered(const BigRational& a, const BigRational& b)
{
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool is_pair(const std::pair<BigRational, BigRational>& p, const char* lo, const char* hi)
{
    return p.first == parse_rational(lo) && p.second == parse_rational(hi);
}

bool semisimple(const JordanType& j)
{
    return std::all_of(j.blocks().begin(), j.blocks().end(), [](const JordanBlock& b) { return b.size == 1; });
}

bool single_block(const JordanType& j, int size)
{
    return j.blocks().size() == 1 && j.blocks().front().size == size;
}

}  // namespace

KodairaClass classify_elliptic(const LocalData& d)
{
    if (d.exponents.size() != 2 || d.kind != PointKind::ACTUAL)
        throw Error("classify_elliptic needs an actual point of a weight-1 profile");
    auto w = unordered(parabolic_weight(d, 0), parabolic_weight(d, 1));
    if (is_pair(w, "0", "0")) {
        if (d.monodromy && d.monodromy->is_identity()) throw Error("not an elliptic degeneration type: trivial monodromy");
        return KodairaClass::I_n;
    }
    if (is_pair(w, "1/2", "1/2")) return KodairaClass::I_n_star;
    if (is_pair(w, "1/6", "5/6")) return KodairaClass::II;
    if (is_pair(w, "1/4", "3/4")) return KodairaClass::III;
    if (is_pair(w, "1/3", "2/3")) return KodairaClass::IV;
    throw Error("not an elliptic degeneration type: weights (" + to_string(parabolic_weight(d, 0)) + ", " +
                to_string(parabolic_weight(d, 1)) + ")");
}

const char* to_string(K3Class k)
{
    switch (k) {
    case K3Class::T_un: return "T_un";
    case K3Class::T_un2: return "T_un^2";
    case K3Class::T_i: return "T_i";
    case K3Class::minus_T_i: return "-T_i";
    case K3Class::T_i2: return "T_i^2";
    case K3Class::T_omega: return "T_omega";
    case K3Class::T_omega2: return "T_omega^2";
    case K3Class::T_nod: return "T_nod";
    }
    return "?";
}

K3Class classify_k3(const LocalData& d)
{
    if (d.exponents.size() != 3 || d.kind != PointKind::ACTUAL || !d.monodromy)
        throw Error("classify_k3 needs an annotated actual point of a weight-2 profile");
    const BigRational w0 = parabolic_weight(d, 0), w1 = parabolic_weight(d, 1), w2 = parabolic_weight(d, 2);
    auto outer = unordered(w0, w2);
    const JordanType& j = *d.monodromy;
    const bool half = w1 == parse_rational("1/2"), zero = w1 == 0;
    std::optional<K3Class> k;
    if (half && is_pair(outer, "1/2", "1/2") && single_block(j, 3)) k = K3Class::T_un;
    else if (zero && is_pair(outer, "0", "0") && single_block(j, 3)) k = K3Class::T_un2;
    else if (half && is_pair(outer, "1/4", "3/4") && semisimple(j)) k = K3Class::T_i;
    else if (zero && is_pair(outer, "1/4", "3/4") && semisimple(j)) k = K3Class::minus_T_i;
    else if (zero && is_pair(outer, "1/2", "1/2") && semisimple(j)) k = K3Class::T_i2;
    else if (half && is_pair(outer, "1/6", "5/6") && semisimple(j)) k = K3Class::T_omega;
    else if (zero && is_pair(outer, "1/3", "2/3") && semisimple(j)) k = K3Class::T_omega2;
    else if (half && is_pair(outer, "0", "0") && semisimple(j)) k = K3Class::T_nod;
    if (!k)
        throw Error("no Table 2 type has weights (" + to_string(w0) + ", " + to_string(w1) + ", " + to_string(w2) +
                    ") with Jordan type " + to_string(j));
    return *k;
}

Weight3Class classify_weight3(const LocalData& d)
{
    if (d.exponents.size() != 4 || d.kind != PointKind::ACTUAL || !d.monodromy)
        throw Error("classify_weight3 needs an annotated actual point of a weight-3 profile");
    const auto& b = d.monodromy->blocks();
    Weight3Class c;
    c.in_II = b.size() == 1 && b[0].size == 4 && b[0].alpha == 0;
    c.in_III = b.size() == 2 && b[0].size == 2 && b[1].size == 2 && b[0].alpha == 0 && b[1].alpha == 0;
    c.in_IV = d.monodromy->has_nonzero_alpha();
    return c;
}

K3Counts counts_k3(const VHSProfile& v)
{
    K3Counts c;
    for (const auto& d : v.points) {
        if (d.kind != PointKind::ACTUAL) continue;
        K3Class k = classify_k3(d);
        if (k == K3Class::T_un || k == K3Class::T_i || k == K3Class::T_omega || k == K3Class::T_nod) c.a_half += d.orbit_size;
        if (k != K3Class::T_un2 && k != K3Class::T_nod) c.a_f += d.orbit_size;
    }
    return c;
}

K3Counts counts_k3_from_exponents(const VHSProfile& v)
{
    K3Counts c;
    const BigRational half = parse_rational("1/2");
    for (const auto& d : v.points) {
        if (d.kind != PointKind::ACTUAL) continue;
        if (parabolic_weight(d, 1) == half) c.a_half += d.orbit_size;
        if (parabolic_weight(d, 0) != 0) c.a_f += d.orbit_size;
    }
    return c;
}

int count_strictly_quasi_unipotent(const VHSProfile& v)
{
    int n = 0;
    for (const auto& d : v.points)
        if (d.kind == PointKind::ACTUAL && d.monodromy && d.monodromy->has_nonzero_alpha()) n += d.orbit_size;
    return n;
}

}  // namespace pfhodge
