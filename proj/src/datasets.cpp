#include "pfhodge/datasets.hpp"

#include "pfhodge/errors.hpp"

#include <algorithm>

namespace pfhodge {

namespace {

BigRational Q(const char* s) { return parse_rational(s); }

std::vector<BigRational> Qs(std::initializer_list<const char*> xs)
{
    std::vector<BigRational> v;
    for (auto x : xs) v.push_back(Q(x));
    return v;
}

JordanType diag(const std::vector<BigRational>& alphas)
{
    std::vector<JordanBlock> b;
    for (const auto& a : alphas) b.push_back({a, 1});
    return JordanType(b);
}

std::string del_factor(const BigRational& a)
{
    return "(del+" + to_string(a) + ")";
}

FamilyRecord hypergeometric(int row, std::vector<BigRational> alphas, const char* monodromy)
{
    FamilyRecord f;
    f.id = "dm" + std::to_string(row);
    f.operator_text = "del^4 - t*";
    for (std::size_t i = 0; i < alphas.size(); ++i) f.operator_text += (i ? "*" : "") + del_factor(alphas[i]);
    f.weight = 3;
    f.annotations["0"] = JordanType({{0, 4}});
    f.annotations["1"] = JordanType({{0, 2}, {0, 1}, {0, 1}});
    std::vector<JordanBlock> inf;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i > 0 && alphas[i] == alphas[i - 1])
            ++inf.back().size;
        else
            inf.push_back({alphas[i], 1});
    }
    f.annotations["inf"] = JordanType(inf);
    f.scheme = {{"0", {0, 0, 0, 0}}, {"1", {0, 1, 1, 2}}, {"inf", alphas}};
    f.alphas = std::move(alphas);
    f.monodromy = monodromy;
    f.table3_row = row;
    return f;
}

std::vector<FamilyRecord> make_families()
{
    std::vector<FamilyRecord> out;
    out.push_back(hypergeometric(1, Qs({"1/5", "2/5", "3/5", "4/5"}), "thin"));
    out.push_back(hypergeometric(2, Qs({"1/10", "3/10", "7/10", "9/10"}), "arithmetic"));
    out.push_back(hypergeometric(3, Qs({"1/2", "1/2", "1/2", "1/2"}), "thin"));
    out.push_back(hypergeometric(4, Qs({"1/3", "1/3", "2/3", "2/3"}), "arithmetic"));
    out.push_back(hypergeometric(5, Qs({"1/3", "1/2", "1/2", "2/3"}), "thin"));
    out.push_back(hypergeometric(6, Qs({"1/4", "1/2", "1/2", "3/4"}), "thin"));
    out.push_back(hypergeometric(7, Qs({"1/8", "3/8", "5/8", "7/8"}), "thin"));
    out.push_back(hypergeometric(8, Qs({"1/6", "1/3", "2/3", "5/6"}), "arithmetic"));
    out.push_back(hypergeometric(9, Qs({"1/12", "5/12", "7/12", "11/12"}), "thin"));
    out.push_back(hypergeometric(10, Qs({"1/4", "1/4", "3/4", "3/4"}), "arithmetic"));
    out.push_back(hypergeometric(11, Qs({"1/6", "1/4", "3/4", "5/6"}), "arithmetic"));
    out.push_back(hypergeometric(12, Qs({"1/4", "1/3", "2/3", "3/4"}), "arithmetic"));
    out.push_back(hypergeometric(13, Qs({"1/6", "1/6", "5/6", "5/6"}), "arithmetic"));
    out.push_back(hypergeometric(14, Qs({"1/6", "1/2", "1/2", "5/6"}), "thin"));

    FamilyRecord quartic;
    quartic.id = "quartic";
    quartic.operator_text = "del^3 + t*(del+1/4)*(del+1/2)*(del+3/4)";
    quartic.weight = 2;
    quartic.annotations["0"] = JordanType({{0, 3}});                  // T_un^2
    quartic.annotations["-1"] = diag(Qs({"0", "1/2", "0"}));          // T_nod
    quartic.annotations["inf"] = diag(Qs({"1/4", "1/2", "3/4"}));     // T_i
    quartic.scheme = {{"-1", Qs({"0", "1/2", "1"})}, {"0", {0, 0, 0}}, {"inf", Qs({"1/4", "1/2", "3/4"})}};
    out.push_back(quartic);

    FamilyRecord legendre;
    legendre.id = "legendre";
    legendre.operator_text = "del^2 - t*(del+1/2)^2";
    legendre.weight = 1;
    legendre.annotations["0"] = JordanType({{0, 2}});            // I_2
    legendre.annotations["1"] = JordanType({{0, 2}});            // I_2
    legendre.annotations["inf"] = JordanType({{Q("1/2"), 2}});   // I_2*
    legendre.scheme = {{"0", {0, 0}}, {"1", {0, 0}}, {"inf", Qs({"1/2", "1/2"})}};
    out.push_back(legendre);
    return out;
}

std::vector<ExpectedRow> make_table3()
{
    using H = std::vector<std::int64_t>;
    const H zero{0, 0, 0, 0, 0}, mid{0, 0, 1, 0, 0};
    std::vector<ExpectedRow> t = {
        {1, 1, 0, 0, zero},  {1, 2, 0, 0, mid},  {1, 5, 1, 2, zero},  {1, 10, 2, 4, {1, 1, 1, 1, 1}},
        {2, 1, 0, 0, zero},  {2, 2, 0, 0, mid},  {2, 5, 0, 1, {0, 1, 2, 1, 0}, true},  {2, 10, 1, 3, {0, 1, 3, 1, 0}, true},
        {3, 1, 0, 0, zero},  {3, 2, 1, 1, zero},
    };
    for (int k = 1; k <= 5; ++k) t.push_back({3, 2 * k, k, k, {k - 1, 0, 0, 0, k - 1}});
    const std::vector<ExpectedRow> rest = {
        {4, 1, 0, 0, zero},  {4, 2, 0, 0, mid},  {4, 3, 1, 1, zero},  {4, 6, 2, 2, {1, 0, 1, 0, 1}},
        {5, 1, 0, 0, zero},  {5, 6, 1, 2, {0, 0, 2, 0, 0}, true},
        {6, 1, 0, 0, zero},  {6, 4, 1, 2, zero},  {6, 8, 2, 4, {1, 1, 0, 1, 1}},
        {7, 1, 0, 0, zero},  {7, 2, 0, 0, mid},  {7, 4, 0, 1, {0, 1, 1, 1, 0}, true},  {7, 8, 1, 3, {0, 1, 1, 1, 0}, true},
        {8, 1, 0, 0, zero},  {8, 2, 0, 0, mid},  {8, 6, 1, 2, mid},
        {9, 1, 0, 0, zero},  {9, 2, 0, 0, mid},  {9, 3, 0, 1, {0, 1, 0, 1, 0}, true},  {9, 4, 0, 1, {0, 1, 1, 1, 0}, true},
        {9, 6, 0, 2, {0, 2, 1, 2, 0}, true},  {9, 12, 1, 5, {0, 3, 1, 3, 0}, true},
        {10, 1, 0, 0, zero}, {10, 2, 0, 0, mid}, {10, 4, 1, 1, mid},  {10, 8, 2, 2, {1, 0, 3, 0, 1}},
        {11, 1, 0, 0, zero}, {11, 2, 0, 0, mid}, {11, 12, 1, 3, {0, 1, 5, 1, 0}, true},
        {12, 1, 0, 0, zero}, {12, 2, 0, 0, mid}, {12, 3, 0, 1, {0, 1, 0, 1, 0}, true},  {12, 12, 1, 4, {0, 2, 3, 2, 0}, true},
        {13, 1, 0, 0, zero}, {13, 2, 0, 0, mid}, {13, 3, 0, 0, {0, 0, 2, 0, 0}, true},  {13, 6, 1, 1, {0, 0, 3, 0, 0}, true},
        {14, 1, 0, 0, zero}, {14, 3, 0, 1, {0, 1, 0, 1, 0}, true},  {14, 6, 1, 3, {0, 1, 0, 1, 0}, true},
    };
    t.insert(t.end(), rest.begin(), rest.end());
    return t;
}

bool is_identity_annotation(const JordanType& j) { return j.is_identity(); }

}  // namespace

const std::vector<FamilyRecord>& builtin_families()
{
    static const std::vector<FamilyRecord> f = make_families();
    return f;
}

const FamilyRecord& find_family(const std::string& id)
{
    const std::string key = id == "quintic" ? "dm1" : id;
    for (const auto& f : builtin_families())
        if (f.id == key) return f;
    throw Error("unknown family '" + id + "'");
}

VHSProfile profile_from_operator(const DifferentialOperator& L, const Annotations& annotations)
{
    const auto scheme = riemann_scheme(L);
    VHSProfile v{scheme.order - 1, {}};
    std::vector<std::string> missing;
    for (const auto& r : scheme.rows) {
        const std::string key = point_key(r.point);
        auto it = annotations.find(key);
        if (it != annotations.end()) {
            const PointKind k = is_identity_annotation(it->second) ? PointKind::APPARENT : PointKind::ACTUAL;
            v.points.push_back(make_local_data(r.point, r.orbit_size, r.exponents, k, it->second));
            continue;
        }
        const bool integral = std::all_of(r.exponents.begin(), r.exponents.end(), [](const BigRational& m) { return is_integer(m); });
        const auto* fp = std::get_if<FiniteRational>(&r.point);
        if (integral && fp && frobenius_apparent_check(L, *fp) == FrobeniusResult::APPARENT) {
            v.points.push_back(make_local_data(r.point, r.orbit_size, r.exponents, PointKind::APPARENT));
            continue;
        }
        missing.push_back(key);
    }
    for (const auto& [key, j] : annotations) {
        bool used = std::any_of(scheme.rows.begin(), scheme.rows.end(), [&](const SchemeRow& r) { return point_key(r.point) == key; });
        if (!used) throw InconsistentProfile("annotation for " + key + " which is not a singular point");
    }
    if (!missing.empty()) {
        std::string msg = "missing Jordan annotation at";
        for (const auto& m : missing) msg += " " + m;
        throw MissingAnnotation(msg, missing);
    }
    return v;
}

VHSProfile family_profile(const FamilyRecord& f)
{
    return profile_from_operator(parse_operator(f.operator_text), f.annotations);
}

const std::vector<ExpectedRow>& expected_table3()
{
    static const std::vector<ExpectedRow> t = make_table3();
    return t;
}

std::string table3_family_id(int row)
{
    return "dm" + std::to_string(row);
}

const std::vector<Table1Row>& table1_rows()
{
    static const std::vector<Table1Row> rows = {
        {"I_n", 0, 0, KodairaClass::I_n},
        {"I_n*", Q("1/2"), Q("1/2"), KodairaClass::I_n_star},
        {"II or II*", Q("1/6"), Q("5/6"), KodairaClass::II},
        {"III or III*", Q("1/4"), Q("3/4"), KodairaClass::III},
        {"IV or IV*", Q("1/3"), Q("2/3"), KodairaClass::IV},
    };
    return rows;
}

const std::vector<Table2Row>& table2_rows()
{
    static const std::vector<Table2Row> rows = {
        {"T_un", Q("1/2"), Q("1/2"), Q("1/2"), JordanType({{Q("1/2"), 3}}), K3Class::T_un},
        {"T_un^2", 0, 0, 0, JordanType({{0, 3}}), K3Class::T_un2},
        {"T_i", Q("1/4"), Q("1/2"), Q("3/4"), diag(Qs({"1/4", "1/2", "3/4"})), K3Class::T_i},
        {"-T_i", Q("1/4"), 0, Q("3/4"), diag(Qs({"1/4", "0", "3/4"})), K3Class::minus_T_i},
        {"T_i^2", Q("1/2"), 0, Q("1/2"), diag(Qs({"1/2", "0", "1/2"})), K3Class::T_i2},
        {"T_omega", Q("1/6"), Q("1/2"), Q("5/6"), diag(Qs({"1/6", "1/2", "5/6"})), K3Class::T_omega},
        {"T_omega^2", Q("1/3"), 0, Q("2/3"), diag(Qs({"1/3", "0", "2/3"})), K3Class::T_omega2},
        {"T_nod", 0, Q("1/2"), 0, diag(Qs({"0", "1/2", "0"})), K3Class::T_nod},
    };
    return rows;
}

std::vector<std::vector<int>> expected_quintic_cy_profiles()
{
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) out.push_back({a, b});
    for (int y = 6; y <= 10; ++y) out.push_back({y});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> expected_quintic_target0_profiles()
{
    return {{1}, {2}, {3}, {4}, {5}};
}

std::vector<std::vector<int>> expected_quartic_cy_profiles()
{
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) out.push_back({a, b});
    for (int y = 5; y <= 8; ++y) out.push_back({y});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pfhodge
