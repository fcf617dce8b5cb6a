#include "pfhodge/json_io.hpp"

#include "pfhodge/errors.hpp"

namespace pfhodge {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error("invalid JSON: " + what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

BigRational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return make_rational(j.get<long>());
    bad("expected a rational as \"p/q\" or an integer");
}

int int_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json rational_list(const std::vector<BigRational>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_string(x));
    return a;
}

std::vector<BigRational> parse_rational_list(const Json& j)
{
    if (!j.is_array()) bad("expected a list of rationals");
    std::vector<BigRational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Json to_json(const RiemannScheme& s)
{
    Json rows = Json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"point", point_key(r.point)}, {"orbit_size", r.orbit_size}, {"exponents", rational_list(r.exponents)}});
    return {{"order", s.order}, {"rows", rows}};
}

Json to_json(const JordanType& j)
{
    Json a = Json::array();
    for (const auto& b : j.blocks()) a.push_back({{"alpha", to_string(b.alpha)}, {"size", b.size}});
    return a;
}

Json to_json(const VHSProfile& v)
{
    Json pts = Json::array();
    for (const auto& d : v.points) {
        Json p = {{"point", point_key(d.point)},
                  {"orbit_size", d.orbit_size},
                  {"exponents", rational_list(d.exponents)},
                  {"kind", to_string(d.kind)}};
        p["jordan"] = d.monodromy ? to_json(*d.monodromy) : Json::array();
        pts.push_back(p);
    }
    return {{"weight", v.weight}, {"points", pts}};
}

Json to_json(const CoverSpec& c)
{
    Json branch = Json::object();
    for (const auto& [p, parts] : c.branch) branch[point_key(p)] = parts;
    return {{"degree", c.degree}, {"branch", branch}, {"free_ramification", c.free_ramification}};
}

Json results_json(const VHSProfile& v, const DegreeVector& deg, const HodgeNumbers& h)
{
    Json cok = Json::array();
    for (int i : kodaira_spencer_indices(v.weight)) {
        auto r = cokernel_lengths(v, i);
        Json pts = Json::array();
        for (const auto& p : r.points)
            pts.push_back({{"point", point_key(p.point)}, {"orbit_size", p.orbit_size}, {"length", p.length}});
        cok.push_back({{"index", i}, {"total", r.total}, {"points", pts}});
    }
    return {{"degrees", deg.degrees},
            {"hodge", h.h},
            {"total_rank", h.total_rank},
            {"details", {{"cokernels", cok}, {"antisym_targets", rational_list(antisym_targets(v))}}}};
}

JordanType jordan_from_json(const Json& j)
{
    if (!j.is_array()) bad("jordan must be a list of {alpha, size}");
    std::vector<JordanBlock> blocks;
    for (const auto& b : j) blocks.push_back({rational_from_json(field(b, "alpha")), int_from_json(field(b, "size"), "size")});
    return JordanType(blocks);
}

VHSProfile profile_from_json(const Json& j)
{
    VHSProfile v;
    v.weight = int_from_json(field(j, "weight"), "weight");
    const Json& pts = field(j, "points");
    if (!pts.is_array()) bad("points must be a list");
    for (const auto& p : pts) {
        const Json& key = field(p, "point");
        if (!key.is_string()) bad("point must be a string key");
        int orbit = p.contains("orbit_size") ? int_from_json(p.at("orbit_size"), "orbit_size") : -1;
        PointId id = parse_point_key(key.get<std::string>());
        if (orbit < 0) orbit = orbit_of(id);
        PointKind kind = parse_point_kind(field(p, "kind").get<std::string>());
        std::optional<JordanType> jt;
        if (p.contains("jordan") && !p.at("jordan").empty()) jt = jordan_from_json(p.at("jordan"));
        v.points.push_back(make_local_data(id, orbit, parse_rational_list(field(p, "exponents")), kind, jt));
    }
    validate_profile(v);
    return v;
}

CoverSpec cover_from_json(const Json& j)
{
    CoverSpec c;
    c.degree = int_from_json(field(j, "degree"), "degree");
    if (j.contains("branch")) {
        const Json& b = j.at("branch");
        if (!b.is_object()) bad("branch must map point keys to partitions");
        for (const auto& [key, parts] : b.items()) {
            if (!parts.is_array()) bad("partition over " + key + " must be a list");
            std::vector<int> ys;
            for (const auto& y : parts) ys.push_back(int_from_json(y, "ramification index"));
            c.branch.emplace_back(parse_point_key(key), ys);
        }
    }
    if (j.contains("free_ramification")) {
        if (!j.at("free_ramification").is_array()) bad("free_ramification must be a list");
        for (const auto& e : j.at("free_ramification")) c.free_ramification.push_back(int_from_json(e, "ramification order"));
    }
    validate_cover(c);
    return c;
}

Annotations annotations_from_json(const Json& j)
{
    if (!j.is_object()) bad("annotations must map point keys to Jordan types");
    Annotations a;
    for (const auto& [key, val] : j.items()) a[point_key(parse_point_key(key))] = jordan_from_json(val);
    return a;
}

Json datasets_json()
{
    Json fams = Json::array();
    for (const auto& f : builtin_families()) {
        Json ann = Json::object();
        for (const auto& [k, jt] : f.annotations) ann[k] = to_json(jt);
        Json scheme = Json::array();
        for (const auto& [k, mu] : f.scheme) scheme.push_back({{"point", k}, {"exponents", rational_list(mu)}});
        fams.push_back({{"id", f.id},
                        {"operator", f.operator_text},
                        {"weight", f.weight},
                        {"annotations", ann},
                        {"scheme", scheme},
                        {"alphas", rational_list(f.alphas)},
                        {"monodromy", f.monodromy},
                        {"table3_row", f.table3_row}});
    }
    Json t3 = Json::array();
    for (const auto& r : expected_table3())
        t3.push_back({{"row", r.row}, {"d", r.d}, {"a", r.a}, {"b", r.b}, {"hodge", r.hodge}, {"gray", r.gray}});
    auto lists = [](const std::vector<std::vector<int>>& ps) {
        Json a = Json::array();
        for (const auto& p : ps) a.push_back(p);
        return a;
    };
    return {{"families", fams},
            {"table3", t3},
            {"quintic_cy", lists(expected_quintic_cy_profiles())},
            {"quartic_cy", lists(expected_quartic_cy_profiles())}};
}

}  // namespace pfhodge
