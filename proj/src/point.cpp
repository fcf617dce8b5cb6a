#include "pfhodge/point.hpp"

#include "pfhodge/errors.hpp"

namespace pfhodge {

std::string point_key(const PointId& p)
{
    struct Visitor {
        std::string operator()(const FiniteRational& f) const { return to_string(f.a); }
        std::string operator()(const Infinity&) const { return "inf"; }
        std::string operator()(const ClosedPoint& c) const { return to_string(c.q); }
        std::string operator()(const Labeled& l) const { return l.label; }
    };
    return std::visit(Visitor{}, p);
}

PointId parse_point_key(std::string_view key)
{
    if (key == "inf" || key == "\xE2\x88\x9E" || key == "infinity") return Infinity{};
    try {
        return FiniteRational{parse_rational(key)};
    } catch (const Error&) {
    }
    if (key.find('t') != std::string_view::npos) {
        UniPoly q;
        try {
            q = parse_unipoly(key).monic();
        } catch (const Error&) {
            return Labeled{std::string(key)};
        }
        if (q.degree() == 1) return FiniteRational{BigRational(-q.coeff(0))};
        if (q.degree() >= 2) {
            if (poly_gcd(q, q.derivative()).degree() != 0)
                throw Error("closed point modulus is not squarefree: " + std::string(key));
            return ClosedPoint{q};
        }
    }
    return Labeled{std::string(key)};
}

int orbit_of(const PointId& p)
{
    if (const auto* c = std::get_if<ClosedPoint>(&p)) return c->q.degree();
    return 1;
}

bool point_less(const PointId& x, const PointId& y)
{
    auto rank = [](const PointId& p) {
        switch (p.index()) {
        case 0: return 0;  // rational
        case 2: return 1;  // closed
        case 3: return 2;  // labeled
        default: return 3; // infinity
        }
    };
    int rx = rank(x), ry = rank(y);
    if (rx != ry) return rx < ry;
    if (rx == 0) return std::get<FiniteRational>(x).a < std::get<FiniteRational>(y).a;
    if (rx == 1) {
        const auto& qx = std::get<ClosedPoint>(x).q;
        const auto& qy = std::get<ClosedPoint>(y).q;
        if (qx.degree() != qy.degree()) return qx.degree() < qy.degree();
        return to_string(qx) < to_string(qy);
    }
    if (rx == 2) return std::get<Labeled>(x).label < std::get<Labeled>(y).label;
    return false;
}

}  // namespace pfhodge
