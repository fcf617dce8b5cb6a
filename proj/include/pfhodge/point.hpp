#ifndef PFHODGE_POINT_HPP
#define PFHODGE_POINT_HPP

#include "pfhodge/unipoly.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace pfhodge {

struct FiniteRational {
    BigRational a;
    friend bool operator==(const FiniteRational&, const FiniteRational&) = default;
};

struct Infinity {
    friend bool operator==(const Infinity&, const Infinity&) = default;
};

// Galois orbit of the roots of a squarefree monic q with no rational root.
struct ClosedPoint {
    UniPoly q;
    friend bool operator==(const ClosedPoint& x, const ClosedPoint& y) { return x.q == y.q; }
};

// A point known only by provenance, e.g. a point of a cover lying over a
// named base point.
struct Labeled {
    std::string label;
    friend bool operator==(const Labeled&, const Labeled&) = default;
};

using PointId = std::variant<FiniteRational, Infinity, ClosedPoint, Labeled>;

// "a/b", "inf", a polynomial string, or the label.
std::string point_key(const PointId& p);
// Accepts "inf" and U+221E; a rational; a polynomial in t (degree 1 collapses
// to its root); anything else becomes a label.
PointId parse_point_key(std::string_view key);

int orbit_of(const PointId& p);

// Scheme order: rational points ascending, closed points, labels, infinity.
bool point_less(const PointId& x, const PointId& y);

}  // namespace pfhodge

#endif
