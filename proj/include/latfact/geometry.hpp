#pragma once

#include <vector>

#include "latfact/vec.hpp"

// Exact primitives for integer lattice geometry in the plane. Slopes are never
// formed as quotients; every comparison goes through the sign of a 2x2
// determinant, so all results are exact for arbitrary-precision coordinates.

namespace latfact {

enum class Ordering { Less, Equal, Greater };

// u1*v2 - u2*v1; requires dim 2
Int det2(const IntVec& u, const IntVec& v);

// compares slope(u) against slope(v) for nonzero vectors in the closed first
// quadrant; vertical vectors compare as slope infinity
Ordering slope_cmp(const IntVec& u, const IntVec& v);

// slope of a nonzero first-quadrant vector, with an explicit point at infinity
struct SlopeValue {
    bool infinite = false;
    Rat value;          // meaningful when finite

    bool operator==(const SlopeValue&) const = default;
};

SlopeValue slope_of(const IntVec& v);
bool slope_less(const SlopeValue& a, const SlopeValue& b);
std::string slope_string(const SlopeValue& s);

struct CramerCoefficients {
    Int c_x, c_y, c_a;
};

// positive integers with c_x*x + c_y*y = c_a*a, for slope(x) < slope(a) < slope(y);
// c_x = det2(a, y), c_y = det2(x, a), c_a = det2(x, y)
CramerCoefficients cramer_decompose(const IntVec& x, const IntVec& a, const IntVec& y);

// |det2(v, a)|, the lattice-area surrogate for the length of the projection of a
// onto the orthogonal complement of v
Int projection_weight(const IntVec& v, const IntVec& a);

// minimal generating set of cone(r1, r2) intersected with Z^2, sorted by slope;
// the rays must be nonzero, non-colinear and lie in the closed first quadrant
std::vector<IntVec> hilbert_basis_2d(const IntVec& r1, const IntVec& r2);

} // namespace latfact
