#pragma once

// Shared helpers for the test suites: compact vector construction and the
// handful of family specs that several suites exercise.

#include <vector>

#include "latfact/monoid.hpp"

namespace fixtures {

using latfact::AtomSequence;
using latfact::Int;
using latfact::IntVec;
using latfact::MonoidSpec;
using latfact::SpecKind;

inline IntVec iv(std::vector<Int> xs)
{
    IntVec v;
    v.c = std::move(xs);
    return v;
}

inline AtomSequence seq(IntVec c0, IntVec c1, IntVec c2, Int n_start = Int(1))
{
    AtomSequence s;
    s.c0 = std::move(c0);
    s.c1 = std::move(c1);
    s.c2 = std::move(c2);
    s.n_start = std::move(n_start);
    return s;
}

// (2n+1, n) and (n, 2n+1): limit slopes 1/2 and 2, no member strictly between
inline MonoidSpec two_limit_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.sequences = {seq(iv({1, 0}), iv({2, 1}), iv({0, 0})),
                   seq(iv({0, 1}), iv({1, 2}), iv({0, 0}))};
    return f;
}

// (5n+1, n) and (n, 5n+1) plus the interior atom (3,2)
inline MonoidSpec interior_atom_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.finite_atoms = {iv({3, 2})};
    f.sequences = {seq(iv({1, 0}), iv({5, 1}), iv({0, 0})),
                   seq(iv({0, 1}), iv({1, 5}), iv({0, 0}))};
    return f;
}

// (3n, 3n+1) and (3n+1, 3n): a single limit slope approached from both sides
inline MonoidSpec both_sides_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.sequences = {seq(iv({0, 1}), iv({3, 3}), iv({0, 0})),
                   seq(iv({1, 0}), iv({3, 3}), iv({0, 0}))};
    return f;
}

// (n^2+n, n^2): one-sided approach with unbounded projection weights
inline MonoidSpec unbounded_weights_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.sequences = {seq(iv({0, 0}), iv({1, 0}), iv({1, 1}))};
    return f;
}

// (n, n+1): all weights against the limit direction equal 1
inline MonoidSpec weight_one_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.sequences = {seq(iv({0, 1}), iv({1, 1}), iv({0, 0}))};
    return f;
}

// (n, n+1) for n >= 4 together with (2,5): weight set {1, 3}
inline MonoidSpec weight_13_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.finite_atoms = {iv({2, 5})};
    f.sequences = {seq(iv({0, 1}), iv({1, 1}), iv({0, 0}), Int(4))};
    return f;
}

// (2n^2, 4n^2+1) plus (100, 200): the finite atom sits on the limit ray
inline MonoidSpec ray_atom_family()
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.finite_atoms = {iv({100, 200})};
    f.sequences = {seq(iv({0, 1}), iv({0, 0}), iv({2, 4}))};
    return f;
}

// cube atoms plus the ray (1, 1, 2n+1)
inline MonoidSpec cube_family()
{
    MonoidSpec f;
    f.dim = 3;
    f.kind = SpecKind::Family;
    f.finite_atoms = {iv({2, 0, 0}), iv({0, 2, 0}), iv({0, 0, 2})};
    f.sequences = {seq(iv({1, 1, 1}), iv({0, 0, 2}), iv({0, 0, 0}))};
    return f;
}

} // namespace fixtures
