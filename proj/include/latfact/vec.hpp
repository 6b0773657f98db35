#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "latfact/numbers.hpp"

namespace latfact {

// Point of Z^d with arbitrary-precision coordinates.
struct IntVec {
    std::vector<Int> c;

    IntVec() = default;
    explicit IntVec(std::size_t d) : c(d) {}
    IntVec(std::initializer_list<Int> xs) : c(xs) {}

    std::size_t dim() const { return c.size(); }
    Int& operator[](std::size_t i) { return c[i]; }
    const Int& operator[](std::size_t i) const { return c[i]; }
    bool operator==(const IntVec&) const = default;
};

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& k, const IntVec& a);

bool is_zero(const IntVec& a);
bool nonneg(const IntVec& a);
bool leq_coordinatewise(const IntVec& a, const IntVec& b);

Int norm_sq(const IntVec& a);
Int norm_l1(const IntVec& a);

bool lex_less(const IntVec& a, const IntVec& b);

// canonical order used everywhere a vector list is emitted: squared norm, then lex
bool canon_less(const IntVec& a, const IntVec& b);

struct CanonLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return canon_less(a, b); }
};

std::string show(const IntVec& a);   // "(a1, a2, ...)"

Json vec_json(const IntVec& a);
IntVec vec_from_json(const Json& j);

} // namespace latfact
