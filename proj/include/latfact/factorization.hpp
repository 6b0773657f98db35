#pragma once

#include <utility>
#include <vector>

#include "latfact/monoid.hpp"

namespace latfact {

// Exponent vector aligned with the canonical order of an AtomList.
struct Factorization {
    std::vector<Int> expo;

    bool operator==(const Factorization&) const = default;
};

Int length_of(const Factorization& z);

struct LengthSet {
    std::vector<Int> values;   // sorted ascending, distinct

    bool operator==(const LengthSet&) const = default;
};

// All factorizations of x over the atoms, in lexicographic exponent order.
// x = 0 yields exactly the empty factorization, a non-member yields an empty
// list. `threads` > 1 splits the top of the search tree across that many
// worker threads; the canonical final sort makes the output independent of the
// split, so results are byte-identical for every thread count.
std::vector<Factorization> factorizations(const AtomList& atoms, const IntVec& x,
                                          unsigned threads = 0);

LengthSet length_set(const AtomList& atoms, const IntVec& x, unsigned threads = 0);

// max L(x) / min L(x); requires a nonzero member
Rat elasticity_of_element(const AtomList& atoms, const IntVec& x, unsigned threads = 0);

using SystemSample = std::vector<std::pair<IntVec, LengthSet>>;

// L(x) for every member with squared norm at most the bound, in canonical
// element order.
SystemSample system_sample(const AtomList& atoms, const Int& norm_sq_bound,
                           unsigned threads = 0);

// true when target has a representation over the pool with at least two
// summands counted with multiplicity
bool reducible_over(const std::vector<IntVec>& pool, const IntVec& target);

// first representation with total multiplicity >= 2, if any
std::optional<std::vector<std::pair<IntVec, Int>>>
reducible_witness(const std::vector<IntVec>& pool, const IntVec& target);

} // namespace latfact
