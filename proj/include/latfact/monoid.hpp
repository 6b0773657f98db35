#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latfact/geometry.hpp"

namespace latfact {

// One-parameter atom family a(n) = c0 + n*c1 + n^2*c2, defined for n >= n_start.
// The leading coefficient (c2 if nonzero, else c1) must be a nonzero vector with
// nonnegative coordinates; members must stay in N^d \ {0} for every admissible n,
// and in dimension 2 the member slopes must be strictly monotone in n. All of
// this is checked exactly by validate().
struct AtomSequence {
    IntVec c0, c1, c2;
    Int n_start = 1;

    IntVec member(const Int& n) const;
    const IntVec& leading() const;
    int degree() const;                       // 1 or 2

    void validate(std::size_t dim) const;

    // dimension-2 helpers; call only on validated sequences
    std::optional<int> slope_sign() const;    // +1/-1 for stable strict slope trend
    bool slope_increasing() const;            // strictly, over all n >= n_start
    SlopeValue limit_slope() const;           // slope of the leading coefficient
    IntVec limit_direction() const;           // primitive vector on the limit ray

    // index after which both coordinate polynomials are nondecreasing
    Int monotone_norm_index() const;
};

enum class SpecKind { Finite, Family };

struct MonoidSpec {
    std::size_t dim = 0;
    SpecKind kind = SpecKind::Finite;
    std::vector<IntVec> generators;           // Finite
    std::vector<IntVec> finite_atoms;         // Family
    std::vector<AtomSequence> sequences;      // Family

    void validate() const;
};

// Canonically ordered duplicate-free atom list (squared norm, then lex).
struct AtomList {
    std::size_t dim = 0;
    std::vector<IntVec> atoms;

    bool operator==(const AtomList&) const = default;
};

// Reduces a generating set to the atoms of the monoid it generates.
AtomList atoms_of(const std::vector<IntVec>& generators);

bool is_member(const AtomList& atoms, const IntVec& x);

// Every family member (finite atoms and sequence members) of squared norm at
// most the bound, canonically ordered, duplicates removed.
std::vector<IntVec> family_members_up_to(const MonoidSpec& family, const Int& norm_sq_bound);

struct AtomViolation {
    IntVec member;
    std::vector<std::pair<IntVec, Int>> decomposition;   // summand, multiplicity
};

struct ValidationReport {
    bool ok = true;
    std::vector<AtomViolation> violations;
};

// Checks that the `window` smallest family members (by canonical order) admit no
// decomposition into two or more family members.
ValidationReport validate_family_atoms(const MonoidSpec& family, std::size_t window);

// Finite spec: its generator list, deduplicated and canonically ordered (no
// reduction to atoms). Family: all members with squared norm at most the
// bound, as a finitely generated spec.
MonoidSpec truncate(const MonoidSpec& spec, const Int& norm_sq_bound);

AtomList truncate_atoms(const MonoidSpec& spec, const Int& norm_sq_bound);

MonoidSpec parse_spec(const Json& j);
Json spec_to_json(const MonoidSpec& spec);

} // namespace latfact
