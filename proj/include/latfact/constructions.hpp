#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latfact/elasticity.hpp"

namespace latfact {

// Canonical enumeration of the admissible length sets: {0}, {1}, then every
// finite subset of {2, 3, ...} ordered by (max element, size, lex).
std::vector<std::vector<Int>> enumerate_pfin(std::size_t m);

struct Realization {
    std::vector<Int> generators;   // an atom set of a numerical monoid
    Int element;
};

// Smallest realization (in deepening search order) of S as L(element) over a
// numerical monoid; verified by dynamic programming before returning.
Realization realize_length_set(const std::vector<Int>& S);

struct BuildProfile {
    bool two_limit = true;
    Rat ell = Rat(1);
    Rat cap = Rat(2);      // upper limit slope, two-limit profiles only

    bool operator==(const BuildProfile&) const = default;
};

struct BuildBlock {
    std::size_t index = 0;              // 1-based
    std::vector<Int> set;               // target length set
    std::vector<Int> generators;
    Int element;
    Int lambda;                          // block scale
    IntVec direction;                    // primitive ray of the block
    IntVec target;                       // lambda * element * direction
    std::vector<IntVec> atoms;           // lambda * g * direction
};

struct FullSystemBuild {
    BuildProfile profile;
    std::vector<BuildBlock> blocks;
    AtomList monoid;                     // union of the block atoms
    bool verified = false;
};

// Desk-scale truncation of the full-system construction: realizes the first m
// admissible sets on separated rays with norm-increasing scales, then verifies
// L(target_n) over the whole union equals the n-th set by exhaustive
// factorization.
FullSystemBuild build_full_system(std::size_t m, const BuildProfile& profile);

// Re-runs every check on an existing build (scale separation, atom closure,
// target length sets). Throws on failure.
void verify_build(const FullSystemBuild& build);

// The infinite construction behind a profile, as a rank-2 atom family of
// direction vectors; this is what carries the limit-slope invariants.
MonoidSpec direction_family(const BuildProfile& profile);

// Embeds the build into N^d by padding coordinates and appending the unit
// vectors e_3 .. e_d, which keeps the original monoid divisor-closed.
MonoidSpec lift_rank(const FullSystemBuild& build, std::size_t d);

struct PrimaryReport {
    bool primary = false;
    std::string explanation;
};

// A rank-2 family is primary exactly when neither the infimum nor the
// supremum of its atom slopes is attained by an atom.
PrimaryReport is_primary_family(const MonoidSpec& family);

// Dispatch that also covers finite specs (any dimension) through a
// divisor-closed coordinate-slice witness.
PrimaryReport primary_report(const MonoidSpec& spec);

struct IsoInvariants {
    std::size_t rank = 0;
    bool finitely_many_atoms = true;
    std::size_t atom_count = 0;                              // finite specs
    std::optional<std::size_t> limit_slope_count;            // families
    std::optional<std::vector<std::size_t>> extreme_ray_atoms; // finite specs, sorted desc
};

struct NonisoReport {
    bool distinguishable = false;
    std::string differing;     // name of the separating invariant
    IsoInvariants a, b;
};

IsoInvariants iso_invariants(const MonoidSpec& spec);
NonisoReport noniso_witness(const MonoidSpec& a, const MonoidSpec& b);

Json manifest_json(const FullSystemBuild& build);
FullSystemBuild build_from_manifest(const Json& j);

} // namespace latfact
