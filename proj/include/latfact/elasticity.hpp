#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latfact/factorization.hpp"

namespace latfact {

// Optimal pair of the elasticity linear program: maximize sum(u) subject to
// A u = A v, sum(v) = 1, u, v >= 0, where A has the atoms as columns.
struct LPWitness {
    std::vector<Rat> u, v;
};

// Element together with two explicit factorizations over a declared atom list;
// their length ratio is the certified lower bound.
struct RatioWitness {
    IntVec element;
    std::vector<IntVec> atoms;
    std::vector<Int> short_expo;
    std::vector<Int> long_expo;
    Rat ratio;
};

struct LimitSlopeProfile {
    struct Entry {
        SlopeValue slope;
        IntVec direction;          // primitive
        bool atoms_below = false;  // some atom of strictly smaller slope
        bool atoms_above = false;
        bool weights_finite = true;
    };
    std::vector<Entry> limits;     // sorted by slope
};

enum class ElasticityKind { Rational, Infinite };
enum class Attained { Yes, No, Unknown };

struct ElasticityResult {
    ElasticityKind kind = ElasticityKind::Rational;
    Rat value;                                 // when rational
    Attained attained = Attained::Unknown;
    std::string case_id;                       // 1.1, 1.2, 2.1, 2.2.1, 2.2.2, fg
    std::optional<LimitSlopeProfile> profile;
    std::optional<RatioWitness> witness;       // infinite cases
    std::optional<LPWitness> lp;               // finitely generated case
    std::vector<Int> s_values;                 // finite weight set, case 2.2.2
};

// Exact elasticity of a finitely generated monoid, by rational LP. Always
// rational and attained.
ElasticityResult elasticity_fg(const AtomList& atoms);

LimitSlopeProfile limit_slope_profile(const MonoidSpec& family);

// Decides rational versus infinite elasticity for a validated rank-2 family
// and attaches the matching certificate. `validation_window` is the member
// window passed to validate_family_atoms.
ElasticityResult classify_rank2(const MonoidSpec& family, std::size_t validation_window = 12,
                                const Rat& certificate_target = Rat(10),
                                const Int& index_bound = Int(10000));

// Witness with length ratio strictly above the target, for families whose
// classification is infinite. Scans members by index and decomposes through
// cramer_decompose; raises ResourceError when the index bound is exhausted.
RatioWitness unbounded_certificate(const MonoidSpec& family, const Rat& target_ratio,
                                   const Int& index_bound = Int(10000));

// Witness of ratio > N for a d >= 3 family whose declared finite atoms span a
// pointed cone containing every member. Follows the parallelepiped
// construction: picks a long member, splits it as v + sum c_i a_i with v in
// the fundamental parallelepiped, and rescales by the uniform multiplier N0.
RatioWitness polyhedral_certificate(const MonoidSpec& family, const Int& N,
                                    const Int& index_bound = Int(1000000));

// Recomputes both sides of a witness; throws ContractError on any mismatch
// (first offending coordinate is named) and returns the exact length ratio.
Rat verify_certificate(const RatioWitness& w);

Json certificate_json(const RatioWitness& w);
RatioWitness certificate_from_json(const Json& j);

} // namespace latfact
