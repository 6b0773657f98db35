#pragma once

#include <vector>

#include "latfact/numbers.hpp"

namespace latfact {

// Lengths of representations x = sum c_i * n_i over fixed positive integers
// n_1 < ... < n_k, with no atomicity assumption on the n_i.
struct GenLengthSet {
    std::vector<Int> values;   // sorted ascending, distinct

    bool operator==(const GenLengthSet&) const = default;
};

GenLengthSet generalized_length_set(const std::vector<Int>& gens, const Int& x);

struct GenScanEntry {
    Int x;
    Rat rho;                   // max / min representation length at x
};

struct GenScanResult {
    std::vector<GenScanEntry> entries;   // representable x in (0, x_max]
    Rat limit;                           // n_k / n_1
    Rat max_observed;
    bool bound_certified = false;        // max_observed <= limit

    // first x0 such that for every x in [x0, x_max - n_1*n_k] the affine
    // recursions max(x + n_1*n_k) = max(x) + n_k and min(x + n_1*n_k) =
    // min(x) + n_1 hold
    Int affine_threshold;

    Int tail_window_lo;                  // trailing window [lo, x_max]
    Rat tail_window_avg_gap;             // average of limit - rho over the window
};

GenScanResult generalized_elasticity_scan(const std::vector<Int>& gens, const Int& x_max);

} // namespace latfact
