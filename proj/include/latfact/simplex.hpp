#pragma once

#include <vector>

#include "latfact/numbers.hpp"

// Exact two-phase primal simplex over the rationals for problems in standard
// form: maximize c.x subject to A x = b, x >= 0. Pivots follow Bland's
// smallest-index rule for both the entering and the leaving variable, which
// rules out cycling and makes every run deterministic.

namespace latfact {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    std::vector<Rat> x;
};

LpResult simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                     const std::vector<Rat>& c);

// feasibility of A x = b, x >= 0; on success status is Optimal and x holds one
// feasible point
LpResult lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

} // namespace latfact
