#include "latfact/simplex.hpp"

#include "latfact/errors.hpp"

#include <limits>

namespace latfact {
namespace {

// Dense tableau over exact rationals.  Row 0 holds the (negated) objective,
// rows 1..m the constraints.  Column layout: structural and auxiliary
// variables first, right-hand side last.
struct Tableau {
    std::size_t m = 0, n = 0;          // constraint rows, variable columns
    std::vector<std::vector<Rat>> t;   // (m+1) x (n+1)
    std::vector<std::size_t> basis;    // size m, variable index per row

    Rat& at(std::size_t r, std::size_t c) { return t[r][c]; }
    Rat& rhs(std::size_t r) { return t[r][n]; }

    void pivot(std::size_t pr, std::size_t pc)
    {
        Rat inv = 1 / t[pr][pc];
        for (std::size_t c = 0; c <= n; ++c)
            t[pr][c] *= inv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == pr || t[r][pc] == 0)
                continue;
            Rat f = t[r][pc];
            for (std::size_t c = 0; c <= n; ++c)
                t[r][c] -= f * t[pr][c];
        }
        basis[pr - 1] = pc;
    }

    // Bland's rule: enter the lowest-index column with a positive reduced
    // cost, leave on the minimum ratio breaking ties by lowest basis index.
    // Returns false once optimal; throws if unbounded.
    bool step()
    {
        std::size_t pc = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (t[0][c] > 0) {
                pc = c;
                break;
            }
        }
        if (pc == n)
            return false;

        std::size_t pr = 0;
        Rat best;
        for (std::size_t r = 1; r <= m; ++r) {
            if (t[r][pc] <= 0)
                continue;
            Rat ratio = t[r][n] / t[r][pc];
            if (pr == 0 || ratio < best ||
                (ratio == best && basis[r - 1] < basis[pr - 1])) {
                pr = r;
                best = ratio;
            }
        }
        if (pr == 0)
            throw ContractError("simplex: objective unbounded");
        pivot(pr, pc);
        return true;
    }

    void solve()
    {
        while (step()) {
        }
    }
};

} // namespace

LpResult simplex_max(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b,
                     const std::vector<Rat>& c)
{
    std::size_t m = A.size();
    std::size_t n = c.size();
    if (b.size() != m)
        throw ContractError("simplex: row count mismatch between A and b");
    for (const auto& row : A)
        if (row.size() != n)
            throw ContractError("simplex: column count mismatch between A and c");

    // Phase one: minimize the sum of one artificial variable per row.
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t.assign(m + 1, std::vector<Rat>(tab.n + 1, Rat(0)));
    tab.basis.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        Rat sign = (b[r] < 0) ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j)
            tab.t[r + 1][j] = sign * A[r][j];
        tab.t[r + 1][n + r] = 1;
        tab.t[r + 1][tab.n] = sign * b[r];
        tab.basis[r] = n + r;
    }
    // Objective: maximize -(sum of artificials); expressed through the
    // constraint rows so the artificial columns start with reduced cost 0.
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t j = 0; j <= tab.n; ++j)
            if (j < n || j == tab.n)
                tab.t[0][j] += tab.t[r][j];
    tab.solve();

    if (tab.rhs(0) != 0)
        return {LpStatus::Infeasible, Rat(0), {}};

    // Drive any artificial variable still basic (at value 0) out of the basis.
    for (std::size_t r = 1; r <= m; ++r) {
        if (tab.basis[r - 1] < n)
            continue;
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (tab.t[r][j] != 0) {
                pc = j;
                break;
            }
        }
        if (pc < n)
            tab.pivot(r, pc);
        // Otherwise the row is all zero in the structural columns: a
        // redundant constraint, dropped below.
    }

    // Phase two on a fresh tableau without the artificial columns.
    Tableau t2;
    t2.n = n;
    for (std::size_t r = 1; r <= m; ++r) {
        if (tab.basis[r - 1] >= n)
            continue;
        std::vector<Rat> row(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = tab.t[r][j];
        row[n] = tab.t[r][tab.n];
        t2.t.push_back(std::move(row));
        t2.basis.push_back(tab.basis[r - 1]);
    }
    t2.m = t2.basis.size();
    std::vector<Rat> obj(n + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        obj[j] = c[j];
    t2.t.insert(t2.t.begin(), std::move(obj));
    for (std::size_t r = 1; r <= t2.m; ++r) {
        std::size_t bj = t2.basis[r - 1];
        if (t2.t[0][bj] != 0) {
            Rat f = t2.t[0][bj];
            for (std::size_t j = 0; j <= n; ++j)
                t2.t[0][j] -= f * t2.t[r][j];
        }
    }

    LpResult res;
    try {
        t2.solve();
    } catch (const ContractError&) {
        return {LpStatus::Unbounded, Rat(0), {}};
    }

    res.status = LpStatus::Optimal;
    res.x.assign(n, Rat(0));
    for (std::size_t r = 1; r <= t2.m; ++r)
        res.x[t2.basis[r - 1]] = t2.rhs(r);
    res.objective = Rat(0);
    for (std::size_t j = 0; j < n; ++j)
        res.objective += c[j] * res.x[j];
    return res;
}

LpResult lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b)
{
    std::vector<Rat> c(A.empty() ? 0 : A[0].size(), Rat(0));
    return simplex_max(A, b, c);
}

} // namespace latfact
