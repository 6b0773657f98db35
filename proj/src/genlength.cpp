#include "latfact/genlength.hpp"

#include "latfact/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>

namespace latfact {
namespace {

std::vector<std::int64_t> checked_gens(const std::vector<Int>& gens)
{
    if (gens.empty())
        throw ContractError("generalized lengths need at least one generator");
    std::vector<std::int64_t> g;
    for (const Int& v : gens) {
        if (v < 1)
            throw ContractError("generator " + v.str() + " must be positive");
        if (!fits_int64(v))
            throw ResourceError("generator " + v.str() + " exceeds the int64 range");
        g.push_back(v.convert_to<std::int64_t>());
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

} // namespace

GenLengthSet generalized_length_set(const std::vector<Int>& gens, const Int& x)
{
    auto g = checked_gens(gens);
    if (x < 0)
        throw ContractError("generalized lengths of a negative value");
    if (x == 0)
        return GenLengthSet{{Int(0)}};
    if (!fits_int64(x))
        throw ResourceError("value " + x.str() + " exceeds the int64 range");
    std::int64_t X = x.convert_to<std::int64_t>();

    // dp[v] is the bitset of representation lengths of v; one shifted OR per
    // generator per value.
    std::int64_t maxlen = X / g[0];
    if (Int(X + 1) * Int(maxlen + 2) > Int(800000000))
        throw ResourceError("length-set table for x = " + x.str() +
                            " would exceed the 1e8-byte cap");

    using Bits = boost::dynamic_bitset<std::uint64_t>;
    std::vector<Bits> dp(X + 1, Bits(maxlen + 1));
    dp[0].set(0);
    Bits tmp(maxlen + 1);
    for (std::int64_t v = 1; v <= X; ++v) {
        for (std::int64_t gi : g) {
            if (gi > v)
                break;
            if (dp[v - gi].none())
                continue;
            tmp = dp[v - gi];
            tmp <<= 1;
            dp[v] |= tmp;
        }
    }

    GenLengthSet out;
    for (std::size_t b = dp[X].find_first(); b != Bits::npos; b = dp[X].find_next(b))
        out.values.push_back(Int(b));
    return out;
}

GenScanResult generalized_elasticity_scan(const std::vector<Int>& gens, const Int& x_max)
{
    auto g = checked_gens(gens);
    if (x_max < 1)
        throw ContractError("scan bound must be at least 1");
    if (x_max > 2000000)
        throw ResourceError("scan bound " + x_max.str() + " exceeds the 2e6 cap");
    std::int64_t X = x_max.convert_to<std::int64_t>();
    std::int64_t n1 = g.front(), nk = g.back();

    // Max and min representation lengths by forward recursion; -1 marks
    // values without a representation.
    std::vector<std::int64_t> mx(X + 1, -1), mn(X + 1, -1);
    mx[0] = mn[0] = 0;
    for (std::int64_t v = 1; v <= X; ++v) {
        for (std::int64_t gi : g) {
            if (gi > v)
                break;
            if (mx[v - gi] < 0)
                continue;
            if (mx[v] < mx[v - gi] + 1)
                mx[v] = mx[v - gi] + 1;
            if (mn[v] < 0 || mn[v] > mn[v - gi] + 1)
                mn[v] = mn[v - gi] + 1;
        }
    }

    GenScanResult res;
    res.limit = Rat(nk, n1);
    res.max_observed = Rat(0);
    for (std::int64_t v = 1; v <= X; ++v) {
        if (mx[v] < 0)
            continue;
        Rat rho(mx[v], mn[v]);
        res.entries.push_back(GenScanEntry{Int(v), rho});
        if (rho > res.max_observed)
            res.max_observed = rho;
    }
    res.bound_certified = res.max_observed <= res.limit;

    // Affine threshold: last violation of the period-P recursions, plus one.
    std::int64_t P = n1 * nk;
    Int threshold = 1;
    if (X > P) {
        for (std::int64_t v = X - P; v >= 1; --v) {
            bool rep_lo = mx[v] >= 0, rep_hi = mx[v + P] >= 0;
            bool ok = rep_lo == rep_hi &&
                      (!rep_lo || (mx[v + P] - mx[v] == nk && mn[v + P] - mn[v] == n1));
            if (!ok) {
                threshold = Int(v + 1);
                break;
            }
        }
    }
    res.affine_threshold = threshold;

    std::int64_t W = std::min<std::int64_t>(8 * P, std::max<std::int64_t>(X / 4, 1));
    std::int64_t lo = std::max<std::int64_t>(X - W + 1, 1);
    res.tail_window_lo = Int(lo);
    Rat gap_sum(0);
    std::int64_t count = 0;
    for (std::int64_t v = lo; v <= X; ++v) {
        if (mx[v] < 0)
            continue;
        gap_sum += res.limit - Rat(mx[v], mn[v]);
        ++count;
    }
    res.tail_window_avg_gap = count ? gap_sum / count : Rat(0);
    return res;
}

} // namespace latfact
