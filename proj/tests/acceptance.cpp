// Acceptance gate: eleven end-to-end checks with pinned expectations and
// runtime budgets. Each prints one [PASS]/[FAIL] line; the exit status is the
// number of failures. An optional argument restricts the run to one criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latfact/constructions.hpp"
#include "latfact/elasticity.hpp"
#include "latfact/errors.hpp"
#include "latfact/factorization.hpp"
#include "latfact/genlength.hpp"
#include "latfact/geometry.hpp"
#include "latfact/monoid.hpp"

#include "support/fixtures.hpp"

using namespace latfact;
using fixtures::iv;
using fixtures::seq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why)
{
    o.pass = false;
    if (!o.detail.empty())
        o.detail += "; ";
    o.detail += why;
}

AtomList make_atoms(std::vector<IntVec> vs)
{
    AtomList a;
    a.dim = vs.front().c.size();
    a.atoms = std::move(vs);
    std::sort(a.atoms.begin(), a.atoms.end(), CanonLess{});
    return a;
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion_1()
{
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(1, 50);
    int done = 0;
    long long attempts = 0;
    while (done < 1000 && attempts < 2000000) {
        ++attempts;
        IntVec x = iv({d(rng), d(rng)});
        IntVec a = iv({d(rng), d(rng)});
        IntVec y = iv({d(rng), d(rng)});
        if (!slope_less(slope_of(x), slope_of(a)) || !slope_less(slope_of(a), slope_of(y)))
            continue;
        CramerCoefficients c = cramer_decompose(x, a, y);
        if (c.c_x <= 0 || c.c_y <= 0 || c.c_a <= 0) {
            fail(o, "nonpositive coefficient at triple " + std::to_string(done));
            break;
        }
        if (c.c_x * x.c[0] + c.c_y * y.c[0] != c.c_a * a.c[0] ||
            c.c_x * x.c[1] + c.c_y * y.c[1] != c.c_a * a.c[1]) {
            fail(o, "identity broken at triple " + std::to_string(done));
            break;
        }
        ++done;
    }
    if (done < 1000)
        fail(o, "only " + std::to_string(done) + " ordered triples sampled");
    o.detail = "1000 random slope-ordered triples, exact identity, positive coefficients";
    return o;
}

// ---------------------------------------------------------------- criterion 2

// Counting oracle: the number of exponent vectors per box element, by the
// unbounded-knapsack recurrence, one pass per atom. Combined with the checks
// that production tuples are valid, pairwise distinct and equinumerous, this
// proves set equality without materializing the naive tuple lists.
struct BoxCounts {
    int w = 0, h = 0;
    std::vector<long long> n;
    long long& at(int x, int y) { return n[static_cast<std::size_t>(y) * (w + 1) + x]; }
};

BoxCounts count_box(const std::vector<std::pair<int, int>>& atoms, int w, int h)
{
    BoxCounts b;
    b.w = w;
    b.h = h;
    b.n.assign(static_cast<std::size_t>(w + 1) * (h + 1), 0);
    b.at(0, 0) = 1;
    for (auto [ax, ay] : atoms)
        for (int y = ay; y <= h; ++y)
            for (int x = ax; x <= w; ++x)
                b.at(x, y) += b.at(x - ax, y - ay);
    return b;
}

bool set_is_atomic(const std::vector<std::pair<int, int>>& s)
{
    std::vector<IntVec> pool;
    for (auto [x, y] : s)
        pool.push_back(iv({x, y}));
    for (const IntVec& v : pool)
        if (reducible_over(pool, v))
            return false;
    return true;
}

Outcome criterion_2()
{
    Outcome o;
    std::vector<std::pair<int, int>> universe;
    for (int x = 0; x <= 6; ++x)
        for (int y = 0; y <= 6; ++y)
            if (x || y)
                universe.emplace_back(x, y);

    long long sets_checked = 0, members_checked = 0;
    std::string error;

    auto check_set = [&](const std::vector<std::pair<int, int>>& s, int dim) -> bool {
        std::vector<IntVec> vs;
        for (auto [x, y] : s)
            vs.push_back(dim == 1 ? iv({x}) : iv({x, y}));
        AtomList atoms = make_atoms(vs);
        // column order after the canonical sort
        std::vector<std::pair<int, int>> cols;
        for (const IntVec& v : atoms.atoms)
            cols.emplace_back(static_cast<int>(v.c[0].convert_to<long long>()),
                              dim == 1 ? 0 : static_cast<int>(v.c[1].convert_to<long long>()));
        BoxCounts counts = count_box(cols, 20, dim == 1 ? 0 : 20);
        ++sets_checked;
        for (int y = 0; y <= counts.h; ++y)
            for (int x = 0; x <= counts.w; ++x) {
                long long want = counts.at(x, y);
                if (want == 0)
                    continue;
                IntVec tgt = dim == 1 ? iv({x}) : iv({x, y});
                std::vector<Factorization> zs = factorizations(atoms, tgt);
                ++members_checked;
                if (static_cast<long long>(zs.size()) != want) {
                    error = "count mismatch at (" + std::to_string(x) + "," +
                            std::to_string(y) + ")";
                    return false;
                }
                for (std::size_t i = 0; i < zs.size(); ++i) {
                    if (i && !(zs[i - 1].expo < zs[i].expo)) {
                        error = "unsorted or duplicate tuples";
                        return false;
                    }
                    long long sx = 0, sy = 0;
                    for (std::size_t j = 0; j < cols.size(); ++j) {
                        long long c = zs[i].expo[j].convert_to<long long>();
                        sx += c * cols[j].first;
                        sy += c * cols[j].second;
                    }
                    if (sx != x || sy != (dim == 1 ? 0 : y)) {
                        error = "invalid tuple";
                        return false;
                    }
                }
            }
        return true;
    };

    // d = 1: atomic subsets of {1..6}, sizes 1..4
    {
        std::vector<std::pair<int, int>> gens;
        for (int g = 1; g <= 6; ++g)
            gens.emplace_back(g, 0);
        std::function<bool(std::size_t, std::vector<std::pair<int, int>>&)> rec =
            [&](std::size_t from, std::vector<std::pair<int, int>>& cur) -> bool {
            if (!cur.empty() && !check_set(cur, 1))
                return false;
            if (cur.size() == 4)
                return true;
            for (std::size_t i = from; i < gens.size(); ++i) {
                cur.push_back(gens[i]);
                bool ok = !set_is_atomic(cur) || rec(i + 1, cur);
                cur.pop_back();
                if (!ok)
                    return false;
            }
            return true;
        };
        std::vector<std::pair<int, int>> cur;
        if (!rec(0, cur))
            fail(o, "d=1: " + error);
    }

    // d = 2: atomic subsets of the 48 nonzero vectors of [0,6]^2, sizes 1..4
    if (o.pass) {
        std::function<bool(std::size_t, std::vector<std::pair<int, int>>&)> rec =
            [&](std::size_t from, std::vector<std::pair<int, int>>& cur) -> bool {
            if (!cur.empty() && !check_set(cur, 2))
                return false;
            if (cur.size() == 4)
                return true;
            for (std::size_t i = from; i < universe.size(); ++i) {
                cur.push_back(universe[i]);
                bool ok = !set_is_atomic(cur) || rec(i + 1, cur);
                cur.pop_back();
                if (!ok)
                    return false;
            }
            return true;
        };
        std::vector<std::pair<int, int>> cur;
        if (!rec(0, cur))
            fail(o, "d=2: " + error);
    }

    o.detail = std::to_string(sets_checked) + " atom sets, " +
               std::to_string(members_checked) +
               " member factorizations equal the counting oracle";
    return o;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion_3()
{
    Outcome o;
    struct Case {
        AtomList atoms;
        Rat expected;
        int box;
    };
    std::vector<Case> cases;
    cases.push_back({make_atoms({iv({1, 0}), iv({0, 1})}), Rat(1), 10});
    cases.push_back({make_atoms({iv({1, 2}), iv({2, 1}), iv({1, 1})}), Rat(3, 2), 12});
    cases.push_back({make_atoms({iv({2}), iv({3})}), Rat(3, 2), 60});

    for (const Case& c : cases) {
        Rat lp = elasticity_fg(c.atoms).value;
        if (lp != c.expected) {
            fail(o, "LP value " + rat_string(lp) + " != " + rat_string(c.expected));
            continue;
        }
        // brute-force maximum of rho(x) over the coordinate box
        Rat best(0);
        std::size_t dim = c.atoms.dim;
        std::vector<Int> x(dim, Int(0));
        std::function<void(std::size_t)> sweep = [&](std::size_t i) {
            if (i == dim) {
                IntVec v;
                v.c = x;
                bool zero = true;
                for (const Int& coord : v.c)
                    zero = zero && coord == 0;
                if (zero)
                    return;
                LengthSet L = length_set(c.atoms, v);
                if (!L.values.empty()) {
                    Rat rho(L.values.back(), L.values.front());
                    if (rho > best)
                        best = rho;
                }
                return;
            }
            for (long long t = 0; t <= c.box; ++t) {
                x[i] = t;
                sweep(i + 1);
            }
        };
        sweep(0);
        if (best != c.expected)
            fail(o, "brute-force max " + rat_string(best) + " != " + rat_string(c.expected));
    }
    o.detail = "elasticities 1, 3/2, 3/2 match the windowed brute-force maxima";
    return o;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion_4()
{
    Outcome o;
    ElasticityResult r = classify_rank2(fixtures::two_limit_family());
    if (r.kind != ElasticityKind::Infinite)
        fail(o, "expected infinite classification");
    if (!r.witness)
        fail(o, "missing certificate");
    else {
        Rat ratio = verify_certificate(*r.witness);
        if (!(ratio > Rat(10)))
            fail(o, "certificate ratio " + rat_string(ratio) + " not above 10");
    }
    Rat truncated = elasticity_fg(truncate_atoms(fixtures::two_limit_family(), Int(10000))).value;
    if (truncated != Rat(133, 4))
        fail(o, "truncated LP value " + rat_string(truncated) + " != 133/4");
    if (!(truncated > Rat(5)))
        fail(o, "truncated elasticity does not exceed 5");
    o.detail = "infinite, verified ratio 43/4 > 10, truncated elasticity 133/4 > 5";
    return o;
}

// ---------------------------------------------------------------- criterion 5

// independent min/max length dynamic program over the coordinate box
struct LenDp {
    int w, h;
    std::vector<long long> mn, mx;
    long long& at(std::vector<long long>& v, int x, int y)
    {
        return v[static_cast<std::size_t>(y) * (w + 1) + x];
    }
};

LenDp length_dp(const std::vector<std::pair<int, int>>& atoms, int w, int h)
{
    const long long none = -1;
    LenDp d{w, h, {}, {}};
    d.mn.assign(static_cast<std::size_t>(w + 1) * (h + 1), none);
    d.mx.assign(static_cast<std::size_t>(w + 1) * (h + 1), none);
    d.at(d.mn, 0, 0) = 0;
    d.at(d.mx, 0, 0) = 0;
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x <= w; ++x)
            for (auto [ax, ay] : atoms) {
                if (x < ax || y < ay)
                    continue;
                long long pm = d.at(d.mn, x - ax, y - ay);
                if (pm != none) {
                    long long& mn = d.at(d.mn, x, y);
                    if (mn == none || pm + 1 < mn)
                        mn = pm + 1;
                    long long& mx = d.at(d.mx, x, y);
                    if (mx < d.at(d.mx, x - ax, y - ay) + 1)
                        mx = d.at(d.mx, x - ax, y - ay) + 1;
                }
            }
    return d;
}

Outcome criterion_5()
{
    Outcome o;
    // part one: weight set {1} forces rational elasticity 1 and singleton lengths
    ElasticityResult r1 = classify_rank2(fixtures::weight_one_family());
    if (r1.kind != ElasticityKind::Rational || r1.value != Rat(1))
        fail(o, "(n,n+1) did not classify Rational(1)");
    AtomList t1 = truncate_atoms(fixtures::weight_one_family(), Int(2000));
    std::vector<IntVec> sample(t1.atoms.begin(), t1.atoms.begin() + 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j)
            sample.push_back(add(t1.atoms[i], t1.atoms[j]));
    for (const IntVec& x : sample) {
        LengthSet L = length_set(t1, x);
        if (L.values.size() != 1) {
            fail(o, "L(" + show(x) + ") is not a singleton");
            break;
        }
    }

    // part two: weight set {1,3} gives Rational(3) and the weight two-sided bound
    ElasticityResult r3 = classify_rank2(fixtures::weight_13_family());
    if (r3.kind != ElasticityKind::Rational || r3.value != Rat(3))
        fail(o, "augmented family did not classify Rational(3)");
    if (r3.s_values != std::vector<Int>{Int(1), Int(3)})
        fail(o, "weight set is not {1,3}");

    AtomList t3 = truncate_atoms(fixtures::weight_13_family(), Int(2000));
    for (const IntVec& x : {iv({36, 45}), iv({13, 22}), iv({31, 43})}) {
        std::vector<Factorization> zs = factorizations(t3, x);
        if (x.c == std::vector<Int>{36, 45} && zs.size() != 80)
            fail(o, "Z((36,45)) has " + std::to_string(zs.size()) + " factorizations, not 80");
        Int weight = x.c[1] - x.c[0];
        for (const Factorization& z : zs) {
            Int len = length_of(z);
            if (!(Rat(weight, 3) <= Rat(len) && len <= weight)) {
                fail(o, "weight bound broken at " + show(x));
                break;
            }
        }
    }

    // monotone approach at three bounds
    Rat e1 = elasticity_fg(truncate_atoms(fixtures::weight_13_family(), Int(200))).value;
    Rat e2 = elasticity_fg(truncate_atoms(fixtures::weight_13_family(), Int(2000))).value;
    Rat e3 = elasticity_fg(truncate_atoms(fixtures::weight_13_family(), Int(20000))).value;
    if (e1 != Rat(5, 3) || e2 != Rat(91, 37) || e3 != Rat(59, 21))
        fail(o, "truncated values " + rat_string(e1) + ", " + rat_string(e2) + ", " +
                 rat_string(e3) + " are off");
    if (!(e1 < e2 && e2 < e3 && e3 < Rat(3)))
        fail(o, "approach to 3 is not monotone");

    // element elasticities reach 5/2 inside a truncation, by independent DP
    AtomList t50k = truncate_atoms(fixtures::weight_13_family(), Int(50000));
    std::vector<std::pair<int, int>> atoms;
    for (const IntVec& a : t50k.atoms)
        atoms.emplace_back(static_cast<int>(a.c[0].convert_to<long long>()),
                           static_cast<int>(a.c[1].convert_to<long long>()));
    LenDp dp = length_dp(atoms, 132, 165);
    long long mn = dp.at(dp.mn, 132, 165), mx = dp.at(dp.mx, 132, 165);
    if (mn <= 0 || Rat(mx, mn) < Rat(5, 2))
        fail(o, "rho((132,165)) = " + std::to_string(mx) + "/" + std::to_string(mn) +
                 " stays below 5/2");
    if (mx != 33 || mn != 13)
        fail(o, "rho((132,165)) != 33/13");
    o.detail = "Rational(1) with singleton lengths; Rational(3) with the weight bound, "
               "monotone truncations 5/3 < 91/37 < 59/21, element elasticity 33/13 >= 5/2";
    return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion_6()
{
    Outcome o;
    GenScanResult r = generalized_elasticity_scan({Int(2), Int(3)}, Int(10000));
    bool near = false;
    for (const GenScanEntry& e : r.entries) {
        if (e.rho > Rat(3, 2)) {
            fail(o, "rho(" + e.x.str() + ") exceeds 3/2");
            break;
        }
        near = near || e.rho >= Rat(3, 2) - Rat(1, 100);
    }
    if (!near)
        fail(o, "no entry within 1/100 of 3/2");
    if (!r.bound_certified)
        fail(o, "bound not certified");
    if (r.affine_threshold != 2)
        fail(o, "affine threshold " + r.affine_threshold.str() + " != 2");

    // affine max/min recursions, re-derived by an independent DP
    const int cap = 10000, period = 6;
    std::vector<long long> mn(cap + 1, -1), mx(cap + 1, -1);
    mn[0] = mx[0] = 0;
    for (int x = 1; x <= cap; ++x)
        for (int g : {2, 3}) {
            if (x < g || mn[x - g] < 0)
                continue;
            if (mn[x] < 0 || mn[x - g] + 1 < mn[x])
                mn[x] = mn[x - g] + 1;
            if (mx[x] < mx[x - g] + 1)
                mx[x] = mx[x - g] + 1;
        }
    long long thr = r.affine_threshold.convert_to<long long>();
    for (int x = static_cast<int>(thr); x + period <= cap; ++x) {
        if (mn[x] < 0)
            continue;
        if (mx[x + period] != mx[x] + 3 || mn[x + period] != mn[x] + 2) {
            fail(o, "affine recursion breaks at x = " + std::to_string(x));
            break;
        }
    }
    o.detail = "10^4 scan: all rho <= 3/2, max within 1/100, affine window recursions hold";
    return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion_7()
{
    Outcome o;
    RatioWitness w25 = polyhedral_certificate(fixtures::cube_family(), Int(25));
    Rat v25 = verify_certificate(w25);
    if (!(v25 >= Rat(53, 2)))
        fail(o, "N=25 ratio " + rat_string(v25) + " below 53/2");
    Rat v1 = verify_certificate(polyhedral_certificate(fixtures::cube_family(), Int(1)));
    Rat v100 = verify_certificate(polyhedral_certificate(fixtures::cube_family(), Int(100)));
    if (v1 != Rat(15, 2))
        fail(o, "N=1 ratio " + rat_string(v1) + " != 15/2");
    if (v100 != Rat(609, 2))
        fail(o, "N=100 ratio " + rat_string(v100) + " != 609/2");
    o.detail = "verified ratios 159/2 >= 53/2, 15/2, 609/2";
    return o;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion_8()
{
    Outcome o;
    FullSystemBuild two = build_full_system(6, BuildProfile{});
    if (!two.verified)
        fail(o, "two-limit build did not verify");
    for (const BuildBlock& blk : two.blocks)
        if (length_set(two.monoid, blk.target).values != blk.set) {
            fail(o, "L(x_" + std::to_string(blk.index) + ") != S_" + std::to_string(blk.index));
            break;
        }
    PrimaryReport rep = primary_report(direction_family(BuildProfile{}));
    if (!rep.primary)
        fail(o, "two-limit direction family is not primary");

    BuildProfile onep;
    onep.two_limit = false;
    FullSystemBuild one = build_full_system(6, onep);
    if (!one.verified)
        fail(o, "one-limit build did not verify");

    // the d = 3 lift keeps every block length set on 20 sampled elements
    MonoidSpec lifted = lift_rank(two, 3);
    AtomList la;
    la.dim = 3;
    la.atoms = lifted.generators;
    int sampled = 0;
    for (const BuildBlock& blk : two.blocks) {
        IntVec flat, raised;
        flat.c = {blk.target.c[0], blk.target.c[1], Int(0)};
        raised.c = {blk.target.c[0], blk.target.c[1], Int(1)};
        if (length_set(la, flat).values != blk.set) {
            fail(o, "lift changes L(x_" + std::to_string(blk.index) + ")");
            break;
        }
        std::vector<Int> shifted;
        for (const Int& v : blk.set)
            shifted.push_back(v + 1);
        if (length_set(la, raised).values != shifted) {
            fail(o, "lift breaks the shifted block " + std::to_string(blk.index));
            break;
        }
        sampled += 2;
    }
    for (const IntVec& a : la.atoms) {
        if (sampled >= 20)
            break;
        if (length_set(la, a).values != std::vector<Int>{Int(1)}) {
            fail(o, "lifted atom " + show(a) + " is not an atom");
            break;
        }
        ++sampled;
    }
    if (sampled < 20)
        fail(o, "only " + std::to_string(sampled) + " lift samples");
    o.detail = "both m=6 builds verify, family is primary, 20 lift samples keep L";
    return o;
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion_9()
{
    Outcome o;
    BuildProfile onep;
    onep.two_limit = false;
    NonisoReport rep =
        noniso_witness(direction_family(onep), direction_family(BuildProfile{}));
    if (!rep.distinguishable || rep.differing != "number of limit directions")
        fail(o, "families were not separated by limit direction count");
    if (!rep.a.limit_slope_count || *rep.a.limit_slope_count != 1 ||
        !rep.b.limit_slope_count || *rep.b.limit_slope_count != 2)
        fail(o, "limit direction counts are not 1 and 2");

    FullSystemBuild one = build_full_system(6, onep);
    FullSystemBuild two = build_full_system(6, BuildProfile{});
    std::vector<std::vector<Int>> expected = enumerate_pfin(6);
    for (std::size_t i = 0; i < 6; ++i) {
        if (one.blocks[i].set != expected[i] || two.blocks[i].set != expected[i]) {
            fail(o, "block " + std::to_string(i + 1) + " does not realize S_" +
                     std::to_string(i + 1));
            break;
        }
    }
    o.detail = "not isomorphic (1 vs 2 limit directions) yet both realize S_1..S_6";
    return o;
}

// --------------------------------------------------------------- criterion 10

Outcome criterion_10()
{
    Outcome o;
    FullSystemBuild b = build_full_system(9, BuildProfile{});
    if (!b.verified)
        fail(o, "m=9 build did not verify");
    Rat sup = elasticity_fg(b.monoid).value;
    if (sup != Rat(Int(24782175), Int(10157)))
        fail(o, "union elasticity " + rat_string(sup) + " is off");
    std::set<Rat> realized;
    for (const BuildBlock& blk : b.blocks)
        if (blk.set.front() > 0)
            realized.insert(Rat(blk.set.back(), blk.set.front()));
    if (!realized.count(Rat(1)))
        fail(o, "elasticity 1 not realized");
    if (!realized.count(Rat(3, 2)))
        fail(o, "elasticity 3/2 not realized");
    int interior = 0;
    for (const Rat& q : realized)
        if (Rat(1) < q && q < sup)
            ++interior;
    if (interior < 3)
        fail(o, "only " + std::to_string(interior) + " distinct interior elasticities");
    o.detail = "targets realize {1, 4/3, 3/2, 2}: three interior values below " +
               rat_string(sup);
    return o;
}

// --------------------------------------------------------------- criterion 11

#ifndef CLI_PATH
#error "CLI_PATH must point at the latfact binary"
#endif

Outcome criterion_11()
{
    Outcome o;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "latfact_acceptance";
    fs::create_directories(dir);

    auto write = [&](const char* name, const char* text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    std::string fg = write("fg.json",
        R"({"dim": 2, "kind": "finite", "generators": [[1,2],[2,1],[1,1]]})");
    std::string fg1d = write("fg1d.json",
        R"({"dim": 1, "kind": "finite", "generators": [[2],[3]]})");
    std::string family = write("family.json",
        R"({"dim": 2, "kind": "family", "finite_atoms": [],
            "sequences": [{"c0": [1,0], "c1": [2,1], "c2": [0,0], "n_start": 1},
                          {"c0": [0,1], "c1": [1,2], "c2": [0,0], "n_start": 1}]})");
    std::string poly = write("poly.json",
        R"({"dim": 3, "kind": "family", "finite_atoms": [[2,0,0],[0,2,0],[0,0,2]],
            "sequences": [{"c0": [1,1,1], "c1": [0,0,2], "c2": [0,0,0], "n_start": 1}]})");

    auto capture = [&](const std::string& args, const std::string& tag) {
        std::string out = (dir / (tag + ".out")).string();
        std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
        int rc = std::system(cmd.c_str());
        std::ifstream in(out, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return std::pair<int, std::string>(rc, buf.str());
    };

    std::string cert_doc = (dir / "cert.json").string();
    std::vector<std::pair<std::string, std::string>> runs = {
        {"atoms --spec " + fg, "atoms"},
        {"factorize --spec " + fg + " --element 9,9", "factorize"},
        {"lengths --spec " + fg1d + " --element 12", "lengths"},
        {"elasticity --spec " + fg, "elasticity"},
        {"classify --spec " + family, "classify"},
        {"certify --spec " + family + " --ratio 10", "certify"},
        {"polyhedral-certify --spec " + poly + " --ratio 5", "poly"},
        {"gen-lengths --spec " + fg1d + " --element 12", "genlen"},
        {"scan-gen-elasticity --spec " + fg1d + " --bound 300", "scan"},
        {"hilbert --ray1 2,1 --ray2 1,2", "hilbert"},
        {"construct --count 5 --profile two-limit", "construct"},
        {"realize --set 2,3", "realize"},
        {"lift --count 4 --profile two-limit --dim 3", "lift"},
        {"primary --profile one-limit", "primary"},
        {"witness-noniso --profile one-limit --profile2 two-limit", "noniso"},
    };
    int commands = 0;
    for (const auto& [args, tag] : runs) {
        auto [rc1, out1] = capture(args, tag + "_1");
        auto [rc2, out2] = capture(args, tag + "_2");
        if (rc1 != 0 || rc2 != 0) {
            fail(o, tag + " exited nonzero");
            continue;
        }
        if (out1 != out2) {
            fail(o, tag + " differs between runs");
            continue;
        }
        if (out1.empty()) {
            fail(o, tag + " produced no output");
            continue;
        }
        ++commands;
    }

    // thread count must not leak into the document
    for (const std::string& base : {"factorize --spec " + fg + " --element 9,9",
                                    "lengths --spec " + fg1d + " --element 12",
                                    "elasticity --spec " + fg}) {
        auto [rc1, seq_out] = capture(base + " --parallel 1", "par1");
        auto [rc4, par_out] = capture(base + " --parallel 4", "par4");
        if (rc1 != 0 || rc4 != 0 || seq_out != par_out) {
            fail(o, "parallel flag changes the document for: " + base);
            break;
        }
    }

    // verify accepts what certify emitted
    auto [rc_c, ignored] =
        capture("certify --spec " + family + " --ratio 10 --out " + cert_doc, "certout");
    auto [rc_v, vout] = capture("verify --spec " + cert_doc, "verify");
    if (rc_c != 0 || rc_v != 0 || vout.find("\"ok\": true") == std::string::npos)
        fail(o, "verify rejected the emitted certificate");
    else
        ++commands;

    o.detail = std::to_string(commands) +
               " commands byte-identical across reruns and thread counts";
    return o;
}

// -------------------------------------------------------------------- driver

struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
    long long budget_ms;   // 0: no budget pinned
};

const Criterion criteria[] = {
    {1, "cramer identity suite", criterion_1, 1000},
    {2, "oracle equivalence on small monoids", criterion_2, 60000},
    {3, "finitely generated elasticity regression", criterion_3, 10000},
    {4, "two-limit family: infinite elasticity", criterion_4, 30000},
    {5, "one-limit families: rational elasticity", criterion_5, 60000},
    {6, "generalized elasticity scan", criterion_6, 10000},
    {7, "polyhedral certificates", criterion_7, 5000},
    {8, "full-system builds and rank lift", criterion_8, 120000},
    {9, "non-isomorphic builds, identical length sets", criterion_9, 0},
    {10, "distinct realized elasticities", criterion_10, 0},
    {11, "byte-identical result documents", criterion_11, 0},
};

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);
    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only && c.number != only)
            continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool in_budget = c.budget_ms == 0 || ms <= c.budget_ms;
        bool pass = out.pass && in_budget;
        failures += pass ? 0 : 1;
        std::printf("[%s] criterion %2d: %s: %s (%lld ms%s)\n", pass ? "PASS" : "FAIL",
                    c.number, c.title, out.detail.c_str(), static_cast<long long>(ms),
                    c.budget_ms ? (", budget " + std::to_string(c.budget_ms) + " ms").c_str()
                                : "");
    }
    return failures;
}
