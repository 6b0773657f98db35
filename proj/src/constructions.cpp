#include "latfact/constructions.hpp"

#include "latfact/simplex.hpp"

#include <algorithm>
#include <map>

namespace latfact {
namespace {

// ------------------------------------------------ numerical monoid helper --

// Length sets over positive integer generators by bitset DP, up to value X.
struct LengthTable {
    std::vector<std::vector<bool>> bits;   // bits[v][len]
    std::size_t maxlen;

    LengthTable(const std::vector<Int>& gens, std::int64_t X)
    {
        std::vector<std::int64_t> g;
        for (const Int& v : gens)
            g.push_back(v.convert_to<std::int64_t>());
        std::sort(g.begin(), g.end());
        maxlen = static_cast<std::size_t>(X / g.front()) + 1;
        bits.assign(X + 1, std::vector<bool>(maxlen + 1, false));
        bits[0][0] = true;
        for (std::int64_t v = 1; v <= X; ++v)
            for (std::int64_t gi : g) {
                if (gi > v)
                    break;
                const auto& prev = bits[v - gi];
                auto& cur = bits[v];
                for (std::size_t l = 0; l + 1 <= maxlen; ++l)
                    if (prev[l])
                        cur[l + 1] = true;
            }
    }

    std::vector<Int> lengths(std::int64_t v) const
    {
        std::vector<Int> out;
        for (std::size_t l = 0; l <= maxlen; ++l)
            if (bits[v][l])
                out.push_back(Int(l));
        return out;
    }
};

bool is_atom_set_1d(const std::vector<Int>& G)
{
    // No generator may decompose over the set with two or more summands.
    std::int64_t B = G.back().convert_to<std::int64_t>();
    std::vector<bool> rep(B + 1, false);
    rep[0] = true;
    for (std::int64_t v = 1; v <= B; ++v)
        for (const Int& gi : G) {
            std::int64_t g = gi.convert_to<std::int64_t>();
            if (g <= v && rep[v - g]) {
                rep[v] = true;
                break;
            }
        }
    for (const Int& gi : G) {
        std::int64_t g = gi.convert_to<std::int64_t>();
        for (const Int& ai : G) {
            std::int64_t a = ai.convert_to<std::int64_t>();
            if (a < g && rep[g - a])
                return false;
        }
    }
    return true;
}

IntVec primitive_of(const IntVec& v)
{
    Int g = 0;
    for (const Int& c : v.c)
        g = boost::multiprecision::gcd(g, c);
    IntVec r(v.dim());
    for (std::size_t j = 0; j < v.dim(); ++j)
        r[j] = v[j] / g;
    return r;
}

// Block slope schedule. Odd blocks descend to the lower limit, even blocks
// climb to the upper one; one-limit profiles use the odd schedule throughout.
Rat slope_at(const BuildProfile& p, std::size_t n)
{
    if (!p.two_limit)
        return p.ell + Rat(Int(1), 2 * (Int(n) + 1));
    Rat gap = p.cap - p.ell;
    if (n % 2 == 1)
        return p.ell + gap / Rat(2 * (Int(n) + 1));
    return p.cap - gap / Rat(Int(n) + 2);
}

IntVec direction_at(const BuildProfile& p, std::size_t n)
{
    Rat s = slope_at(p, n);
    return IntVec{rat_den(s), rat_num(s)};   // reduced fraction, so primitive
}

void check_profile(const BuildProfile& p)
{
    if (p.ell <= 0)
        throw ContractError("profile needs a positive lower slope");
    if (p.two_limit && p.cap <= p.ell)
        throw ContractError("two-limit profile needs ell < cap");
}

} // namespace

// ---------------------------------------------------------- enumerate_pfin --

std::vector<std::vector<Int>> enumerate_pfin(std::size_t m)
{
    if (m == 0)
        throw ContractError("requested an empty enumeration");
    if (m > 1u << 20)
        throw ResourceError("enumeration of " + std::to_string(m) +
                            " admissible sets exceeds the 2^20 cap");
    std::vector<std::vector<Int>> out;
    out.push_back({Int(0)});
    if (out.size() < m)
        out.push_back({Int(1)});

    for (Int M = 2; out.size() < m; ++M) {
        // subsets of {2..M} containing M, by (size, lex)
        std::int64_t top = M.convert_to<std::int64_t>();
        for (std::int64_t size = 1; size <= top - 1 && out.size() < m; ++size) {
            // choose size-1 elements from {2..top-1} in lexicographic order
            std::vector<std::int64_t> idx(size - 1);
            for (std::int64_t i = 0; i < size - 1; ++i)
                idx[i] = 2 + i;
            while (out.size() < m) {
                std::vector<Int> s;
                for (std::int64_t v : idx)
                    s.push_back(Int(v));
                s.push_back(Int(top));
                out.push_back(std::move(s));
                // next combination
                std::int64_t i = size - 2;
                while (i >= 0 && idx[i] == top - 1 - (size - 2 - i))
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (std::int64_t j = i + 1; j < size - 1; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return out;
}

// ------------------------------------------------------ realize_length_set --

Realization realize_length_set(const std::vector<Int>& S)
{
    if (S.empty())
        throw ContractError("the empty set is not a length set");
    if (!std::is_sorted(S.begin(), S.end()) ||
        std::adjacent_find(S.begin(), S.end()) != S.end())
        throw ContractError("length set must be sorted and duplicate-free");
    if (S.front() < 0)
        throw ContractError("negative length");
    if (S.front() == 0 && S.size() > 1)
        throw ContractError("a length set containing 0 must be {0}");
    if (S.front() == 1 && S.size() > 1)
        throw ContractError("a length set containing 1 must be {1}");

    if (S == std::vector<Int>{Int(0)})
        return Realization{{Int(2)}, Int(0)};

    for (std::int64_t B = 2; B <= 24; ++B) {
        std::int64_t maxsize = std::min<std::int64_t>(6, B - 1);
        for (std::int64_t size = 1; size <= maxsize; ++size) {
            std::vector<std::int64_t> idx(size - 1);
            for (std::int64_t i = 0; i < size - 1; ++i)
                idx[i] = 2 + i;
            bool more = true;
            while (more) {
                std::vector<Int> G;
                for (std::int64_t v : idx)
                    G.push_back(Int(v));
                G.push_back(Int(B));

                if (is_atom_set_1d(G)) {
                    std::int64_t X =
                        S.back().convert_to<std::int64_t>() * B;
                    LengthTable tab(G, X);
                    for (std::int64_t x = 1; x <= X; ++x) {
                        if (tab.lengths(x) == S)
                            return Realization{G, Int(x)};
                    }
                }

                std::int64_t i = size - 2;
                while (i >= 0 && idx[i] == B - 1 - (size - 2 - i))
                    --i;
                if (i < 0) {
                    more = false;
                } else {
                    ++idx[i];
                    for (std::int64_t j = i + 1; j < size - 1; ++j)
                        idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }
    throw ResourceError("no realization with generators up to 24 and at most "
                        "6 of them");
}

// -------------------------------------------------------- full-system build --

namespace {

Int lambda_for(const BuildBlock& prev, const std::vector<Int>& G,
               const IntVec& dir)
{
    Int prev_max = norm_sq(prev.target);
    for (const IntVec& a : prev.atoms) {
        Int q = norm_sq(a);
        if (q > prev_max)
            prev_max = q;
    }
    Int q_min = G.front() * G.front() * norm_sq(dir);
    Int lam = isqrt_floor(prev_max / q_min);
    if (lam < 1)
        lam = 1;
    while (lam * lam * q_min <= prev_max)
        ++lam;
    return lam;
}

BuildBlock make_block(std::size_t index, const std::vector<Int>& set,
                      const Realization& real, const Int& lambda,
                      const IntVec& dir)
{
    BuildBlock b;
    b.index = index;
    b.set = set;
    b.generators = real.generators;
    b.element = real.element;
    b.lambda = lambda;
    b.direction = dir;
    b.target = scale(lambda * real.element, dir);
    for (const Int& g : real.generators)
        b.atoms.push_back(scale(lambda * g, dir));
    return b;
}

AtomList union_of(const std::vector<BuildBlock>& blocks)
{
    AtomList m;
    m.dim = 2;
    for (const BuildBlock& b : blocks)
        for (const IntVec& a : b.atoms)
            m.atoms.push_back(a);
    std::sort(m.atoms.begin(), m.atoms.end(), canon_less);
    m.atoms.erase(std::unique(m.atoms.begin(), m.atoms.end()), m.atoms.end());
    return m;
}

// index of the first block whose target length set over the union is off,
// if any
std::optional<std::size_t> block_mismatch(const FullSystemBuild& b)
{
    for (std::size_t i = 0; i < b.blocks.size(); ++i) {
        LengthSet L = length_set(b.monoid, b.blocks[i].target);
        if (L.values != b.blocks[i].set)
            return i;
    }
    return std::nullopt;
}

} // namespace

FullSystemBuild build_full_system(std::size_t m, const BuildProfile& profile)
{
    check_profile(profile);
    if (m == 0)
        throw ContractError("a build needs at least one block");
    if (m > 40)
        throw ResourceError("builds beyond 40 blocks exceed the desk-scale cap");

    auto sets = enumerate_pfin(m);
    std::vector<Realization> reals;
    for (const auto& S : sets)
        reals.push_back(realize_length_set(S));

    FullSystemBuild b;
    b.profile = profile;
    auto rebuild = [&](std::vector<Int>& lambdas) {
        b.blocks.clear();
        for (std::size_t n = 1; n <= m; ++n) {
            IntVec dir = direction_at(profile, n);
            Int lam;
            if (n == 1) {
                lam = 1;
            } else {
                lam = lambda_for(b.blocks.back(), reals[n - 1].generators, dir);
            }
            if (lambdas.size() >= n && lambdas[n - 1] > lam)
                lam = lambdas[n - 1];
            if (lambdas.size() < n)
                lambdas.push_back(lam);
            else
                lambdas[n - 1] = lam;
            b.blocks.push_back(make_block(n, sets[n - 1], reals[n - 1], lam, dir));
        }
        b.monoid = union_of(b.blocks);
    };

    std::vector<Int> lambdas;
    rebuild(lambdas);
    for (int attempt = 0;; ++attempt) {
        auto bad = block_mismatch(b);
        if (!bad) {
            verify_build(b);
            b.verified = true;
            return b;
        }
        if (attempt >= 3)
            throw ContractError("block " + std::to_string(*bad + 1) +
                                " still fails after three scale doublings");
        lambdas[*bad] *= 2;
        lambdas.resize(*bad + 1);   // downstream scales follow the recurrence
        rebuild(lambdas);
    }
}

void verify_build(const FullSystemBuild& b)
{
    check_profile(b.profile);
    if (b.blocks.empty())
        throw ContractError("build has no blocks");
    if (!(union_of(b.blocks) == b.monoid))
        throw ContractError("monoid is not the union of the block atoms");

    for (std::size_t i = 0; i + 1 < b.blocks.size(); ++i) {
        const BuildBlock& cur = b.blocks[i];
        const BuildBlock& nxt = b.blocks[i + 1];
        Int cur_max = norm_sq(cur.target);
        for (const IntVec& a : cur.atoms)
            if (norm_sq(a) > cur_max)
                cur_max = norm_sq(a);
        Int nxt_min = -1;
        for (const IntVec& a : nxt.atoms)
            if (nxt_min < 0 || norm_sq(a) < nxt_min)
                nxt_min = norm_sq(a);
        if (nxt_min <= cur_max)
            throw ContractError("scale separation fails between blocks " +
                                std::to_string(i + 1) + " and " +
                                std::to_string(i + 2));
    }

    AtomList closure = atoms_of(b.monoid.atoms);
    if (!(closure == b.monoid)) {
        for (const IntVec& a : b.monoid.atoms)
            if (std::find(closure.atoms.begin(), closure.atoms.end(), a) ==
                closure.atoms.end())
                throw ContractError("declared atom " + show(a) +
                                    " decomposes over the union");
        throw ContractError("the union is not its own atom set");
    }

    for (const BuildBlock& blk : b.blocks) {
        LengthSet L = length_set(b.monoid, blk.target);
        if (L.values != blk.set) {
            std::string msg = "block " + std::to_string(blk.index) +
                              ": length set of " + show(blk.target) + " is {";
            for (std::size_t i = 0; i < L.values.size(); ++i)
                msg += (i ? "," : "") + L.values[i].str();
            msg += "}, expected {";
            for (std::size_t i = 0; i < blk.set.size(); ++i)
                msg += (i ? "," : "") + blk.set[i].str();
            msg += "}";
            for (const IntVec& a : b.monoid.atoms) {
                if (det2(a, blk.direction) == 0)
                    continue;
                IntVec rest = sub(blk.target, a);
                if (nonneg(rest) && is_member(b.monoid, rest)) {
                    msg += "; cross-ray divisor " + show(a);
                    break;
                }
            }
            throw ContractError(msg);
        }
    }
}

// -------------------------------------------------------- direction family --

MonoidSpec direction_family(const BuildProfile& p)
{
    check_profile(p);
    MonoidSpec spec;
    spec.dim = 2;
    spec.kind = SpecKind::Family;

    Int pe = rat_num(p.ell), qe = rat_den(p.ell);
    if (!p.two_limit) {
        // slope(n) = ell + 1/(2n+2), so a(n) = (2q n + 2q, 2p n + 2p + q)
        AtomSequence s;
        s.c0 = IntVec{2 * qe, 2 * pe + qe};
        s.c1 = IntVec{2 * qe, 2 * pe};
        s.c2 = IntVec(2);
        spec.sequences.push_back(std::move(s));
        return spec;
    }

    Rat gap = p.cap - p.ell;
    Int g1 = rat_num(gap), g2 = rat_den(gap);
    Int pc = rat_num(p.cap), qc = rat_den(p.cap);

    // odd blocks n = 2k-1: slope = ell + gap/(4k)
    AtomSequence odd;
    odd.c0 = IntVec{Int(0), qe * g1};
    odd.c1 = IntVec{4 * qe * g2, 4 * pe * g2};
    odd.c2 = IntVec(2);
    spec.sequences.push_back(std::move(odd));

    // even blocks n = 2k: slope = cap - gap/(2k+2)
    AtomSequence even;
    even.c0 = IntVec{2 * qc * g2, 2 * pc * g2 - qc * g1};
    even.c1 = IntVec{2 * qc * g2, 2 * pc * g2};
    even.c2 = IntVec(2);
    spec.sequences.push_back(std::move(even));
    spec.validate();
    return spec;
}

MonoidSpec lift_rank(const FullSystemBuild& b, std::size_t d)
{
    if (d < 2 || d > 16)
        throw ContractError("lift dimension must be between 2 and 16");
    MonoidSpec spec;
    spec.dim = d;
    spec.kind = SpecKind::Finite;
    for (const IntVec& a : b.monoid.atoms) {
        IntVec v(d);
        v[0] = a[0];
        v[1] = a[1];
        spec.generators.push_back(std::move(v));
    }
    for (std::size_t j = 2; j < d; ++j) {
        IntVec e(d);
        e[j] = 1;
        spec.generators.push_back(std::move(e));
    }
    spec.validate();
    return spec;
}

// ----------------------------------------------------------------- primary --

PrimaryReport is_primary_family(const MonoidSpec& family)
{
    family.validate();
    if (family.kind != SpecKind::Family || family.dim != 2)
        throw ContractError("is_primary_family needs a rank-2 family spec");

    // slope candidates: (value, attained by an actual atom)
    std::vector<std::pair<SlopeValue, bool>> cand;
    for (const IntVec& f : family.finite_atoms)
        cand.emplace_back(slope_of(f), true);
    for (const AtomSequence& s : family.sequences) {
        cand.emplace_back(slope_of(s.member(s.n_start)), true);
        cand.emplace_back(s.limit_slope(), false);
    }

    SlopeValue inf = cand.front().first, sup = cand.front().first;
    for (const auto& [s, att] : cand) {
        if (slope_less(s, inf))
            inf = s;
        if (slope_less(sup, s))
            sup = s;
    }
    bool inf_attained = false, sup_attained = false;
    for (const auto& [s, att] : cand) {
        if (att && s == inf)
            inf_attained = true;
        if (att && s == sup)
            sup_attained = true;
    }

    PrimaryReport rep;
    rep.primary = !inf_attained && !sup_attained;
    if (rep.primary) {
        rep.explanation = "no atom attains the extreme slopes " +
                          slope_string(inf) + " and " + slope_string(sup) +
                          "; both are limits, so the interior of the cone is "
                          "open and the family is primary";
    } else {
        rep.explanation = std::string("an atom attains the ") +
                          (inf_attained ? "minimal slope " + slope_string(inf)
                                        : "maximal slope " + slope_string(sup)) +
                          "; the atoms on that extreme ray generate a proper "
                          "divisor-closed submonoid";
    }
    return rep;
}

namespace {

std::vector<std::vector<Rat>> ray_matrix(const std::vector<IntVec>& rays,
                                         std::size_t dim)
{
    std::vector<std::vector<Rat>> A(dim, std::vector<Rat>(rays.size(), Rat(0)));
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            A[j][i] = Rat(rays[i][j]);
    return A;
}

bool ray_in_cone(const std::vector<IntVec>& rays, const IntVec& x)
{
    std::vector<Rat> b;
    for (const Int& v : x.c)
        b.push_back(Rat(v));
    return lp_feasible(ray_matrix(rays, x.dim()), b).status == LpStatus::Optimal;
}

// primitive ray class -> atoms on it, in canonical order of the primitives
std::map<IntVec, std::vector<IntVec>, CanonLess>
ray_classes(const std::vector<IntVec>& atoms)
{
    std::map<IntVec, std::vector<IntVec>, CanonLess> classes;
    for (const IntVec& a : atoms)
        classes[primitive_of(a)].push_back(a);
    return classes;
}

std::vector<std::size_t> extreme_ray_counts(const AtomList& atoms)
{
    auto classes = ray_classes(atoms.atoms);
    std::vector<IntVec> prims;
    for (const auto& [p, list] : classes)
        prims.push_back(p);

    std::vector<std::size_t> counts;
    for (const auto& [p, list] : classes) {
        bool extreme;
        if (prims.size() == 1) {
            extreme = true;
        } else if (atoms.dim == 2) {
            // p is extreme iff no rays lie strictly on both sides of it
            bool any_below = false, any_above = false;
            for (const IntVec& q : prims) {
                Int d = det2(q, p);
                if (d > 0)
                    any_below = true;
                if (d < 0)
                    any_above = true;
            }
            extreme = !(any_below && any_above);
        } else {
            std::vector<IntVec> others;
            for (const IntVec& q : prims)
                if (!(q == p))
                    others.push_back(q);
            extreme = !ray_in_cone(others, p);
        }
        if (extreme)
            counts.push_back(list.size());
    }
    std::sort(counts.rbegin(), counts.rend());
    return counts;
}

} // namespace

PrimaryReport primary_report(const MonoidSpec& spec)
{
    spec.validate();
    if (spec.kind == SpecKind::Family)
        return is_primary_family(spec);

    PrimaryReport rep;
    AtomList atoms = atoms_of(spec.generators);
    auto classes = ray_classes(atoms.atoms);
    if (classes.size() == 1) {
        rep.primary = true;
        rep.explanation = "all atoms share one ray, so the monoid is a scaled "
                          "numerical monoid and every nonzero element has all "
                          "of it as divisor closure";
        return rep;
    }

    rep.primary = false;
    for (std::size_t j = 0; j < spec.dim; ++j) {
        bool some_zero = false, some_pos = false;
        for (const IntVec& a : atoms.atoms)
            (a[j] == 0 ? some_zero : some_pos) = true;
        if (some_zero && some_pos) {
            rep.explanation = "atoms with coordinate " + std::to_string(j + 1) +
                              " equal to 0 generate a proper nonzero "
                              "divisor-closed submonoid";
            return rep;
        }
    }
    // fall back to an extreme ray; with two or more rays in a cone inside the
    // first orthant one of them is extreme
    rep.explanation = "the atoms on an extreme ray of the cone generate a "
                      "proper nonzero divisor-closed submonoid";
    return rep;
}

// ------------------------------------------------------------- invariants --

IsoInvariants iso_invariants(const MonoidSpec& spec)
{
    spec.validate();
    IsoInvariants inv;

    std::vector<IntVec> span;
    if (spec.kind == SpecKind::Finite) {
        span = spec.generators;
    } else {
        span = spec.finite_atoms;
        for (const AtomSequence& s : spec.sequences) {
            span.push_back(s.member(s.n_start));
            span.push_back(s.member(s.n_start + 1));
            span.push_back(s.member(s.n_start + 2));
        }
    }
    // rank by Gaussian elimination over the rationals
    std::vector<std::vector<Rat>> M;
    for (const IntVec& v : span) {
        std::vector<Rat> row;
        for (const Int& c : v.c)
            row.push_back(Rat(c));
        M.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < spec.dim && rank < M.size(); ++col) {
        std::size_t piv = rank;
        while (piv < M.size() && M[piv][col] == 0)
            ++piv;
        if (piv == M.size())
            continue;
        std::swap(M[rank], M[piv]);
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == rank || M[r][col] == 0)
                continue;
            Rat f = M[r][col] / M[rank][col];
            for (std::size_t c = col; c < spec.dim; ++c)
                M[r][c] -= f * M[rank][c];
        }
        ++rank;
    }
    inv.rank = rank;

    if (spec.kind == SpecKind::Finite) {
        AtomList atoms = atoms_of(spec.generators);
        inv.finitely_many_atoms = true;
        inv.atom_count = atoms.atoms.size();
        inv.extreme_ray_atoms = extreme_ray_counts(atoms);
    } else {
        inv.finitely_many_atoms = spec.sequences.empty();
        inv.atom_count = spec.finite_atoms.size();
        std::vector<IntVec> dirs;
        for (const AtomSequence& s : spec.sequences)
            dirs.push_back(s.limit_direction());
        std::sort(dirs.begin(), dirs.end(), canon_less);
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        inv.limit_slope_count = dirs.size();
    }
    return inv;
}

NonisoReport noniso_witness(const MonoidSpec& a, const MonoidSpec& b)
{
    NonisoReport rep;
    rep.a = iso_invariants(a);
    rep.b = iso_invariants(b);

    if (rep.a.rank != rep.b.rank) {
        rep.distinguishable = true;
        rep.differing = "rank";
        return rep;
    }
    if (rep.a.finitely_many_atoms != rep.b.finitely_many_atoms) {
        rep.distinguishable = true;
        rep.differing = "finiteness of the atom set";
        return rep;
    }
    if (rep.a.finitely_many_atoms) {
        if (rep.a.atom_count != rep.b.atom_count) {
            rep.distinguishable = true;
            rep.differing = "atom count";
            return rep;
        }
        if (rep.a.extreme_ray_atoms && rep.b.extreme_ray_atoms &&
            *rep.a.extreme_ray_atoms != *rep.b.extreme_ray_atoms) {
            rep.distinguishable = true;
            rep.differing = "atom counts on extreme rays";
            return rep;
        }
    } else if (rep.a.limit_slope_count && rep.b.limit_slope_count &&
               *rep.a.limit_slope_count != *rep.b.limit_slope_count) {
        rep.distinguishable = true;
        rep.differing = "number of limit directions";
        return rep;
    }
    rep.distinguishable = false;
    rep.differing = "";
    return rep;
}

// ---------------------------------------------------------------- manifest --

Json manifest_json(const FullSystemBuild& b)
{
    Json j;
    Json prof;
    prof["kind"] = b.profile.two_limit ? "two_limit" : "one_limit";
    prof["ell"] = rat_string(b.profile.ell);
    prof["cap"] = rat_string(b.profile.cap);
    j["profile"] = prof;

    Json blocks = Json::array();
    for (const BuildBlock& blk : b.blocks) {
        Json bj;
        bj["index"] = blk.index;
        Json set = Json::array();
        for (const Int& v : blk.set)
            set.push_back(int_json(v));
        bj["set"] = set;
        Json gens = Json::array();
        for (const Int& v : blk.generators)
            gens.push_back(int_json(v));
        bj["generators"] = gens;
        bj["element"] = int_json(blk.element);
        bj["lambda"] = int_json(blk.lambda);
        bj["direction"] = vec_json(blk.direction);
        bj["target"] = vec_json(blk.target);
        Json atoms = Json::array();
        for (const IntVec& a : blk.atoms)
            atoms.push_back(vec_json(a));
        bj["atoms"] = atoms;
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = blocks;
    j["verified"] = b.verified;
    return j;
}

FullSystemBuild build_from_manifest(const Json& j)
{
    if (!j.is_object() || !j.contains("profile") || !j.contains("blocks"))
        throw ContractError("manifest needs 'profile' and 'blocks'");
    FullSystemBuild b;
    const Json& prof = j.at("profile");
    std::string kind = prof.at("kind").get<std::string>();
    if (kind == "two_limit")
        b.profile.two_limit = true;
    else if (kind == "one_limit")
        b.profile.two_limit = false;
    else
        throw ContractError("unknown profile kind '" + kind + "'");
    b.profile.ell = parse_rat(prof.at("ell").get<std::string>());
    b.profile.cap = parse_rat(prof.at("cap").get<std::string>());
    check_profile(b.profile);

    for (const Json& bj : j.at("blocks")) {
        BuildBlock blk;
        blk.index = int_from_json(bj.at("index")).convert_to<std::size_t>();
        for (const Json& e : bj.at("set"))
            blk.set.push_back(int_from_json(e));
        for (const Json& e : bj.at("generators"))
            blk.generators.push_back(int_from_json(e));
        blk.element = int_from_json(bj.at("element"));
        blk.lambda = int_from_json(bj.at("lambda"));
        blk.direction = vec_from_json(bj.at("direction"));
        blk.target = vec_from_json(bj.at("target"));
        for (const Json& e : bj.at("atoms"))
            blk.atoms.push_back(vec_from_json(e));

        // integrity: the serialized vectors must match the scale data
        if (!(blk.target == scale(blk.lambda * blk.element, blk.direction)))
            throw ContractError("block " + std::to_string(blk.index) +
                                ": target does not equal lambda * element * "
                                "direction");
        if (blk.atoms.size() != blk.generators.size())
            throw ContractError("block " + std::to_string(blk.index) +
                                ": atom and generator counts differ");
        for (std::size_t i = 0; i < blk.atoms.size(); ++i)
            if (!(blk.atoms[i] == scale(blk.lambda * blk.generators[i],
                                        blk.direction)))
                throw ContractError("block " + std::to_string(blk.index) +
                                    ": atom " + show(blk.atoms[i]) +
                                    " does not equal lambda * generator * "
                                    "direction");
        b.blocks.push_back(std::move(blk));
    }
    if (b.blocks.empty())
        throw ContractError("manifest has no blocks");
    b.monoid = union_of(b.blocks);
    b.verified = j.value("verified", false);
    return b;
}

} // namespace latfact
