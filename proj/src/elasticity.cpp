#include "latfact/elasticity.hpp"

#include "latfact/simplex.hpp"

#include <algorithm>

namespace latfact {
namespace {

// ------------------------------------------------------------- LP helpers --

std::vector<std::vector<Rat>> cone_rows(const std::vector<IntVec>& rays,
                                        std::size_t dim)
{
    std::vector<std::vector<Rat>> A(dim, std::vector<Rat>(rays.size(), Rat(0)));
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            A[j][i] = Rat(rays[i][j]);
    return A;
}

std::vector<Rat> rat_rhs(const IntVec& x)
{
    std::vector<Rat> b;
    for (const Int& v : x.c)
        b.push_back(Rat(v));
    return b;
}

// x = sum beta_i rays_i with beta >= 0?
bool in_cone(const std::vector<IntVec>& rays, const IntVec& x,
             std::vector<Rat>* beta = nullptr)
{
    auto r = lp_feasible(cone_rows(rays, x.dim()), rat_rhs(x));
    if (r.status != LpStatus::Optimal)
        return false;
    if (beta)
        *beta = r.x;
    return true;
}

// ---------------------------------------------------------- witness build --

RatioWitness make_witness(const IntVec& element,
                          std::vector<std::pair<IntVec, Int>> short_side,
                          std::vector<std::pair<IntVec, Int>> long_side)
{
    std::vector<IntVec> atoms;
    for (const auto& [a, c] : short_side)
        atoms.push_back(a);
    for (const auto& [a, c] : long_side)
        atoms.push_back(a);
    std::sort(atoms.begin(), atoms.end(), canon_less);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

    RatioWitness w;
    w.element = element;
    w.atoms = atoms;
    w.short_expo.assign(atoms.size(), Int(0));
    w.long_expo.assign(atoms.size(), Int(0));
    auto slot = [&](const IntVec& a) {
        return std::lower_bound(atoms.begin(), atoms.end(), a, canon_less) -
               atoms.begin();
    };
    for (const auto& [a, c] : short_side)
        w.short_expo[slot(a)] += c;
    for (const auto& [a, c] : long_side)
        w.long_expo[slot(a)] += c;

    Int ls = 0, ll = 0;
    for (const Int& c : w.short_expo)
        ls += c;
    for (const Int& c : w.long_expo)
        ll += c;
    if (ls > ll) {
        std::swap(w.short_expo, w.long_expo);
        std::swap(ls, ll);
    }
    w.ratio = Rat(ll, ls);
    return w;
}

} // namespace

// ---------------------------------------------------------- elasticity_fg --

ElasticityResult elasticity_fg(const AtomList& atoms)
{
    if (atoms.atoms.empty())
        throw ContractError("elasticity of the trivial monoid is undefined");
    for (const IntVec& a : atoms.atoms) {
        if (a.dim() != atoms.dim)
            throw ContractError("atom " + show(a) + " has the wrong dimension");
        if (is_zero(a) || !nonneg(a))
            throw ContractError("atom " + show(a) +
                                " must be nonzero with nonnegative coordinates");
    }

    // maximize sum(u) with A u = A v, sum(v) = 1, u, v >= 0
    std::size_t k = atoms.atoms.size(), d = atoms.dim;
    std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(2 * k, Rat(0)));
    std::vector<Rat> b(d + 1, Rat(0)), c(2 * k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            A[j][i] = Rat(atoms.atoms[i][j]);
            A[j][k + i] = -Rat(atoms.atoms[i][j]);
        }
        A[d][k + i] = Rat(1);
        c[i] = Rat(1);
    }
    b[d] = Rat(1);

    LpResult lp = simplex_max(A, b, c);
    if (lp.status != LpStatus::Optimal)
        throw ContractError("elasticity LP did not solve; the atom list is "
                            "degenerate");

    ElasticityResult res;
    res.kind = ElasticityKind::Rational;
    res.value = lp.objective;
    res.attained = Attained::Yes;
    res.case_id = "fg";
    LPWitness w;
    w.u.assign(lp.x.begin(), lp.x.begin() + k);
    w.v.assign(lp.x.begin() + k, lp.x.end());
    res.lp = std::move(w);
    return res;
}

// ----------------------------------------------------- limit slope profile --

LimitSlopeProfile limit_slope_profile(const MonoidSpec& family)
{
    family.validate();
    if (family.kind != SpecKind::Family)
        throw ContractError("limit_slope_profile needs a family spec");
    if (family.dim != 2)
        throw ContractError("limit slopes live in dimension 2");
    if (family.sequences.empty())
        throw ContractError("family has no sequences, hence no limit slopes");

    LimitSlopeProfile prof;
    for (const AtomSequence& s : family.sequences) {
        SlopeValue ls = s.limit_slope();
        bool found = false;
        for (auto& e : prof.limits)
            if (e.slope == ls)
                found = true;
        if (!found) {
            LimitSlopeProfile::Entry e;
            e.slope = ls;
            e.direction = s.limit_direction();
            prof.limits.push_back(std::move(e));
        }
    }
    std::sort(prof.limits.begin(), prof.limits.end(),
              [](const auto& a, const auto& b) { return slope_less(a.slope, b.slope); });

    for (auto& e : prof.limits) {
        for (const IntVec& f : family.finite_atoms) {
            SlopeValue s = slope_of(f);
            if (slope_less(s, e.slope))
                e.atoms_below = true;
            if (slope_less(e.slope, s))
                e.atoms_above = true;
        }
        for (const AtomSequence& s : family.sequences) {
            SlopeValue ls = s.limit_slope();
            bool inc = s.slope_increasing();
            if (slope_less(ls, e.slope)) {
                e.atoms_below = true;   // the whole tail sits below
            } else if (ls == e.slope) {
                (inc ? e.atoms_below : e.atoms_above) = true;
            } else {
                e.atoms_above = true;   // the whole tail sits above
            }
            // A monotone approach can still start on the far side of e.
            SlopeValue first = slope_of(s.member(s.n_start));
            if (slope_less(first, e.slope))
                e.atoms_below = true;
            if (slope_less(e.slope, first))
                e.atoms_above = true;
        }
        e.weights_finite = true;
        for (const AtomSequence& s : family.sequences) {
            if (!(s.limit_slope() == e.slope)) {
                e.weights_finite = false;   // weights against e grow with n
            } else if (s.degree() == 2 && det2(s.limit_direction(), s.c1) != 0) {
                e.weights_finite = false;
            }
        }
    }
    return prof;
}

// --------------------------------------------------------- witness search --

namespace {

struct ScanPool {
    // finite atoms plus all sequence members with index <= cur + 2
    std::vector<IntVec> members;
};

// Smallest-norm pool member strictly below (or above) the slope of a.
std::optional<IntVec> extremal_neighbor(const std::vector<IntVec>& pool,
                                        const IntVec& a, bool below)
{
    std::optional<IntVec> best;
    for (const IntVec& p : pool) {
        Ordering o = slope_cmp(p, a);
        if ((below && o != Ordering::Less) || (!below && o != Ordering::Greater))
            continue;
        if (!best || canon_less(p, *best))
            best = p;
    }
    return best;
}

RatioWitness witness_from_triple(const IntVec& x, const IntVec& a, const IntVec& y,
                                 const Rat& target, bool& ok)
{
    CramerCoefficients cc = cramer_decompose(x, a, y);
    Int split = cc.c_x + cc.c_y;
    ok = false;
    RatioWitness w;
    if (Rat(split, cc.c_a) > target || Rat(cc.c_a, split) > target) {
        IntVec elem = scale(cc.c_a, a);
        w = make_witness(elem, {{a, cc.c_a}}, {{x, cc.c_x}, {y, cc.c_y}});
        ok = w.ratio > target;
    }
    return w;
}

} // namespace

RatioWitness unbounded_certificate(const MonoidSpec& family, const Rat& target_ratio,
                                   const Int& index_bound)
{
    family.validate();
    if (family.kind != SpecKind::Family || family.dim != 2)
        throw ContractError("unbounded_certificate needs a rank-2 family spec");
    if (family.sequences.empty())
        throw ContractError("family has no sequences; its elasticity is "
                            "rational and needs no witness");
    if (target_ratio <= 0)
        throw ContractError("target ratio must be positive");
    if (index_bound < 1)
        throw ContractError("index bound must be at least 1");

    // A one-sided single-limit family with finite projection weights has
    // rational elasticity; no ratio witness exists beyond s_k/s_1.
    LimitSlopeProfile prof = limit_slope_profile(family);
    if (prof.limits.size() == 1) {
        const auto& e = prof.limits.front();
        if (!(e.atoms_below && e.atoms_above) && e.weights_finite)
            throw ContractError("family has rational elasticity; there is no "
                                "unbounded ratio witness to search for");
    }

    const auto& seqs = family.sequences;
    ScanPool pool;
    pool.members = family.finite_atoms;
    auto push_member = [&](const Int& n) {
        for (const AtomSequence& s : seqs)
            if (n >= s.n_start)
                pool.members.push_back(s.member(n));
    };
    push_member(Int(1));
    push_member(Int(2));

    for (Int n = 1; n <= index_bound; ++n) {
        push_member(n + 2);

        for (const AtomSequence& sa : seqs) {
            if (n < sa.n_start)
                continue;
            IntVec a = sa.member(n);

            std::vector<IntVec> below, above;
            if (auto p = extremal_neighbor(pool.members, a, true))
                below.push_back(*p);
            if (auto p = extremal_neighbor(pool.members, a, false))
                above.push_back(*p);
            // Ladder candidates: far-out members of every sequence, which is
            // what separates the slopes when all members share one limit.
            Int ladder_lin = 2 * n, ladder_quad = n * n;
            for (const AtomSequence& sb : seqs) {
                for (const Int& t : {ladder_lin, ladder_quad}) {
                    if (t < sb.n_start || t <= n)
                        continue;
                    IntVec m = sb.member(t);
                    Ordering o = slope_cmp(m, a);
                    if (o == Ordering::Less)
                        below.push_back(m);
                    else if (o == Ordering::Greater)
                        above.push_back(m);
                }
            }

            for (const IntVec& x : below) {
                for (const IntVec& y : above) {
                    bool ok = false;
                    RatioWitness w = witness_from_triple(x, a, y, target_ratio, ok);
                    if (ok) {
                        verify_certificate(w);
                        return w;
                    }
                }
            }
        }
    }
    throw ResourceError("no witness of ratio above " + rat_string(target_ratio) +
                        " found up to sequence index " + index_bound.str());
}

// --------------------------------------------------------- classification --

ElasticityResult classify_rank2(const MonoidSpec& family,
                                std::size_t validation_window,
                                const Rat& certificate_target,
                                const Int& index_bound)
{
    family.validate();
    if (family.kind != SpecKind::Family)
        throw ContractError("classify_rank2 needs a family spec");
    if (family.dim != 2)
        throw ContractError("classify_rank2 needs dimension 2, got " +
                            std::to_string(family.dim));
    if (family.sequences.empty())
        throw ContractError("family has no sequences; use the finitely "
                            "generated elasticity instead");

    ValidationReport vr = validate_family_atoms(family, validation_window);
    if (!vr.ok) {
        const AtomViolation& v = vr.violations.front();
        std::string msg = "declared atom " + show(v.member) +
                          " decomposes over the family:";
        for (const auto& [s, c] : v.decomposition)
            msg += " " + c.str() + "*" + show(s);
        throw ContractError(msg);
    }

    LimitSlopeProfile prof = limit_slope_profile(family);
    ElasticityResult res;
    res.profile = prof;

    auto attach_witness = [&]() {
        res.kind = ElasticityKind::Infinite;
        res.attained = Attained::No;
        res.witness = unbounded_certificate(family, certificate_target, index_bound);
    };

    if (prof.limits.size() >= 2) {
        const SlopeValue& lo = prof.limits.front().slope;
        const SlopeValue& hi = prof.limits.back().slope;
        bool between = false;
        for (const IntVec& f : family.finite_atoms) {
            SlopeValue s = slope_of(f);
            if (slope_less(lo, s) && slope_less(s, hi))
                between = true;
        }
        for (const AtomSequence& s : family.sequences) {
            SlopeValue ls = s.limit_slope();
            bool inc = s.slope_increasing();
            if (slope_less(lo, ls) && slope_less(ls, hi))
                between = true;
            else if (ls == lo && !inc)
                between = true;   // approaches the low limit from above
            else if (ls == hi && inc)
                between = true;   // approaches the high limit from below
        }
        res.case_id = between ? "1.1" : "1.2";
        attach_witness();
        return res;
    }

    const LimitSlopeProfile::Entry& e = prof.limits.front();
    if (e.atoms_below && e.atoms_above) {
        res.case_id = "2.1";
        attach_witness();
        return res;
    }
    if (!e.weights_finite) {
        res.case_id = "2.2.1";
        attach_witness();
        return res;
    }

    // One-sided family with finitely many weight values: rational elasticity
    // s_max / s_min over the projection weights along the limit direction.
    std::vector<Int> sv;
    for (const IntVec& f : family.finite_atoms) {
        Int w = projection_weight(e.direction, f);
        if (w == 0)
            throw UnsupportedConfiguration(
                "finite atom " + show(f) + " lies on the limit ray; weight-0 "
                "atoms fall outside the decided fragment");
        sv.push_back(w);
    }
    for (const AtomSequence& s : family.sequences) {
        Int w = projection_weight(e.direction, s.member(s.n_start));
        if (w == 0)
            throw UnsupportedConfiguration(
                "sequence starting at " + show(s.member(s.n_start)) +
                " has weight 0 against the limit direction");
        sv.push_back(w);
    }
    std::sort(sv.begin(), sv.end());
    sv.erase(std::unique(sv.begin(), sv.end()), sv.end());

    res.kind = ElasticityKind::Rational;
    res.case_id = "2.2.2";
    res.s_values = sv;
    res.value = Rat(sv.back(), sv.front());
    res.attained = Attained::Unknown;
    return res;
}

// ------------------------------------------------- polyhedral certificate --

RatioWitness polyhedral_certificate(const MonoidSpec& family, const Int& N,
                                    const Int& index_bound)
{
    family.validate();
    if (family.kind != SpecKind::Family)
        throw ContractError("polyhedral_certificate needs a family spec");
    if (family.dim < 3)
        throw ContractError("polyhedral certificates target dimension >= 3");
    if (family.finite_atoms.empty())
        throw ContractError("the declared extreme-ray atoms are missing");
    if (family.sequences.empty())
        throw ContractError("family has no sequences");
    if (N < 1)
        throw ContractError("target N must be at least 1");

    const std::vector<IntVec>& ext = family.finite_atoms;
    std::size_t d = family.dim;

    // Pointedness: no nontrivial nonnegative combination of the extreme
    // atoms vanishes.
    {
        std::vector<std::vector<Rat>> A = cone_rows(ext, d);
        A.push_back(std::vector<Rat>(ext.size(), Rat(1)));
        std::vector<Rat> b(d, Rat(0));
        b.push_back(Rat(1));
        if (lp_feasible(A, b).status == LpStatus::Optimal)
            throw ContractError("the declared cone is not pointed");
    }

    // Containment: window check plus symbolic tail through the coefficients.
    for (const AtomSequence& s : family.sequences) {
        for (Int n = s.n_start; n <= s.n_start + 16; ++n) {
            IntVec m = s.member(n);
            if (!in_cone(ext, m))
                throw ContractError("sequence member " + show(m) + " at n = " +
                                    n.str() + " leaves the declared cone");
        }
        IntVec base = s.member(s.n_start);
        if (!in_cone(ext, base) || !in_cone(ext, s.c1) || !in_cone(ext, s.c2))
            throw ContractError("cannot certify cone containment for the tail "
                                "of a sequence; c1 or c2 leaves the cone");
    }

    // Norm threshold that forces many extreme-atom copies into any
    // decomposition (Cauchy-Schwarz turns the norm sum into a square sum).
    Int sum_sq = 0;
    for (const IntVec& a : ext) {
        Int q = norm_sq(a);
        sum_sq += q;
    }
    Int need = (N + 1) * (N + 1) * Int(ext.size()) * sum_sq;

    IntVec a;
    bool have = false;
    for (Int n = 1; n <= index_bound && !have; ++n) {
        for (const AtomSequence& s : family.sequences) {
            if (n < s.n_start)
                continue;
            IntVec m = s.member(n);
            if (norm_sq(m) > need) {
                a = m;
                have = true;
                break;
            }
        }
    }
    if (!have)
        throw ResourceError("no sequence member long enough for N = " + N.str() +
                            " within index bound " + index_bound.str());

    // a = v + sum c_i a_i with v in the fundamental parallelepiped.
    std::vector<Rat> beta;
    if (!in_cone(ext, a, &beta))
        throw ContractError("chosen member " + show(a) + " is outside the cone");
    std::vector<Int> cvec(ext.size());
    IntVec v = a;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        Int fl = floor_div(rat_num(beta[i]), rat_den(beta[i]));
        cvec[i] = fl;
        v = sub(v, scale(fl, ext[i]));
    }

    // Uniform multiplier: lcm of the minimal t with t*z representable, over
    // the lattice points of the parallelepiped.
    IntVec box(d);
    for (const IntVec& e : ext)
        box = add(box, e);
    Int cells = 1;
    for (std::size_t j = 0; j < d; ++j) {
        cells *= box[j] + 1;
        if (cells > 2000000)
            throw ResourceError("parallelepiped bounding box exceeds 2e6 points");
    }

    AtomList ext_list;
    ext_list.dim = d;
    ext_list.atoms = ext;
    std::sort(ext_list.atoms.begin(), ext_list.atoms.end(), canon_less);
    ext_list.atoms.erase(std::unique(ext_list.atoms.begin(), ext_list.atoms.end()),
                         ext_list.atoms.end());

    Int N0 = 1;
    IntVec z(d);
    auto visit = [&](auto&& self, std::size_t j) -> void {
        if (j == d) {
            if (is_zero(z) || !in_cone(ext, z))
                return;
            // skip points outside the half-open parallelepiped: alpha_i <= 1
            std::vector<std::vector<Rat>> A = cone_rows(ext, d);
            std::size_t k = ext.size();
            for (auto& row : A)
                row.resize(2 * k, Rat(0));
            for (std::size_t i = 0; i < k; ++i) {
                std::vector<Rat> slack(2 * k, Rat(0));
                slack[i] = Rat(1);
                slack[k + i] = Rat(1);
                A.push_back(std::move(slack));
            }
            std::vector<Rat> b = rat_rhs(z);
            for (std::size_t i = 0; i < k; ++i)
                b.push_back(Rat(1));
            if (lp_feasible(A, b).status != LpStatus::Optimal)
                return;
            Int t = 1;
            for (; t <= 64; ++t)
                if (is_member(ext_list, scale(t, z)))
                    break;
            if (t > 64)
                throw ResourceError("no multiplier t <= 64 makes " + show(z) +
                                    " representable over the extreme atoms");
            N0 = boost::multiprecision::lcm(N0, t);
            return;
        }
        for (Int w = 0; w <= box[j]; ++w) {
            z[j] = w;
            self(self, j + 1);
        }
        z[j] = 0;
    };
    visit(visit, 0);

    // N0 * v decomposes integrally; take the first factorization.
    IntVec nv = scale(N0, v);
    auto zs = factorizations(ext_list, nv);
    if (zs.empty())
        throw ContractError("internal: N0 * v is not representable over the "
                            "extreme atoms");
    std::vector<std::pair<IntVec, Int>> long_side;
    for (std::size_t i = 0; i < ext_list.atoms.size(); ++i) {
        Int coeff = zs.front().expo[i];
        // add N0 * c for the matching declared atom
        for (std::size_t j = 0; j < ext.size(); ++j)
            if (ext[j] == ext_list.atoms[i])
                coeff += N0 * cvec[j];
        if (coeff != 0)
            long_side.emplace_back(ext_list.atoms[i], coeff);
    }

    RatioWitness w = make_witness(scale(N0, a), {{a, N0}}, long_side);
    verify_certificate(w);
    if (!(w.ratio > Rat(N)))
        throw ContractError("internal: certificate ratio " + rat_string(w.ratio) +
                            " did not exceed N = " + N.str());
    return w;
}

// ----------------------------------------------------------- verification --

Rat verify_certificate(const RatioWitness& w)
{
    std::size_t k = w.atoms.size();
    if (k == 0)
        throw ContractError("certificate has no atoms");
    if (w.short_expo.size() != k || w.long_expo.size() != k)
        throw ContractError("certificate exponent vectors do not match the "
                            "atom count");
    std::size_t d = w.element.dim();
    for (const IntVec& a : w.atoms) {
        if (a.dim() != d)
            throw ContractError("certificate atom " + show(a) +
                                " has the wrong dimension");
        if (is_zero(a) || !nonneg(a))
            throw ContractError("certificate atom " + show(a) + " is invalid");
    }
    for (const Int& c : w.short_expo)
        if (c < 0)
            throw ContractError("negative exponent on the short side");
    for (const Int& c : w.long_expo)
        if (c < 0)
            throw ContractError("negative exponent on the long side");

    auto recombine = [&](const std::vector<Int>& expo, const char* side) {
        IntVec s(d);
        for (std::size_t i = 0; i < k; ++i)
            s = add(s, scale(expo[i], w.atoms[i]));
        for (std::size_t j = 0; j < d; ++j)
            if (s[j] != w.element[j])
                throw ContractError(std::string(side) + " side mismatch at "
                                    "coordinate " + std::to_string(j + 1) +
                                    ": got " + s[j].str() + ", element has " +
                                    w.element[j].str());
    };
    recombine(w.short_expo, "short");
    recombine(w.long_expo, "long");

    Int ls = 0, ll = 0;
    for (const Int& c : w.short_expo)
        ls += c;
    for (const Int& c : w.long_expo)
        ll += c;
    if (ls == 0 || ll == 0)
        throw ContractError("certificate factorization is empty on one side");
    Rat ratio = ls <= ll ? Rat(ll, ls) : Rat(ls, ll);
    if (w.ratio != 0 && w.ratio != ratio)
        throw ContractError("claimed ratio " + rat_string(w.ratio) +
                            " differs from the recomputed " + rat_string(ratio));
    return ratio;
}

Json certificate_json(const RatioWitness& w)
{
    Json j;
    j["element"] = vec_json(w.element);
    Json atoms = Json::array();
    for (const IntVec& a : w.atoms)
        atoms.push_back(vec_json(a));
    j["atoms"] = atoms;
    Json se = Json::array(), le = Json::array();
    for (const Int& c : w.short_expo)
        se.push_back(int_json(c));
    for (const Int& c : w.long_expo)
        le.push_back(int_json(c));
    j["short"] = se;
    j["long"] = le;
    j["ratio"] = rat_string(w.ratio);
    return j;
}

RatioWitness certificate_from_json(const Json& j)
{
    if (!j.is_object())
        throw ContractError("certificate must be a JSON object");
    for (const char* key : {"element", "atoms", "short", "long", "ratio"})
        if (!j.contains(key))
            throw ContractError(std::string("certificate needs '") + key + "'");
    RatioWitness w;
    w.element = vec_from_json(j.at("element"));
    for (const Json& e : j.at("atoms"))
        w.atoms.push_back(vec_from_json(e));
    for (const Json& e : j.at("short"))
        w.short_expo.push_back(int_from_json(e));
    for (const Json& e : j.at("long"))
        w.long_expo.push_back(int_from_json(e));
    w.ratio = parse_rat(j.at("ratio").get<std::string>());
    return w;
}

} // namespace latfact
