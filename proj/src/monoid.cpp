#include "latfact/monoid.hpp"

#include "latfact/factorization.hpp"
#include "latfact/geometry.hpp"

#include <algorithm>
#include <set>

namespace latfact {
namespace {

// ---- exact helpers for quadratics q(n) = A + B n + C n^2 over Int ----

Int quad_eval(const Int& A, const Int& B, const Int& C, const Int& n)
{
    return A + B * n + C * n * n;
}

// Minimum over integers n >= n0.  Requires C > 0, or C == 0 with B >= 0.
Int quad_min_from(const Int& A, const Int& B, const Int& C, const Int& n0)
{
    if (C == 0)
        return quad_eval(A, B, C, n0);
    Int v = floor_div(-B, 2 * C);   // floor of the real vertex
    Int lo = v < n0 ? n0 : v;
    Int hi = v + 1 < n0 ? n0 : v + 1;
    Int a = quad_eval(A, B, C, lo), b = quad_eval(A, B, C, hi);
    return a < b ? a : b;
}

bool quad_nonneg_from(const Int& A, const Int& B, const Int& C, const Int& n0)
{
    if (C < 0)
        return false;
    if (C == 0 && B < 0)
        return false;
    return quad_min_from(A, B, C, n0) >= 0;
}

// +1 / -1 when q keeps that strict sign for every integer n >= n0, else 0.
int quad_stable_sign_from(const Int& A, const Int& B, const Int& C, const Int& n0)
{
    auto stable_pos = [](const Int& a, const Int& b, const Int& c, const Int& n) {
        if (c < 0 || (c == 0 && b < 0))
            return false;
        return quad_min_from(a, b, c, n) > 0;
    };
    if (stable_pos(A, B, C, n0))
        return 1;
    if (stable_pos(-A, -B, -C, n0))
        return -1;
    return 0;
}

// Integer roots of q with n >= n0, at most two.
std::vector<Int> quad_int_roots_from(const Int& A, const Int& B, const Int& C,
                                     const Int& n0)
{
    std::vector<Int> roots;
    auto push = [&](const Int& n) {
        if (n >= n0 && quad_eval(A, B, C, n) == 0)
            roots.push_back(n);
    };
    if (C == 0) {
        if (B == 0)
            return roots;   // constant; A == 0 handled by callers
        if (A % B == 0)
            push(-A / B);
        return roots;
    }
    Int disc = B * B - 4 * A * C;
    if (disc < 0)
        return roots;
    Int s = isqrt_floor(disc);
    if (s * s != disc)
        return roots;
    Int den = 2 * C;
    Int hi = s - B, lo = -B - s;
    for (const Int& num : {hi, lo})
        if (num % den == 0)
            push(num / den);
    return roots;
}

void check_atom_vector(const IntVec& v, std::size_t dim, const char* what)
{
    if (v.dim() != dim)
        throw ContractError(std::string(what) + " " + show(v) + " has dimension " +
                            std::to_string(v.dim()) + ", expected " +
                            std::to_string(dim));
    if (!nonneg(v))
        throw ContractError(std::string(what) + " " + show(v) +
                            " has a negative coordinate");
    if (is_zero(v))
        throw ContractError(std::string(what) + " must be nonzero");
}

} // namespace

// ----------------------------------------------------------- AtomSequence --

IntVec AtomSequence::member(const Int& n) const
{
    IntVec r(c0.dim());
    for (std::size_t j = 0; j < c0.dim(); ++j)
        r[j] = quad_eval(c0[j], c1[j], c2[j], n);
    return r;
}

const IntVec& AtomSequence::leading() const
{
    return is_zero(c2) ? c1 : c2;
}

int AtomSequence::degree() const
{
    if (!is_zero(c2))
        return 2;
    if (!is_zero(c1))
        return 1;
    return 0;
}

void AtomSequence::validate(std::size_t dim) const
{
    if (c0.dim() != dim || c1.dim() != dim || c2.dim() != dim)
        throw ContractError("sequence coefficients must all have dimension " +
                            std::to_string(dim));
    if (n_start < 1)
        throw ContractError("sequence start index must be at least 1, got " +
                            n_start.str());
    if (degree() == 0)
        throw ContractError("constant sequence: c1 and c2 are both zero");

    const IntVec& lead = leading();
    if (!nonneg(lead) || is_zero(lead))
        throw ContractError("sequence leading coefficient " + show(lead) +
                            " must be nonzero with nonnegative coordinates");

    for (std::size_t j = 0; j < dim; ++j) {
        if (!quad_nonneg_from(c0[j], c1[j], c2[j], n_start))
            throw ContractError("sequence coordinate " + std::to_string(j + 1) +
                                " goes negative for some n >= " + n_start.str());
    }

    // No member may be the zero vector.  Zeros of the member vector are
    // common integer roots of all coordinate quadratics; the leading
    // coefficient is nonzero, so some coordinate has finitely many roots.
    std::size_t jlead = 0;
    while (c1[jlead] == 0 && c2[jlead] == 0)
        ++jlead;
    for (const Int& n : quad_int_roots_from(c0[jlead], c1[jlead], c2[jlead], n_start))
        if (is_zero(member(n)))
            throw ContractError("sequence member at n = " + n.str() +
                                " is the zero vector");

    if (dim == 2 && !slope_sign().has_value())
        throw ContractError("sequence slopes are not strictly monotone in n");
}

std::optional<int> AtomSequence::slope_sign() const
{
    // det2(a(n), a(n+1)) expands to a quadratic in n with the coefficients
    // below; a stable strict sign means strictly monotone slopes.
    Int A = det2(c0, c1), B = det2(c0, c2), C = det2(c1, c2);
    Int qA = A + B, qB = 2 * B + C, qC = C;
    int s = quad_stable_sign_from(qA, qB, qC, n_start);
    if (s == 0)
        return std::nullopt;
    return s;   // +1: slopes strictly increasing, -1: strictly decreasing
}

bool AtomSequence::slope_increasing() const
{
    auto s = slope_sign();
    if (!s)
        throw ContractError("sequence slopes are not strictly monotone in n");
    return *s > 0;
}

SlopeValue AtomSequence::limit_slope() const
{
    return slope_of(leading());
}

IntVec AtomSequence::limit_direction() const
{
    const IntVec& lead = leading();
    Int g = 0;
    for (const Int& c : lead.c)
        g = boost::multiprecision::gcd(g, c);
    IntVec r(lead.dim());
    for (std::size_t j = 0; j < lead.dim(); ++j)
        r[j] = lead[j] / g;
    return r;
}

Int AtomSequence::monotone_norm_index() const
{
    // Past this index every coordinate quadratic is nondecreasing, so member
    // norms are nondecreasing and enumeration by norm bound can stop.
    Int best = n_start;
    for (std::size_t j = 0; j < c0.dim(); ++j) {
        if (c2[j] > 0) {
            // ceil of the vertex -c1/(2 c2)
            Int v = -floor_div(c1[j], 2 * c2[j]);
            if (v > best)
                best = v;
        }
        // c2 == 0: coordinate is linear with c1 >= 0 by validation, fine.
    }
    return best;
}

// ------------------------------------------------------------- MonoidSpec --

void MonoidSpec::validate() const
{
    if (dim == 0)
        throw ContractError("dimension must be at least 1");
    if (kind == SpecKind::Finite) {
        if (generators.empty())
            throw ContractError("finite spec needs at least one generator");
        for (const IntVec& g : generators)
            check_atom_vector(g, dim, "generator");
    } else {
        for (const IntVec& a : finite_atoms)
            check_atom_vector(a, dim, "finite atom");
        if (finite_atoms.empty() && sequences.empty())
            throw ContractError("family spec needs at least one atom or sequence");
        for (const AtomSequence& s : sequences)
            s.validate(dim);
    }
}

AtomList atoms_of(const std::vector<IntVec>& generators)
{
    if (generators.empty())
        throw ContractError("atoms_of needs at least one generator");
    std::size_t dim = generators[0].dim();
    std::vector<IntVec> gens;
    for (const IntVec& g : generators) {
        check_atom_vector(g, dim, "generator");
        gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(), canon_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    AtomList out;
    out.dim = dim;
    for (const IntVec& g : gens)
        if (!reducible_over(gens, g))
            out.atoms.push_back(g);
    return out;
}

std::vector<IntVec> family_members_up_to(const MonoidSpec& family,
                                         const Int& norm_sq_bound)
{
    if (family.kind != SpecKind::Family)
        throw ContractError("family_members_up_to needs a family spec");
    std::vector<IntVec> out;
    for (const IntVec& a : family.finite_atoms)
        if (norm_sq(a) <= norm_sq_bound)
            out.push_back(a);
    for (const AtomSequence& s : family.sequences) {
        Int stable = s.monotone_norm_index();
        for (Int n = s.n_start;; ++n) {
            IntVec m = s.member(n);
            if (norm_sq(m) <= norm_sq_bound) {
                out.push_back(m);
                if (out.size() > 5000000)
                    throw ResourceError("family member enumeration exceeded 5e6 "
                                        "vectors below norm bound " +
                                        norm_sq_bound.str());
            } else if (n >= stable) {
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), canon_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ValidationReport validate_family_atoms(const MonoidSpec& family, std::size_t window)
{
    family.validate();
    if (family.kind != SpecKind::Family)
        throw ContractError("validate_family_atoms needs a family spec");

    // Collect at least `window` members by geometrically growing the bound.
    Int bound = 64;
    std::vector<IntVec> members;
    bool finite_only = family.sequences.empty();
    for (int it = 0; it < 400; ++it) {
        members = family_members_up_to(family, bound);
        if (members.size() >= window || finite_only)
            break;
        bound *= 4;
    }
    if (members.size() > window)
        members.resize(window);

    ValidationReport rep;
    rep.ok = true;
    for (const IntVec& m : members) {
        std::vector<IntVec> pool = family_members_up_to(family, norm_sq(m));
        auto w = reducible_witness(pool, m);
        if (w) {
            rep.ok = false;
            rep.violations.push_back(AtomViolation{m, *w});
        }
    }
    return rep;
}

AtomList truncate_atoms(const MonoidSpec& spec, const Int& norm_sq_bound)
{
    spec.validate();
    AtomList out;
    out.dim = spec.dim;
    if (spec.kind == SpecKind::Finite) {
        // Truncation keeps a finite generator list as given (deduplicated,
        // canonically ordered); reduction to atoms is a separate operation.
        out.atoms = spec.generators;
        std::sort(out.atoms.begin(), out.atoms.end(), CanonLess{});
        out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end(),
                                    [](const IntVec& a, const IntVec& b) {
                                        return a.c == b.c;
                                    }),
                        out.atoms.end());
        return out;
    }
    out.atoms = family_members_up_to(spec, norm_sq_bound);
    return out;
}

MonoidSpec truncate(const MonoidSpec& spec, const Int& norm_sq_bound)
{
    AtomList atoms = truncate_atoms(spec, norm_sq_bound);
    if (atoms.atoms.empty())
        throw ContractError("truncation at norm bound " + norm_sq_bound.str() +
                            " contains no atoms");
    MonoidSpec out;
    out.dim = spec.dim;
    out.kind = SpecKind::Finite;
    out.generators = atoms.atoms;
    return out;
}

// ------------------------------------------------------------------- JSON --

static std::vector<IntVec> vec_list_from_json(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ContractError(std::string("'") + what + "' must be an array");
    std::vector<IntVec> out;
    for (const Json& e : j)
        out.push_back(vec_from_json(e));
    return out;
}

MonoidSpec parse_spec(const Json& j)
{
    if (!j.is_object())
        throw ContractError("spec must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::set<std::string> keys = {
            "dim", "kind", "generators", "finite_atoms", "sequences"};
        if (!keys.count(it.key()))
            throw ContractError("unknown spec key '" + it.key() + "'");
    }
    if (!j.contains("dim") || !j.contains("kind"))
        throw ContractError("spec needs 'dim' and 'kind'");

    MonoidSpec spec;
    Int d = int_from_json(j.at("dim"));
    if (d < 1 || d > 64)
        throw ContractError("'dim' must be between 1 and 64");
    spec.dim = d.convert_to<std::size_t>();

    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        spec.kind = SpecKind::Finite;
        if (!j.contains("generators"))
            throw ContractError("finite spec needs 'generators'");
        if (j.contains("finite_atoms") || j.contains("sequences"))
            throw ContractError("finite spec cannot carry family fields");
        spec.generators = vec_list_from_json(j.at("generators"), "generators");
    } else if (kind == "family") {
        spec.kind = SpecKind::Family;
        if (j.contains("generators"))
            throw ContractError("family spec cannot carry 'generators'");
        if (j.contains("finite_atoms"))
            spec.finite_atoms = vec_list_from_json(j.at("finite_atoms"), "finite_atoms");
        for (const Json& sj : j.value("sequences", Json::array())) {
            if (!sj.is_object())
                throw ContractError("each sequence must be an object");
            for (auto it = sj.begin(); it != sj.end(); ++it) {
                static const std::set<std::string> skeys = {"c0", "c1", "c2",
                                                            "n_start"};
                if (!skeys.count(it.key()))
                    throw ContractError("unknown sequence key '" + it.key() + "'");
            }
            AtomSequence s;
            if (!sj.contains("c0") || !sj.contains("c1"))
                throw ContractError("sequence needs 'c0' and 'c1'");
            s.c0 = vec_from_json(sj.at("c0"));
            s.c1 = vec_from_json(sj.at("c1"));
            if (sj.contains("c2"))
                s.c2 = vec_from_json(sj.at("c2"));
            else
                s.c2 = IntVec(s.c0.dim());
            if (sj.contains("n_start"))
                s.n_start = int_from_json(sj.at("n_start"));
            spec.sequences.push_back(std::move(s));
        }
    } else {
        throw ContractError("'kind' must be \"finite\" or \"family\", got \"" +
                            kind + "\"");
    }
    spec.validate();
    return spec;
}

Json spec_to_json(const MonoidSpec& spec)
{
    Json j;
    j["dim"] = spec.dim;
    if (spec.kind == SpecKind::Finite) {
        j["kind"] = "finite";
        Json g = Json::array();
        for (const IntVec& v : spec.generators)
            g.push_back(vec_json(v));
        j["generators"] = g;
    } else {
        j["kind"] = "family";
        Json f = Json::array();
        for (const IntVec& v : spec.finite_atoms)
            f.push_back(vec_json(v));
        j["finite_atoms"] = f;
        Json ss = Json::array();
        for (const AtomSequence& s : spec.sequences) {
            Json sj;
            sj["c0"] = vec_json(s.c0);
            sj["c1"] = vec_json(s.c1);
            sj["c2"] = vec_json(s.c2);
            sj["n_start"] = int_json(s.n_start);
            ss.push_back(sj);
        }
        j["sequences"] = ss;
    }
    return j;
}

} // namespace latfact
