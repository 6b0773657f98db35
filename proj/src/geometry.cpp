#include "latfact/geometry.hpp"

#include <algorithm>
#include <cctype>

namespace latfact {

// ---------------------------------------------------------------- numbers --

Int parse_int(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        throw ContractError("bad integer literal: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ContractError("bad integer literal: '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

Rat parse_rat(const std::string& s)
{
    auto pos = s.find('/');
    if (pos == std::string::npos)
        return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, pos));
    Int q = parse_int(s.substr(pos + 1));
    if (q == 0)
        throw ContractError("zero denominator in '" + s + "'");
    return Rat(p, q);
}

Json int_json(const Int& v)
{
    if (fits_int64(v))
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string())
        return parse_int(j.get<std::string>());
    throw ContractError("expected an integer, got " + j.dump());
}

// -------------------------------------------------------------------- vec --

IntVec add(const IntVec& a, const IntVec& b)
{
    IntVec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const Int& k, const IntVec& a)
{
    IntVec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r[i] = k * a[i];
    return r;
}

bool is_zero(const IntVec& a)
{
    for (const Int& v : a.c)
        if (v != 0)
            return false;
    return true;
}

bool nonneg(const IntVec& a)
{
    for (const Int& v : a.c)
        if (v < 0)
            return false;
    return true;
}

bool leq_coordinatewise(const IntVec& a, const IntVec& b)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Int norm_sq(const IntVec& a)
{
    Int s = 0;
    for (const Int& v : a.c)
        s += v * v;
    return s;
}

Int norm_l1(const IntVec& a)
{
    Int s = 0;
    for (const Int& v : a.c)
        s += abs(v);
    return s;
}

bool lex_less(const IntVec& a, const IntVec& b)
{
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

bool canon_less(const IntVec& a, const IntVec& b)
{
    Int na = norm_sq(a), nb = norm_sq(b);
    if (na != nb)
        return na < nb;
    return lex_less(a, b);
}

std::string show(const IntVec& a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i)
            s += ", ";
        s += a[i].str();
    }
    return s + ")";
}

Json vec_json(const IntVec& a)
{
    Json j = Json::array();
    for (const Int& v : a.c)
        j.push_back(int_json(v));
    return j;
}

IntVec vec_from_json(const Json& j)
{
    if (!j.is_array())
        throw ContractError("expected a coordinate array, got " + j.dump());
    IntVec r;
    for (const Json& e : j)
        r.c.push_back(int_from_json(e));
    return r;
}

// --------------------------------------------------------------- geometry --

static void require_dim2(const IntVec& v, const char* what)
{
    if (v.dim() != 2)
        throw ContractError(std::string(what) + " requires dimension 2, got " +
                            std::to_string(v.dim()));
}

Int det2(const IntVec& u, const IntVec& v)
{
    require_dim2(u, "det2");
    require_dim2(v, "det2");
    return u[0] * v[1] - u[1] * v[0];
}

static void require_slope_arg(const IntVec& v)
{
    require_dim2(v, "slope comparison");
    if (is_zero(v) || !nonneg(v))
        throw ContractError("slope undefined for " + show(v) +
                            "; need a nonzero vector in the closed first quadrant");
}

Ordering slope_cmp(const IntVec& u, const IntVec& v)
{
    require_slope_arg(u);
    require_slope_arg(v);
    Int d = det2(u, v);
    if (d > 0)
        return Ordering::Less;
    if (d < 0)
        return Ordering::Greater;
    return Ordering::Equal;
}

SlopeValue slope_of(const IntVec& v)
{
    require_slope_arg(v);
    SlopeValue s;
    if (v[0] == 0) {
        s.infinite = true;
    } else {
        s.value = Rat(v[1], v[0]);
    }
    return s;
}

bool slope_less(const SlopeValue& a, const SlopeValue& b)
{
    if (a.infinite)
        return false;
    if (b.infinite)
        return true;
    return a.value < b.value;
}

std::string slope_string(const SlopeValue& s)
{
    return s.infinite ? "inf" : rat_string(s.value);
}

CramerCoefficients cramer_decompose(const IntVec& x, const IntVec& a, const IntVec& y)
{
    if (slope_cmp(x, a) != Ordering::Less || slope_cmp(a, y) != Ordering::Less)
        throw ContractError("cramer_decompose needs slope(x) < slope(a) < slope(y); "
                            "offending triple x=" + show(x) + " a=" + show(a) +
                            " y=" + show(y));
    CramerCoefficients c;
    c.c_x = det2(a, y);
    c.c_y = det2(x, a);
    c.c_a = det2(x, y);
    return c;
}

Int projection_weight(const IntVec& v, const IntVec& a)
{
    return abs(det2(v, a));
}

static IntVec primitive(const IntVec& v)
{
    Int g = 0;
    for (const Int& c : v.c)
        g = boost::multiprecision::gcd(g, c);
    IntVec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        r[i] = v[i] / g;
    return r;
}

std::vector<IntVec> hilbert_basis_2d(const IntVec& r1, const IntVec& r2)
{
    require_slope_arg(r1);
    require_slope_arg(r2);
    if (det2(r1, r2) == 0)
        throw ContractError("hilbert_basis_2d: rays " + show(r1) + " and " + show(r2) +
                            " are colinear");

    IntVec u = primitive(r1), w = primitive(r2);
    if (slope_cmp(u, w) == Ordering::Greater)
        std::swap(u, w);
    Int D = det2(u, w);   // > 0 after ordering

    // Every basis element lies in the fundamental parallelogram of (u, w).
    Int bx = u[0] + w[0], by = u[1] + w[1];
    if ((bx + 1) * (by + 1) > 4000000)
        throw ResourceError("hilbert_basis_2d: parallelogram bounding box too large: " +
                            show(u) + ", " + show(w));

    std::vector<IntVec> cand;
    for (Int x = 0; x <= bx; ++x) {
        for (Int y = 0; y <= by; ++y) {
            if (x == 0 && y == 0)
                continue;
            IntVec p{x, y};
            Int alpha = det2(p, w);   // D * parallelogram coordinate along u
            Int beta = det2(u, p);
            if (alpha < 0 || alpha > D || beta < 0 || beta > D)
                continue;
            cand.push_back(p);
        }
    }

    auto in_cone = [&](const IntVec& p) {
        return det2(u, p) >= 0 && det2(p, w) >= 0;
    };

    std::vector<IntVec> basis;
    for (const IntVec& p : cand) {
        bool reducible = false;
        for (const IntVec& q : cand) {
            if (q == p)
                continue;
            IntVec r = sub(p, q);
            if (is_zero(r) || !nonneg(r))
                continue;
            if (in_cone(r)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            basis.push_back(p);
    }

    std::sort(basis.begin(), basis.end(), [](const IntVec& a, const IntVec& b) {
        Int d = det2(a, b);
        if (d != 0)
            return d > 0;   // smaller slope first
        return canon_less(a, b);
    });
    return basis;
}

} // namespace latfact
