#include "latfact/factorization.hpp"

#include "latfact/geometry.hpp"

#include <algorithm>
#include <thread>

namespace latfact {
namespace {

// Backtracking search over exponent vectors, templated so desk-scale inputs
// run on machine words.  The int64 instantiation is valid whenever every
// coordinate of the target is below 2^31: exponents and coordinates then stay
// below 2^31 and the 2x2 determinants in the cone prune below 2^62.
//
// In dimension 2 the atoms are fed in slope order.  Once atoms 0..i-1 are
// exhausted the remainder has to sit inside the cone spanned by atom i and
// the last atom, otherwise no completion exists; checking the two
// determinant signs kills dead branches at the top of the tree.

template <class T>
struct Kernel {
    std::size_t d = 0, k = 0;
    std::vector<T> atom;     // k*d, enumeration order
    std::vector<T> rem;
    std::vector<T> expo;
    T total = 0;
    bool use_cone = false;

    std::vector<std::vector<T>> out;
    T min_total = 0;         // record only factorizations at least this long
    bool stop_on_first = false;
    bool found = false;

    const T* a(std::size_t i) const { return atom.data() + i * d; }

    bool rem_zero() const
    {
        for (std::size_t j = 0; j < d; ++j)
            if (rem[j] != 0)
                return false;
        return true;
    }

    bool cone_ok(std::size_t i) const
    {
        const T* lo = a(i);
        const T* hi = a(k - 1);
        if (lo[0] * rem[1] - lo[1] * rem[0] < 0)
            return false;
        if (rem[0] * hi[1] - rem[1] * hi[0] < 0)
            return false;
        return true;
    }

    void record()
    {
        if (total < min_total)
            return;
        found = true;
        out.push_back(expo);
    }

    void run(std::size_t i)
    {
        if (stop_on_first && found)
            return;
        if (rem_zero()) {
            record();
            return;
        }
        if (i == k)
            return;
        if (use_cone && !cone_ok(i))
            return;

        const T* p = a(i);
        if (i == k - 1) {
            // Last atom: the remainder must be an exact positive multiple.
            std::size_t j0 = 0;
            while (p[j0] == 0)
                ++j0;
            if (rem[j0] % p[j0] != 0)
                return;
            T c = rem[j0] / p[j0];
            if (c <= 0)
                return;
            for (std::size_t j = 0; j < d; ++j)
                if (rem[j] != c * p[j])
                    return;
            expo[i] = c;
            total += c;
            record();
            total -= c;
            expo[i] = 0;
            return;
        }

        T c = 0;
        while (true) {
            run(i + 1);
            if (stop_on_first && found)
                break;
            bool fits = true;
            for (std::size_t j = 0; j < d; ++j) {
                if (rem[j] < p[j]) {
                    fits = false;
                    break;
                }
            }
            if (!fits)
                break;
            for (std::size_t j = 0; j < d; ++j)
                rem[j] -= p[j];
            ++c;
            expo[i] = c;
            ++total;
        }
        for (std::size_t j = 0; j < d; ++j)
            rem[j] += c * p[j];
        total -= c;
        expo[i] = 0;
    }
};

struct Prepared {
    std::size_t d = 0;
    std::vector<IntVec> atoms;          // enumeration order, filtered to <= x
    std::vector<std::size_t> canon;     // enumeration position -> index in input list
    bool use_cone = false;
};

Prepared prepare(const AtomList& atoms, const IntVec& x)
{
    if (atoms.dim == 0)
        throw ContractError("factorization search over dimension 0");
    if (atoms.atoms.empty())
        throw ContractError("factorization search over an empty atom list");
    if (x.dim() != atoms.dim)
        throw ContractError("element " + show(x) + " has dimension " +
                            std::to_string(x.dim()) + ", atoms have dimension " +
                            std::to_string(atoms.dim));
    if (!nonneg(x))
        throw ContractError("element " + show(x) + " has a negative coordinate");
    for (const IntVec& a : atoms.atoms) {
        if (a.dim() != atoms.dim)
            throw ContractError("atom " + show(a) + " has the wrong dimension");
        if (is_zero(a) || !nonneg(a))
            throw ContractError("atom " + show(a) +
                                " must be nonzero with nonnegative coordinates");
    }

    Prepared p;
    p.d = atoms.dim;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < atoms.atoms.size(); ++i)
        if (leq_coordinatewise(atoms.atoms[i], x))
            idx.push_back(i);

    if (p.d == 2) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            Int d2 = det2(atoms.atoms[a], atoms.atoms[b]);
            if (d2 != 0)
                return d2 > 0;
            if (canon_less(atoms.atoms[a], atoms.atoms[b]))
                return true;
            if (canon_less(atoms.atoms[b], atoms.atoms[a]))
                return false;
            return a < b;
        });
        p.use_cone = true;
    } else {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            Int na = norm_sq(atoms.atoms[a]), nb = norm_sq(atoms.atoms[b]);
            if (na != nb)
                return na > nb;   // heavy atoms first: small exponent ranges up top
            if (lex_less(atoms.atoms[a], atoms.atoms[b]))
                return true;
            if (lex_less(atoms.atoms[b], atoms.atoms[a]))
                return false;
            return a < b;
        });
    }
    for (std::size_t i : idx) {
        p.atoms.push_back(atoms.atoms[i]);
        p.canon.push_back(i);
    }
    return p;
}

bool int64_safe(const IntVec& x)
{
    for (const Int& v : x.c)
        if (v >= Int(1) << 31)
            return false;
    return true;
}

template <class T>
Kernel<T> make_kernel(const Prepared& p, const IntVec& x)
{
    Kernel<T> k;
    k.d = p.d;
    k.k = p.atoms.size();
    k.use_cone = p.use_cone && k.k > 0;
    k.atom.reserve(k.k * k.d);
    for (const IntVec& a : p.atoms)
        for (const Int& v : a.c)
            k.atom.push_back(v.template convert_to<T>());
    k.rem.reserve(k.d);
    for (const Int& v : x.c)
        k.rem.push_back(v.template convert_to<T>());
    k.expo.assign(k.k, T(0));
    return k;
}

template <>
Kernel<Int> make_kernel<Int>(const Prepared& p, const IntVec& x)
{
    Kernel<Int> k;
    k.d = p.d;
    k.k = p.atoms.size();
    k.use_cone = p.use_cone && k.k > 0;
    for (const IntVec& a : p.atoms)
        for (const Int& v : a.c)
            k.atom.push_back(v);
    k.rem = x.c;
    k.expo.assign(k.k, Int(0));
    return k;
}

template <class T>
std::vector<std::vector<Int>> run_search(const Prepared& p, const IntVec& x,
                                         const Int& min_total, bool stop_on_first,
                                         unsigned threads)
{
    std::vector<std::vector<std::vector<T>>> chunks;

    if (threads <= 1 || p.atoms.empty()) {
        Kernel<T> k = make_kernel<T>(p, x);
        k.min_total = min_total.convert_to<T>();
        k.stop_on_first = stop_on_first;
        k.run(0);
        chunks.push_back(std::move(k.out));
    } else {
        // Split the exponent range of the first atom across workers by
        // residue class.  Output order is restored by the lexicographic
        // sort at the end of search(), so thread count never changes results.
        const IntVec& a0 = p.atoms[0];
        Int bound = -1;
        for (std::size_t j = 0; j < p.d; ++j) {
            if (a0[j] == 0)
                continue;
            Int q = x[j] / a0[j];
            if (bound < 0 || q < bound)
                bound = q;
        }
        chunks.resize(threads);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w]() {
                Kernel<T> k = make_kernel<T>(p, x);
                k.min_total = min_total.convert_to<T>();
                k.stop_on_first = false;
                for (Int c0 = w; c0 <= bound; c0 += threads) {
                    T c = c0.convert_to<T>();
                    for (std::size_t j = 0; j < p.d; ++j)
                        k.rem[j] -= c * k.atom[j];
                    k.expo[0] = c;
                    k.total = c;
                    k.run(1);
                    for (std::size_t j = 0; j < p.d; ++j)
                        k.rem[j] += c * k.atom[j];
                }
                chunks[w] = std::move(k.out);
            });
        }
        for (auto& t : pool)
            t.join();
    }

    std::vector<std::vector<Int>> rows;
    for (auto& ch : chunks) {
        for (auto& row : ch) {
            std::vector<Int> r(row.size());
            for (std::size_t i = 0; i < row.size(); ++i)
                r[i] = Int(row[i]);
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<std::vector<Int>> search(const AtomList& atoms, const IntVec& x,
                                     const Int& min_total, bool stop_on_first,
                                     unsigned threads)
{
    Prepared p = prepare(atoms, x);
    std::vector<std::vector<Int>> rows;
    if (int64_safe(x))
        rows = run_search<long long>(p, x, min_total, stop_on_first, threads);
    else
        rows = run_search<Int>(p, x, min_total, stop_on_first, threads);

    // Remap exponents from enumeration order back to the caller's atom order.
    std::vector<std::vector<Int>> mapped;
    mapped.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Int> m(atoms.atoms.size(), Int(0));
        for (std::size_t i = 0; i < row.size(); ++i)
            m[p.canon[i]] = row[i];
        mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(),
                                                      b.begin(), b.end());
              });
    return mapped;
}

} // namespace

Int length_of(const Factorization& z)
{
    Int s = 0;
    for (const Int& e : z.expo)
        s += e;
    return s;
}

std::vector<Factorization> factorizations(const AtomList& atoms, const IntVec& x,
                                          unsigned threads)
{
    auto rows = search(atoms, x, Int(0), false, threads);
    std::vector<Factorization> out;
    out.reserve(rows.size());
    for (auto& r : rows)
        out.push_back(Factorization{std::move(r)});
    return out;
}

LengthSet length_set(const AtomList& atoms, const IntVec& x, unsigned threads)
{
    auto zs = factorizations(atoms, x, threads);
    std::vector<Int> vals;
    for (const auto& z : zs)
        vals.push_back(length_of(z));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return LengthSet{std::move(vals)};
}

Rat elasticity_of_element(const AtomList& atoms, const IntVec& x, unsigned threads)
{
    if (is_zero(x))
        throw ContractError("element elasticity is undefined at the identity");
    LengthSet L = length_set(atoms, x, threads);
    if (L.values.empty())
        throw ContractError("element " + show(x) + " is not in the monoid");
    return Rat(L.values.back(), L.values.front());
}

bool is_member(const AtomList& atoms, const IntVec& x)
{
    if (x.dim() == atoms.dim && is_zero(x))
        return true;
    return !search(atoms, x, Int(0), true, 0).empty();
}

bool reducible_over(const std::vector<IntVec>& pool, const IntVec& target)
{
    AtomList al;
    al.dim = target.dim();
    al.atoms = pool;
    if (al.atoms.empty() || is_zero(target))
        return false;
    return !search(al, target, Int(2), true, 0).empty();
}

std::optional<std::vector<std::pair<IntVec, Int>>>
reducible_witness(const std::vector<IntVec>& pool, const IntVec& target)
{
    AtomList al;
    al.dim = target.dim();
    al.atoms = pool;
    if (al.atoms.empty() || is_zero(target))
        return std::nullopt;
    auto rows = search(al, target, Int(2), true, 0);
    if (rows.empty())
        return std::nullopt;
    std::vector<std::pair<IntVec, Int>> dec;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        if (rows[0][i] != 0)
            dec.emplace_back(pool[i], rows[0][i]);
    return dec;
}

SystemSample system_sample(const AtomList& atoms, const Int& norm_sq_bound,
                           unsigned threads)
{
    if (atoms.dim == 0 || atoms.atoms.empty())
        throw ContractError("system sample over an empty atom list");
    if (norm_sq_bound < 0)
        throw ContractError("negative norm bound");
    Int side = isqrt_floor(norm_sq_bound);
    Int cells = 1;
    for (std::size_t j = 0; j < atoms.dim; ++j) {
        cells *= side + 1;
        if (cells > 4000000)
            throw ResourceError("system sample grid exceeds 4e6 points at bound " +
                                norm_sq_bound.str());
    }

    std::vector<IntVec> grid;
    IntVec cur(atoms.dim);
    auto rec = [&](auto&& self, std::size_t j, const Int& left) -> void {
        if (j == atoms.dim) {
            grid.push_back(cur);
            return;
        }
        for (Int v = 0; v * v <= left; ++v) {
            cur[j] = v;
            self(self, j + 1, left - v * v);
        }
        cur[j] = 0;
    };
    rec(rec, 0, norm_sq_bound);
    std::sort(grid.begin(), grid.end(), canon_less);

    SystemSample out;
    for (const IntVec& x : grid) {
        LengthSet L = length_set(atoms, x, threads);
        if (!L.values.empty())
            out.emplace_back(x, std::move(L));
    }
    return out;
}

} // namespace latfact
