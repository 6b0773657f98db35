#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "latfact/errors.hpp"

namespace latfact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Json = nlohmann::ordered_json;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical "p/q" form, q >= 1, gcd(p, q) = 1. Integers render as "p/1".
inline std::string rat_string(const Rat& r)
{
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);   // accepts "p" or "p/q"

// floor division, also correct for negative operands
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Int isqrt_floor(const Int& a)
{
    if (a < 0)
        throw ContractError("isqrt of negative value");
    return boost::multiprecision::sqrt(a);
}

inline bool fits_int64(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

// Integers serialize as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that, so documents round-trip on any platform.
Json int_json(const Int& v);
Int int_from_json(const Json& j);

} // namespace latfact
