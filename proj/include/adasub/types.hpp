#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace adasub {

// Exact arithmetic for probabilities, costs and utility values. Every number
// accepted by the instance grammar (integers, finite decimals, p/q fractions)
// is representable, so evaluation stays exact end to end.
using Rational = boost::multiprecision::cpp_rational;

using ItemId = int;
using StateId = int;

// Ground sets are capped at 64 items; all the oracle machinery operates on
// bitmask subsets.
using ItemSet = std::uint64_t;

inline ItemSet item_bit(ItemId e) { return ItemSet{1} << e; }
inline bool set_has(ItemSet s, ItemId e) { return (s >> e) & ItemSet{1}; }
inline int set_size(ItemSet s) { return std::popcount(s); }

double to_double(const Rational& r);

// Accepts "3", "-2", "0.25", "1/3". No exponent notation.
Rational parse_rational(const std::string& token);

// Canonical form: integer when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& r);

// Stable shortest-ish formatting used for CSV cells ("%.12g").
std::string double_str(double v);

inline constexpr double kTol = 1e-9;

}  // namespace adasub
