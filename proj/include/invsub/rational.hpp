#ifndef INVSUB_RATIONAL_HPP
#define INVSUB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace invsub {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVector = std::vector<Rational>;

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Returns false on malformed text or q == 0.
bool parse_rational(std::string_view text, Rational& out);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_zero(const RatVector& v);

/// Scales v to integer entries with content 1. The first nonzero entry
/// keeps its sign. The zero vector is returned unchanged.
RatVector primitive_integer(const RatVector& v);

}  // namespace invsub

#endif  // INVSUB_RATIONAL_HPP
