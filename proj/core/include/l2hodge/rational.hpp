#ifndef L2HODGE_RATIONAL_HPP
#define L2HODGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace l2hodge {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is the representation contract everything
// else relies on. There is no floating point anywhere in the engine.
using Rational = mpq_class;

/// Parses "p" or "p/q" (sign on the numerator only); rejects zero denominators.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// The value as a long; throws unless q is an integer that fits.
long to_long(const Rational& q);

using Vec = std::vector<Rational>;

} // namespace l2hodge

#endif
