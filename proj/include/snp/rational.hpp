#pragma once

#include <gmpxx.h>
#include <string>

namespace snp {

// Exact arbitrary-precision rational. Everything downstream (polynomial
// coefficients, LP pivots, Ehrhart interpolation) runs on these.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading minus.
Rational rational_from_string(const std::string& s);

// Exact conversion; throws if not an integer or out of long range.
long rational_to_long(const Rational& r);

} // namespace snp
