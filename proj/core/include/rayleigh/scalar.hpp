#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rayleigh {

// Exact rational number. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need for
// deterministic output.
using Scalar = mpq_class;

// Builds n/d in canonical form. d must be nonzero.
Scalar make_scalar(long n, long d = 1);

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// ValueParseError on malformed input.
Scalar parse_scalar(std::string_view text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Scalar& x);

inline int sign(const Scalar& x) { return sgn(x); }

// C(n, k) as an exact integer-valued Scalar (0 when k < 0 or k > n).
Scalar binomial(int n, int k);

}  // namespace rayleigh
