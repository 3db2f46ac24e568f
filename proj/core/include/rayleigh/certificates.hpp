#pragma once

#include <string>
#include <vector>

#include "rayleigh/sparse_poly.hpp"

namespace rayleigh {

// Witness that a polynomial is nonnegative on the positive orthant:
// target = remainder + sum of coeff * poly^2 with every remainder
// coefficient >= 0 and every square coefficient > 0.  When the remainder
// has only even exponents the bound extends to all real points.
struct SquareTerm {
  Scalar coeff;
  SparsePoly poly;
};

struct SquareCertificate {
  std::vector<SquareTerm> squares;
  SparsePoly remainder;

  // {"squares":[{"coeff":"2","poly":"..."}],"remainder":"..."} with
  // polynomials in the to_string/parse text form over the given namespace.
  static SquareCertificate parse_json(std::vector<std::string> labels,
                                      const std::string& text);
  std::string json() const;
};

// True iff the certificate is well formed and reassembles the target
// exactly.  A malformed or mismatched certificate yields false, not an
// exception.
bool verify_square_certificate(const SparsePoly& target,
                               const SquareCertificate& cert);

}  // namespace rayleigh
