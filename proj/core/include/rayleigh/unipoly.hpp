#pragma once

#include <string>
#include <vector>

#include "rayleigh/scalar.hpp"

namespace rayleigh {

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree order with no trailing zero coefficients.
class UniPoly {
 public:
  UniPoly() = default;  // the zero polynomial
  explicit UniPoly(std::vector<Scalar> coeffs);

  static UniPoly constant(const Scalar& c);
  static UniPoly variable();                                  // x
  static UniPoly from_roots(const std::vector<Scalar>& roots);  // prod (x - r)

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const;
  const Scalar& leading() const { return c_.back(); }

  Scalar eval(const Scalar& x) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(UniPoly a) { return a *= Scalar(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void strip();
  std::vector<Scalar> c_;
};

struct RootCensus {
  bool real_rooted = false;
  int distinct_real_roots = 0;
};

// Exact real-root census. Reduces p to its square-free part via gcd with the
// derivative, then counts distinct real roots with a Sturm chain whose
// remainders are kept as primitive integer polynomials (positive scaling
// only, so sign variations are preserved). Zero and constant polynomials
// count as real-rooted with no roots.
RootCensus real_root_census(const UniPoly& p);

// b^2 - 4ac. Requires degree() == 2.
Scalar quadratic_discriminant(const UniPoly& p);

}  // namespace rayleigh
