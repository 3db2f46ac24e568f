#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rayleigh/assignment.hpp"
#include "rayleigh/scalar.hpp"
#include "rayleigh/unipoly.hpp"

namespace rayleigh {

// Product of variable powers: sorted (variable index, exponent) pairs with
// strictly positive exponents.
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  static Monomial one() { return {}; }
  static Monomial variable(int idx) { return {{{idx, 1}}}; }
  static Monomial from_indices(const std::vector<int>& idxs);  // squarefree

  int total_degree() const;
  int exponent_of(int idx) const;
  Monomial times(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order: lower total degree sorts first; among equal
// degrees the monomial that is lex-smaller in y_0 > y_1 > ... sorts first
// (so y_1^2 is the largest degree-2 monomial in two variables).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over a fixed ground-set namespace: variable i is
// y_<labels[i]>. Operands of binary operations must share the namespace.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> labels);
  static SparsePoly constant(std::vector<std::string> labels, const Scalar& c);
  static SparsePoly variable(std::vector<std::string> labels, int idx);

  const std::vector<std::string>& labels() const { return labels_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Scalar& c);
  Scalar coeff(const Monomial& m) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Scalar& s);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) { return a *= b; }
  friend SparsePoly operator*(const Scalar& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Scalar(-1); }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.labels_ == b.labels_ && a.terms_ == b.terms_;
  }

  // Evaluation at a full per-index point.
  Scalar eval(const std::vector<Scalar>& point) const;
  // Evaluation at an assignment covering every variable that occurs.
  Scalar eval(const Assignment& a) const;
  // Partial substitution; unassigned variables remain symbolic.
  SparsePoly substitute(const Assignment& a) const;

  // Image under y_i -> t for every variable, as a univariate polynomial.
  UniPoly collapse() const;

  bool nonnegative_coefficients() const;
  // The lexicographically first most-negative term, if any coefficient < 0.
  std::optional<std::pair<Monomial, Scalar>> most_negative_term() const;

  // Common total degree of all terms; nullopt for the zero polynomial or an
  // inhomogeneous polynomial.
  std::optional<int> homogeneous_degree() const;

  // Deterministic rendering: terms in descending graded-lex order, each as
  // "coef * y_label^exp * ..."; the zero polynomial prints as "0".
  std::string to_string() const;
  static SparsePoly parse(std::vector<std::string> labels, std::string_view text);

 private:
  void check_same_namespace(const SparsePoly& o) const;
  std::vector<std::string> labels_;
  TermMap terms_;
};

}  // namespace rayleigh
