#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rayleigh/scalar.hpp"

namespace rayleigh {

// A partial map from element labels to exact rationals. Used both for
// polynomial substitution and for sampled evaluation points.
struct Assignment {
  std::map<std::string, Scalar> values;

  static Assignment ones(const std::vector<std::string>& labels);
  // Parses "label=p/q,label=p/q". Empty text gives the empty assignment.
  static Assignment parse(std::string_view text);

  bool empty() const { return values.empty(); }
  bool has(const std::string& label) const { return values.count(label) > 0; }
  const Scalar* find(const std::string& label) const;
  void set(const std::string& label, Scalar v) { values[label] = std::move(v); }

  // Per-index view against a ground ordering. Throws UnknownElement if the
  // assignment mentions a label outside the ground set.
  std::vector<std::optional<Scalar>> resolve(
      const std::vector<std::string>& labels) const;

  bool total_on(const std::vector<std::string>& labels) const;
  bool all_positive() const;
  bool all_nonnegative() const;

  // Deterministic "a=1,b=7/10" rendering in label map order.
  std::string to_string() const;
};

}  // namespace rayleigh
