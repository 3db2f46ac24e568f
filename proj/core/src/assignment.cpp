#include "rayleigh/assignment.hpp"

#include <sstream>

#include "rayleigh/errors.hpp"

namespace rayleigh {

Assignment Assignment::ones(const std::vector<std::string>& labels) {
  Assignment a;
  for (const auto& l : labels) a.values.emplace(l, Scalar(1));
  return a;
}

Assignment Assignment::parse(std::string_view text) {
  Assignment a;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!item.empty()) {
      size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw ValueParseError("expected label=value in '" + std::string(item) + "'");
      std::string label(item.substr(0, eq));
      if (a.values.count(label))
        throw ValueParseError("duplicate assignment for '" + label + "'");
      a.values.emplace(std::move(label), parse_scalar(item.substr(eq + 1)));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return a;
}

const Scalar* Assignment::find(const std::string& label) const {
  auto it = values.find(label);
  return it == values.end() ? nullptr : &it->second;
}

std::vector<std::optional<Scalar>> Assignment::resolve(
    const std::vector<std::string>& labels) const {
  std::vector<std::optional<Scalar>> out(labels.size());
  size_t matched = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (const Scalar* v = find(labels[i])) {
      out[i] = *v;
      ++matched;
    }
  }
  if (matched != values.size()) {
    for (const auto& [label, v] : values) {
      (void)v;
      bool known = false;
      for (const auto& l : labels) known = known || l == label;
      if (!known)
        throw UnknownElement("assignment mentions unknown element '" + label + "'");
    }
  }
  return out;
}

bool Assignment::total_on(const std::vector<std::string>& labels) const {
  for (const auto& l : labels)
    if (!has(l)) return false;
  return true;
}

bool Assignment::all_positive() const {
  for (const auto& [l, v] : values) {
    (void)l;
    if (sign(v) <= 0) return false;
  }
  return true;
}

bool Assignment::all_nonnegative() const {
  for (const auto& [l, v] : values) {
    (void)l;
    if (sign(v) < 0) return false;
  }
  return true;
}

std::string Assignment::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, v] : values) {
    if (!first) os << ",";
    os << l << "=" << rayleigh::to_string(v);
    first = false;
  }
  return os.str();
}

}  // namespace rayleigh
