#include "rayleigh/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "rayleigh/errors.hpp"

namespace rayleigh {

Monomial Monomial::from_indices(const std::vector<int>& idxs) {
  std::vector<int> sorted = idxs;
  std::sort(sorted.begin(), sorted.end());
  Monomial m;
  for (int i : sorted) {
    if (!m.factors.empty() && m.factors.back().first == i)
      ++m.factors.back().second;
    else
      m.factors.push_back({i, 1});
  }
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [i, e] : factors) {
    (void)i;
    d += e;
  }
  return d;
}

int Monomial::exponent_of(int idx) const {
  for (auto& [i, e] : factors)
    if (i == idx) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    int ia = i < factors.size() ? factors[i].first : INT_MAX;
    int ib = j < o.factors.size() ? o.factors[j].first : INT_MAX;
    if (ia == ib) {
      out.factors.push_back({ia, factors[i].second + o.factors[j].second});
      ++i, ++j;
    } else if (ia < ib) {
      out.factors.push_back(factors[i++]);
    } else {
      out.factors.push_back(o.factors[j++]);
    }
  }
  return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    int ia = i < a.factors.size() ? a.factors[i].first : INT_MAX;
    int ib = j < b.factors.size() ? b.factors[j].first : INT_MAX;
    if (ia == ib) {
      if (a.factors[i].second != b.factors[j].second)
        return a.factors[i].second < b.factors[j].second;
      ++i, ++j;
    } else if (ia < ib) {
      // a has a positive exponent at the smaller index, b has zero there.
      return false;
    } else {
      return true;
    }
  }
  return false;
}

SparsePoly::SparsePoly(std::vector<std::string> labels)
    : labels_(std::move(labels)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> labels, const Scalar& c) {
  SparsePoly p(std::move(labels));
  p.add_term(Monomial::one(), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> labels, int idx) {
  SparsePoly p(std::move(labels));
  p.add_term(Monomial::variable(idx), Scalar(1));
  return p;
}

void SparsePoly::add_term(const Monomial& m, const Scalar& c) {
  if (sign(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

Scalar SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SparsePoly::check_same_namespace(const SparsePoly& o) const {
  if (labels_ != o.labels_)
    throw NamespaceMismatch("polynomial operands use different ground sets");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_namespace(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_namespace(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  check_same_namespace(o);
  SparsePoly out(labels_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Scalar& s) {
  if (sign(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    (void)m;
    c *= s;
  }
  return *this;
}

namespace {
Scalar power(const Scalar& base, int exp) {
  Scalar acc(1);
  for (int k = 0; k < exp; ++k) acc *= base;
  return acc;
}
}  // namespace

Scalar SparsePoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != labels_.size())
    throw Error("evaluation point size does not match ground set");
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (auto& [i, e] : m.factors) v *= power(point[i], e);
    total += v;
  }
  return total;
}

Scalar SparsePoly::eval(const Assignment& a) const {
  auto vals = a.resolve(labels_);
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (auto& [i, e] : m.factors) {
      if (!vals[i])
        throw Error("evaluation requires a value for y_" + labels_[i]);
      v *= power(*vals[i], e);
    }
    total += v;
  }
  return total;
}

SparsePoly SparsePoly::substitute(const Assignment& a) const {
  auto vals = a.resolve(labels_);
  SparsePoly out(labels_);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    Monomial rest;
    for (auto& [i, e] : m.factors) {
      if (vals[i])
        v *= power(*vals[i], e);
      else
        rest.factors.push_back({i, e});
    }
    out.add_term(rest, v);
  }
  return out;
}

UniPoly SparsePoly::collapse() const {
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : terms_) {
    int d = m.total_degree();
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, Scalar(0));
    coeffs[d] += c;
  }
  return UniPoly(std::move(coeffs));
}

bool SparsePoly::nonnegative_coefficients() const {
  for (const auto& [m, c] : terms_) {
    (void)m;
    if (sign(c) < 0) return false;
  }
  return true;
}

std::optional<std::pair<Monomial, Scalar>> SparsePoly::most_negative_term() const {
  std::optional<std::pair<Monomial, Scalar>> worst;
  for (const auto& [m, c] : terms_)
    if (sign(c) < 0 && (!worst || c < worst->second)) worst = {m, c};
  return worst;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int dm = m.total_degree();
    if (!d)
      d = dm;
    else if (*d != dm)
      return std::nullopt;
  }
  return d;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      if (sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
    }
    os << rayleigh::to_string(abs(c));
    for (auto& [i, e] : m.factors) {
      os << " * y_" << labels_[i];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }
};

bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != '^' &&
         c != '+' && c != '-';
}

}  // namespace

SparsePoly SparsePoly::parse(std::vector<std::string> labels,
                             std::string_view text) {
  SparsePoly out(std::move(labels));
  auto index_of = [&](const std::string& l) {
    for (size_t i = 0; i < out.labels_.size(); ++i)
      if (out.labels_[i] == l) return static_cast<int>(i);
    throw ValueParseError("unknown variable y_" + l);
  };
  Cursor cur{text};
  if (cur.done()) throw ValueParseError("empty polynomial text");
  if (text == "0") return out;
  bool first = true;
  while (!cur.done()) {
    int termsign = 1;
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
      termsign = cur.peek() == '-' ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      throw ValueParseError("expected + or - between terms");
    }
    Scalar coef(1);
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      cur.skip_ws();
      if (cur.pos >= cur.text.size())
        throw ValueParseError("dangling term in polynomial text");
      if (cur.text.compare(cur.pos, 2, "y_") == 0) {
        cur.pos += 2;
        size_t start = cur.pos;
        while (cur.pos < cur.text.size() && is_label_char(cur.text[cur.pos]))
          ++cur.pos;
        if (cur.pos == start) throw ValueParseError("empty variable label");
        std::string label(cur.text.substr(start, cur.pos - start));
        int exp = 1;
        cur.skip_ws();
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
          ++cur.pos;
          cur.skip_ws();
          size_t estart = cur.pos;
          while (cur.pos < cur.text.size() &&
                 std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
            ++cur.pos;
          if (cur.pos == estart) throw ValueParseError("missing exponent");
          exp = std::stoi(std::string(cur.text.substr(estart, cur.pos - estart)));
          if (exp <= 0) throw ValueParseError("exponent must be positive");
        }
        Monomial f;
        f.factors.push_back({index_of(label), exp});
        mono = mono.times(f);
      } else {
        size_t start = cur.pos;
        while (cur.pos < cur.text.size() &&
               (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) ||
                cur.text[cur.pos] == '/'))
          ++cur.pos;
        if (cur.pos == start)
          throw ValueParseError("unexpected character in polynomial text");
        coef *= parse_scalar(cur.text.substr(start, cur.pos - start));
      }
      cur.skip_ws();
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
        ++cur.pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    out.add_term(mono, termsign < 0 ? Scalar(-coef) : coef);
    first = false;
  }
  return out;
}

}  // namespace rayleigh
