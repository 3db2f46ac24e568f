#include "rayleigh/unipoly.hpp"

#include <cassert>
#include <sstream>
#include <utility>

#include "rayleigh/errors.hpp"

namespace rayleigh {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { strip(); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly({c}); }

UniPoly UniPoly::variable() { return UniPoly({Scalar(0), Scalar(1)}); }

UniPoly UniPoly::from_roots(const std::vector<Scalar>& roots) {
  UniPoly p = constant(Scalar(1));
  for (const Scalar& r : roots) p *= UniPoly({-r, Scalar(1)});
  return p;
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[k];
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Scalar> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Scalar(long(i)) * c_[i];
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> out(c_.size() + o.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
  if (sign(s) == 0) {
    c_.clear();
    return *this;
  }
  for (Scalar& x : c_) x *= s;
  return *this;
}

void UniPoly::strip() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[k];
    if (sign(c) == 0) continue;
    Scalar a = abs(c);
    if (first) {
      if (sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (k == 0 || !unit) os << rayleigh::to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

using QPoly = std::vector<Scalar>;   // ascending, stripped
using ZPoly = std::vector<mpz_class>;  // ascending, stripped

void strip_q(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of f by g computed in exact rational arithmetic. g nonzero.
QPoly q_rem(QPoly f, const QPoly& g) {
  assert(!g.empty());
  while (deg(f) >= deg(g)) {
    Scalar c = f.back() / g.back();
    int k = deg(f) - deg(g);
    for (size_t i = 0; i < g.size(); ++i) f[i + k] -= c * g[i];
    f.pop_back();  // leading term cancels exactly
    strip_q(f);
  }
  return f;
}

// Exact quotient f / g; asserts the division leaves no remainder.
QPoly q_div_exact(QPoly f, const QPoly& g) {
  assert(!g.empty());
  QPoly q(std::max(0, deg(f) - deg(g) + 1), Scalar(0));
  while (deg(f) >= deg(g)) {
    Scalar c = f.back() / g.back();
    int k = deg(f) - deg(g);
    q[k] = c;
    for (size_t i = 0; i < g.size(); ++i) f[i + k] -= c * g[i];
    f.pop_back();
    strip_q(f);
  }
  assert(f.empty());
  strip_q(q);
  return q;
}

// Primitive integer image of a rational polynomial. Scaling factor is
// strictly positive, so all coefficient signs survive.
ZPoly make_primitive(const QPoly& p) {
  if (p.empty()) return {};
  mpz_class denlcm(1);
  for (const Scalar& c : p) {
    mpz_class d = c.get_den();
    mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly z(p.size());
  mpz_class content(0);
  for (size_t i = 0; i < p.size(); ++i) {
    mpz_class num = p[i].get_num(), den = p[i].get_den();
    z[i] = num * (denlcm / den);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
  }
  if (content != 0)
    for (mpz_class& c : z) c /= content;
  return z;
}

QPoly to_q(const ZPoly& p) {
  QPoly q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = Scalar(p[i]);
  return q;
}

int sign_at_plus_inf(const ZPoly& p) { return sgn(p.back()); }
int sign_at_minus_inf(const ZPoly& p) {
  int s = sgn(p.back());
  return deg(p) % 2 == 0 ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Number of distinct real roots of a square-free polynomial, by the full
// Sturm chain evaluated at -inf and +inf.
int sturm_count(const ZPoly& q) {
  if (deg(q) <= 0) return 0;
  std::vector<ZPoly> chain;
  chain.push_back(q);
  {
    ZPoly d(q.size() - 1);
    for (size_t i = 1; i < q.size(); ++i) d[i - 1] = mpz_class(long(i)) * q[i];
    chain.push_back(make_primitive(to_q(d)));
  }
  while (!chain.back().empty() && deg(chain.back()) > 0) {
    QPoly r = q_rem(to_q(chain[chain.size() - 2]), to_q(chain.back()));
    for (Scalar& c : r) c = -c;
    chain.push_back(make_primitive(r));
  }
  if (chain.back().empty()) chain.pop_back();
  std::vector<int> lo, hi;
  for (const ZPoly& p : chain) {
    lo.push_back(sign_at_minus_inf(p));
    hi.push_back(sign_at_plus_inf(p));
  }
  return variations(lo) - variations(hi);
}

// gcd of two integer polynomials via the Euclidean remainder sequence with
// primitive-part normalization; result has positive leading coefficient.
ZPoly z_gcd(ZPoly a, ZPoly b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    QPoly r = q_rem(to_q(a), to_q(b));
    a = std::move(b);
    b = make_primitive(r);
  }
  if (!a.empty() && sgn(a.back()) < 0)
    for (mpz_class& c : a) c = -c;
  return a;
}

}  // namespace

RootCensus real_root_census(const UniPoly& p) {
  if (p.degree() <= 0) return {true, 0};
  ZPoly z = make_primitive(p.coeffs());
  ZPoly dz(z.size() - 1);
  for (size_t i = 1; i < z.size(); ++i) dz[i - 1] = mpz_class(long(i)) * z[i];
  ZPoly g = z_gcd(z, make_primitive(to_q(dz)));
  // Square-free part carries one copy of every distinct root of p.
  QPoly sf = q_div_exact(to_q(z), to_q(g));
  ZPoly zsf = make_primitive(sf);
  int count = sturm_count(zsf);
  return {count == deg(zsf), count};
}

Scalar quadratic_discriminant(const UniPoly& p) {
  if (p.degree() != 2)
    throw Error("quadratic_discriminant requires a degree-2 polynomial");
  return p.coeff(1) * p.coeff(1) - Scalar(4) * p.coeff(2) * p.coeff(0);
}

}  // namespace rayleigh
