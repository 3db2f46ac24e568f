#include "rayleigh/sampling.hpp"

#include "rayleigh/errors.hpp"

namespace rayleigh {

std::string to_string(SampleDomain d) {
  return d == SampleDomain::POSITIVE ? "positive" : "real";
}

SampleDomain parse_domain(const std::string& text) {
  if (text == "positive") return SampleDomain::POSITIVE;
  if (text == "real") return SampleDomain::REAL;
  throw ValueParseError("unknown sample domain '" + text +
                        "' (expected 'positive' or 'real')");
}

SampleStream::SampleStream(uint64_t seed, SampleDomain domain, uint64_t bound)
    : engine_(seed), domain_(domain), bound_(bound == 0 ? 1 : bound) {}

uint64_t SampleStream::raw(uint64_t modulus) { return engine_() % modulus; }

Scalar SampleStream::draw_positive() {
  uint64_t num = raw(bound_) + 1;
  uint64_t den = raw(bound_) + 1;
  return make_scalar(static_cast<long>(num), static_cast<long>(den));
}

Scalar SampleStream::draw_nonnegative() {
  if (raw(20) == 0) return Scalar(0);
  return draw_positive();
}

Scalar SampleStream::draw() {
  if (domain_ == SampleDomain::POSITIVE) return draw_positive();
  if (raw(20) == 0) return Scalar(0);
  Scalar v = draw_positive();
  if (raw(2) == 1) v = -v;
  return v;
}

std::vector<Scalar> SampleStream::draw_point(size_t n) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(draw());
  return out;
}

Assignment SampleStream::draw_assignment(
    const std::vector<std::string>& labels) {
  Assignment a;
  for (const std::string& l : labels) a.set(l, draw());
  return a;
}

std::vector<std::vector<Scalar>> pilot_points(size_t n, SampleDomain domain) {
  std::vector<std::vector<Scalar>> pts;
  pts.push_back(std::vector<Scalar>(n, Scalar(1)));
  static const std::pair<long, long> sweep[] = {{1, 2}, {3, 5}, {7, 10},
                                                {4, 5}, {9, 10}, {2, 1},
                                                {3, 1}};
  if (n == 7 && domain == SampleDomain::REAL) {
    for (auto [tn, td] : sweep) {
      Scalar t = make_scalar(tn, td);
      pts.push_back({Scalar(1), Scalar(1), Scalar(2), Scalar(-1), Scalar(2), t,
                     Scalar(-1)});
    }
  }
  if (n == 8) {
    for (auto [tn, td] : sweep) {
      Scalar t = make_scalar(tn, td);
      pts.push_back({Scalar(1), t, t, t, Scalar(1), Scalar(1), Scalar(1),
                     Scalar(1)});
    }
  }
  return pts;
}

}  // namespace rayleigh
