#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rayleigh/assignment.hpp"
#include "rayleigh/scalar.hpp"

namespace rayleigh {

// Where random weight vectors are drawn from.  POSITIVE keeps every
// coordinate strictly above zero; REAL mixes signs and allows zeros.
enum class SampleDomain { POSITIVE, REAL };

std::string to_string(SampleDomain d);
SampleDomain parse_domain(const std::string& text);

// Deterministic rational sampler.  The same seed and draw sequence always
// produce the same values, independent of platform, because every draw is a
// modulo reduction of the raw 64-bit engine output.
class SampleStream {
 public:
  SampleStream(uint64_t seed, SampleDomain domain, uint64_t bound);

  // One coordinate.  POSITIVE: num/den with num, den uniform in 1..bound.
  // REAL: zero with probability 1/20, otherwise a POSITIVE draw negated
  // half the time.
  Scalar draw();

  // Strictly positive coordinate regardless of domain.
  Scalar draw_positive();

  // Nonnegative coordinate: zero with probability 1/20, else positive.
  Scalar draw_nonnegative();

  std::vector<Scalar> draw_point(size_t n);
  Assignment draw_assignment(const std::vector<std::string>& labels);

  SampleDomain domain() const { return domain_; }
  uint64_t bound() const { return bound_; }

 private:
  uint64_t raw(uint64_t modulus);  // engine output mod modulus

  std::mt19937_64 engine_;
  SampleDomain domain_;
  uint64_t bound_;
};

// Fixed weight vectors tried before any random sampling, so that known
// sign changes on small ground sets are found without luck.  Always
// includes the all-ones vector.  For 7-element ground sets in the REAL
// domain, adds the line (1, 1, 2, -1, 2, t, -1); for 8-element ground
// sets in either domain, adds (1, t, t, t, 1, 1, 1, 1); t sweeps
// 1/2, 3/5, 7/10, 4/5, 9/10, 2, 3.
std::vector<std::vector<Scalar>> pilot_points(size_t n, SampleDomain domain);

}  // namespace rayleigh
