#pragma once

#include <cstdint>
#include <vector>

#include "rayleigh/basis_poly.hpp"
#include "rayleigh/field_matrix.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/report.hpp"
#include "rayleigh/sampling.hpp"

namespace rayleigh {

// Evaluates every pair's Rayleigh difference at the all-ones point.
// HOLDS iff all are nonnegative; VIOLATED lists every negative pair.
// Pairs touching a loop vanish identically and are noted, not skipped.
PropertyReport negative_correlation_check(const Matroid& m);

// Negative correlation of every minor M/I\J over all disjoint (I, J),
// deduplicated by basis family, trivial minor first. Stops at the first
// violating minor. Ground sets beyond 12 elements throw GroundTooLarge.
PropertyReport balanced_check(const Matroid& m);

// Evaluates every pair's difference at fixed pilot points and then at
// `samples` seeded random points from the domain. Stops at the first
// negative value; sampling alone never certifies, so a clean run reports
// NO_VIOLATION_FOUND.
PropertyReport rayleigh_sample_check(const Matroid& m, SampleDomain domain,
                                     long samples, uint64_t seed,
                                     uint64_t bound = 100);

// CERTIFIED when every pair's difference has nonnegative coefficients
// (which bounds it on the positive orthant); otherwise lists the pairs
// with a negative coefficient, which is inconclusive rather than a
// violation.
PropertyReport coefficient_nonneg_check(const Matroid& m);

enum class TripleMode {
  BalancedNecessary,  // positive points; check only when the central term < 0
  Strong,             // real points; discriminant condition at every triple
};

// Checks Theta^2 <= 4 * dM_g * dM^g at sampled points for every pair and
// every third element g, squaring away the square root so the comparison
// stays rational.
PropertyReport triple_condition_check(const Matroid& m, TripleMode mode,
                                      long samples, uint64_t seed,
                                      uint64_t bound = 100);

enum class PartitionKind { RealRooted, LogConcave };

// Rank partition polynomials of all subsets S with 2 <= |S| <= size_bound,
// disjoint from every constraint class, at a positive total assignment.
// RealRooted runs an exact real-root census; LogConcave checks the
// binomially normalized inequality cross-multiplied into integers.
PropertyReport rz_lc_check(const Matroid& m, int size_bound,
                           const Assignment& a, PartitionKind which,
                           const std::vector<PartitionConstraint>&
                               constraints = {});

// Substitutes y_e = a_e x + b_e for nonnegative (a, b) and requires the
// resulting univariate polynomial to be real-rooted, a necessary condition
// for the half-plane property. Indicator pairs a = 1_S, b = 1_{E\S} for all
// S with |S| <= 3 run first, then `trials` random draws.
PropertyReport hpp_spot_check(const Matroid& m, long trials, uint64_t seed,
                              uint64_t bound = 100);

// M_I * M_J >= M_{I u J} * M for all disjoint nonempty independent I, J at
// the all-ones point and at sampled positive points; a clean sweep reports
// NO_VIOLATION_FOUND. Ground sets beyond 16 elements throw GroundTooLarge
// (the sweep tabulates all 2^n subset sums).
PropertyReport independent_pair_check(const Matroid& m, long samples,
                                      uint64_t seed, uint64_t bound = 100);

// det(A Y A^T) = sum over column sets S of det(A[S])^2 y^S, checked as an
// exact polynomial identity and at sampled points; notes whether all
// maximal minors are 0 or +-1. The matrix must have full row rank.
PropertyReport binet_cauchy_check(const FieldMatrix& a, long samples,
                                  uint64_t seed, uint64_t bound = 100);

// For matroids whose automorphism group is 2-transitive (asserted by the
// caller, not verified), every pair's difference at the all-ones point
// must equal M^2 r (m - r) / (m^2 (m - 1)).
PropertyReport transitive_formula_check(const Matroid& m);

}  // namespace rayleigh
