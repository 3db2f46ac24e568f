#pragma once

#include <vector>

#include "rayleigh/assignment.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/sparse_poly.hpp"
#include "rayleigh/unipoly.hpp"

namespace rayleigh {

// Basis generating polynomial M(y) = sum over bases B of prod_{e in B} y_e,
// over the namespace of m's ground set.
SparsePoly basis_poly(const Matroid& m);

// Partition-convention minor polynomial: sum over bases B with B >= I and
// B disjoint from J of y^(B \ I). Variables y_e for e in I or J never occur.
// If no basis satisfies the constraints (e.g. I dependent), the result is
// the zero polynomial.
SparsePoly minor_poly(const Matroid& m, Subset contract_i, Subset avoid_j);
SparsePoly minor_poly(const Matroid& m, const std::vector<std::string>& i,
                      const std::vector<std::string>& j);

// Value of the partition-convention minor polynomial at a point given per
// ground position. Entries for positions inside I or J are ignored.
Scalar minor_value(const Matroid& m, Subset contract_i, Subset avoid_j,
                   const std::vector<Scalar>& point);

// One extra constraint class for partition polynomials: exactly `count`
// basis elements inside `inside`.
struct PartitionConstraint {
  Subset inside = 0;
  int count = 0;
};

// Rank partition polynomial of S at a total assignment a:
// coefficient of x^j collects the weight y^B of bases with |B & S| = j
// (restricted to bases meeting every extra constraint).
UniPoly partition_poly(const Matroid& m, Subset s,
                       const std::vector<PartitionConstraint>& constraints,
                       const Assignment& a);

}  // namespace rayleigh
