#include "rayleigh/basis_poly.hpp"

#include "rayleigh/errors.hpp"

namespace rayleigh {

SparsePoly basis_poly(const Matroid& m) {
  SparsePoly p(m.labels);
  for (Subset b : m.bases)
    p.add_term(Monomial::from_indices(to_indices(b)), Scalar(1));
  return p;
}

SparsePoly minor_poly(const Matroid& m, Subset contract_i, Subset avoid_j) {
  if ((contract_i & avoid_j) != 0)
    throw Error("minor polynomial: I and J overlap");
  SparsePoly p(m.labels);
  for (Subset b : m.bases) {
    if ((contract_i & ~b) != 0) continue;  // B must contain I
    if ((b & avoid_j) != 0) continue;      // B must avoid J
    p.add_term(Monomial::from_indices(to_indices(b & ~contract_i)), Scalar(1));
  }
  return p;
}

SparsePoly minor_poly(const Matroid& m, const std::vector<std::string>& i,
                      const std::vector<std::string>& j) {
  return minor_poly(m, m.mask_of(i), m.mask_of(j));
}

Scalar minor_value(const Matroid& m, Subset contract_i, Subset avoid_j,
                   const std::vector<Scalar>& point) {
  if ((contract_i & avoid_j) != 0)
    throw Error("minor polynomial: I and J overlap");
  Scalar total(0);
  for (Subset b : m.bases) {
    if ((contract_i & ~b) != 0) continue;
    if ((b & avoid_j) != 0) continue;
    Scalar w(1);
    for_each_bit(b & ~contract_i, [&](int e) { w *= point[e]; });
    total += w;
  }
  return total;
}

UniPoly partition_poly(const Matroid& m, Subset s,
                       const std::vector<PartitionConstraint>& constraints,
                       const Assignment& a) {
  if (!a.total_on(m.labels))
    throw Error("partition polynomial requires a total assignment");
  auto resolved = a.resolve(m.labels);
  std::vector<Scalar> point(m.size());
  for (int i = 0; i < m.size(); ++i) point[i] = *resolved[i];

  std::vector<Scalar> coeffs(popcount(s) + 1, Scalar(0));
  for (Subset b : m.bases) {
    bool admissible = true;
    for (const auto& c : constraints)
      admissible = admissible && popcount(b & c.inside) == c.count;
    if (!admissible) continue;
    Scalar w(1);
    for_each_bit(b, [&](int e) { w *= point[e]; });
    coeffs[popcount(b & s)] += w;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace rayleigh
