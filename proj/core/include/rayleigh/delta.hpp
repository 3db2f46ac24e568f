#pragma once

#include <array>
#include <string>

#include "rayleigh/basis_poly.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/sparse_poly.hpp"

namespace rayleigh {

// Rayleigh difference dM{e,f} = M_e^f M_f^e - M_ef M^ef in the partition
// convention; a polynomial over E \ {e,f}, homogeneous of degree 2 rank - 2
// unless it vanishes.
SparsePoly rayleigh_diff(const Matroid& m, int e, int f);
SparsePoly rayleigh_diff(const Matroid& m, const std::string& e,
                         const std::string& f);

// Central term TM{e,f|g} = M_e^fg M_fg^e + M_f^eg M_eg^f
//                        - M_g^ef M_ef^g - M_efg M^efg,
// the y_g-linear coefficient in dM{e,f} = y_g^2 dM_g + y_g TM + dM^g.
SparsePoly central_term(const Matroid& m, int e, int f, int g);

// The contraction / deletion Rayleigh differences appearing in that
// decomposition, still expressed in the partition convention of m.
SparsePoly rayleigh_diff_contract(const Matroid& m, int e, int f, int g);
SparsePoly rayleigh_diff_delete(const Matroid& m, int e, int f, int g);

// Numeric evaluation helpers. Points are per ground position; entries at
// the distinguished elements are ignored (the partition convention removes
// those variables), so zero entries are safe.

// Sums y^(B \ {e,f}) of bases grouped by membership pattern of (e,f):
// index bit0 = e in B, bit1 = f in B.
std::array<Scalar, 4> pair_values(const Matroid& m, int e, int f,
                                  const std::vector<Scalar>& point);

// Same for (e,f,g): index bit0 = e, bit1 = f, bit2 = g.
std::array<Scalar, 8> triple_values(const Matroid& m, int e, int f, int g,
                                    const std::vector<Scalar>& point);

Scalar delta_value(const Matroid& m, int e, int f,
                   const std::vector<Scalar>& point);

struct TripleSplit {
  Scalar delta_contract;  // dM_g{e,f} at the point
  Scalar delta_delete;    // dM^g{e,f} at the point
  Scalar theta;           // TM{e,f|g} at the point
};
TripleSplit triple_split(const Matroid& m, int e, int f, int g,
                         const std::vector<Scalar>& point);

}  // namespace rayleigh
