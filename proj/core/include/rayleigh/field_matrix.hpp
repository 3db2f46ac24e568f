#pragma once

#include <string>
#include <vector>

#include "rayleigh/matroid.hpp"
#include "rayleigh/scalar.hpp"

namespace rayleigh {

enum class Field { GF2, GF3, Rational };

std::string field_name(Field f);
Field parse_field(const std::string& name);

// Row-major matrix over GF(2), GF(3) or the rationals. Galois-field entries
// must already be canonical residues (0/1, or 0/1/2).
struct FieldMatrix {
  Field field = Field::Rational;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Scalar>> entries;

  static FieldMatrix make(Field field,
                          std::vector<std::vector<Scalar>> entries);
};

int rank(const FieldMatrix& a);
// Rank of the column submatrix selected by cols (indices into the matrix).
int rank_of_columns(const FieldMatrix& a, const std::vector<int>& cols);

// Determinant of the square column submatrix; only for rational matrices.
Scalar det_of_columns(const FieldMatrix& a, const std::vector<int>& cols);

// Column matroid: bases are the column sets of size rank(a) with full rank.
// Labels default to "1".."n" when empty.
Matroid from_matrix(const FieldMatrix& a, std::vector<std::string> labels = {},
                    std::string name = "");

}  // namespace rayleigh
