#include "rayleigh/field_matrix.hpp"

#include <algorithm>

#include "rayleigh/errors.hpp"

namespace rayleigh {

std::string field_name(Field f) {
  switch (f) {
    case Field::GF2: return "gf2";
    case Field::GF3: return "gf3";
    case Field::Rational: return "rational";
  }
  return "?";
}

Field parse_field(const std::string& name) {
  if (name == "gf2") return Field::GF2;
  if (name == "gf3") return Field::GF3;
  if (name == "rational") return Field::Rational;
  throw ValueParseError("unknown field '" + name + "'");
}

FieldMatrix FieldMatrix::make(Field field,
                              std::vector<std::vector<Scalar>> entries) {
  FieldMatrix a;
  a.field = field;
  a.rows = static_cast<int>(entries.size());
  a.cols = a.rows == 0 ? 0 : static_cast<int>(entries.front().size());
  if (a.rows == 0 || a.cols == 0)
    throw ZeroMatrix("matrix must have at least one row and one column");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != a.cols)
      throw ValueParseError("ragged matrix rows");
  if (a.rows > a.cols)
    throw ValueParseError("matrix must satisfy rows <= columns");
  if (field != Field::Rational) {
    long p = field == Field::GF2 ? 2 : 3;
    for (const auto& row : entries)
      for (const Scalar& e : row) {
        if (e.get_den() != 1 || e < 0 || e >= p)
          throw BadFieldEntry("entry " + to_string(e) + " is not a canonical " +
                              field_name(field) + " residue");
      }
  }
  a.entries = std::move(entries);
  return a;
}

namespace {

// Gaussian elimination rank over GF(p) for small p.
int modp_rank(const FieldMatrix& a, const std::vector<int>& cols, long p) {
  std::vector<std::vector<long>> m(a.rows, std::vector<long>(cols.size()));
  for (int i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m[i][j] = a.entries[i][cols[j]].get_num().get_si() % p;
  int r = 0;
  for (size_t c = 0; c < cols.size() && r < a.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows; ++i)
      if (m[i][c] % p != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    long inv = 1;
    while ((m[r][c] * inv) % p != 1) ++inv;
    for (size_t j = c; j < cols.size(); ++j) m[r][j] = (m[r][j] * inv) % p;
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long f = m[i][c];
      for (size_t j = c; j < cols.size(); ++j)
        m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

int rational_rank(const FieldMatrix& a, const std::vector<int>& cols) {
  std::vector<std::vector<Scalar>> m(a.rows,
                                     std::vector<Scalar>(cols.size()));
  for (int i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) m[i][j] = a.entries[i][cols[j]];
  int r = 0;
  for (size_t c = 0; c < cols.size() && r < a.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows; ++i)
      if (sign(m[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || sign(m[i][c]) == 0) continue;
      Scalar f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols.size(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank_of_columns(const FieldMatrix& a, const std::vector<int>& cols) {
  switch (a.field) {
    case Field::GF2: return modp_rank(a, cols, 2);
    case Field::GF3: return modp_rank(a, cols, 3);
    case Field::Rational: return rational_rank(a, cols);
  }
  return 0;
}

int rank(const FieldMatrix& a) {
  std::vector<int> all(a.cols);
  for (int j = 0; j < a.cols; ++j) all[j] = j;
  return rank_of_columns(a, all);
}

Scalar det_of_columns(const FieldMatrix& a, const std::vector<int>& cols) {
  if (a.field != Field::Rational)
    throw Error("det_of_columns requires a rational matrix");
  if (static_cast<int>(cols.size()) != a.rows)
    throw Error("det_of_columns requires a square selection");
  std::vector<std::vector<Scalar>> m(a.rows, std::vector<Scalar>(a.rows));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) m[i][j] = a.entries[i][cols[j]];
  Scalar det(1);
  for (int c = 0; c < a.rows; ++c) {
    int pivot = -1;
    for (int i = c; i < a.rows; ++i)
      if (sign(m[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < a.rows; ++i) {
      if (sign(m[i][c]) == 0) continue;
      Scalar f = m[i][c] / m[c][c];
      for (int j = c; j < a.rows; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Matroid from_matrix(const FieldMatrix& a, std::vector<std::string> labels,
                    std::string name) {
  if (labels.empty())
    for (int j = 1; j <= a.cols; ++j) labels.push_back(std::to_string(j));
  if (static_cast<int>(labels.size()) != a.cols)
    throw ValueParseError("label count does not match matrix columns");
  validate_labels(labels);

  int r = rank(a);
  std::vector<Subset> bases;
  for (Subset s : combinations(a.cols, r))
    if (rank_of_columns(a, to_indices(s)) == r) bases.push_back(s);
  return from_bases_masks(std::move(labels), std::move(bases), std::move(name),
                          false);
}

}  // namespace rayleigh
