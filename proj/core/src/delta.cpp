#include "rayleigh/delta.hpp"

#include "rayleigh/errors.hpp"

namespace rayleigh {

namespace {
void check_distinct(const Matroid& m, std::initializer_list<int> elems) {
  Subset seen = 0;
  for (int e : elems) {
    if (e < 0 || e >= m.size())
      throw UnknownElement("element index out of range");
    if (contains(seen, e)) throw Error("distinguished elements must be distinct");
    seen |= bit(e);
  }
}
}  // namespace

SparsePoly rayleigh_diff(const Matroid& m, int e, int f) {
  check_distinct(m, {e, f});
  Subset se = bit(e), sf = bit(f);
  SparsePoly me_f = minor_poly(m, se, sf);
  SparsePoly mf_e = minor_poly(m, sf, se);
  SparsePoly mef = minor_poly(m, se | sf, 0);
  SparsePoly m_ef = minor_poly(m, 0, se | sf);
  return me_f * mf_e - mef * m_ef;
}

SparsePoly rayleigh_diff(const Matroid& m, const std::string& e,
                         const std::string& f) {
  return rayleigh_diff(m, m.index_of(e), m.index_of(f));
}

SparsePoly central_term(const Matroid& m, int e, int f, int g) {
  check_distinct(m, {e, f, g});
  Subset se = bit(e), sf = bit(f), sg = bit(g);
  return minor_poly(m, se, sf | sg) * minor_poly(m, sf | sg, se) +
         minor_poly(m, sf, se | sg) * minor_poly(m, se | sg, sf) -
         minor_poly(m, sg, se | sf) * minor_poly(m, se | sf, sg) -
         minor_poly(m, se | sf | sg, 0) * minor_poly(m, 0, se | sf | sg);
}

SparsePoly rayleigh_diff_contract(const Matroid& m, int e, int f, int g) {
  check_distinct(m, {e, f, g});
  Subset se = bit(e), sf = bit(f), sg = bit(g);
  return minor_poly(m, se | sg, sf) * minor_poly(m, sf | sg, se) -
         minor_poly(m, se | sf | sg, 0) * minor_poly(m, sg, se | sf);
}

SparsePoly rayleigh_diff_delete(const Matroid& m, int e, int f, int g) {
  check_distinct(m, {e, f, g});
  Subset se = bit(e), sf = bit(f), sg = bit(g);
  return minor_poly(m, se, sf | sg) * minor_poly(m, sf, se | sg) -
         minor_poly(m, se | sf, sg) * minor_poly(m, 0, se | sf | sg);
}

std::array<Scalar, 4> pair_values(const Matroid& m, int e, int f,
                                  const std::vector<Scalar>& point) {
  check_distinct(m, {e, f});
  std::array<Scalar, 4> acc{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  Subset skip = bit(e) | bit(f);
  for (Subset b : m.bases) {
    Scalar w(1);
    for_each_bit(b & ~skip, [&](int i) { w *= point[i]; });
    acc[(contains(b, e) ? 1 : 0) | (contains(b, f) ? 2 : 0)] += w;
  }
  return acc;
}

std::array<Scalar, 8> triple_values(const Matroid& m, int e, int f, int g,
                                    const std::vector<Scalar>& point) {
  check_distinct(m, {e, f, g});
  std::array<Scalar, 8> acc;
  acc.fill(Scalar(0));
  Subset skip = bit(e) | bit(f) | bit(g);
  for (Subset b : m.bases) {
    Scalar w(1);
    for_each_bit(b & ~skip, [&](int i) { w *= point[i]; });
    acc[(contains(b, e) ? 1 : 0) | (contains(b, f) ? 2 : 0) |
        (contains(b, g) ? 4 : 0)] += w;
  }
  return acc;
}

Scalar delta_value(const Matroid& m, int e, int f,
                   const std::vector<Scalar>& point) {
  auto v = pair_values(m, e, f, point);
  // v[1] = M_e^f, v[2] = M_f^e, v[3] = M_ef, v[0] = M^ef.
  return v[1] * v[2] - v[3] * v[0];
}

TripleSplit triple_split(const Matroid& m, int e, int f, int g,
                         const std::vector<Scalar>& point) {
  auto v = triple_values(m, e, f, g, point);
  TripleSplit out;
  out.delta_contract = v[5] * v[6] - v[7] * v[4];
  out.delta_delete = v[1] * v[2] - v[3] * v[0];
  out.theta = v[1] * v[6] + v[2] * v[5] - v[4] * v[3] - v[7] * v[0];
  return out;
}

}  // namespace rayleigh
