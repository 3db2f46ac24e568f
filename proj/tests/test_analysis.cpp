#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "rayleigh/basis_poly.hpp"
#include "rayleigh/catalog.hpp"
#include "rayleigh/checks.hpp"
#include "rayleigh/delta.hpp"
#include "rayleigh/errors.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/scalar.hpp"
#include "rayleigh/sparse_poly.hpp"
#include "test_helpers.hpp"

using namespace rayleigh;
using testsupport::pick;
using testsupport::Rng;

namespace {

// Partition sum written independently of minor_poly: iterate bases and
// multiply variables by hand.
SparsePoly brute_partition(const Matroid& m, Subset inside, Subset avoid) {
  SparsePoly out(m.labels);
  for (Subset b : m.bases) {
    if ((b & inside) != inside || (b & avoid) != 0) continue;
    out.add_term(Monomial::from_indices(to_indices(b & ~inside)), Scalar(1));
  }
  return out;
}

SparsePoly brute_delta(const Matroid& m, int e, int f) {
  Subset se = bit(e), sf = bit(f);
  return brute_partition(m, se, sf) * brute_partition(m, sf, se) -
         brute_partition(m, se | sf, 0) * brute_partition(m, 0, se | sf);
}

}  // namespace

TEST_CASE("rayleigh difference matches a brute-force expansion") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 2) continue;
    int e = pick(rng, 0, m.size() - 1);
    int f = (e + pick(rng, 1, m.size() - 1)) % m.size();
    CHECK(rayleigh_diff(m, e, f) == brute_delta(m, e, f));
  }
  Matroid s8 = catalog_get("s8").matroid;
  CHECK(rayleigh_diff(s8, "1", "8") == brute_delta(s8, 0, 7));
}

TEST_CASE("difference polynomial structure") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 2) continue;
    int e = pick(rng, 0, m.size() - 1);
    int f = (e + pick(rng, 1, m.size() - 1)) % m.size();
    SparsePoly d = rayleigh_diff(m, e, f);

    CHECK(d == rayleigh_diff(m, f, e));
    for (const auto& [mono, c] : d.terms()) {
      CHECK(mono.exponent_of(e) == 0);
      CHECK(mono.exponent_of(f) == 0);
    }
    if (!d.is_zero()) CHECK(d.homogeneous_degree() == 2 * m.rank - 2);
  }
}

TEST_CASE("deletion-contraction of the basis polynomial") {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    int g = pick(rng, 0, m.size() - 1);
    SparsePoly y_g = SparsePoly::variable(m.labels, g);
    CHECK(basis_poly(m) ==
          y_g * minor_poly(m, bit(g), 0) + minor_poly(m, 0, bit(g)));
  }
}

TEST_CASE("quadratic decomposition in a third variable") {
  Rng rng(44);
  for (int t = 0; t < 60; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 3) continue;
    int e = pick(rng, 0, m.size() - 1);
    int f = (e + pick(rng, 1, m.size() - 1)) % m.size();
    int g = 0;
    while (g == e || g == f) ++g;
    SparsePoly y_g = SparsePoly::variable(m.labels, g);
    CHECK(rayleigh_diff(m, e, f) ==
          y_g * y_g * rayleigh_diff_contract(m, e, f, g) +
              y_g * central_term(m, e, f, g) +
              rayleigh_diff_delete(m, e, f, g));
  }

  // tiny case by hand: U(2,3) has bases 12, 13, 23, so splitting on the
  // pair {1,2} gives partitions y_3, y_3, 1, 0 and the difference y_3^2;
  // every central-term factor pairs a zero with a nonzero, so theta is 0
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(central_term(u23, 0, 1, 2).is_zero());
  CHECK(rayleigh_diff(u23, 0, 1) ==
        SparsePoly::parse(u23.labels, "1 * y_3^2"));
}

TEST_CASE("alternative product form") {
  Rng rng(45);
  for (int t = 0; t < 60; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 2) continue;
    int e = pick(rng, 0, m.size() - 1);
    int f = (e + pick(rng, 1, m.size() - 1)) % m.size();
    CHECK(rayleigh_diff(m, e, f) ==
          minor_poly(m, bit(e), 0) * minor_poly(m, bit(f), 0) -
              minor_poly(m, bit(e) | bit(f), 0) * basis_poly(m));
  }
}

TEST_CASE("duality transfers the difference with a square factor") {
  Rng rng(46);
  int done = 0;
  while (done < 100) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 2) continue;
    int e = pick(rng, 0, m.size() - 1);
    int f = (e + pick(rng, 1, m.size() - 1)) % m.size();
    std::vector<Scalar> point =
        testsupport::random_positive_point(rng, m.size());
    std::vector<Scalar> inverse;
    for (const Scalar& x : point) inverse.push_back(1 / x);

    Scalar square(1);
    for (int i = 0; i < m.size(); ++i)
      if (i != e && i != f) square *= point[i];
    square *= square;

    CHECK(delta_value(dual(m), e, f, point) ==
          square * delta_value(m, e, f, inverse));
    ++done;
  }
}

TEST_CASE("pair and triple valuations agree with the polynomials") {
  Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 3) continue;
    int e = pick(rng, 0, m.size() - 1);
    int f = (e + pick(rng, 1, m.size() - 1)) % m.size();
    int g = 0;
    while (g == e || g == f) ++g;
    std::vector<Scalar> point =
        testsupport::random_positive_point(rng, m.size());

    auto pv = pair_values(m, e, f, point);
    CHECK(pv[0] == minor_value(m, 0, bit(e) | bit(f), point));
    CHECK(pv[1] == minor_value(m, bit(e), bit(f), point));
    CHECK(pv[2] == minor_value(m, bit(f), bit(e), point));
    CHECK(pv[3] == minor_value(m, bit(e) | bit(f), 0, point));
    CHECK(delta_value(m, e, f, point) == pv[1] * pv[2] - pv[3] * pv[0]);

    TripleSplit split = triple_split(m, e, f, g, point);
    CHECK(split.delta_contract ==
          rayleigh_diff_contract(m, e, f, g).eval(point));
    CHECK(split.delta_delete == rayleigh_diff_delete(m, e, f, g).eval(point));
    CHECK(split.theta == central_term(m, e, f, g).eval(point));
  }
}

TEST_CASE("two-sum case analysis at sampled points") {
  Rng rng(48);
  int done = 0;
  while (done < 25) {
    Matroid m = testsupport::random_matroid(rng);
    Matroid q = testsupport::random_matroid(rng);
    if (m.size() < 3 || q.size() < 3) continue;
    int gm = pick(rng, 0, m.size() - 1);
    int gq = pick(rng, 0, q.size() - 1);
    if (contains(m.loops() | m.coloops(), gm)) continue;
    if (contains(q.loops() | q.coloops(), gq)) continue;

    Matroid q2 = q;
    for (std::string& label : q2.labels) label = "q" + label;
    Matroid n = two_sum(m, q2, m.labels[gm], q2.labels[gq]);

    std::vector<Scalar> mpt = testsupport::random_positive_point(rng, m.size());
    std::vector<Scalar> qpt = testsupport::random_positive_point(rng, q.size());
    // the glued ground is (m minus glue) then (q minus glue), in order
    std::vector<Scalar> npt;
    for (int i = 0; i < m.size(); ++i)
      if (i != gm) npt.push_back(mpt[i]);
    for (int i = 0; i < q.size(); ++i)
      if (i != gq) npt.push_back(qpt[i]);
    REQUIRE(static_cast<int>(npt.size()) == n.size());

    // case (i): one distinguished element on each side
    int e = gm == 0 ? 1 : 0;
    int fq = gq == 0 ? 1 : 0;
    int e_n = n.index_of(m.labels[e]);
    int f_n = n.index_of(q2.labels[fq]);
    CHECK(delta_value(n, e_n, f_n, npt) ==
          delta_value(m, e, gm, mpt) * delta_value(q, fq, gq, qpt));

    // case (ii): both distinguished elements on the first side
    int f = -1;
    for (int i = 0; i < m.size(); ++i)
      if (i != e && i != gm) {
        f = i;
        break;
      }
    Scalar q_with = minor_value(q, bit(gq), 0, qpt);
    Scalar q_without = minor_value(q, 0, bit(gq), qpt);
    TripleSplit split = triple_split(m, e, f, gm, mpt);
    CHECK(delta_value(n, n.index_of(m.labels[e]), n.index_of(m.labels[f]),
                      npt) ==
          q_without * q_without * split.delta_contract +
              q_without * q_with * split.theta +
              q_with * q_with * split.delta_delete);
    ++done;
  }
}

TEST_CASE("negative correlation verdicts") {
  PropertyReport bad = negative_correlation_check(catalog_get("s8").matroid);
  CHECK(bad.verdict == Verdict::VIOLATED);
  REQUIRE(!bad.witnesses.empty());
  CHECK(bad.witnesses.front().elements ==
        std::vector<std::string>{"1", "8"});
  CHECK(bad.witnesses.front().value == "-16");

  CHECK(negative_correlation_check(uniform_matroid(2, 4)).verdict ==
        Verdict::HOLDS);
}

TEST_CASE("balanced check sweeps minors") {
  CHECK(balanced_check(uniform_matroid(2, 4)).verdict == Verdict::HOLDS);
  CHECK(balanced_check(catalog_get("s8").matroid).verdict ==
        Verdict::VIOLATED);
  CHECK_THROWS_AS(balanced_check(uniform_matroid(1, 13)), GroundTooLarge);
}

TEST_CASE("sampling reports are deterministic in the seed") {
  Matroid u = uniform_matroid(2, 5);
  PropertyReport a = rayleigh_sample_check(u, SampleDomain::POSITIVE, 50, 7);
  PropertyReport b = rayleigh_sample_check(u, SampleDomain::POSITIVE, 50, 7);
  CHECK(a.verdict == Verdict::NO_VIOLATION_FOUND);
  CHECK(a.json() == b.json());
  CHECK(a.human() == b.human());
}

TEST_CASE("coefficient certificates and their limits") {
  PropertyReport good = coefficient_nonneg_check(uniform_matroid(2, 4));
  CHECK(good.verdict == Verdict::CERTIFIED);

  PropertyReport open = coefficient_nonneg_check(
      catalog_get("p7prime").matroid);
  CHECK(open.verdict == Verdict::NO_VIOLATION_FOUND);
  CHECK(open.witnesses.size() == 4);
}

TEST_CASE("hierarchy consistency on random matroids") {
  Rng rng(49);
  for (int t = 0; t < 25; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    if (m.size() < 2) continue;
    PropertyReport coeff = coefficient_nonneg_check(m);
    PropertyReport negcorr = negative_correlation_check(m);
    if (coeff.verdict == Verdict::CERTIFIED) {
      CHECK(negcorr.verdict == Verdict::HOLDS);
      CHECK(rayleigh_sample_check(m, SampleDomain::POSITIVE, 40, 11).verdict ==
            Verdict::NO_VIOLATION_FOUND);
    }
    if (m.size() <= 12) {
      PropertyReport bal = balanced_check(m);
      if (bal.verdict == Verdict::HOLDS)
        CHECK(negcorr.verdict == Verdict::HOLDS);
    }
  }
}

TEST_CASE("partition polynomial checks on uniform matroids") {
  Matroid u = uniform_matroid(2, 5);
  Assignment ones = Assignment::ones(u.labels);
  CHECK(rz_lc_check(u, 5, ones, PartitionKind::RealRooted).verdict ==
        Verdict::HOLDS);
  CHECK(rz_lc_check(u, 5, ones, PartitionKind::LogConcave).verdict ==
        Verdict::HOLDS);

  Matroid pg22 = catalog_get("pg(2,2)").matroid;
  PropertyReport rz = rz_lc_check(pg22, 3, Assignment::ones(pg22.labels),
                                  PartitionKind::RealRooted);
  CHECK(rz.verdict == Verdict::VIOLATED);
}

TEST_CASE("spot checks for the half-plane necessary condition") {
  CHECK(hpp_spot_check(catalog_get("f7").matroid, 50, 1).verdict ==
        Verdict::VIOLATED);
  CHECK(hpp_spot_check(uniform_matroid(2, 4), 100, 1).verdict ==
        Verdict::NO_VIOLATION_FOUND);
}

TEST_CASE("independent pair correlation sweep") {
  PropertyReport rep = independent_pair_check(uniform_matroid(2, 5), 40, 3);
  CHECK(rep.verdict == Verdict::NO_VIOLATION_FOUND);
  CHECK_THROWS_AS(independent_pair_check(uniform_matroid(1, 17), 10, 3),
                  GroundTooLarge);
}

TEST_CASE("transitive formula as a negative control") {
  CHECK(transitive_formula_check(uniform_matroid(3, 6)).verdict ==
        Verdict::HOLDS);
  CHECK(transitive_formula_check(catalog_get("s8").matroid).verdict ==
        Verdict::VIOLATED);
}
