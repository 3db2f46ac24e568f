#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "rayleigh/basis_poly.hpp"
#include "rayleigh/catalog.hpp"
#include "rayleigh/errors.hpp"
#include "rayleigh/field_matrix.hpp"
#include "rayleigh/graph.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/mtr_format.hpp"
#include "rayleigh/scalar.hpp"
#include "test_helpers.hpp"

using namespace rayleigh;
using testsupport::Rng;

TEST_CASE("uniform matroids") {
  Matroid u = uniform_matroid(2, 4);
  CHECK(u.size() == 4);
  CHECK(u.rank == 2);
  CHECK(u.bases.size() == 6);
  CHECK(u.loops() == 0);
  CHECK(u.coloops() == 0);
  CHECK(u.element_weight(0) == 3);
  CHECK(u.is_basis(u.mask_of({"1", "3"})));
  CHECK(u.is_independent(u.mask_of({"2"})));
  CHECK_FALSE(u.is_independent(u.mask_of({"1", "2", "3"})));
  CHECK_THROWS_AS(uniform_matroid(5, 4), Error);
  CHECK_THROWS_AS(uniform_matroid(2, 32), Error);
}

TEST_CASE("explicit family validation") {
  CHECK_THROWS_AS(from_bases({"a", "b"}, {}), EmptyFamily);
  CHECK_THROWS_AS(from_bases({"a", "b", "c"}, {{"a"}, {"a", "b"}}),
                  MixedCardinality);
  CHECK_THROWS_AS(from_bases({"a", "b", "c"}, {{"a", "x"}}), Error);
  // {ab, cd} fails exchange: no element of cd can replace a dropped a
  CHECK_THROWS_AS(
      from_bases({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
      ExchangeAxiomViolation);
  CHECK_THROWS_AS(validate_labels({"a", ""}), Error);
  CHECK_THROWS_AS(validate_labels({"a", "a"}), Error);
  CHECK_THROWS_AS(validate_labels({"a", "b c"}), Error);
}

TEST_CASE("duality is an involution with complementary weights") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    Matroid d = dual(m);
    CHECK(d.rank == m.size() - m.rank);
    CHECK(d.bases.size() == m.bases.size());
    Matroid dd = dual(d);
    CHECK(dd.bases == m.bases);
    CHECK(dd.labels == m.labels);
    CHECK(d.loops() == m.coloops());
    CHECK(d.coloops() == m.loops());
    for (int i = 0; i < m.size(); ++i)
      CHECK(d.element_weight(i) ==
            static_cast<long>(m.bases.size()) - m.element_weight(i));
  }
}

TEST_CASE("minors against a direct filter") {
  Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    // split a random basis: contract part of it, delete some outside points
    Subset basis = m.bases[rng() % m.bases.size()];
    Subset contract = 0, del = 0;
    for (int i = 0; i < m.size(); ++i) {
      if (contains(basis, i) && rng() % 2) contract |= bit(i);
      if (!contains(basis, i) && rng() % 3 == 0) del |= bit(i);
    }
    if (popcount(contract) + popcount(del) >= m.size()) continue;
    Matroid minor = matroid_minor(m, contract, del);
    CHECK(minor.size() == m.size() - popcount(contract) - popcount(del));
    CHECK(minor.rank == m.rank - popcount(contract));
    // every original basis through `contract` avoiding `del` survives
    long direct = 0;
    for (Subset b : m.bases)
      if ((b & contract) == contract && (b & del) == 0) ++direct;
    CHECK(static_cast<long>(minor.bases.size()) == direct);
    CHECK_THROWS_AS(matroid_minor(m, bit(0), bit(0)), Error);
  }
}

TEST_CASE("minor-polynomial counts agree with basis filters") {
  Matroid f7 = catalog_get("f7").matroid;
  std::vector<Scalar> ones(7, make_scalar(1));
  long through_1 = 0;
  for (Subset b : f7.bases)
    if (contains(b, 0)) ++through_1;
  CHECK(minor_value(f7, bit(0), 0, ones) == through_1);
  CHECK(minor_poly(f7, bit(0), 0).eval(ones) == through_1);
}

TEST_CASE("two-sum with a rank-one factor is relabelling") {
  Matroid g23m = graphic_matroid(parallel_path_graph(2, 3));
  CHECK(g23m.bases.size() == 20);  // 8 trees avoid the root, 12 contain it

  Matroid n2 = two_sum(g23m, uniform_matroid(1, 2), "g", "1");
  CHECK(n2.bases.size() == 20);
  CHECK(is_isomorphic(n2, g23m));

  // with U(1,3) the glued side contributes two parallel replacements
  Matroid n3 = two_sum(g23m, uniform_matroid(1, 3), "g", "1");
  CHECK(n3.bases.size() == 12 * 2 + 8);
}

TEST_CASE("two-sum count identity at the all-ones point") {
  Rng rng(33);
  int done = 0;
  while (done < 30) {
    Matroid m = testsupport::random_matroid(rng);
    Matroid q = testsupport::random_matroid(rng);
    int gm = static_cast<int>(rng() % m.size());
    int gq = static_cast<int>(rng() % q.size());
    if (contains(m.loops() | m.coloops(), gm)) continue;
    if (contains(q.loops() | q.coloops(), gq)) continue;

    // keep label sets disjoint by prefixing the second factor
    Matroid q2 = q;
    for (std::string& label : q2.labels) label = "q" + label;
    Matroid n = two_sum(m, q2, m.labels[gm], q2.labels[gq]);

    long m_with = m.element_weight(gm);
    long m_without = static_cast<long>(m.bases.size()) - m_with;
    long q_with = q.element_weight(gq);
    long q_without = static_cast<long>(q.bases.size()) - q_with;
    CHECK(static_cast<long>(n.bases.size()) ==
          m_with * q_without + m_without * q_with);
    CHECK(n.rank == m.rank + q.rank - 1);
    CHECK(n.size() == m.size() + q.size() - 2);
    ++done;
  }
}

TEST_CASE("two-sum rejects degenerate glue") {
  Matroid u = uniform_matroid(2, 4);
  Matroid single = uniform_matroid(1, 1);  // its element is a coloop
  for (std::string& label : single.labels) label = "z" + label;
  CHECK_THROWS_AS(two_sum(u, single, "1", "z1"), Error);
}

TEST_CASE("parallel expansion replaces elements by classes") {
  Matroid u = uniform_matroid(1, 2);
  Matroid e = parallel_expand(u, {2, 3});
  CHECK(e.size() == 5);
  CHECK(e.rank == 1);
  CHECK(e.bases.size() == 5);
  CHECK(e.labels == std::vector<std::string>{"1.1", "1.2", "2.1", "2.2",
                                             "2.3"});

  Matroid keep = parallel_expand(u, {1, 2});
  CHECK(keep.labels == std::vector<std::string>{"1", "2.1", "2.2"});
  CHECK_THROWS_AS(parallel_expand(u, {1}), Error);
  CHECK_THROWS_AS(parallel_expand(u, {0, 2}), Error);
}

TEST_CASE("expansion multiplies basis weights") {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    std::vector<int> mult(m.size());
    for (int& k : mult) k = testsupport::pick(rng, 1, 3);
    Matroid e = parallel_expand(m, mult);
    long expect = 0;
    for (Subset b : m.bases) {
      long w = 1;
      for_each_bit(b, [&](int i) { w *= mult[i]; });
      expect += w;
    }
    CHECK(static_cast<long>(e.bases.size()) == expect);
    CHECK(e.rank == m.rank);
  }
}

TEST_CASE("isomorphism and minor search") {
  Matroid f7 = catalog_get("f7").matroid;
  Matroid pg22 = catalog_get("pg(2,2)").matroid;
  CHECK(is_isomorphic(f7, pg22));
  CHECK_FALSE(is_isomorphic(f7, dual(f7)));

  auto onto_self = find_isomorphism(f7, f7);
  REQUIRE(onto_self.has_value());
  CHECK(onto_self->size() == 7);

  Matroid u24 = uniform_matroid(2, 4);
  CHECK_FALSE(has_minor(f7, u24));  // binary matroids exclude this minor
  // minor containment transfers through duality, in both directions
  CHECK(has_minor(dual(f7), dual(u24)) == has_minor(f7, u24));
  CHECK(has_minor(uniform_matroid(2, 5), u24));
  CHECK(has_minor(dual(uniform_matroid(2, 5)), dual(u24)));

  auto witness = find_minor(uniform_matroid(2, 5), u24);
  REQUIRE(witness.has_value());
  Matroid shrunk =
      matroid_minor(uniform_matroid(2, 5), witness->contracted,
                    witness->deleted);
  CHECK(is_isomorphic(shrunk, u24));
}

TEST_CASE("binary and rational readings of the same matrix differ") {
  // over GF(2) the seventh triple {3,5,6} of the plane is dependent, over
  // the rationals it is not, so the rational matroid has one extra basis
  std::vector<std::vector<Scalar>> rows = {
      {1, 0, 0, 0, 1, 1, 1},
      {0, 1, 0, 1, 0, 1, 1},
      {0, 0, 1, 1, 1, 0, 1},
  };
  Matroid binary = from_matrix(FieldMatrix::make(Field::GF2, rows));
  Matroid rational = from_matrix(FieldMatrix::make(Field::Rational, rows));
  CHECK(binary.bases.size() == 28);
  CHECK(rational.bases.size() == 29);
  CHECK(is_isomorphic(binary, catalog_get("f7").matroid));
}

TEST_CASE("profile summarises structure") {
  Matroid m = from_bases({"a", "b", "c"}, {{"a", "b"}}, "tiny");
  Profile p = profile(m);
  CHECK(p.name == "tiny");
  CHECK(p.size == 3);
  CHECK(p.rank == 2);
  CHECK(p.basis_count == 1);
  CHECK(p.loops == std::vector<std::string>{"c"});
  CHECK(p.coloops == std::vector<std::string>{"a", "b"});
}

TEST_CASE("mtr round trip for catalog entries") {
  for (std::string name : {"s8", "a8", "f7", "f7dual", "jprime", "p7prime",
                           "l-transversal", "pg(2,2)", "uniform(2,4)"}) {
    Matroid m = catalog_get(name).matroid;
    MtrContent back = parse_mtr_text(write_mtr(m));
    CHECK(back.matroid.name == m.name);
    CHECK(back.matroid.labels == m.labels);
    CHECK(back.matroid.bases == m.bases);
    CHECK_FALSE(back.graph.has_value());
  }
}

TEST_CASE("mtr round trip for graphs keeps the graph body") {
  Graph g = parallel_path_graph(2, 3);
  MtrContent back = parse_mtr_text(write_mtr(g, "g(2,3)"));
  REQUIRE(back.graph.has_value());
  CHECK(back.graph->vertices == g.vertices);
  CHECK(back.graph->edges.size() == g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(back.graph->edges[i].label == g.edges[i].label);
    CHECK(back.graph->edges[i].tail == g.edges[i].tail);
    CHECK(back.graph->edges[i].head == g.edges[i].head);
  }
  CHECK(back.matroid.bases == graphic_matroid(g).bases);
}

TEST_CASE("mtr round trip fuzz") {
  Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    Matroid m = testsupport::random_matroid(rng);
    MtrContent back = parse_mtr_text(write_mtr(m));
    CHECK(back.matroid.labels == m.labels);
    CHECK(back.matroid.bases == m.bases);
  }
}

TEST_CASE("mtr parser reports one-based line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_mtr_text(text);
      return -1;
    } catch (const ParseError& e) {
      return e.line;
    }
  };
  CHECK(line_of("name x\nelements a b\nbases\na c\n") == 4);
  CHECK(line_of("elements a b\nfield gf7\nmatrix\n") == 2);
  CHECK(line_of("elements a a\nbases\na\n") == 1);
  CHECK(line_of("bases\na\n") == 1);
  CHECK(line_of("elements a b\nuniform 1 3\n") == 2);
  CHECK(line_of("elements a b\n") > 0);   // missing body
  CHECK(line_of("elements a b\nbases\n# only comments\n") > 0);
}

TEST_CASE("mtr bodies construct the advertised matroids") {
  MtrContent u = parse_mtr_text("name u\nelements p q r\nuniform 2 3\n");
  CHECK(u.matroid.bases.size() == 3);

  MtrContent t = parse_mtr_text(
      "elements a b c\ntransversal\na b\nb c\n");
  CHECK(t.matroid.rank == 2);

  MtrContent l = parse_mtr_text(
      "elements 1 2 3 4\nlines3\n1 2 3\n");
  CHECK(l.matroid.rank == 3);
  CHECK(l.matroid.bases.size() == 3);  // all triples except the line

  MtrContent g = parse_mtr_text(
      "elements e1 e2\ngraph\ne1 u v\ne2 v w\n");
  REQUIRE(g.graph.has_value());
  CHECK(g.matroid.bases.size() == 1);
}
