#include "rayleigh/catalog.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "catalog_data.hpp"
#include "rayleigh/basis_poly.hpp"
#include "rayleigh/certificates.hpp"
#include "rayleigh/checks.hpp"
#include "rayleigh/delta.hpp"
#include "rayleigh/errors.hpp"
#include "rayleigh/field_matrix.hpp"
#include "rayleigh/unipoly.hpp"

namespace rayleigh {

namespace {

using ordered_json = nlohmann::ordered_json;

// s8 and a8 are the two binary matroids of this 4x8 representation; they
// differ only in the top right entry.
Matroid corner_pair(int corner, const std::string& name) {
  std::vector<std::vector<Scalar>> rows{
      {1, 1, 1, 1, 1, 1, 1, Scalar(corner)},
      {0, 1, 0, 0, 0, 1, 1, 1},
      {0, 0, 1, 0, 1, 0, 1, 1},
      {0, 0, 0, 1, 1, 1, 0, 1},
  };
  return from_matrix(FieldMatrix::make(Field::GF2, std::move(rows)), {}, name);
}

Matroid fano() {
  std::vector<std::vector<Scalar>> rows{
      {1, 0, 0, 0, 1, 1, 1},
      {0, 1, 0, 1, 0, 1, 1},
      {0, 0, 1, 1, 1, 0, 1},
  };
  return from_matrix(FieldMatrix::make(Field::GF2, std::move(rows)), {}, "f7");
}

Matroid jprime() {
  std::vector<std::vector<Scalar>> rows{
      {1, 1, 1, 1, 1, 1, 1, 3},
      {0, 1, 0, 0, 2, 0, 0, 1},
      {0, 0, 1, 0, 0, 2, 0, 1},
      {0, 0, 0, 1, 0, 0, 2, 3},
  };
  return from_matrix(FieldMatrix::make(Field::Rational, std::move(rows)), {},
                     "jprime");
}

// Points of the projective plane of order q as homogeneous coordinate
// columns: first nonzero coordinate 1, columns in lexicographic order.
Matroid projective_plane(int q) {
  std::vector<std::vector<Scalar>> rows(3);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        int first = a != 0 ? a : b != 0 ? b : c;
        if (first != 1) continue;
        rows[0].emplace_back(a);
        rows[1].emplace_back(b);
        rows[2].emplace_back(c);
      }
  Field field = q == 2 ? Field::GF2 : Field::GF3;
  return from_matrix(FieldMatrix::make(field, std::move(rows)), {},
                     "pg(2," + std::to_string(q) + ")");
}

Matroid seven_points_four_lines() {
  return from_lines_rank3({"1", "2", "3", "4", "5", "6", "7"},
                          {{"1", "2", "6"},
                           {"2", "3", "4"},
                           {"1", "3", "5"},
                           {"5", "6", "7"}},
                          "p7prime");
}

Matroid transversal_l() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
  labels.push_back("e");
  labels.push_back("f");
  return from_transversal(std::move(labels),
                          {{"1", "2", "3", "4", "f"},
                           {"5", "6", "7", "f"},
                           {"8", "9", "10", "f"},
                           {"1", "2", "3", "5", "6", "8", "9", "e", "f"}},
                          "l-transversal");
}

// Matches head(p1,...,pk) and returns the parameters. An empty optional
// means the name is not of this shape at all; a malformed parameter list
// after a matching head throws.
std::optional<std::vector<int>> match_params(const std::string& name,
                                             const std::string& head) {
  std::size_t open = head.size();
  if (name.size() < open + 3 || name.compare(0, open, head) != 0 ||
      name[open] != '(' || name.back() != ')')
    return std::nullopt;
  std::vector<int> out;
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  std::istringstream in(inner);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty() || piece.size() > 6 ||
        piece.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad parameter '" + piece + "' in catalog name '" + name +
                  "'");
    out.push_back(std::stoi(piece));
  }
  if (out.empty())
    throw Error("empty parameter list in catalog name '" + name + "'");
  return out;
}

Graph complete_four() {
  return Graph::make({"a", "b", "c", "d"}, {{"ab", "a", "b"},
                                            {"ac", "a", "c"},
                                            {"ad", "a", "d"},
                                            {"bc", "b", "c"},
                                            {"bd", "b", "d"},
                                            {"cd", "c", "d"}});
}

}  // namespace

CatalogItem catalog_get(const std::string& name) {
  if (name == "s8") return {corner_pair(0, "s8"), std::nullopt};
  if (name == "a8") return {corner_pair(1, "a8"), std::nullopt};
  if (name == "f7") return {fano(), std::nullopt};
  if (name == "f7dual") {
    Matroid d = dual(fano());
    d.name = "f7dual";
    return {std::move(d), std::nullopt};
  }
  if (name == "jprime") return {jprime(), std::nullopt};
  if (name == "p7prime") return {seven_points_four_lines(), std::nullopt};
  if (name == "l-transversal") return {transversal_l(), std::nullopt};
  if (auto p = match_params(name, "g")) {
    if (p->size() != 2)
      throw Error("g takes two parameters, as in g(2,3)");
    Graph g = parallel_path_graph((*p)[0], (*p)[1]);
    Matroid m = graphic_matroid(g);
    m.name = name;
    return {std::move(m), std::move(g)};
  }
  if (auto p = match_params(name, "pg")) {
    if (*p != std::vector<int>{2, 2} && *p != std::vector<int>{2, 3})
      throw Error("only pg(2,2) and pg(2,3) are built in");
    return {projective_plane(p->back()), std::nullopt};
  }
  if (auto p = match_params(name, "uniform")) {
    if (p->size() != 2)
      throw Error("uniform takes two parameters, as in uniform(2,4)");
    Matroid m = uniform_matroid((*p)[0], (*p)[1]);
    m.name = name;
    return {std::move(m), std::nullopt};
  }
  throw Error("unknown catalog entry '" + name + "'");
}

bool catalog_has(const std::string& name) {
  try {
    catalog_get(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> catalog_names() {
  return {"s8",      "a8",           "f7",      "f7dual",
          "jprime",  "p7prime",      "l-transversal",
          "g(a,b)",  "pg(2,2)",      "pg(2,3)", "uniform(r,m)"};
}

namespace {

std::vector<Scalar> ones_for(const Matroid& m) {
  return std::vector<Scalar>(m.size(), Scalar(1));
}

std::string shape_string(const Matroid& m) {
  return std::to_string(m.size()) + " elements, rank " +
         std::to_string(m.rank);
}

std::string count_string(const Matroid& m) {
  return std::to_string(m.bases.size());
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string brace_join(const std::vector<std::string>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += elements[i];
  }
  return out + "}";
}

// Verdict, then the witness value for the named pair when one was reported.
std::string verdict_with_pair(const PropertyReport& rep,
                              const std::vector<std::string>& pair) {
  std::string out = to_string(rep.verdict);
  for (const Witness& w : rep.witnesses)
    if (w.elements == pair) {
      out += " " + brace_join(pair) + " " + w.value;
      break;
    }
  return out;
}

// Verdict, then the elements and value of the first witness.
std::string verdict_with_first(const PropertyReport& rep) {
  std::string out = to_string(rep.verdict);
  if (!rep.witnesses.empty()) {
    out += " " + brace_join(rep.witnesses.front().elements);
    if (!rep.witnesses.front().value.empty())
      out += " " + rep.witnesses.front().value;
  }
  return out;
}

std::string coeffs_string(const UniPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.coeffs()[i]);
  }
  return out + "]";
}

struct FactSink {
  const CatalogPatch& patch;
  ordered_json goldens;
  std::vector<FactResult> facts;

  CatalogItem get(const std::string& name) const {
    if (patch) {
      if (auto replaced = patch(name)) return *std::move(replaced);
    }
    return catalog_get(name);
  }

  bool have(const std::string& id) const {
    return std::any_of(facts.begin(), facts.end(),
                       [&](const FactResult& f) { return f.id == id; });
  }

  void add(const std::string& id, const std::string& description,
           const std::string& actual) {
    FactResult r;
    r.id = id;
    r.description = description;
    r.actual = actual;
    if (auto it = goldens.find(id); it != goldens.end())
      r.expected = it->get<std::string>();
    else
      r.expected = "(no fixture entry)";
    r.passed = r.expected == r.actual;
    facts.push_back(std::move(r));
  }

  // Records every declared fact the failed block never reached.
  void backfill(const char* const* ids, std::size_t n,
                const std::string& what) {
    for (std::size_t i = 0; i < n; ++i)
      if (!have(ids[i])) add(ids[i], "(not computed)", "error: " + what);
  }
};

void verify_s8(FactSink& s) {
  static const char* const ids[] = {"s8-shape",    "s8-basis-count",
                                    "s8-weight-1", "s8-weight-8",
                                    "s8-pair-18",  "s8-delta-18",
                                    "s8-negcorr",  "s8-balanced"};
  try {
    Matroid m = s.get("s8").matroid;
    s.add("s8-shape", "s8: ground set size and rank", shape_string(m));
    s.add("s8-basis-count", "s8: number of bases", count_string(m));
    s.add("s8-weight-1", "s8: bases containing element 1",
          std::to_string(m.element_weight(m.index_of("1"))));
    s.add("s8-weight-8", "s8: bases containing element 8",
          std::to_string(m.element_weight(m.index_of("8"))));
    std::vector<Scalar> ones = ones_for(m);
    s.add("s8-pair-18", "s8: bases containing both 1 and 8",
          to_string(minor_value(m, m.mask_of({"1", "8"}), 0, ones)));
    s.add("s8-delta-18", "s8: pair difference {1,8} at the all-ones point",
          to_string(delta_value(m, m.index_of("1"), m.index_of("8"), ones)));
    s.add("s8-negcorr", "s8: negative correlation at the all-ones point",
          verdict_with_pair(negative_correlation_check(m), {"1", "8"}));
    s.add("s8-balanced", "s8: negative correlation over every minor",
          to_string(balanced_check(m).verdict));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_a8(FactSink& s) {
  static const char* const ids[] = {
      "a8-shape",         "a8-basis-count", "a8-balanced",
      "a8-delta-78-ones", "a8-transitive",  "a8-coeff-squares",
      "a8-coeff-allsix",  "a8-square-certificate", "a8-f7-minor"};
  try {
    Matroid m = s.get("a8").matroid;
    s.add("a8-shape", "a8: ground set size and rank", shape_string(m));
    s.add("a8-basis-count", "a8: number of bases", count_string(m));
    s.add("a8-balanced", "a8: negative correlation over every minor",
          to_string(balanced_check(m).verdict));
    s.add("a8-delta-78-ones", "a8: pair difference {7,8} at the all-ones point",
          to_string(delta_value(m, m.index_of("7"), m.index_of("8"),
                                ones_for(m))));
    s.add("a8-transitive", "a8: doubly transitive pair value formula",
          to_string(transitive_formula_check(m).verdict));
    SparsePoly diff = rayleigh_diff(m, "7", "8");
    Monomial squares_term{{{m.index_of("1"), 2},
                           {m.index_of("2"), 2},
                           {m.index_of("4"), 1},
                           {m.index_of("6"), 1}}};
    s.add("a8-coeff-squares",
          "a8 {7,8} difference: coefficient of y1^2 y2^2 y4 y6",
          to_string(diff.coeff(squares_term)));
    Monomial allsix = Monomial::from_indices(
        {m.index_of("1"), m.index_of("2"), m.index_of("3"), m.index_of("4"),
         m.index_of("5"), m.index_of("6")});
    s.add("a8-coeff-allsix",
          "a8 {7,8} difference: coefficient of y1 y2 y3 y4 y5 y6",
          to_string(diff.coeff(allsix)));
    SquareCertificate cert =
        SquareCertificate::parse_json(diff.labels(), fixtures::kA8Certificate);
    s.add("a8-square-certificate",
          "a8 {7,8} difference matches its six-square decomposition",
          bool_string(verify_square_certificate(diff, cert)));
    s.add("a8-f7-minor", "a8 has an f7 minor",
          bool_string(has_minor(m, s.get("f7").matroid)));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_f7(FactSink& s) {
  static const char* const ids[] = {
      "f7-shape",          "f7-basis-count",    "f7-balanced",
      "f7dual-balanced",   "f7-partial-f126",   "f7-partial-f12-no6",
      "f7-partial-f16-no2", "f7-partial-f26-no1", "f7-partial-f1-no26",
      "f7-partial-f2-no16", "f7-partial-f6-no12", "f7-partial-f-no126",
      "f7-strong-poly",    "f7-strong-value",   "f7-strong-sample",
      "f7-hpp"};
  try {
    Matroid m = s.get("f7").matroid;
    s.add("f7-shape", "f7: ground set size and rank", shape_string(m));
    s.add("f7-basis-count", "f7: number of bases", count_string(m));
    s.add("f7-balanced", "f7: negative correlation over every minor",
          to_string(balanced_check(m).verdict));
    s.add("f7dual-balanced", "f7dual: negative correlation over every minor",
          to_string(balanced_check(s.get("f7dual").matroid).verdict));

    // Partition values at y3 = y5 = 2, y4 = y7 = -1; elements 1, 2, 6 are
    // always constrained, so their entries are never read.
    std::vector<Scalar> pt(m.size(), Scalar(0));
    pt[m.index_of("3")] = Scalar(2);
    pt[m.index_of("5")] = Scalar(2);
    pt[m.index_of("4")] = Scalar(-1);
    pt[m.index_of("7")] = Scalar(-1);
    auto partial = [&](const std::vector<std::string>& in,
                       const std::vector<std::string>& out) {
      return to_string(minor_value(m, m.mask_of(in), m.mask_of(out), pt));
    };
    s.add("f7-partial-f126", "f7 partial: 1, 2, 6 all in",
          partial({"1", "2", "6"}, {}));
    s.add("f7-partial-f12-no6", "f7 partial: 1, 2 in, 6 out",
          partial({"1", "2"}, {"6"}));
    s.add("f7-partial-f16-no2", "f7 partial: 1, 6 in, 2 out",
          partial({"1", "6"}, {"2"}));
    s.add("f7-partial-f26-no1", "f7 partial: 2, 6 in, 1 out",
          partial({"2", "6"}, {"1"}));
    s.add("f7-partial-f1-no26", "f7 partial: 1 in, 2, 6 out",
          partial({"1"}, {"2", "6"}));
    s.add("f7-partial-f2-no16", "f7 partial: 2 in, 1, 6 out",
          partial({"2"}, {"1", "6"}));
    s.add("f7-partial-f6-no12", "f7 partial: 6 in, 1, 2 out",
          partial({"6"}, {"1", "2"}));
    s.add("f7-partial-f-no126", "f7 partial: 1, 2, 6 all out",
          partial({}, {"1", "2", "6"}));

    Assignment sub;
    sub.set("3", Scalar(2));
    sub.set("5", Scalar(2));
    sub.set("4", Scalar(-1));
    sub.set("7", Scalar(-1));
    SparsePoly diff = rayleigh_diff(m, "1", "2").substitute(sub);
    s.add("f7-strong-poly",
          "f7 {1,2} difference at y3 = y5 = 2, y4 = y7 = -1",
          diff.to_string());
    Assignment at_two;
    at_two.set("6", Scalar(2));
    s.add("f7-strong-value", "f7: the same difference at y6 = 2",
          to_string(diff.eval(at_two)));
    s.add("f7-strong-sample",
          "f7: sampled pair differences over real points, seed 1",
          verdict_with_pair(
              rayleigh_sample_check(m, SampleDomain::REAL, 100, 1),
              {"1", "2"}));
    s.add("f7-hpp", "f7: real-rootedness of indicator substitutions",
          verdict_with_first(hpp_spot_check(m, 500, 1)));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_jprime(FactSink& s) {
  static const char* const ids[] = {
      "jprime-shape",         "jprime-negcorr",      "jprime-delta-18",
      "jprime-delta-47",      "jprime-delta-25",     "jprime-table",
      "jprime-line-poly",     "jprime-line-factored", "jprime-line-t-7-10",
      "jprime-line-t-2-3",    "jprime-line-t-2",     "jprime-expand-shape",
      "jprime-expand-delta",  "jprime-expand-scaled", "jprime-expand-negcorr"};
  try {
    Matroid m = s.get("jprime").matroid;
    s.add("jprime-shape", "jprime: ground set size and rank", shape_string(m));
    s.add("jprime-negcorr", "jprime: negative correlation at all-ones",
          to_string(negative_correlation_check(m).verdict));
    std::vector<Scalar> ones = ones_for(m);
    auto dv = [&](const char* e, const char* f) {
      return to_string(delta_value(m, m.index_of(e), m.index_of(f), ones));
    };
    s.add("jprime-delta-18", "jprime: {1,8} difference at all-ones",
          dv("1", "8"));
    s.add("jprime-delta-47", "jprime: {4,7} difference at all-ones",
          dv("4", "7"));
    s.add("jprime-delta-25", "jprime: {2,5} difference at all-ones",
          dv("2", "5"));

    ordered_json table = ordered_json::parse(fixtures::kJPrimeTable);
    int matched = 0, total = 0;
    std::string first_bad;
    for (const auto& [key, val] : table.items()) {
      ++total;
      auto comma = key.find(',');
      std::string e = key.substr(0, comma), f = key.substr(comma + 1);
      std::string got = dv(e.c_str(), f.c_str());
      if (got == val.get<std::string>())
        ++matched;
      else if (first_bad.empty())
        first_bad = "; first mismatch {" + e + "," + f + "} " + got;
    }
    s.add("jprime-table", "jprime: all 28 pair differences at all-ones",
          std::to_string(matched) + "/" + std::to_string(total) + first_bad);

    Assignment tail;
    tail.set("5", Scalar(1));
    tail.set("6", Scalar(1));
    tail.set("7", Scalar(1));
    UniPoly line =
        rayleigh_diff(m, "1", "8").substitute(tail).collapse();
    s.add("jprime-line-poly",
          "jprime {1,8} difference on y2 = y3 = y4 = t, y5 = y6 = y7 = 1",
          coeffs_string(line));
    UniPoly tp1({1, 1}), tm1({-1, 1}), quad({-1, 1, 1});
    s.add("jprime-line-factored",
          "jprime line polynomial equals (t+1)^3 (t-1) (t^2+t-1)",
          bool_string(line == tp1 * tp1 * tp1 * tm1 * quad));
    s.add("jprime-line-t-7-10", "jprime line value at t = 7/10",
          to_string(line.eval(make_scalar(7, 10))));
    s.add("jprime-line-t-2-3", "jprime line value at t = 2/3",
          to_string(line.eval(make_scalar(2, 3))));
    s.add("jprime-line-t-2", "jprime line value at t = 2",
          to_string(line.eval(Scalar(2))));

    Matroid wide = parallel_expand(m, {1, 2, 2, 2, 3, 3, 3, 1});
    s.add("jprime-expand-shape",
          "jprime expanded by (1,2,2,2,3,3,3,1): size and rank",
          shape_string(wide));
    s.add("jprime-expand-delta",
          "jprime expansion: {1,8} difference at all-ones",
          to_string(delta_value(wide, wide.index_of("1"), wide.index_of("8"),
                                ones_for(wide))));
    Scalar scaled = line.eval(make_scalar(2, 3));
    for (int k = 0; k < 6; ++k) scaled *= 3;
    s.add("jprime-expand-scaled",
          "jprime expansion value from the line value at 2/3 times 3^6",
          to_string(scaled));
    s.add("jprime-expand-negcorr",
          "jprime expansion: negative correlation at all-ones",
          verdict_with_pair(negative_correlation_check(wide), {"1", "8"}));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_p7prime(FactSink& s) {
  static const char* const ids[] = {"p7prime-shape", "p7prime-basis-count",
                                    "p7prime-coeff-pairs", "p7prime-sample"};
  try {
    Matroid m = s.get("p7prime").matroid;
    s.add("p7prime-shape", "p7prime: ground set size and rank",
          shape_string(m));
    s.add("p7prime-basis-count", "p7prime: number of bases", count_string(m));
    PropertyReport rep = coefficient_nonneg_check(m);
    std::string pairs;
    for (const Witness& w : rep.witnesses) {
      if (!pairs.empty()) pairs += " ";
      pairs += brace_join(w.elements);
    }
    s.add("p7prime-coeff-pairs",
          "p7prime: pairs whose difference has a negative coefficient",
          pairs.empty() ? "(none)" : pairs);
    s.add("p7prime-sample",
          "p7prime: 10000 sampled positive points, seed 1",
          to_string(rayleigh_sample_check(m, SampleDomain::POSITIVE, 10000, 1)
                        .verdict));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_l(FactSink& s) {
  static const char* const ids[] = {"l-shape",    "l-basis-count",
                                    "l-weight-e", "l-weight-f",
                                    "l-pair-ef",  "l-delta-ef",
                                    "l-negcorr"};
  try {
    Matroid m = s.get("l-transversal").matroid;
    s.add("l-shape", "l-transversal: ground set size and rank",
          shape_string(m));
    s.add("l-basis-count", "l-transversal: number of bases", count_string(m));
    s.add("l-weight-e", "l-transversal: bases containing e",
          std::to_string(m.element_weight(m.index_of("e"))));
    s.add("l-weight-f", "l-transversal: bases containing f",
          std::to_string(m.element_weight(m.index_of("f"))));
    std::vector<Scalar> ones = ones_for(m);
    s.add("l-pair-ef", "l-transversal: bases containing both e and f",
          to_string(minor_value(m, m.mask_of({"e", "f"}), 0, ones)));
    s.add("l-delta-ef",
          "l-transversal: pair difference {e,f} at the all-ones point",
          to_string(delta_value(m, m.index_of("e"), m.index_of("f"), ones)));
    s.add("l-negcorr", "l-transversal: negative correlation at all-ones",
          verdict_with_pair(negative_correlation_check(m), {"e", "f"}));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_graphs(FactSink& s) {
  static const char* const ids[] = {
      "g23-trees", "g23-ratio",        "triangle-conductance",
      "mono-k4",   "mono-g23",         "cert-k4-adjacent",
      "cert-k4-disjoint", "cert-flip", "g24-s8-minor",
      "k4-hpp"};
  try {
    CatalogItem gpath = s.get("g(2,3)");
    const Matroid& m = gpath.matroid;
    std::vector<Scalar> ones = ones_for(m);
    Scalar avoiding = minor_value(m, 0, m.mask_of({"g"}), ones);
    Scalar containing = minor_value(m, m.mask_of({"g"}), 0, ones);
    s.add("g23-trees", "g(2,3): spanning trees avoiding / containing the root",
          to_string(avoiding) + " avoiding, " + to_string(containing) +
              " containing");
    s.add("g23-ratio", "g(2,3): tree ratio avoiding over containing",
          to_string(avoiding / containing));

    Graph triangle = Graph::make(
        {"a", "b", "c"},
        {{"ab", "a", "b"}, {"ac", "a", "c"}, {"bc", "b", "c"}});
    s.add("triangle-conductance",
          "triangle: conductance between a and b at unit weights",
          to_string(effective_conductance(triangle, "a", "b",
                                          Assignment::ones(
                                              {"ab", "ac", "bc"}))));

    Graph k4 = complete_four();
    s.add("mono-k4",
          "K4: conductance monotone in every edge weight, 100 samples, seed 1",
          to_string(monotonicity_check(k4, "a", "b", 100, 1).verdict));
    if (!gpath.graph) throw Error("g(2,3) carries no graph");
    s.add("mono-g23",
          "g(2,3): conductance monotone in every edge weight, 100 samples, "
          "seed 1",
          to_string(
              monotonicity_check(*gpath.graph, "v0", "v3", 100, 1).verdict));

    s.add("cert-k4-adjacent",
          "K4: difference of two adjacent edges is a perfect square",
          bool_string(square_certificate(k4, "ab", "ac").verified));
    s.add("cert-k4-disjoint",
          "K4: difference of two disjoint edges is a perfect square",
          bool_string(square_certificate(k4, "ab", "cd").verified));
    Graph flipped = complete_four();
    for (GraphEdge& edge : flipped.edges)
      if (edge.label == "cd") std::swap(edge.tail, edge.head);
    SparsePoly before = square_certificate(k4, "ab", "cd").p;
    SparsePoly after = square_certificate(flipped, "ab", "cd").p;
    s.add("cert-flip",
          "K4: reversing one edge negates the certificate polynomial",
          bool_string(after == -before));

    s.add("g24-s8-minor", "g(2,4) has an s8 minor",
          bool_string(has_minor(s.get("g(2,4)").matroid,
                                s.get("s8").matroid)));
    s.add("k4-hpp", "K4 cycle matroid: indicator substitutions real-rooted",
          to_string(hpp_spot_check(graphic_matroid(k4), 500, 1).verdict));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_pg(FactSink& s) {
  static const char* const ids[] = {
      "pg22-shape",       "pg22-iso-f7",     "pg22-line-partition",
      "pg22-line-disc",   "pg22-line-roots", "pg22-rz",
      "pg22-pair-value",  "pg22-transitive", "pg23-shape",
      "pg23-basis-count", "pg23-line-partition", "pg23-line-disc",
      "pg23-disc-formula", "pg23-rz",        "pg23-pair-value",
      "pg23-transitive"};
  try {
    Matroid p2 = s.get("pg(2,2)").matroid;
    s.add("pg22-shape", "pg(2,2): ground set size and rank",
          shape_string(p2));
    s.add("pg22-iso-f7", "pg(2,2) is isomorphic to f7",
          bool_string(is_isomorphic(p2, s.get("f7").matroid)));
    UniPoly q2 = partition_poly(p2, p2.mask_of({"1", "2", "3"}), {},
                                Assignment::ones(p2.labels));
    s.add("pg22-line-partition",
          "pg(2,2): partition polynomial of the first line at all-ones",
          coeffs_string(q2));
    s.add("pg22-line-disc", "pg(2,2): discriminant of that quadratic",
          to_string(quadratic_discriminant(q2)));
    s.add("pg22-line-roots", "pg(2,2): its count of distinct real roots",
          std::to_string(real_root_census(q2).distinct_real_roots));
    s.add("pg22-rz",
          "pg(2,2): real-rooted partitions up to size 3 at all-ones",
          verdict_with_first(rz_lc_check(p2, 3, Assignment::ones(p2.labels),
                                         PartitionKind::RealRooted)));
    s.add("pg22-pair-value", "pg(2,2): common pair difference at all-ones",
          to_string(delta_value(p2, p2.index_of("1"), p2.index_of("2"),
                                ones_for(p2))));
    s.add("pg22-transitive", "pg(2,2): doubly transitive pair value formula",
          to_string(transitive_formula_check(p2).verdict));

    Matroid p3 = s.get("pg(2,3)").matroid;
    s.add("pg23-shape", "pg(2,3): ground set size and rank",
          shape_string(p3));
    s.add("pg23-basis-count", "pg(2,3): number of bases", count_string(p3));
    UniPoly q3 = partition_poly(p3, p3.mask_of({"1", "2", "3", "4"}), {},
                                Assignment::ones(p3.labels));
    s.add("pg23-line-partition",
          "pg(2,3): partition polynomial of the first line at all-ones",
          coeffs_string(q3));
    s.add("pg23-line-disc", "pg(2,3): discriminant of that quadratic",
          to_string(quadratic_discriminant(q3)));
    // Closed form -(q+1)^2 q^6 (q-1)^2 / 12 at q = 3.
    Scalar q(3);
    Scalar q6 = q * q * q;
    q6 *= q6;
    Scalar formula = -(q + 1) * (q + 1) * q6 * (q - 1) * (q - 1) / 12;
    s.add("pg23-disc-formula",
          "pg(2,3): the order-3 closed form for that discriminant",
          to_string(formula));
    s.add("pg23-rz",
          "pg(2,3): real-rooted partitions up to size 4 at all-ones",
          to_string(rz_lc_check(p3, 4, Assignment::ones(p3.labels),
                                PartitionKind::RealRooted)
                        .verdict));
    s.add("pg23-pair-value", "pg(2,3): common pair difference at all-ones",
          to_string(delta_value(p3, p3.index_of("1"), p3.index_of("2"),
                                ones_for(p3))));
    s.add("pg23-transitive", "pg(2,3): doubly transitive pair value formula",
          to_string(transitive_formula_check(p3).verdict));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_uniform(FactSink& s) {
  static const char* const ids[] = {"u24-coeff-cert", "u24-hpp",
                                    "uniform-transitive"};
  try {
    Matroid u = s.get("uniform(2,4)").matroid;
    s.add("u24-coeff-cert",
          "uniform(2,4): all pair differences have nonnegative coefficients",
          to_string(coefficient_nonneg_check(u).verdict));
    s.add("u24-hpp",
          "uniform(2,4): indicator substitutions real-rooted, 500 trials",
          to_string(hpp_spot_check(u, 500, 1).verdict));
    std::string outcome;
    int cases = 0;
    for (int m = 2; m <= 6 && outcome.empty(); ++m)
      for (int r = 1; r < m; ++r) {
        ++cases;
        std::string name =
            "uniform(" + std::to_string(r) + "," + std::to_string(m) + ")";
        if (transitive_formula_check(s.get(name).matroid).verdict !=
            Verdict::HOLDS) {
          outcome = "FAILED " + name;
          break;
        }
      }
    if (outcome.empty())
      outcome = "HOLDS (" + std::to_string(cases) + " cases)";
    s.add("uniform-transitive",
          "uniform r of m, 1 <= r < m <= 6: transitive pair value formula",
          outcome);
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

void verify_twosum(FactSink& s) {
  static const char* const ids[] = {"twosum-shape", "twosum-basis-count",
                                    "twosum-s8-minor", "twosum-negcorr",
                                    "twosum-sample"};
  try {
    Matroid left = s.get("f7").matroid;
    Matroid right = graphic_matroid(complete_four());
    right.name = "m(k4)";
    Matroid sum = two_sum(left, right, "7", "ab");
    s.add("twosum-shape", "f7 (+) K4 two-sum: ground set size and rank",
          shape_string(sum));
    s.add("twosum-basis-count", "f7 (+) K4 two-sum: number of bases",
          count_string(sum));
    s.add("twosum-s8-minor", "f7 (+) K4 two-sum has an s8 minor",
          bool_string(has_minor(sum, s.get("s8").matroid)));
    s.add("twosum-negcorr",
          "f7 (+) K4 two-sum: negative correlation at all-ones",
          to_string(negative_correlation_check(sum).verdict));
    s.add("twosum-sample",
          "f7 (+) K4 two-sum: 200 sampled positive points, seed 1",
          to_string(rayleigh_sample_check(sum, SampleDomain::POSITIVE, 200, 1)
                        .verdict));
  } catch (const std::exception& e) {
    s.backfill(ids, std::size(ids), e.what());
  }
}

}  // namespace

VerifyBundle paper_verify(const CatalogPatch& patch) {
  FactSink sink{patch, ordered_json::parse(fixtures::kGoldens), {}};
  verify_s8(sink);
  verify_a8(sink);
  verify_f7(sink);
  verify_jprime(sink);
  verify_p7prime(sink);
  verify_l(sink);
  verify_graphs(sink);
  verify_pg(sink);
  verify_uniform(sink);
  verify_twosum(sink);

  VerifyBundle out;
  out.facts = std::move(sink.facts);
  out.all_passed = std::all_of(out.facts.begin(), out.facts.end(),
                               [](const FactResult& f) { return f.passed; });
  return out;
}

std::string VerifyBundle::human() const {
  std::size_t width = 0;
  for (const FactResult& f : facts) width = std::max(width, f.id.size());
  std::string out;
  int passed = 0;
  for (const FactResult& f : facts) {
    out += f.passed ? "[ok]   " : "[FAIL] ";
    out += f.id;
    out.append(width + 2 - f.id.size(), ' ');
    if (f.passed) {
      out += f.actual;
      ++passed;
    } else {
      out += "got " + f.actual + ", expected " + f.expected;
    }
    out += "\n";
  }
  out += std::to_string(facts.size()) + " facts, " + std::to_string(passed) +
         " passed";
  int failed = static_cast<int>(facts.size()) - passed;
  if (failed > 0) out += ", " + std::to_string(failed) + " failed";
  out += "\n";
  return out;
}

std::string VerifyBundle::json() const {
  ordered_json out;
  out["facts"] = ordered_json::array();
  for (const FactResult& f : facts) {
    ordered_json j;
    j["id"] = f.id;
    j["description"] = f.description;
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    j["passed"] = f.passed;
    out["facts"].push_back(std::move(j));
  }
  out["all_passed"] = all_passed;
  return out.dump(2);
}

}  // namespace rayleigh
