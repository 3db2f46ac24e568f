#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rayleigh/assignment.hpp"
#include "rayleigh/catalog.hpp"
#include "rayleigh/checks.hpp"
#include "rayleigh/delta.hpp"
#include "rayleigh/errors.hpp"
#include "rayleigh/graph.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/mtr_format.hpp"
#include "rayleigh/report.hpp"
#include "rayleigh/sampling.hpp"
#include "rayleigh/sparse_poly.hpp"

namespace rayleigh::cli {
namespace {

using nlohmann::ordered_json;

// Mistakes CLI11 cannot see on its own: a missing seed for a sampled
// check, a file without the body kind a command needs, malformed lists.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loads a file and rewrites parse failures as path:line: message.
MtrContent load_input(const std::string& path) {
  try {
    return load_mtr(path);
  } catch (const ParseError& e) {
    std::string what = e.what();
    const std::string prefix = "line " + std::to_string(e.line) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    throw UsageError(path + ":" + std::to_string(e.line) + ": " + what);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split_list(text)) {
    try {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("not an integer in list: '" + piece + "'");
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// All-ones point with the explicit entries layered on top, so partial
// --at arguments still give the total assignment the checks require.
Assignment overlay_ones(const std::vector<std::string>& labels,
                        const Assignment& given) {
  Assignment a = Assignment::ones(labels);
  for (const auto& [label, value] : given.values) a.set(label, value);
  return a;
}

// A constant polynomial prints as its value, anything else symbolically.
std::string poly_text(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  if (p.term_count() == 1 && p.terms().begin()->first.factors.empty())
    return to_string(p.terms().begin()->second);
  return p.to_string();
}

void emit(std::ostream& out, const std::string& text) {
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

// Key column width used by the human report format.
void row(std::ostream& out, const std::string& key, const std::string& value) {
  std::string k = key;
  if (k.size() < 11)
    k.append(11 - k.size(), ' ');
  else
    k += " ";
  out << k << value << "\n";
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::HOLDS:
    case Verdict::CERTIFIED:
      return 0;
    case Verdict::VIOLATED:
      return 1;
    case Verdict::NO_VIOLATION_FOUND:
      return 2;
  }
  return 3;
}

int run_info(const std::string& path, bool as_json, std::ostream& out) {
  Profile p = profile(load_input(path).matroid);
  if (as_json) {
    ordered_json j;
    j["name"] = p.name;
    j["size"] = p.size;
    j["rank"] = p.rank;
    j["basis_count"] = p.basis_count;
    j["loops"] = p.loops;
    j["coloops"] = p.coloops;
    out << j.dump(2) << "\n";
    return 0;
  }
  row(out, "name", p.name.empty() ? "(unnamed)" : p.name);
  row(out, "elements", std::to_string(p.size));
  row(out, "rank", std::to_string(p.rank));
  row(out, "bases", std::to_string(p.basis_count));
  row(out, "loops", p.loops.empty() ? "(none)" : join(p.loops, " "));
  row(out, "coloops", p.coloops.empty() ? "(none)" : join(p.coloops, " "));
  return 0;
}

int run_delta(const std::string& path, const std::string& e,
              const std::string& f, const std::string& at, bool as_json,
              std::ostream& out) {
  Matroid m = load_input(path).matroid;
  SparsePoly d = rayleigh_diff(m, e, f);
  Assignment a = Assignment::parse(at);
  if (!a.empty()) d = d.substitute(a);
  std::string text = poly_text(d);
  if (as_json) {
    ordered_json j;
    j["command"] = "delta";
    j["matroid"] = m.name;
    j["e"] = e;
    j["f"] = f;
    j["at"] = a.to_string();
    j["result"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

struct CheckArgs {
  std::string path;
  std::string property;
  long samples = 100;
  std::optional<std::uint64_t> seed;
  std::uint64_t bound = 100;
  int m = 0;
  std::string domain = "positive";
  std::string at;
  bool json = false;
};

int run_check(const CheckArgs& c, std::ostream& out) {
  Matroid m = load_input(c.path).matroid;
  const bool sampled = c.property == "rayleigh-sample" ||
                       c.property == "strong-sample" ||
                       c.property == "triple" || c.property == "hpp-spot" ||
                       c.property == "indep-pairs";
  if (sampled && !c.seed)
    throw UsageError("--seed is required for '" + c.property +
                     "' (sampled checks never seed from the clock)");

  PropertyReport rep;
  if (c.property == "negcorr") {
    rep = negative_correlation_check(m);
  } else if (c.property == "balanced") {
    rep = balanced_check(m);
  } else if (c.property == "rayleigh-coeff") {
    rep = coefficient_nonneg_check(m);
  } else if (c.property == "rayleigh-sample") {
    rep = rayleigh_sample_check(m, parse_domain(c.domain), c.samples, *c.seed,
                                c.bound);
  } else if (c.property == "strong-sample") {
    // The strong property quantifies over all real weights, so the domain
    // flag is ignored and sign-mixed points are drawn.
    rep = rayleigh_sample_check(m, SampleDomain::REAL, c.samples, *c.seed,
                                c.bound);
  } else if (c.property == "triple") {
    TripleMode mode = c.domain == "real" ? TripleMode::Strong
                                         : TripleMode::BalancedNecessary;
    rep = triple_condition_check(m, mode, c.samples, *c.seed, c.bound);
  } else if (c.property == "rz" || c.property == "lc") {
    int size_bound = c.m > 0 ? c.m : m.size();
    Assignment a = overlay_ones(m.labels, Assignment::parse(c.at));
    PartitionKind kind = c.property == "rz" ? PartitionKind::RealRooted
                                            : PartitionKind::LogConcave;
    rep = rz_lc_check(m, size_bound, a, kind);
  } else if (c.property == "hpp-spot") {
    rep = hpp_spot_check(m, c.samples, *c.seed, c.bound);
  } else {  // indep-pairs; the property name was validated during parsing
    rep = independent_pair_check(m, c.samples, *c.seed, c.bound);
  }

  emit(out, c.json ? rep.json() : rep.human());
  return verdict_code(rep.verdict);
}

int run_op_unary(const std::string& op, const std::string& path,
                 const std::string& elements, std::ostream& out) {
  Matroid m = load_input(path).matroid;
  Matroid result;
  if (op == "dual") {
    result = dual(m);
  } else if (op == "contract") {
    result = matroid_minor(m, split_list(elements), {});
  } else {  // delete
    result = matroid_minor(m, {}, split_list(elements));
  }
  emit(out, write_mtr(result));
  return 0;
}

int run_op_twosum(const std::string& path_m, const std::string& path_q,
                  const std::string& gm, const std::string& gq,
                  std::ostream& out) {
  Matroid m = load_input(path_m).matroid;
  Matroid q = load_input(path_q).matroid;
  emit(out, write_mtr(two_sum(m, q, gm, gq)));
  return 0;
}

int run_op_expand(const std::string& path, const std::string& mult,
                  std::ostream& out) {
  Matroid m = load_input(path).matroid;
  std::vector<int> counts = split_ints(mult);
  if (static_cast<int>(counts.size()) != m.size())
    throw UsageError("--mult needs exactly " + std::to_string(m.size()) +
                     " entries for this ground set, got " +
                     std::to_string(counts.size()));
  emit(out, write_mtr(parallel_expand(m, counts)));
  return 0;
}

const Graph& require_graph(const MtrContent& content,
                           const std::string& path) {
  if (!content.graph)
    throw UsageError(path +
                     ": this command needs a 'graph' body, not a matroid-only "
                     "description");
  return *content.graph;
}

int run_conductance(const std::string& path, const std::string& a,
                    const std::string& b, const std::string& at, bool as_json,
                    std::ostream& out) {
  MtrContent content = load_input(path);
  const Graph& g = require_graph(content, path);
  std::vector<std::string> edge_labels;
  edge_labels.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) edge_labels.push_back(e.label);
  Assignment y = overlay_ones(edge_labels, Assignment::parse(at));
  Scalar value = effective_conductance(g, a, b, y);
  if (as_json) {
    ordered_json j;
    j["command"] = "conductance";
    j["graph"] = content.matroid.name;
    j["a"] = a;
    j["b"] = b;
    j["at"] = y.to_string();
    j["value"] = to_string(value);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(value) << "\n";
  }
  return 0;
}

int run_certificate(const std::string& path, const std::string& e,
                    const std::string& f, bool as_json, std::ostream& out) {
  MtrContent content = load_input(path);
  const Graph& g = require_graph(content, path);
  CertificateResult r = square_certificate(g, e, f);
  if (as_json) {
    ordered_json j;
    j["command"] = "certificate";
    j["graph"] = content.matroid.name;
    j["e"] = e;
    j["f"] = f;
    j["p"] = r.p.to_string();
    j["verified"] = r.verified;
    out << j.dump(2) << "\n";
  } else {
    row(out, "p", r.p.to_string());
    row(out, "verified", r.verified ? "true" : "false");
  }
  return r.verified ? 0 : 1;
}

int run_catalog(const std::string& name, std::ostream& out) {
  if (name.empty()) {
    for (const std::string& entry : catalog_names()) out << entry << "\n";
    return 0;
  }
  CatalogItem item = catalog_get(name);
  if (item.graph)
    emit(out, write_mtr(*item.graph, item.matroid.name));
  else
    emit(out, write_mtr(item.matroid));
  return 0;
}

int run_paper_verify(bool as_json, std::ostream& out) {
  VerifyBundle bundle = paper_verify();
  emit(out, as_json ? bundle.json() : bundle.human());
  return bundle.all_passed ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Rayleigh-difference computations on small matroids"};
  app.name("rayleigh");
  app.require_subcommand(1);
  int code = 0;

  struct {
    std::string path;
    bool json = false;
  } info_a;
  auto* info = app.add_subcommand("info", "summarize a matroid file");
  info->add_option("file", info_a.path, "input .mtr file")->required();
  info->add_flag("--json", info_a.json, "machine-readable output");
  info->callback([&] { code = run_info(info_a.path, info_a.json, out); });

  struct {
    std::string path, e, f, at;
    bool json = false;
  } delta_a;
  auto* delta = app.add_subcommand(
      "delta", "Rayleigh difference of a pair, symbolic or at a point");
  delta->add_option("file", delta_a.path, "input .mtr file")->required();
  delta->add_option("-e", delta_a.e, "first element label")->required();
  delta->add_option("-f", delta_a.f, "second element label")->required();
  delta->add_option("--at", delta_a.at,
                    "partial assignment label=p/q,... (exact rationals only)");
  delta->add_flag("--json", delta_a.json, "machine-readable output");
  delta->callback([&] {
    code = run_delta(delta_a.path, delta_a.e, delta_a.f, delta_a.at,
                     delta_a.json, out);
  });

  CheckArgs check_a;
  std::uint64_t seed_value = 0;
  auto* check =
      app.add_subcommand("check", "run a property check and report a verdict");
  check->add_option("file", check_a.path, "input .mtr file")->required();
  check
      ->add_option("--property", check_a.property, "which property to check")
      ->required()
      ->check(CLI::IsMember({"negcorr", "balanced", "rayleigh-coeff",
                             "rayleigh-sample", "strong-sample", "triple",
                             "rz", "lc", "hpp-spot", "indep-pairs"}));
  check->add_option("--samples", check_a.samples,
                    "random points or trials to draw (default 100)");
  auto* seed_opt =
      check->add_option("--seed", seed_value,
                        "RNG seed; required for any sampled property");
  check->add_option("--bound", check_a.bound,
                    "numerator/denominator bound for drawn rationals");
  check->add_option("--m", check_a.m,
                    "subset size bound for rz/lc (default: ground size)");
  check
      ->add_option("--domain", check_a.domain,
                   "sample domain: positive (default) or real")
      ->check(CLI::IsMember({"positive", "real"}));
  check->add_option("--at", check_a.at,
                    "evaluation point for rz/lc, layered over all-ones");
  check->add_flag("--json", check_a.json, "machine-readable output");
  check->callback([&] {
    if (seed_opt->count() > 0) check_a.seed = seed_value;
    code = run_check(check_a, out);
  });

  auto* op = app.add_subcommand("op", "matroid constructions, emitted as .mtr");
  op->require_subcommand(1);

  struct {
    std::string path;
  } dual_a;
  auto* op_dual = op->add_subcommand("dual", "dual matroid");
  op_dual->add_option("file", dual_a.path, "input .mtr file")->required();
  op_dual->callback([&] { code = run_op_unary("dual", dual_a.path, "", out); });

  struct {
    std::string path, elements;
  } contract_a;
  auto* op_contract = op->add_subcommand("contract", "contract elements");
  op_contract->add_option("file", contract_a.path, "input .mtr file")
      ->required();
  op_contract
      ->add_option("--elements", contract_a.elements, "comma-separated labels")
      ->required();
  op_contract->callback([&] {
    code = run_op_unary("contract", contract_a.path, contract_a.elements, out);
  });

  struct {
    std::string path, elements;
  } delete_a;
  auto* op_delete = op->add_subcommand("delete", "delete elements");
  op_delete->add_option("file", delete_a.path, "input .mtr file")->required();
  op_delete
      ->add_option("--elements", delete_a.elements, "comma-separated labels")
      ->required();
  op_delete->callback([&] {
    code = run_op_unary("delete", delete_a.path, delete_a.elements, out);
  });

  struct {
    std::string path_m, path_q, gm, gq;
  } twosum_a;
  auto* op_twosum =
      op->add_subcommand("2sum", "2-sum of two matroids along glue elements");
  op_twosum->add_option("file-m", twosum_a.path_m, "first .mtr file")
      ->required();
  op_twosum->add_option("file-q", twosum_a.path_q, "second .mtr file")
      ->required();
  op_twosum->add_option("--gm", twosum_a.gm, "glue element in the first")
      ->required();
  op_twosum->add_option("--gq", twosum_a.gq, "glue element in the second")
      ->required();
  op_twosum->callback([&] {
    code = run_op_twosum(twosum_a.path_m, twosum_a.path_q, twosum_a.gm,
                         twosum_a.gq, out);
  });

  struct {
    std::string path, mult;
  } expand_a;
  auto* op_expand =
      op->add_subcommand("expand", "replace elements by parallel classes");
  op_expand->add_option("file", expand_a.path, "input .mtr file")->required();
  op_expand
      ->add_option("--mult", expand_a.mult,
                   "comma-separated multiplicities, one per element")
      ->required();
  op_expand->callback(
      [&] { code = run_op_expand(expand_a.path, expand_a.mult, out); });

  auto* graph = app.add_subcommand("graph", "electrical views of a graph file");
  graph->require_subcommand(1);

  struct {
    std::string path, a, b, at;
    bool json = false;
  } cond_a;
  auto* conductance = graph->add_subcommand(
      "conductance", "effective conductance between two vertices");
  conductance->add_option("file", cond_a.path, "input .mtr file with a graph")
      ->required();
  conductance->add_option("-a", cond_a.a, "first vertex")->required();
  conductance->add_option("-b", cond_a.b, "second vertex")->required();
  conductance->add_option("--at", cond_a.at,
                          "edge weights label=p/q,..., layered over all-ones");
  conductance->add_flag("--json", cond_a.json, "machine-readable output");
  conductance->callback([&] {
    code = run_conductance(cond_a.path, cond_a.a, cond_a.b, cond_a.at,
                           cond_a.json, out);
  });

  struct {
    std::string path, e, f;
    bool json = false;
  } cert_a;
  auto* certificate = graph->add_subcommand(
      "certificate", "square certificate for an edge pair");
  certificate->add_option("file", cert_a.path, "input .mtr file with a graph")
      ->required();
  certificate->add_option("-e", cert_a.e, "first edge label")->required();
  certificate->add_option("-f", cert_a.f, "second edge label")->required();
  certificate->add_flag("--json", cert_a.json, "machine-readable output");
  certificate->callback([&] {
    code = run_certificate(cert_a.path, cert_a.e, cert_a.f, cert_a.json, out);
  });

  struct {
    std::string name;
  } catalog_a;
  auto* catalog = app.add_subcommand(
      "catalog", "list bundled matroids, or emit one as .mtr");
  catalog->add_option("name", catalog_a.name, "entry to emit");
  catalog->callback([&] { code = run_catalog(catalog_a.name, out); });

  struct {
    bool json = false;
  } verify_a;
  auto* verify = app.add_subcommand(
      "paper-verify", "recompute every recorded fact and compare");
  verify->add_flag("--json", verify_a.json, "machine-readable output");
  verify->callback([&] { code = run_paper_verify(verify_a.json, out); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return code;
}

}  // namespace rayleigh::cli
