#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "rayleigh/catalog.hpp"
#include "rayleigh/delta.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/mtr_format.hpp"
#include "rayleigh/sparse_poly.hpp"
#include "test_helpers.hpp"

using namespace rayleigh;

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = cli::run_cli(std::move(args), out, err);
  return {rc, out.str(), err.str()};
}

const std::filesystem::path& temp_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "rayleigh-cli-tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::filesystem::path path = temp_dir() / name;
  std::ofstream f(path);
  f << text;
  return path.string();
}

std::string catalog_file(const std::string& name) {
  CatalogItem item = catalog_get(name);
  std::string text = item.graph ? write_mtr(*item.graph, item.matroid.name)
                                : write_mtr(item.matroid);
  std::string file = name;
  for (char& c : file)
    if (c == '(' || c == ')' || c == ',') c = '_';
  return write_file(file + ".mtr", text);
}

MtrContent parse_text(const std::string& text) { return parse_mtr_text(text); }

bool same_matroid(const Matroid& a, const Matroid& b) {
  return a.labels == b.labels && a.bases == b.bases && a.rank == b.rank;
}

}  // namespace

TEST_CASE("check reports verdicts through the exit code") {
  std::string s8 = catalog_file("s8");
  std::string u24 = catalog_file("uniform(2,4)");

  RunResult bad = run({"check", s8, "--property", "negcorr"});
  CHECK(bad.rc == 1);
  CHECK(bad.err.empty());
  CHECK(bad.out.find("verdict    VIOLATED") != std::string::npos);
  CHECK(bad.out.find("witness    pair {1,8} value -16") != std::string::npos);

  RunResult good = run({"check", u24, "--property", "negcorr"});
  CHECK(good.rc == 0);
  CHECK(good.out.find("verdict    HOLDS") != std::string::npos);

  RunResult open = run({"check", u24, "--property", "rayleigh-sample",
                        "--samples", "40", "--seed", "3"});
  CHECK(open.rc == 2);
  CHECK(open.out.find("NO_VIOLATION_FOUND") != std::string::npos);

  RunResult cert = run({"check", u24, "--property", "rayleigh-coeff"});
  CHECK(cert.rc == 0);
  CHECK(cert.out.find("CERTIFIED") != std::string::npos);

  RunResult json = run({"check", s8, "--property", "negcorr", "--json"});
  CHECK(json.rc == 1);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["property"] == "negative-correlation");
  CHECK(j["verdict"] == "VIOLATED");
  CHECK(j["matroid_name"] == "s8");
  CHECK(j["witnesses"][0]["value"] == "-16");
}

TEST_CASE("delta evaluates a pair at an exact point") {
  std::string jp = catalog_file("jprime");
  RunResult r = run({"delta", jp, "-e", "1", "-f", "8", "--at",
                     "2=7/10,3=7/10,4=7/10,5=1,6=1,7=1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "-280041/1000000\n");

  // no point: the full polynomial, which parses back to the same thing
  RunResult sym = run({"delta", jp, "-e", "1", "-f", "8"});
  CHECK(sym.rc == 0);
  Matroid m = catalog_get("jprime").matroid;
  SparsePoly expected = rayleigh_diff(m, "1", "8");
  std::string text = sym.out;
  if (!text.empty() && text.back() == '\n') text.pop_back();
  CHECK(SparsePoly::parse(m.labels, text) == expected);

  RunResult j = run({"delta", jp, "-e", "1", "-f", "8", "--at",
                     "2=7/10,3=7/10,4=7/10,5=1,6=1,7=1", "--json"});
  CHECK(j.rc == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["result"] == "-280041/1000000");
  CHECK(doc["e"] == "1");
  CHECK(doc["matroid"] == "jprime");
}

TEST_CASE("info summarizes a file") {
  std::string s8 = catalog_file("s8");
  RunResult r = run({"info", s8});
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "name       s8\n"
        "elements   8\n"
        "rank       4\n"
        "bases      48\n"
        "loops      (none)\n"
        "coloops    (none)\n");

  RunResult j = run({"info", s8, "--json"});
  CHECK(j.rc == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["name"] == "s8");
  CHECK(doc["size"] == 8);
  CHECK(doc["rank"] == 4);
  CHECK(doc["basis_count"] == 48);
  CHECK(doc["loops"].empty());
}

TEST_CASE("usage mistakes exit with 3 and a message") {
  std::string u24 = catalog_file("uniform(2,4)");

  RunResult no_seed = run({"check", u24, "--property", "rayleigh-sample"});
  CHECK(no_seed.rc == 3);
  CHECK(no_seed.err.find("--seed is required") != std::string::npos);

  RunResult bad_prop = run({"check", u24, "--property", "sorcery"});
  CHECK(bad_prop.rc == 3);
  CHECK_FALSE(bad_prop.err.empty());

  RunResult decimal = run({"delta", u24, "-e", "1", "-f", "2", "--at", "3=0.5"});
  CHECK(decimal.rc == 3);
  CHECK(decimal.err.rfind("error: ", 0) == 0);

  RunResult missing = run({"info", (temp_dir() / "no-such.mtr").string()});
  CHECK(missing.rc == 3);

  RunResult no_sub = run({});
  CHECK(no_sub.rc == 3);
}

TEST_CASE("parse failures carry the file and line") {
  std::string bad = write_file("bad-label.mtr",
                               "elements a b\n"
                               "bases\n"
                               "a c\n");
  RunResult r = run({"info", bad});
  CHECK(r.rc == 3);
  std::string want = "error: " + bad + ":3:";
  CHECK(r.err.rfind(want, 0) == 0);
}

TEST_CASE("op subcommands emit files that parse back to the construction") {
  std::string s8 = catalog_file("s8");
  Matroid m = catalog_get("s8").matroid;

  RunResult d = run({"op", "dual", s8});
  CHECK(d.rc == 0);
  CHECK(same_matroid(parse_text(d.out).matroid, dual(m)));

  RunResult c = run({"op", "contract", s8, "--elements", "1,2"});
  CHECK(c.rc == 0);
  CHECK(same_matroid(parse_text(c.out).matroid,
                     matroid_minor(m, {"1", "2"}, {})));

  RunResult del = run({"op", "delete", s8, "--elements", "8"});
  CHECK(del.rc == 0);
  CHECK(same_matroid(parse_text(del.out).matroid,
                     matroid_minor(m, {}, {"8"})));

  std::string q = write_file("q3.mtr",
                             "name q3\n"
                             "elements a b c\n"
                             "bases\n"
                             "a b\n"
                             "a c\n"
                             "b c\n");
  std::string f7 = catalog_file("f7");
  RunResult ts = run({"op", "2sum", f7, q, "--gm", "7", "--gq", "c"});
  CHECK(ts.rc == 0);
  Matroid glued =
      two_sum(catalog_get("f7").matroid, load_mtr(q).matroid, "7", "c");
  CHECK(same_matroid(parse_text(ts.out).matroid, glued));

  RunResult ex = run({"op", "expand", q, "--mult", "1,2,2"});
  CHECK(ex.rc == 0);
  CHECK(same_matroid(parse_text(ex.out).matroid,
                     parallel_expand(load_mtr(q).matroid, {1, 2, 2})));

  RunResult short_mult = run({"op", "expand", q, "--mult", "1,2"});
  CHECK(short_mult.rc == 3);
  CHECK(short_mult.err.find("--mult needs exactly 3") != std::string::npos);
}

TEST_CASE("op dual round trips random matroids") {
  testsupport::Rng rng(20240823);
  for (int trial = 0; trial < 25; ++trial) {
    Matroid m = testsupport::random_matroid(rng);
    std::string path =
        write_file("fuzz" + std::to_string(trial) + ".mtr", write_mtr(m));
    RunResult r = run({"op", "dual", path});
    REQUIRE(r.rc == 0);
    CHECK(same_matroid(parse_text(r.out).matroid, dual(m)));
  }
}

TEST_CASE("catalog lists entries and emits them") {
  RunResult list = run({"catalog"});
  CHECK(list.rc == 0);
  std::vector<std::string> lines;
  std::istringstream in(list.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  CHECK(lines.size() == 11);
  CHECK(lines.front() == "s8");
  CHECK(lines.back() == "uniform(r,m)");

  for (std::string name : {"s8", "a8", "f7", "f7dual", "jprime", "p7prime",
                           "l-transversal", "g(2,3)", "pg(2,2)",
                           "uniform(2,4)"}) {
    RunResult first = run({"catalog", name});
    REQUIRE(first.rc == 0);
    MtrContent parsed = parse_text(first.out);
    CHECK(same_matroid(parsed.matroid, catalog_get(name).matroid));
    CHECK(parsed.graph.has_value() == catalog_get(name).graph.has_value());
    RunResult second = run({"catalog", name});
    CHECK(second.out == first.out);
  }

  RunResult unknown = run({"catalog", "m-nonexistent"});
  CHECK(unknown.rc == 3);
}

TEST_CASE("graph commands need a graph body") {
  std::string g23 = catalog_file("g(2,3)");

  RunResult cond = run({"graph", "conductance", g23, "-a", "v0", "-b", "v3"});
  CHECK(cond.rc == 0);
  CHECK(cond.out == "5/3\n");

  RunResult weighted = run({"graph", "conductance", g23, "-a", "v0", "-b",
                            "v3", "--at", "g=0", "--json"});
  CHECK(weighted.rc == 3);  // weights must be positive

  RunResult half = run({"graph", "conductance", g23, "-a", "v0", "-b", "v3",
                        "--at", "g=1/2", "--json"});
  CHECK(half.rc == 0);
  auto doc = nlohmann::json::parse(half.out);
  CHECK(doc["a"] == "v0");
  CHECK(doc["value"] == "7/6");  // 1/2 from the root edge plus 2/3

  std::string k4 = write_file("k4.mtr", write_mtr(testsupport::k4(), "k4"));
  RunResult cert = run({"graph", "certificate", k4, "-e", "ab", "-f", "cd"});
  CHECK(cert.rc == 0);
  CHECK(cert.out.find("verified   true") != std::string::npos);
  CHECK(cert.out.find("p          ") != std::string::npos);

  std::string plain = catalog_file("s8");
  RunResult not_graph =
      run({"graph", "conductance", plain, "-a", "v0", "-b", "v1"});
  CHECK(not_graph.rc == 3);
  CHECK(not_graph.err.find("'graph' body") != std::string::npos);
}

TEST_CASE("repeated runs are byte identical") {
  std::string s8 = catalog_file("s8");
  std::vector<std::string> sampled = {
      "check", s8,       "--property", "rayleigh-sample",
      "--samples", "60", "--seed",     "11",
      "--json"};
  RunResult a = run(sampled);
  RunResult b = run(sampled);
  CHECK(a.rc == b.rc);
  CHECK(a.out == b.out);

  RunResult d1 = run({"delta", s8, "-e", "1", "-f", "8"});
  RunResult d2 = run({"delta", s8, "-e", "1", "-f", "8"});
  CHECK(d1.out == d2.out);
}

TEST_CASE("help exits cleanly") {
  RunResult top = run({"--help"});
  CHECK(top.rc == 0);
  CHECK(top.out.find("rayleigh") != std::string::npos);

  RunResult sub = run({"check", "--help"});
  CHECK(sub.rc == 0);
  CHECK(sub.out.find("--property") != std::string::npos);
}
