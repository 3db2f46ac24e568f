#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rayleigh/graph.hpp"
#include "rayleigh/matroid.hpp"

namespace rayleigh {

// One built-in construction. Graphic entries also carry the graph they came
// from, so conductance and certificate commands can reuse it.
struct CatalogItem {
  Matroid matroid;
  std::optional<Graph> graph;
};

// Builds a named entry. Fixed names: "s8", "a8", "f7", "f7dual", "jprime",
// "p7prime", "l-transversal", "pg(2,2)", "pg(2,3)". Parameterized families
// are spelled with literal integers, as in "g(2,3)" or "uniform(2,4)".
// Throws Error for an unknown name or bad parameters.
CatalogItem catalog_get(const std::string& name);
bool catalog_has(const std::string& name);

// Entry names in listing order; parameterized families keep placeholders.
std::vector<std::string> catalog_names();

// One expected-vs-actual comparison from the reproduction suite. Expected
// values come from a fixture table and are never recomputed.
struct FactResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct VerifyBundle {
  std::vector<FactResult> facts;
  bool all_passed = true;

  // Deterministic renderings: identical builds yield identical bytes.
  std::string human() const;
  std::string json() const;
};

// Hook for fault-injection tests: return an item to stand in for `name`, or
// nullopt to use the built-in construction.
using CatalogPatch =
    std::function<std::optional<CatalogItem>(const std::string&)>;

// Runs the whole reproduction suite and reports one result per fact, in a
// fixed order. A fact whose computation throws fails with the error text as
// its actual value; the bundle itself never throws.
VerifyBundle paper_verify(const CatalogPatch& patch = {});

}  // namespace rayleigh
