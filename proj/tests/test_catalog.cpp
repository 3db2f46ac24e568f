#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "rayleigh/catalog.hpp"
#include "rayleigh/errors.hpp"
#include "rayleigh/matroid.hpp"

using namespace rayleigh;

TEST_CASE("catalog lookups") {
  std::vector<std::string> names = catalog_names();
  CHECK(names.size() == 11);
  for (std::string fixed : {"s8", "a8", "f7", "f7dual", "jprime", "p7prime",
                            "l-transversal"}) {
    CHECK(catalog_has(fixed));
    CHECK(catalog_get(fixed).matroid.name == fixed);
  }

  CHECK(catalog_has("g(2,3)"));
  CHECK(catalog_get("g(2,3)").graph.has_value());
  CHECK_FALSE(catalog_get("s8").graph.has_value());

  CHECK(catalog_has("pg(2,2)"));
  CHECK(catalog_has("pg(2,3)"));
  CHECK_FALSE(catalog_has("pg(2,4)"));
  CHECK_FALSE(catalog_has("pg(3,2)"));

  CHECK(catalog_get("uniform(2,4)").matroid.bases.size() == 6);
  CHECK_FALSE(catalog_has("uniform(5,4)"));
  CHECK_FALSE(catalog_has("uniform(2,"));
  CHECK_FALSE(catalog_has("uniform(2,4) "));
  CHECK_FALSE(catalog_has("nonsense"));
  CHECK_THROWS_AS(catalog_get("nonsense"), Error);
  CHECK_THROWS_AS(catalog_get("g(0,3)"), Error);
}

TEST_CASE("basic shapes of the named entries") {
  CHECK(catalog_get("s8").matroid.bases.size() == 48);
  CHECK(catalog_get("a8").matroid.bases.size() == 56);
  CHECK(catalog_get("f7").matroid.bases.size() == 28);
  CHECK(catalog_get("f7dual").matroid.rank == 4);
  CHECK(catalog_get("jprime").matroid.size() == 8);
  CHECK(catalog_get("p7prime").matroid.bases.size() == 31);
  CHECK(catalog_get("l-transversal").matroid.size() == 12);
  CHECK(catalog_get("pg(2,3)").matroid.bases.size() == 234);
}

TEST_CASE("the reproduction suite passes on a clean build") {
  VerifyBundle bundle = paper_verify();
  CHECK(bundle.all_passed);
  CHECK(bundle.facts.size() == 93);

  std::set<std::string> ids;
  for (const FactResult& fact : bundle.facts) {
    CHECK(fact.passed);
    CHECK(fact.expected != "(no fixture entry)");
    CHECK_FALSE(fact.description.empty());
    CHECK(ids.insert(fact.id).second);  // ids are unique
  }

  std::string human = bundle.human();
  CHECK(human.find("[ok]") != std::string::npos);
  CHECK(human.find("[FAIL]") == std::string::npos);
  CHECK(human.find("93 facts, 93 passed") != std::string::npos);
}

TEST_CASE("corrupting one entry fails exactly its facts") {
  // stand in a wrong matroid for s8: same size, different rank and bases
  CatalogPatch patch = [](const std::string& name)
      -> std::optional<CatalogItem> {
    if (name != "s8") return std::nullopt;
    Matroid fake = uniform_matroid(3, 8);
    fake.name = "s8";
    return CatalogItem{std::move(fake), std::nullopt};
  };

  VerifyBundle bundle = paper_verify(patch);
  CHECK_FALSE(bundle.all_passed);
  CHECK(bundle.facts.size() == 93);
  for (const FactResult& fact : bundle.facts) {
    bool is_s8_fact = fact.id.rfind("s8-", 0) == 0;
    CHECK(fact.passed == !is_s8_fact);
  }
}
