#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rayleigh/assignment.hpp"

namespace rayleigh {

enum class Verdict { HOLDS, VIOLATED, NO_VIOLATION_FOUND, CERTIFIED };

std::string to_string(Verdict v);

// Where a check failed: the distinguished elements, the minor it happened
// in (when not the trivial one), the evaluation point, and the exact
// offending value.
struct Witness {
  std::string kind;  // "pair", "triple", "subset", "minor-pair", ...
  std::vector<std::string> elements;
  std::vector<std::string> minor_contract;
  std::vector<std::string> minor_delete;
  Assignment assignment;    // empty means the all-ones point or none
  Assignment assignment_b;  // second point for two-assignment witnesses
  std::string value;
  std::string note;
};

struct WorkLog {
  long pairs = 0;
  long minors = 0;
  long samples = 0;
  long triples = 0;
  long subsets = 0;
  long trials = 0;
};

struct ReportParams {
  std::optional<unsigned long> seed;
  std::optional<long> samples;
  std::string domain;  // "positive", "real" or empty
  std::optional<long> bound;
  std::optional<int> m;
  Assignment assignment;  // evaluation point parameter, when one applies
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::HOLDS;
  std::string matroid_name;
  ReportParams params;
  std::vector<Witness> witnesses;
  WorkLog work;
  std::string note;  // extra deterministic findings

  bool passed() const {
    return verdict == Verdict::HOLDS || verdict == Verdict::CERTIFIED;
  }

  // Deterministic serializations: identical inputs yield identical bytes.
  std::string json() const;
  std::string human() const;
};

}  // namespace rayleigh
