#include "rayleigh/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace rayleigh {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HOLDS: return "HOLDS";
    case Verdict::VIOLATED: return "VIOLATED";
    case Verdict::NO_VIOLATION_FOUND: return "NO_VIOLATION_FOUND";
    case Verdict::CERTIFIED: return "CERTIFIED";
  }
  return "?";
}

namespace {

ordered_json assignment_json(const Assignment& a) {
  ordered_json out = ordered_json::object();
  for (const auto& [l, v] : a.values) out[l] = to_string(v);
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json out;
  out[w.kind.empty() ? "elements" : w.kind] = w.elements;
  if (!w.minor_contract.empty() || !w.minor_delete.empty()) {
    out["minor"] = {{"contract", w.minor_contract}, {"delete", w.minor_delete}};
  }
  if (!w.assignment.empty()) out["assignment"] = assignment_json(w.assignment);
  if (!w.assignment_b.empty())
    out["assignment_b"] = assignment_json(w.assignment_b);
  if (!w.value.empty()) out["value"] = w.value;
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

}  // namespace

std::string PropertyReport::json() const {
  ordered_json out;
  out["property"] = property;
  out["verdict"] = to_string(verdict);
  out["matroid_name"] = matroid_name;
  ordered_json params = ordered_json::object();
  if (this->params.seed) params["seed"] = *this->params.seed;
  if (this->params.samples) params["samples"] = *this->params.samples;
  if (!this->params.domain.empty()) params["domain"] = this->params.domain;
  if (this->params.bound) params["bound"] = *this->params.bound;
  if (this->params.m) params["m"] = *this->params.m;
  if (!this->params.assignment.empty())
    params["assignment"] = assignment_json(this->params.assignment);
  out["parameters"] = params;
  ordered_json ws = ordered_json::array();
  for (const Witness& w : witnesses) ws.push_back(witness_json(w));
  out["witnesses"] = ws;
  ordered_json work_j = ordered_json::object();
  if (work.pairs) work_j["pairs"] = work.pairs;
  if (work.minors) work_j["minors"] = work.minors;
  if (work.samples) work_j["samples"] = work.samples;
  if (work.triples) work_j["triples"] = work.triples;
  if (work.subsets) work_j["subsets"] = work.subsets;
  if (work.trials) work_j["trials"] = work.trials;
  out["work"] = work_j;
  if (!note.empty()) out["note"] = note;
  return out.dump(2);
}

namespace {
std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}
}  // namespace

std::string PropertyReport::human() const {
  std::ostringstream os;
  os << "property   " << property << "\n";
  if (!matroid_name.empty()) os << "matroid    " << matroid_name << "\n";
  os << "verdict    " << to_string(verdict) << "\n";
  {
    std::vector<std::string> ps;
    if (params.seed) ps.push_back("seed=" + std::to_string(*params.seed));
    if (params.samples)
      ps.push_back("samples=" + std::to_string(*params.samples));
    if (!params.domain.empty()) ps.push_back("domain=" + params.domain);
    if (params.bound) ps.push_back("bound=" + std::to_string(*params.bound));
    if (params.m) ps.push_back("m=" + std::to_string(*params.m));
    if (!params.assignment.empty())
      ps.push_back("at=" + params.assignment.to_string());
    if (!ps.empty()) os << "parameters " << join(ps, " ") << "\n";
  }
  {
    std::vector<std::string> ws;
    if (work.pairs) ws.push_back("pairs=" + std::to_string(work.pairs));
    if (work.minors) ws.push_back("minors=" + std::to_string(work.minors));
    if (work.samples) ws.push_back("samples=" + std::to_string(work.samples));
    if (work.triples) ws.push_back("triples=" + std::to_string(work.triples));
    if (work.subsets) ws.push_back("subsets=" + std::to_string(work.subsets));
    if (work.trials) ws.push_back("trials=" + std::to_string(work.trials));
    if (!ws.empty()) os << "work       " << join(ws, " ") << "\n";
  }
  for (const Witness& w : witnesses) {
    os << "witness    " << w.kind << " {" << join(w.elements, ",") << "}";
    if (!w.minor_contract.empty() || !w.minor_delete.empty())
      os << " in minor /{" << join(w.minor_contract, ",") << "}\\{"
         << join(w.minor_delete, ",") << "}";
    if (!w.assignment.empty()) os << " at " << w.assignment.to_string();
    if (!w.assignment_b.empty()) os << " ; " << w.assignment_b.to_string();
    if (!w.value.empty()) os << " value " << w.value;
    if (!w.note.empty()) os << " (" << w.note << ")";
    os << "\n";
  }
  if (!note.empty()) os << "note       " << note << "\n";
  return os.str();
}

}  // namespace rayleigh
