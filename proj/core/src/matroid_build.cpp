#include <algorithm>

#include "rayleigh/errors.hpp"
#include "rayleigh/matroid.hpp"

namespace rayleigh {

namespace {

// True when every listed element can be matched to a distinct admissible
// set. member_sets[i] is the bitmask of sets containing element i.
bool saturable(const std::vector<int>& elems,
               const std::vector<Subset>& member_sets) {
  auto rec = [&](auto&& self, size_t at, Subset used) -> bool {
    if (at == elems.size()) return true;
    bool ok = false;
    for_each_bit(member_sets[elems[at]] & ~used, [&](int s) {
      if (!ok) ok = self(self, at + 1, used | bit(s));
    });
    return ok;
  };
  return rec(rec, 0, 0);
}

}  // namespace

Matroid from_transversal(std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& sets,
                         std::string name) {
  validate_labels(labels);
  if (sets.empty()) throw EmptyFamily();
  if (sets.size() > 31) throw GroundTooLarge("more than 31 transversal sets");
  Matroid probe;
  probe.labels = labels;
  int n = static_cast<int>(labels.size());
  std::vector<Subset> member_sets(n, 0);
  for (size_t s = 0; s < sets.size(); ++s)
    for (const auto& l : sets[s])
      member_sets[probe.index_of(l)] |= bit(static_cast<int>(s));

  // Rank: size of a maximum matching, grown with augmenting paths.
  std::vector<int> set_owner(sets.size(), -1);
  std::vector<char> visited(sets.size());
  auto augment = [&](auto&& self, int e) -> bool {
    bool found = false;
    for_each_bit(member_sets[e], [&](int s) {
      if (found || visited[s]) return;
      visited[s] = 1;
      if (set_owner[s] < 0 || self(self, set_owner[s])) {
        set_owner[s] = e;
        found = true;
      }
    });
    return found;
  };
  int rank = 0;
  for (int e = 0; e < n; ++e) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, e)) ++rank;
  }

  std::vector<Subset> bases;
  for (Subset s : combinations(n, rank))
    if (saturable(to_indices(s), member_sets)) bases.push_back(s);
  return from_bases_masks(std::move(labels), std::move(bases), std::move(name),
                          false);
}

Matroid from_lines_rank3(std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& lines,
                         std::string name) {
  validate_labels(labels);
  Matroid probe;
  probe.labels = labels;
  int n = static_cast<int>(labels.size());
  std::vector<Subset> line_masks;
  for (const auto& line : lines) {
    Subset s = probe.mask_of(line);
    if (popcount(s) != 3 || line.size() != 3)
      throw InvalidGeometry("line {" +
                            (line.empty() ? std::string() : line[0]) +
                            ",...} does not have 3 distinct points");
    line_masks.push_back(s);
  }
  std::sort(line_masks.begin(), line_masks.end());
  line_masks.erase(std::unique(line_masks.begin(), line_masks.end()),
                   line_masks.end());
  for (size_t i = 0; i < line_masks.size(); ++i)
    for (size_t j = i + 1; j < line_masks.size(); ++j)
      if (popcount(line_masks[i] & line_masks[j]) > 1)
        throw InvalidGeometry("two lines share two points");
  if (line_masks.size() >= 2) {
    Subset common = full_set(n);
    for (Subset l : line_masks) common &= l;
    if (common != 0)
      throw InvalidGeometry("a point lies on every line");
  }

  std::vector<Subset> bases;
  for (Subset t : combinations(n, 3))
    if (!std::binary_search(line_masks.begin(), line_masks.end(), t))
      bases.push_back(t);
  return from_bases_masks(std::move(labels), std::move(bases), std::move(name),
                          false);
}

}  // namespace rayleigh
