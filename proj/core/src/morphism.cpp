#include <algorithm>
#include <map>
#include <vector>

#include "rayleigh/matroid.hpp"

namespace rayleigh {

namespace {

// Number of bases containing both i and j (i == j gives element weight).
std::vector<std::vector<long>> pair_weights(const Matroid& m) {
  int n = m.size();
  std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
  for (Subset b : m.bases) {
    std::vector<int> members = to_indices(b);
    for (size_t x = 0; x < members.size(); ++x)
      for (size_t y = x; y < members.size(); ++y) {
        w[members[x]][members[y]] += 1;
        if (x != y) w[members[y]][members[x]] += 1;
      }
  }
  return w;
}

bool maps_bases_onto(const Matroid& a, const Matroid& b,
                     const std::vector<int>& map) {
  for (Subset ba : a.bases) {
    Subset image = 0;
    for_each_bit(ba, [&](int i) { image |= bit(map[i]); });
    if (!b.is_basis(image)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b) {
  if (a.size() != b.size() || a.rank != b.rank ||
      a.bases.size() != b.bases.size())
    return std::nullopt;
  int n = a.size();
  auto wa = pair_weights(a);
  auto wb = pair_weights(b);
  {
    std::vector<long> da, db;
    for (int i = 0; i < n; ++i) {
      da.push_back(wa[i][i]);
      db.push_back(wb[i][i]);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int at) -> bool {
    if (at == n) return maps_bases_onto(a, b, map);
    for (int c = 0; c < n; ++c) {
      if (used[c] || wb[c][c] != wa[at][at]) continue;
      bool fits = true;
      for (int j = 0; j < at && fits; ++j)
        fits = wb[c][map[j]] == wa[at][j];
      if (!fits) continue;
      map[at] = c;
      used[c] = 1;
      if (self(self, at + 1)) return true;
      used[c] = 0;
      map[at] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<MinorWitness> find_minor(const Matroid& m,
                                       const Matroid& pattern) {
  int n = m.size();
  int removed = n - pattern.size();
  if (removed < 0) return std::nullopt;

  // Isomorphism results keyed by the minor's basis family, so each distinct
  // minor is tested once.
  std::map<std::vector<Subset>, std::optional<std::vector<int>>> seen;

  for (int ci = 0; ci <= removed; ++ci) {
    for (Subset contract : combinations(n, ci)) {
      for (Subset del : combinations(n, removed - ci)) {
        if ((contract & del) != 0) continue;
        Matroid minor = matroid_minor(m, contract, del);
        if (minor.rank != pattern.rank ||
            minor.bases.size() != pattern.bases.size())
          continue;
        auto [it, fresh] = seen.try_emplace(minor.bases, std::nullopt);
        if (fresh) it->second = find_isomorphism(minor, pattern);
        if (it->second)
          return MinorWitness{contract, del, *it->second};
      }
    }
  }
  return std::nullopt;
}

bool has_minor(const Matroid& m, const Matroid& pattern) {
  return find_minor(m, pattern).has_value();
}

}  // namespace rayleigh
