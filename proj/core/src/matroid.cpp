#include "rayleigh/matroid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "rayleigh/errors.hpp"

namespace rayleigh {

int Matroid::index_of(std::string_view label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw UnknownElement("unknown element '" + std::string(label) + "'" +
                       (name.empty() ? "" : " in " + name));
}

Subset Matroid::mask_of(const std::vector<std::string>& some) const {
  Subset s = 0;
  for (const auto& l : some) s |= bit(index_of(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(Subset s) const {
  std::vector<std::string> out;
  for_each_bit(s, [&](int i) { out.push_back(labels[i]); });
  return out;
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases.begin(), bases.end(), s);
}

bool Matroid::is_independent(Subset s) const {
  if (popcount(s) > rank) return false;
  for (Subset b : bases)
    if ((s & ~b) == 0) return true;
  return false;
}

Subset Matroid::loops() const {
  Subset in_some = 0;
  for (Subset b : bases) in_some |= b;
  return full_set(size()) & ~in_some;
}

Subset Matroid::coloops() const {
  Subset in_all = full_set(size());
  for (Subset b : bases) in_all &= b;
  return in_all;
}

long Matroid::element_weight(int i) const {
  long n = 0;
  for (Subset b : bases)
    if (contains(b, i)) ++n;
  return n;
}

void validate_labels(const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) > kMaxGroundSize)
    throw GroundTooLarge("ground set has " + std::to_string(labels.size()) +
                         " elements; at most 31 are supported");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw DuplicateLabel("empty element label");
    for (char c : l)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw DuplicateLabel("element label '" + l + "' contains whitespace");
    if (!seen.insert(l).second)
      throw DuplicateLabel("duplicate element label '" + l + "'");
  }
}

namespace {
std::string basis_text(const Matroid& m, Subset b) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_each_bit(b, [&](int i) {
    if (!first) os << ",";
    os << m.labels[i];
    first = false;
  });
  os << "}";
  return os.str();
}
}  // namespace

void validate_exchange(const Matroid& m) {
  std::unordered_set<Subset> family(m.bases.begin(), m.bases.end());
  for (Subset b1 : m.bases) {
    for (Subset b2 : m.bases) {
      if (b1 == b2) continue;
      Subset only1 = b1 & ~b2;
      Subset only2 = b2 & ~b1;
      bool bad = false;
      int bad_x = -1;
      for_each_bit(only1, [&](int x) {
        if (bad) return;
        Subset stem = b1 ^ bit(x);
        bool ok = false;
        for_each_bit(only2, [&](int y) {
          ok = ok || family.count(stem | bit(y)) > 0;
        });
        if (!ok) {
          bad = true;
          bad_x = x;
        }
      });
      if (bad)
        throw ExchangeAxiomViolation(
            basis_text(m, b1), basis_text(m, b2), m.labels[bad_x],
            "exchange axiom fails for " + basis_text(m, b1) + ", " +
                basis_text(m, b2) + " at element " + m.labels[bad_x]);
    }
  }
}

Matroid from_bases_masks(std::vector<std::string> labels,
                         std::vector<Subset> bases, std::string name,
                         bool validate) {
  validate_labels(labels);
  if (bases.empty()) throw EmptyFamily();
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  Subset ground = full_set(static_cast<int>(labels.size()));
  int r = popcount(bases.front());
  for (Subset b : bases) {
    if ((b & ~ground) != 0)
      throw UnknownElement("basis mask outside the ground set");
    if (popcount(b) != r)
      throw MixedCardinality("bases of sizes " + std::to_string(r) + " and " +
                             std::to_string(popcount(b)) + " in one family");
  }
  Matroid m{std::move(name), std::move(labels), r, std::move(bases)};
  if (validate) validate_exchange(m);
  return m;
}

Matroid from_bases(std::vector<std::string> labels,
                   const std::vector<std::vector<std::string>>& bases,
                   std::string name) {
  validate_labels(labels);
  Matroid probe;
  probe.labels = labels;
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(probe.mask_of(b));
  return from_bases_masks(std::move(labels), std::move(masks), std::move(name),
                          true);
}

Matroid uniform_matroid(int r, int m) {
  if (m < 0 || r < 0 || r > m)
    throw Error("uniform matroid needs 0 <= r <= m");
  if (m > kMaxGroundSize)
    throw GroundTooLarge("uniform ground of " + std::to_string(m));
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
  Matroid out;
  out.name = "uniform(" + std::to_string(r) + "," + std::to_string(m) + ")";
  out.labels = std::move(labels);
  out.rank = r;
  out.bases = combinations(m, r);
  if (out.bases.empty()) throw EmptyFamily();
  return out;
}

Matroid dual(const Matroid& m) {
  Subset ground = full_set(m.size());
  std::vector<Subset> cobases;
  cobases.reserve(m.bases.size());
  for (Subset b : m.bases) cobases.push_back(ground & ~b);
  std::sort(cobases.begin(), cobases.end());
  Matroid out;
  out.name = m.name.empty() ? "" : m.name + "*";
  out.labels = m.labels;
  out.rank = m.size() - m.rank;
  out.bases = std::move(cobases);
  return out;
}

Matroid matroid_minor(const Matroid& m, Subset contract, Subset del) {
  if ((contract & del) != 0)
    throw Error("minor: contract and delete sets overlap");
  Subset ground = full_set(m.size());
  if (((contract | del) & ~ground) != 0)
    throw UnknownElement("minor: sets outside the ground set");

  // Contract: bases meeting the contract set in a maximal independent subset.
  int ri = 0;
  for (Subset b : m.bases) ri = std::max(ri, popcount(b & contract));
  std::vector<Subset> mid;
  for (Subset b : m.bases)
    if (popcount(b & contract) == ri) mid.push_back(b & ~contract);
  // Delete: keep the maximum-size traces avoiding the delete set.
  int keep = 0;
  for (Subset b : mid) keep = std::max(keep, popcount(b & ~del));
  std::vector<Subset> traces;
  for (Subset b : mid)
    if (popcount(b & ~del) == keep) traces.push_back(b & ~del);
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());

  // Compress remaining positions, preserving ground order and labels.
  std::vector<int> newpos(m.size(), -1);
  Matroid out;
  int np = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (contains(contract | del, i)) continue;
    newpos[i] = np++;
    out.labels.push_back(m.labels[i]);
  }
  out.rank = keep;
  out.bases.reserve(traces.size());
  for (Subset t : traces) {
    Subset nb = 0;
    for_each_bit(t, [&](int i) { nb |= bit(newpos[i]); });
    out.bases.push_back(nb);
  }
  std::sort(out.bases.begin(), out.bases.end());
  return out;
}

Matroid matroid_minor(const Matroid& m, const std::vector<std::string>& contract,
                      const std::vector<std::string>& del) {
  return matroid_minor(m, m.mask_of(contract), m.mask_of(del));
}

Matroid two_sum(const Matroid& m, const Matroid& q, const std::string& gm,
                const std::string& gq) {
  int im = m.index_of(gm);
  int iq = q.index_of(gq);
  if (contains(m.loops(), im) || contains(m.coloops(), im))
    throw GlueElementDegenerate("glue element '" + gm +
                                "' is a loop or coloop in the first factor");
  if (contains(q.loops(), iq) || contains(q.coloops(), iq))
    throw GlueElementDegenerate("glue element '" + gq +
                                "' is a loop or coloop in the second factor");

  Matroid out;
  std::vector<int> mpos(m.size(), -1), qpos(q.size(), -1);
  for (int i = 0; i < m.size(); ++i) {
    if (i == im) continue;
    mpos[i] = static_cast<int>(out.labels.size());
    out.labels.push_back(m.labels[i]);
  }
  for (int i = 0; i < q.size(); ++i) {
    if (i == iq) continue;
    qpos[i] = static_cast<int>(out.labels.size());
    out.labels.push_back(q.labels[i]);
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : out.labels)
      if (!seen.insert(l).second)
        throw LabelCollision("2-sum factors share element label '" + l + "'");
  }
  validate_labels(out.labels);

  auto remap = [](Subset b, const std::vector<int>& pos) {
    Subset nb = 0;
    for_each_bit(b, [&](int i) {
      if (pos[i] >= 0) nb |= bit(pos[i]);
    });
    return nb;
  };

  // Bases: (basis of m through gm) x (basis of q avoiding gq), plus the
  // symmetric combination.
  for (Subset bm : m.bases) {
    bool gm_in = contains(bm, im);
    Subset left = remap(bm, mpos);
    for (Subset bq : q.bases) {
      bool gq_in = contains(bq, iq);
      if (gm_in == gq_in) continue;
      out.bases.push_back(left | remap(bq, qpos));
    }
  }
  std::sort(out.bases.begin(), out.bases.end());
  out.bases.erase(std::unique(out.bases.begin(), out.bases.end()),
                  out.bases.end());
  out.rank = m.rank + q.rank - 1;
  return out;
}

Matroid parallel_expand(const Matroid& m, const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != m.size())
    throw Error("parallel_expand: one multiplicity per element required");
  long total = 0;
  for (int k : mult) {
    if (k < 1) throw Error("parallel_expand: multiplicities must be >= 1");
    total += k;
  }
  if (total > kMaxGroundSize)
    throw GroundTooLarge("expanded ground of " + std::to_string(total));

  Matroid out;
  std::vector<int> start(m.size());
  for (int i = 0; i < m.size(); ++i) {
    start[i] = static_cast<int>(out.labels.size());
    if (mult[i] == 1) {
      out.labels.push_back(m.labels[i]);
    } else {
      for (int k = 1; k <= mult[i]; ++k)
        out.labels.push_back(m.labels[i] + "." + std::to_string(k));
    }
  }
  validate_labels(out.labels);

  for (Subset b : m.bases) {
    std::vector<int> members = to_indices(b);
    std::vector<int> choice(members.size(), 0);
    while (true) {
      Subset nb = 0;
      for (size_t j = 0; j < members.size(); ++j)
        nb |= bit(start[members[j]] + choice[j]);
      out.bases.push_back(nb);
      size_t j = 0;
      while (j < members.size() && choice[j] + 1 >= mult[members[j]]) {
        choice[j] = 0;
        ++j;
      }
      if (j == members.size()) break;
      ++choice[j];
    }
  }
  std::sort(out.bases.begin(), out.bases.end());
  out.rank = m.rank;
  return out;
}

Profile profile(const Matroid& m) {
  Profile p;
  p.name = m.name;
  p.size = m.size();
  p.rank = m.rank;
  p.basis_count = static_cast<long>(m.bases.size());
  p.loops = m.labels_of(m.loops());
  p.coloops = m.labels_of(m.coloops());
  return p;
}

}  // namespace rayleigh
