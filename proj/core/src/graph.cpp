#include "rayleigh/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "rayleigh/delta.hpp"
#include "rayleigh/errors.hpp"
#include "rayleigh/sampling.hpp"

namespace rayleigh {

namespace {

constexpr int kMaxEdges = 20;

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<size_t>(v)] != v) {
    parent[static_cast<size_t>(v)] =
        parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
    v = parent[static_cast<size_t>(v)];
  }
  return v;
}

}  // namespace

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<GraphEdge> edges) {
  std::set<std::string> vseen;
  for (const std::string& v : vertices) {
    if (v.empty()) throw GraphError("vertex labels must be nonempty");
    if (!vseen.insert(v).second)
      throw DuplicateLabel("duplicate vertex label '" + v + "'");
  }
  if (edges.size() > kMaxEdges)
    throw GroundTooLarge("graph has " + std::to_string(edges.size()) +
                         " edges; tree enumeration is capped at " +
                         std::to_string(kMaxEdges));
  std::set<std::string> eseen;
  for (const GraphEdge& e : edges) {
    if (e.label.empty()) throw GraphError("edge labels must be nonempty");
    if (!eseen.insert(e.label).second)
      throw DuplicateLabel("duplicate edge label '" + e.label + "'");
    if (!vseen.count(e.tail) || !vseen.count(e.head))
      throw GraphError("edge '" + e.label + "' joins unknown vertices");
  }
  Graph g;
  g.vertices = std::move(vertices);
  g.edges = std::move(edges);
  return g;
}

int Graph::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  throw UnknownElement("unknown vertex '" + label + "'");
}

int Graph::edge_index(const std::string& label) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].label == label) return static_cast<int>(i);
  throw UnknownElement("unknown edge '" + label + "'");
}

bool Graph::connected() const {
  if (vertices.size() <= 1) return true;
  std::vector<int> parent(vertices.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  int components = static_cast<int>(vertices.size());
  for (const GraphEdge& e : edges) {
    int a = find_root(parent, vertex_index(e.tail));
    int b = find_root(parent, vertex_index(e.head));
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Subset> spanning_trees(const Graph& g) {
  const int ne = static_cast<int>(g.edges.size());
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<std::pair<int, int>> ends;
  ends.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges)
    ends.emplace_back(g.vertex_index(e.tail), g.vertex_index(e.head));

  std::vector<Subset> out;
  std::vector<int> parent(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) parent[static_cast<size_t>(i)] = i;

  auto rec = [&](auto&& self, int at, std::vector<int> dsu, int components,
                 Subset mask) -> void {
    if (components <= 1) {
      out.push_back(mask);
      return;
    }
    if (at == ne || components - 1 > ne - at) return;
    // Exclude edge `at`.
    self(self, at + 1, dsu, components, mask);
    // Include it when it joins two components.
    int a = find_root(dsu, ends[static_cast<size_t>(at)].first);
    int b = find_root(dsu, ends[static_cast<size_t>(at)].second);
    if (a != b) {
      dsu[static_cast<size_t>(a)] = b;
      self(self, at + 1, std::move(dsu), components - 1, mask | bit(at));
    }
  };
  rec(rec, 0, parent, nv == 0 ? 1 : nv, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Matroid graphic_matroid(const Graph& g) {
  if (!g.connected())
    throw DisconnectedGraph("the graph has no spanning tree");
  std::vector<std::string> labels;
  labels.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) labels.push_back(e.label);
  return from_bases_masks(std::move(labels), spanning_trees(g), "", false);
}

SparsePoly tree_poly(const Graph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) labels.push_back(e.label);
  SparsePoly p(labels);
  for (Subset t : spanning_trees(g))
    p.add_term(Monomial::from_indices(to_indices(t)), Scalar(1));
  return p;
}

Graph merge_vertices(const Graph& g, const std::string& a,
                     const std::string& b) {
  if (a == b) throw GraphError("cannot merge a vertex with itself");
  g.vertex_index(a);
  g.vertex_index(b);
  std::vector<std::string> vertices;
  for (const std::string& v : g.vertices)
    if (v != b) vertices.push_back(v);
  std::vector<GraphEdge> edges = g.edges;
  for (GraphEdge& e : edges) {
    if (e.tail == b) e.tail = a;
    if (e.head == b) e.head = a;
  }
  return Graph::make(std::move(vertices), std::move(edges));
}

namespace {

Scalar tree_sum(const Graph& g, const std::vector<Scalar>& weights) {
  Scalar total(0);
  for (Subset t : spanning_trees(g)) {
    Scalar w(1);
    for_each_bit(t, [&](int i) { w *= weights[static_cast<size_t>(i)]; });
    total += w;
  }
  return total;
}

std::vector<Scalar> edge_values(const Graph& g, const Assignment& y) {
  std::vector<Scalar> out;
  out.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) {
    const Scalar* v = y.find(e.label);
    if (v == nullptr)
      throw Error("no weight for edge '" + e.label + "'");
    if (sign(*v) <= 0)
      throw Error("conductance needs strictly positive edge weights");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

Scalar effective_conductance(const Graph& g, const std::string& a,
                             const std::string& b, const Assignment& y) {
  if (a == b) throw GraphError("the two poles must be distinct vertices");
  g.vertex_index(a);
  g.vertex_index(b);
  if (!g.connected())
    throw DisconnectedGraph("conductance needs a connected graph");
  std::vector<Scalar> weights = edge_values(g, y);
  return tree_sum(g, weights) / tree_sum(merge_vertices(g, a, b), weights);
}

namespace {

std::string fresh_edge_label(const Graph& g) {
  std::string label = "f";
  while (true) {
    bool taken = false;
    for (const GraphEdge& e : g.edges) taken = taken || e.label == label;
    if (!taken) return label;
    label += "'";
  }
}

}  // namespace

PropertyReport monotonicity_check(const Graph& g, const std::string& a,
                                  const std::string& b, long samples,
                                  uint64_t seed, uint64_t bound) {
  if (a == b) throw GraphError("the two poles must be distinct vertices");
  const std::string pole = fresh_edge_label(g);
  std::vector<GraphEdge> edges = g.edges;
  edges.push_back({pole, a, b});
  Graph h = Graph::make(g.vertices, std::move(edges));
  Matroid m = graphic_matroid(h);  // throws when g is disconnected
  const int ne = static_cast<int>(g.edges.size());
  const int fi = ne;

  PropertyReport rep;
  rep.property = "rayleigh-monotonicity";
  rep.matroid_name = m.name;
  rep.params.seed = seed;
  rep.params.samples = samples;
  rep.params.domain = to_string(SampleDomain::POSITIVE);
  rep.params.bound = static_cast<long>(bound);
  rep.note = "pole edge " + pole + " joins " + a + " and " + b;

  std::vector<std::string> glabels;
  glabels.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) glabels.push_back(e.label);

  auto violated_at = [&](std::vector<Scalar> point) {
    ++rep.work.samples;
    Assignment at = [&] {
      Assignment out;
      for (int i = 0; i < ne; ++i)
        out.set(glabels[static_cast<size_t>(i)], point[static_cast<size_t>(i)]);
      return out;
    }();
    point.push_back(Scalar(0));  // the pole coordinate is never read
    for (int e = 0; e < ne; ++e) {
      ++rep.work.pairs;
      Scalar v = delta_value(m, e, fi, point);
      if (sign(v) < 0) {
        Witness w;
        w.kind = "edge";
        w.elements = {glabels[static_cast<size_t>(e)]};
        w.assignment = at;
        w.value = to_string(v);
        rep.witnesses.push_back(std::move(w));
        return true;
      }
    }
    return false;
  };

  for (const auto& point :
       pilot_points(static_cast<size_t>(ne), SampleDomain::POSITIVE)) {
    if (violated_at(point)) {
      rep.verdict = Verdict::VIOLATED;
      return rep;
    }
  }
  SampleStream stream(seed, SampleDomain::POSITIVE, bound);
  for (long k = 0; k < samples; ++k) {
    if (violated_at(stream.draw_point(static_cast<size_t>(ne)))) {
      rep.verdict = Verdict::VIOLATED;
      return rep;
    }
  }
  rep.verdict = Verdict::HOLDS;
  return rep;
}

CertificateResult square_certificate(const Graph& g, const std::string& e,
                                     const std::string& f) {
  const int ei = g.edge_index(e);
  const int fi = g.edge_index(f);
  if (ei == fi) throw GraphError("the certificate needs two distinct edges");
  Matroid m = graphic_matroid(g);
  const int nv = static_cast<int>(g.vertices.size());

  std::vector<std::pair<int, int>> ends;
  ends.reserve(g.edges.size());
  for (const GraphEdge& edge : g.edges)
    ends.emplace_back(g.vertex_index(edge.tail), g.vertex_index(edge.head));

  // Sign of e on the tree path tail(f) -> head(f) inside tree: +1 when the
  // path runs through e from its tail to its head.
  auto cycle_sign = [&](Subset tree) {
    std::vector<int> parent_edge(static_cast<size_t>(nv), -1);
    std::vector<int> parent_dir(static_cast<size_t>(nv), 0);
    std::vector<int> parent_vertex(static_cast<size_t>(nv), -1);
    std::vector<bool> seen(static_cast<size_t>(nv), false);
    const int start = ends[static_cast<size_t>(fi)].first;
    const int goal = ends[static_cast<size_t>(fi)].second;
    std::queue<int> frontier;
    frontier.push(start);
    seen[static_cast<size_t>(start)] = true;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for_each_bit(tree, [&](int t) {
        auto [tt, th] = ends[static_cast<size_t>(t)];
        int other = -1;
        int dir = 0;
        if (tt == v) {
          other = th;
          dir = 1;  // traversed tail -> head
        } else if (th == v) {
          other = tt;
          dir = -1;
        } else {
          return;
        }
        if (seen[static_cast<size_t>(other)]) return;
        seen[static_cast<size_t>(other)] = true;
        parent_edge[static_cast<size_t>(other)] = t;
        parent_dir[static_cast<size_t>(other)] = dir;
        parent_vertex[static_cast<size_t>(other)] = v;
        frontier.push(other);
      });
    }
    for (int v = goal; v != start; v = parent_vertex[static_cast<size_t>(v)]) {
      if (parent_edge[static_cast<size_t>(v)] == ei)
        return parent_dir[static_cast<size_t>(v)];
    }
    throw GraphError(
        "the cycle closed by the second edge misses the first edge");
  };

  SparsePoly p(m.labels);
  for (Subset tree : m.bases) {
    if (!contains(tree, ei) || contains(tree, fi)) continue;
    Subset s = tree & ~bit(ei);
    if (!m.is_basis(s | bit(fi))) continue;
    p.add_term(Monomial::from_indices(to_indices(s)), Scalar(cycle_sign(tree)));
  }
  SparsePoly target = rayleigh_diff(m, ei, fi);
  return {p, target == p * p};
}

Graph parallel_path_graph(int a, int b) {
  if (a < 1 || b < 1)
    throw GraphError("both parallel-path parameters must be at least 1");
  std::vector<std::string> vertices;
  for (int i = 0; i <= b; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<GraphEdge> edges;
  for (int i = 1; i <= b; ++i) {
    for (int k = 1; k <= a; ++k) {
      std::string label = a == 1 ? std::to_string(i)
                                 : std::to_string(i) + "." + std::to_string(k);
      edges.push_back({std::move(label), "v" + std::to_string(i - 1),
                       "v" + std::to_string(i)});
    }
  }
  edges.push_back({"g", "v0", "v" + std::to_string(b)});
  return Graph::make(std::move(vertices), std::move(edges));
}

}  // namespace rayleigh
