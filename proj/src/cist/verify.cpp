#include "cist/verify.hpp"

#include <numeric>
#include <set>

#include "core/model.hpp"

namespace cistkit {

namespace {

VerifyResult verify_cist_impl(
    int nverts, const std::function<bool(Vertex, Vertex)>& adjacent,
    const std::vector<SpanningTree>& trees) {
  VerifyResult r;
  std::set<Edge> seen;
  // which tree each vertex is internal in, -1 if none
  std::vector<int> internal_in(nverts, -1);

  for (size_t t = 0; t < trees.size(); t++) {
    const auto& tree = trees[t];
    if (static_cast<int>(tree.edges.size()) != nverts - 1) {
      r.reason = CistFailure::NotSpanning;
      return r;
    }
    std::vector<int> parent(nverts), deg(nverts, 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : tree.edges) {
      if (e.u < 0 || e.v >= nverts || e.u == e.v || !adjacent(e.u, e.v)) {
        r.reason = CistFailure::EdgeNotInHost;
        r.edge = e;
        return r;
      }
      if (!seen.insert(e).second) {
        r.reason = CistFailure::SharedEdge;
        r.edge = e;
        return r;
      }
      int ru = find(e.u), rv = find(e.v);
      if (ru == rv) {
        r.reason = CistFailure::NotTree;
        r.edge = e;
        return r;
      }
      parent[ru] = rv;
      deg[e.u]++;
      deg[e.v]++;
    }
    // n-1 acyclic edges: spanning and connected
    for (Vertex v = 0; v < nverts; v++) {
      if (deg[v] <= 1) continue;
      if (internal_in[v] != -1) {
        r.reason = CistFailure::DegreeViolation;
        r.vertex = v;
        return r;
      }
      internal_in[v] = static_cast<int>(t);
    }
  }
  r.ok = true;
  return r;
}

}  // namespace

VerifyResult verify_cist(const SplitGraph& g,
                         const std::vector<SpanningTree>& trees) {
  return verify_cist_impl(
      g.vertex_count(), [&g](Vertex a, Vertex b) { return g.adjacent(a, b); },
      trees);
}

VerifyResult verify_cist_clique(int d, const std::vector<SpanningTree>& trees) {
  return verify_cist_impl(
      d, [](Vertex a, Vertex b) { return a != b; }, trees);
}

PartitionVerifyResult verify_cist_partition(const SplitGraph& g,
                                            const CistPartition& p) {
  PartitionVerifyResult r;
  const int n = g.vertex_count();
  std::vector<int> cls(n, -1);
  for (size_t c = 0; c < p.classes.size(); c++) {
    if (p.classes[c].empty()) {
      r.reason = PartitionFailure::NotPartition;
      return r;
    }
    for (Vertex v : p.classes[c]) {
      if (v < 0 || v >= n || cls[v] != -1) {
        r.reason = PartitionFailure::NotPartition;
        return r;
      }
      cls[v] = static_cast<int>(c);
    }
  }
  for (Vertex v = 0; v < n; v++)
    if (cls[v] == -1) {
      r.reason = PartitionFailure::NotPartition;
      return r;
    }

  for (size_t c = 0; c < p.classes.size(); c++) {
    const auto& verts = p.classes[c];
    std::vector<char> vis(verts.size(), 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (size_t s = 0; s < verts.size(); s++)
        if (!vis[s] && g.adjacent(verts[t], verts[s])) {
          vis[s] = 1;
          reached++;
          stack.push_back(static_cast<int>(s));
        }
    }
    if (reached != static_cast<int>(verts.size())) {
      r.reason = PartitionFailure::DisconnectedClass;
      r.class_a = static_cast<int>(c);
      return r;
    }
  }

  for (size_t a = 0; a < p.classes.size(); a++)
    for (size_t b = a + 1; b < p.classes.size(); b++) {
      auto comps = bipartite_component_check(g, p.classes[a], p.classes[b]);
      for (const auto& ci : comps)
        if (ci.is_tree) {
          r.reason = PartitionFailure::TreeComponent;
          r.class_a = static_cast<int>(a);
          r.class_b = static_cast<int>(b);
          return r;
        }
    }
  r.ok = true;
  return r;
}

}  // namespace cistkit
