#include "cist/exact.hpp"

#include <numeric>

#include "core/model.hpp"

namespace cistkit {

namespace {

// ---- partition search ----------------------------------------------------

struct PartitionSearch {
  const SplitGraph& g;
  int k;
  std::vector<int> d_class;                // per D-vertex
  std::vector<int> i_class;                // per I-vertex
  std::vector<std::vector<int>> cross_cnt; // I-vertex x class -> #neighbors

  PartitionSearch(const SplitGraph& gg, int kk)
      : g(gg), k(kk), d_class(gg.d, -1), i_class(gg.i, -1),
        cross_cnt(gg.i, std::vector<int>(kk, 0)) {}

  bool pairs_ok() const {
    std::vector<int> dsz(k, 0);
    for (int c : d_class) dsz[c]++;
    std::vector<int> isz(k, 0);
    for (int c : i_class) isz[c]++;
    for (int a = 0; a < k; a++)
      for (int b = a + 1; b < k; b++) {
        long long edges = static_cast<long long>(dsz[a]) * dsz[b];
        long long verts = dsz[a] + dsz[b];
        for (int j = 0; j < g.i; j++) {
          if (i_class[j] == a) {
            edges += cross_cnt[j][b];
            verts += 1;
          } else if (i_class[j] == b) {
            edges += cross_cnt[j][a];
            verts += 1;
          }
        }
        if (edges < verts) return false;
      }
    return true;
  }

  bool assign_i(int j) {
    if (j == g.i) return pairs_ok();
    for (int c = 0; c < k; c++) {
      // own-class connectivity needs a D-neighbor in the class
      if (cross_cnt[j][c] == 0) continue;
      i_class[j] = c;
      if (assign_i(j + 1)) return true;
    }
    i_class[j] = -1;
    return false;
  }

  bool after_d_partition() {
    // For k >= 2 every I-vertex must see every class: otherwise it is an
    // isolated singleton (a tree component) in some cross-subgraph.
    for (int j = 0; j < g.i; j++) {
      for (auto& c : cross_cnt[j]) c = 0;
      for (Vertex u : g.cross_adj[j]) cross_cnt[j][d_class[u]]++;
      for (int c = 0; c < k; c++)
        if (cross_cnt[j][c] == 0) return false;
    }
    return assign_i(0);
  }

  // Canonical enumeration: a D-vertex may open at most one new class.
  bool assign_d(int v, int used) {
    if (v == g.d) return used == k && after_d_partition();
    if (k - used > g.d - v) return false;
    int cmax = std::min(used, k - 1);
    for (int c = 0; c <= cmax; c++) {
      d_class[v] = c;
      if (assign_d(v + 1, std::max(used, c + 1))) return true;
    }
    d_class[v] = -1;
    return false;
  }
};

bool has_cist_partition(const SplitGraph& g, int k) {
  PartitionSearch s(g, k);
  return s.assign_d(0, 0);
}

// ---- tree-level search ---------------------------------------------------

struct TreeSearch {
  const SplitGraph& g;
  int n, k;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> parent, rank_;  // per tree union-find
  std::vector<std::vector<int>> deg;            // per tree vertex degrees
  std::vector<int> tree_size;                   // edges placed per tree
  std::vector<int> internal_of;                 // vertex -> tree or -1
  std::vector<int> remaining_incident;          // undecided incident edges
  std::vector<int> missing_trees;               // trees where deg(v) == 0
  std::vector<int> assignment;                  // per edge: tree or -1

  TreeSearch(const SplitGraph& gg, int kk)
      : g(gg), n(gg.vertex_count()), k(kk) {
    for (Vertex u = 0; u < g.d; u++)
      for (Vertex v = u + 1; v < g.d; v++) edges.emplace_back(u, v);
    for (int j = 0; j < g.i; j++)
      for (Vertex u : g.cross_adj[j]) edges.emplace_back(u, g.d + j);
    std::sort(edges.begin(), edges.end());
    parent.assign(k, std::vector<int>(n));
    rank_.assign(k, std::vector<int>(n, 0));
    for (auto& p : parent) std::iota(p.begin(), p.end(), 0);
    deg.assign(k, std::vector<int>(n, 0));
    tree_size.assign(k, 0);
    internal_of.assign(n, -1);
    remaining_incident.assign(n, 0);
    for (const Edge& e : edges) {
      remaining_incident[e.u]++;
      remaining_incident[e.v]++;
    }
    missing_trees.assign(n, k);
    assignment.assign(edges.size(), -1);
  }

  int find(int t, int x) const {
    while (parent[t][x] != x) x = parent[t][x];
    return x;
  }

  bool search(size_t idx, int opened) {
    int deficit = 0;
    for (int t = 0; t < k; t++) deficit += (n - 1) - tree_size[t];
    if (deficit == 0) return true;
    if (idx == edges.size() ||
        static_cast<int>(edges.size() - idx) < deficit)
      return false;

    const Edge e = edges[idx];
    remaining_incident[e.u]--;
    remaining_incident[e.v]--;

    int tmax = std::min(opened, k - 1);
    for (int t = 0; t <= tmax; t++) {
      if (tree_size[t] == n - 1) continue;
      int ru = find(t, e.u), rv = find(t, e.v);
      if (ru == rv) continue;
      bool u_becomes_internal = deg[t][e.u] == 1;
      bool v_becomes_internal = deg[t][e.v] == 1;
      if (u_becomes_internal && internal_of[e.u] != -1 && internal_of[e.u] != t)
        continue;
      if (v_becomes_internal && internal_of[e.v] != -1 && internal_of[e.v] != t)
        continue;

      // place edge in tree t
      int old_iu = internal_of[e.u], old_iv = internal_of[e.v];
      if (u_becomes_internal) internal_of[e.u] = t;
      if (v_becomes_internal) internal_of[e.v] = t;
      bool mu = deg[t][e.u] == 0, mv = deg[t][e.v] == 0;
      if (mu) missing_trees[e.u]--;
      if (mv) missing_trees[e.v]--;
      deg[t][e.u]++;
      deg[t][e.v]++;
      tree_size[t]++;
      int merged_root, into_root;
      if (rank_[t][ru] < rank_[t][rv]) std::swap(ru, rv);
      merged_root = rv;
      into_root = ru;
      parent[t][merged_root] = into_root;
      bool bumped = rank_[t][ru] == rank_[t][rv];
      if (bumped) rank_[t][into_root]++;

      if (remaining_incident[e.u] >= missing_trees[e.u] &&
          remaining_incident[e.v] >= missing_trees[e.v]) {
        assignment[idx] = t;
        if (search(idx + 1, std::max(opened, t + 1))) return true;
        assignment[idx] = -1;
      }

      if (bumped) rank_[t][into_root]--;
      parent[t][merged_root] = merged_root;
      tree_size[t]--;
      deg[t][e.u]--;
      deg[t][e.v]--;
      if (mu) missing_trees[e.u]++;
      if (mv) missing_trees[e.v]++;
      internal_of[e.u] = old_iu;
      internal_of[e.v] = old_iv;
    }

    // skip the edge
    if (remaining_incident[e.u] >= missing_trees[e.u] &&
        remaining_incident[e.v] >= missing_trees[e.v]) {
      if (search(idx + 1, opened)) return true;
    }

    remaining_incident[e.u]++;
    remaining_incident[e.v]++;
    return false;
  }
};

}  // namespace

int max_cist_exact(const SplitGraph& g, int k_cap) {
  validate(g);
  const int nverts = g.vertex_count();
  if (nverts > 14)
    throw Error(ErrorCode::TooLarge, "exact search capped at 14 vertices");
  if (nverts == 0 || (g.d == 0 && nverts > 1))
    throw Error(ErrorCode::NotConnected, "graph is empty or disconnected");
  // every class of a k-CIST-partition (k >= 2) needs a D-vertex, so k <= d
  int cap = g.d;
  if (k_cap > 0) cap = std::min(cap, k_cap);
  for (int k = cap; k >= 2; k--)
    if (has_cist_partition(g, k)) return k;
  return 1;
}

std::optional<CistCertificate> cist_search_trees(const SplitGraph& g, int k) {
  validate(g);
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  TreeSearch s(g, k);
  if (static_cast<long long>(k) * (n - 1) >
      static_cast<long long>(s.edges.size()))
    return std::nullopt;
  if (!s.search(0, 0)) return std::nullopt;
  CistCertificate cert;
  cert.trees.resize(k);
  for (size_t idx = 0; idx < s.edges.size(); idx++)
    if (s.assignment[idx] >= 0)
      cert.trees[s.assignment[idx]].edges.push_back(s.edges[idx]);
  if (auto r = verify_cist(g, cert.trees); !r)
    throw Error(ErrorCode::InternalVerification,
                "tree search produced an invalid certificate");
  return cert;
}

CistReport cist_report(const SplitGraph& g) {
  validate(g);
  CistReport rep;
  Hypergraph h = hypergraph_of_split(g);

  if (g.d < 2) {
    // K_1 plus pendant I-vertices: a single star tree.
    rep.lower_bound = rep.upper_bound = 1;
    SpanningTree t;
    for (int j = 0; j < g.i; j++) t.edges.emplace_back(0, g.d + j);
    rep.certificate.trees.push_back(std::move(t));
    rep.lower_method = "single spanning tree";
    rep.upper_method = "single D-vertex";
    if (g.vertex_count() <= 14) rep.max_cist = max_cist_exact(g);
    return rep;
  }

  NumberResult chi2 = bipanchromatic_number(h);
  rep.lower_bound = chi2.value;
  rep.certificate = cist_from_bipanchromatic(g, chi2.witness);
  rep.lower_method = "bipanchromatic construction";
  rep.upper_bound = chi2.value + 1;
  rep.upper_method = "bipanchromatic number + 1";

  // Upgrade: a panchromatic chi_p-coloring with a single unique color can
  // reach chi_p trees, one above chi_p^2 when alpha = 1.
  NumberResult chi_p = panchromatic_number(h);
  if (chi_p.value >= 2 && chi_p.value > rep.lower_bound) {
    NumberResult alpha = min_unique_colors(h, chi_p.value);
    if (alpha.value == 1) {
      try {
        if (auto cert = cist_with_unique_color(g, alpha.witness)) {
          rep.lower_bound = chi_p.value;
          rep.certificate = *cert;
          rep.lower_method = "unique-color construction";
        }
      } catch (const Error&) {
        // uniform hypergraph or missing hypothesis: keep the base bound
      }
    }
  }

  if (g.vertex_count() <= 14) rep.max_cist = max_cist_exact(g);
  return rep;
}

}  // namespace cistkit
