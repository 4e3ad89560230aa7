#include "cist/construct.hpp"

#include <numeric>

#include "core/model.hpp"

namespace cistkit {

namespace {

void append_edge(SpanningTree& t, Vertex a, Vertex b) {
  t.edges.emplace_back(a, b);
}

}  // namespace

CistCertificate clique_cist(int d, const std::vector<VertexSet>& classes) {
  const int k = static_cast<int>(classes.size());
  if (k < 1) throw Error(ErrorCode::InvalidClasses, "no classes");
  std::vector<char> seen(d, 0);
  int covered = 0;
  for (const auto& cls : classes) {
    if (k >= 2 && cls.size() < 2)
      throw Error(ErrorCode::InvalidClasses, "class with fewer than 2 members");
    if (cls.empty())
      throw Error(ErrorCode::InvalidClasses, "empty class");
    for (Vertex v : cls) {
      if (v < 0 || v >= d || seen[v])
        throw Error(ErrorCode::InvalidClasses, "classes overlap or exceed 0..d-1");
      seen[v] = 1;
      covered++;
    }
  }
  if (covered != d)
    throw Error(ErrorCode::InvalidClasses, "classes do not cover 0..d-1");
  if (k >= 2 && d < 4)
    throw Error(ErrorCode::PreconditionViolated, "need d >= 4 for k >= 2");

  CistCertificate cert;
  for (int i = 0; i < k; i++) {
    SpanningTree t;
    const auto& a = classes[i];
    for (size_t s = 1; s < a.size(); s++) append_edge(t, a[s - 1], a[s]);
    for (int j = 0; j < k; j++) {
      if (j == i) continue;
      const auto& b = classes[j];
      // First two members of class j attach to the first two members of
      // class i, swapped depending on the class order; the rest attach to
      // class i's first member.
      append_edge(t, b[0], j < i ? a[0] : a[1]);
      append_edge(t, b[1], j < i ? a[1] : a[0]);
      for (size_t s = 2; s < b.size(); s++) append_edge(t, b[s], a[0]);
    }
    cert.trees.push_back(std::move(t));
  }
  if (auto r = verify_cist_clique(d, cert.trees); !r)
    throw Error(ErrorCode::InternalVerification,
                "clique tree family failed verification");
  return cert;
}

CistCertificate cist_from_bipanchromatic(const SplitGraph& g,
                                         const Coloring& c) {
  validate(g);
  Hypergraph h = hypergraph_of_split(g);
  if (!is_bipanchromatic(h, c))
    throw Error(ErrorCode::NotBipanchromatic, "coloring is not bipanchromatic");
  const int k = c.k;
  if (k >= 2 && g.d < 4)
    throw Error(ErrorCode::PreconditionViolated, "need d >= 4 for k >= 2");

  std::vector<VertexSet> classes(k);
  for (Vertex v = 0; v < g.d; v++) classes[c.colors[v]].push_back(v);

  CistCertificate cert = clique_cist(g.d, classes);
  for (int j = 0; j < g.i; j++) {
    Vertex x = g.d + j;
    for (int i = 0; i < k; i++) {
      Vertex target = -1;
      for (Vertex u : g.cross_adj[j])
        if (c.colors[u] == i) { target = u; break; }
      if (target < 0)
        throw Error(ErrorCode::InternalVerification,
                    "panchromatic coloring misses a color in a hyperedge");
      append_edge(cert.trees[i], x, target);
    }
  }
  if (auto r = verify_cist(g, cert.trees); !r)
    throw Error(ErrorCode::InternalVerification,
                "constructed trees failed verification");
  return cert;
}

CistCertificate cist_from_panchromatic(const SplitGraph& g, const Coloring& c) {
  Hypergraph h = hypergraph_of_split(g);
  Coloring grouped = group_unique_colors(h, c);
  return cist_from_bipanchromatic(g, grouped);
}

std::optional<CistCertificate> cist_with_unique_color(const SplitGraph& g,
                                                      const Coloring& c) {
  validate(g);
  Hypergraph h = hypergraph_of_split(g);
  if (!is_panchromatic(h, c))
    throw Error(ErrorCode::PreconditionViolated, "coloring not panchromatic");
  const int k = c.k;
  ColoringStats stats = coloring_stats(c);
  if (stats.unique_colors.size() != 1)
    throw Error(ErrorCode::PreconditionViolated,
                "expected exactly one unique color");
  bool uniform = true;
  for (const auto& e : h.edges)
    if (static_cast<int>(e.size()) != k) { uniform = false; break; }
  if (uniform)
    throw Error(ErrorCode::PreconditionViolated, "H(G) is k-uniform");

  const Color cj = stats.unique_colors[0];
  Vertex x_d = -1;
  for (Vertex v = 0; v < g.d; v++)
    if (c.colors[v] == cj) { x_d = v; break; }

  // A unique-color vertex lies in every hyperedge.
  for (const auto& nb : g.cross_adj)
    if (!std::binary_search(nb.begin(), nb.end(), x_d)) return std::nullopt;

  // For each other color, an I-vertex of degree > k with two neighbors of
  // that color; it covers that color's chosen vertex inside tree cj.
  std::vector<Vertex> partner(k, -1);   // y_i per color
  std::vector<Vertex> anchor2(k, -1);   // x_{i2}: covered by y_i in T_j
  std::vector<Vertex> anchor1(k, -1);   // x_{i1}: y_i's attachment in T_i
  for (Color i = 0; i < k; i++) {
    if (i == cj) continue;
    bool found = false;
    for (int j = 0; j < g.i && !found; j++) {
      if (static_cast<int>(g.cross_adj[j].size()) <= k) continue;
      VertexSet of_color;
      for (Vertex u : g.cross_adj[j])
        if (c.colors[u] == i) of_color.push_back(u);
      if (of_color.size() >= 2) {
        partner[i] = g.d + j;
        anchor2[i] = of_color[0];
        anchor1[i] = of_color[1];
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }

  // Trees for the non-unique colors live on the clique D \ {x_D}.
  std::vector<Vertex> old_id;
  std::vector<int> new_id(g.d, -1);
  for (Vertex v = 0; v < g.d; v++)
    if (v != x_d) {
      new_id[v] = static_cast<int>(old_id.size());
      old_id.push_back(v);
    }
  std::vector<VertexSet> sub_classes;
  std::vector<Color> class_color;
  for (Color i = 0; i < k; i++) {
    if (i == cj) continue;
    VertexSet cls;
    for (Vertex v = 0; v < g.d; v++)
      if (v != x_d && c.colors[v] == i) cls.push_back(new_id[v]);
    sub_classes.push_back(std::move(cls));
    class_color.push_back(i);
  }
  CistCertificate sub = clique_cist(g.d - 1, sub_classes);

  CistCertificate cert;
  cert.trees.resize(k);
  for (size_t t = 0; t < sub.trees.size(); t++) {
    SpanningTree& tree = cert.trees[class_color[t]];
    for (const Edge& e : sub.trees[t].edges)
      append_edge(tree, old_id[e.u], old_id[e.v]);
  }

  for (Color i = 0; i < k; i++) {
    if (i == cj) continue;
    SpanningTree& tree = cert.trees[i];
    append_edge(tree, x_d, anchor2[i]);
    for (int j = 0; j < g.i; j++) {
      Vertex x = g.d + j;
      Vertex target = -1;
      if (x == partner[i]) {
        target = anchor1[i];
      } else {
        for (Vertex u : g.cross_adj[j])
          if (c.colors[u] == i) { target = u; break; }
      }
      if (target < 0) return std::nullopt;
      append_edge(tree, x, target);
    }
  }

  // Tree of the unique color: a star at x_D, except that each chosen
  // I-vertex covers its color's anchor.
  SpanningTree& tj = cert.trees[cj];
  std::vector<char> skip(g.d, 0);
  for (Color i = 0; i < k; i++)
    if (i != cj && anchor2[i] >= 0) skip[anchor2[i]] = 1;
  for (Vertex v = 0; v < g.d; v++)
    if (v != x_d && !skip[v]) append_edge(tj, x_d, v);
  for (int j = 0; j < g.i; j++) append_edge(tj, x_d, g.d + j);
  for (Color i = 0; i < k; i++)
    if (i != cj) append_edge(tj, partner[i], anchor2[i]);

  if (auto r = verify_cist(g, cert.trees); !r)
    throw Error(ErrorCode::InternalVerification,
                "unique-color construction failed verification");
  return cert;
}

Coloring cist_to_coloring(const SplitGraph& g, const CistCertificate& trees) {
  if (trees.k() < 2)
    throw Error(ErrorCode::PreconditionViolated, "need k >= 2 trees");
  if (auto r = verify_cist(g, trees.trees); !r)
    throw Error(ErrorCode::InvalidCertificate, "certificate is not a valid set of completely independent spanning trees");

  const int n = g.vertex_count();
  const int k = trees.k();
  std::vector<std::vector<std::vector<Vertex>>> adj(
      k, std::vector<std::vector<Vertex>>(n));
  for (int t = 0; t < k; t++)
    for (const Edge& e : trees.trees[t].edges) {
      adj[t][e.u].push_back(e.v);
      adj[t][e.v].push_back(e.u);
    }

  Coloring c;
  c.k = k;
  c.colors.assign(g.d, -1);
  for (Vertex v = 0; v < g.d; v++) {
    for (int t = 0; t < k; t++)
      if (adj[t][v].size() > 1) { c.colors[v] = t; break; }
    if (c.colors[v] >= 0) continue;
    // leaf everywhere: first tree whose covering neighbor is internal
    for (int t = 0; t < k && c.colors[v] < 0; t++) {
      Vertex u = adj[t][v][0];
      if (adj[t][u].size() > 1) c.colors[v] = t;
    }
    if (c.colors[v] < 0)
      throw Error(ErrorCode::InvalidCertificate, "vertex covered by no internal vertex");
  }
  try {
    validate(c, g.d);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidCertificate,
                "certificate does not induce a total k-coloring of D");
  }
  return c;
}

std::optional<Vertex> uniform_dominating_obstruction(const SplitGraph& g,
                                                     int k) {
  if (g.i == 0) return std::nullopt;
  for (const auto& nb : g.cross_adj)
    if (static_cast<int>(nb.size()) != k) return std::nullopt;
  for (Vertex v = 0; v < g.d; v++) {
    bool dominating = true;
    for (const auto& nb : g.cross_adj)
      if (!std::binary_search(nb.begin(), nb.end(), v)) {
        dominating = false;
        break;
      }
    if (dominating) return v;
  }
  return std::nullopt;
}

}  // namespace cistkit
