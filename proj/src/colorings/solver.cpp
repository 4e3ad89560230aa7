#include "colorings/solver.hpp"

#include <bit>
#include <numeric>

#include "core/model.hpp"

namespace cistkit {

namespace {

constexpr int kMaxVertices = 63;

void check_solver_input(const Hypergraph& h, int k) {
  validate(h);
  if (h.n > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "solver supports at most 63 vertices");
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  if (h.m() == 0)
    throw Error(ErrorCode::PreconditionViolated, "hypergraph has no hyperedges");
}

// Shared backtracking state. Vertices are colored in a fixed order with
// canonical symmetry breaking: a vertex may open at most one new color.
struct Search {
  const Hypergraph& h;
  int k;
  std::vector<int> order;
  std::vector<std::vector<int>> edges_of;  // vertex -> incident edge indices
  std::vector<std::uint64_t> missing;      // edge -> colors not yet present
  std::vector<int> remaining;              // edge -> uncolored members
  std::vector<Color> colors;
  std::vector<int> count;                  // color -> class size so far
  int used = 0;

  Search(const Hypergraph& hg, int kk, bool degree_order) : h(hg), k(kk) {
    order.resize(h.n);
    std::iota(order.begin(), order.end(), 0);
    edges_of.resize(h.n);
    for (int e = 0; e < h.m(); e++)
      for (Vertex v : h.edges[e]) edges_of[v].push_back(e);
    if (degree_order) {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return edges_of[a].size() > edges_of[b].size();
      });
    }
    missing.assign(h.m(), (std::uint64_t{1} << k) - 1);
    remaining.resize(h.m());
    for (int e = 0; e < h.m(); e++)
      remaining[e] = static_cast<int>(h.edges[e].size());
    colors.assign(h.n, -1);
    count.assign(k, 0);
  }

  bool assign(Vertex v, Color c) {
    colors[v] = c;
    count[c]++;
    if (count[c] == 1) used++;
    bool ok = true;
    for (int e : edges_of[v]) {
      missing[e] &= ~(std::uint64_t{1} << c);
      remaining[e]--;
      if (std::popcount(missing[e]) > remaining[e]) ok = false;
    }
    return ok;
  }

  void unassign(Vertex v, Color c) {
    for (int e : edges_of[v]) {
      remaining[e]++;
      bool present = false;
      for (Vertex w : h.edges[e])
        if (w != v && colors[w] == c) { present = true; break; }
      if (!present) missing[e] |= std::uint64_t{1} << c;
    }
    count[c]--;
    if (count[c] == 0) used--;
    colors[v] = -1;
  }

  Coloring result() const { return Coloring{k, colors}; }
};

bool search_panchromatic(Search& s, int pos, bool require_pairs) {
  const int n = s.h.n;
  if (pos == n) {
    if (s.used != s.k) return false;
    if (require_pairs)
      for (int c = 0; c < s.k; c++)
        if (s.count[c] < 2) return false;
    return true;
  }
  int left = n - pos;
  if (s.k - s.used > left) return false;
  if (require_pairs) {
    int deficit = 0;
    for (int c = 0; c < s.k; c++) deficit += std::max(0, 2 - s.count[c]);
    if (deficit > left) return false;
  }
  Vertex v = s.order[pos];
  int cmax = std::min(s.k - 1, s.used);
  for (Color c = 0; c <= cmax; c++) {
    bool ok = s.assign(v, c);
    if (ok && search_panchromatic(s, pos + 1, require_pairs)) return true;
    s.unassign(v, c);
  }
  return false;
}

// Lower bound on the final number of unique colors from a partial state:
// each remaining vertex can close at most one unit of class-size deficit.
int unique_lower_bound(const Search& s, int left) {
  int ones = 0, zeros = 0;
  for (int c = 0; c < s.k; c++) {
    if (s.count[c] == 0) zeros++;
    else if (s.count[c] == 1) ones++;
  }
  int deficient = ones + zeros;
  int budget = left;
  int fixable = std::min(ones, budget);
  budget -= fixable;
  fixable += std::min(zeros, budget / 2);
  return deficient - fixable;
}

void search_min_unique(Search& s, int pos, int& best,
                       std::vector<Color>& best_colors) {
  const int n = s.h.n;
  if (pos == n) {
    if (s.used != s.k) return;
    int uniques = 0;
    for (int c = 0; c < s.k; c++) uniques += s.count[c] == 1;
    if (uniques < best) {
      best = uniques;
      best_colors = s.colors;
    }
    return;
  }
  int left = n - pos;
  if (s.k - s.used > left) return;
  if (unique_lower_bound(s, left) >= best) return;
  Vertex v = s.order[pos];
  int cmax = std::min(s.k - 1, s.used);
  for (Color c = 0; c <= cmax; c++) {
    bool ok = s.assign(v, c);
    if (ok) search_min_unique(s, pos + 1, best, best_colors);
    s.unassign(v, c);
  }
}

int min_edge_size(const Hypergraph& h) {
  size_t sz = h.edges[0].size();
  for (const auto& e : h.edges) sz = std::min(sz, e.size());
  return static_cast<int>(sz);
}

}  // namespace

ColoringStats coloring_stats(const Coloring& c) {
  ColoringStats s;
  s.k = c.k;
  s.class_sizes = c.class_sizes();
  for (Color col = 0; col < c.k; col++)
    if (s.class_sizes[col] == 1) s.unique_colors.push_back(col);
  return s;
}

bool is_panchromatic(const Hypergraph& h, const Coloring& c) {
  validate(c, h.n);
  for (const auto& e : h.edges) {
    std::uint64_t seen = 0;
    for (Vertex v : e) seen |= std::uint64_t{1} << c.colors[v];
    if (seen != (std::uint64_t{1} << c.k) - 1) return false;
  }
  return true;
}

bool is_bipanchromatic(const Hypergraph& h, const Coloring& c) {
  if (!is_panchromatic(h, c)) return false;
  for (int sz : c.class_sizes())
    if (sz < 2) return false;
  return true;
}

std::optional<Coloring> exists_panchromatic(const Hypergraph& h, int k) {
  check_solver_input(h, k);
  if (k > h.n || k > min_edge_size(h)) return std::nullopt;
  Search s(h, k, /*degree_order=*/true);
  if (search_panchromatic(s, 0, /*require_pairs=*/false)) return s.result();
  return std::nullopt;
}

std::optional<Coloring> exists_bipanchromatic(const Hypergraph& h, int k) {
  check_solver_input(h, k);
  if (2 * k > h.n || k > min_edge_size(h)) return std::nullopt;
  Search s(h, k, /*degree_order=*/true);
  if (search_panchromatic(s, 0, /*require_pairs=*/true)) return s.result();
  return std::nullopt;
}

NumberResult panchromatic_number(const Hypergraph& h) {
  check_solver_input(h, 1);
  for (int k = std::min(h.n, min_edge_size(h)); k >= 1; k--)
    if (auto w = exists_panchromatic(h, k)) return {k, *w};
  throw Error(ErrorCode::InternalVerification, "k=1 coloring must exist");
}

NumberResult bipanchromatic_number(const Hypergraph& h) {
  check_solver_input(h, 1);
  if (h.n < 2)
    throw Error(ErrorCode::TooFewVertices, "no color can appear twice");
  int chi_p = panchromatic_number(h).value;
  for (int k = std::min(chi_p, h.n / 2); k >= 1; k--)
    if (auto w = exists_bipanchromatic(h, k)) return {k, *w};
  throw Error(ErrorCode::InternalVerification, "k=1 coloring must exist");
}

NumberResult min_unique_colors(const Hypergraph& h, int k) {
  check_solver_input(h, k);
  if (!exists_panchromatic(h, k))
    throw Error(ErrorCode::Infeasible, "no panchromatic k-coloring exists");
  // Id order so that the first optimum found is the lexicographically
  // smallest witness.
  Search s(h, k, /*degree_order=*/false);
  int best = k + 1;
  std::vector<Color> best_colors;
  search_min_unique(s, 0, best, best_colors);
  return {best, Coloring{k, best_colors}};
}

Coloring group_unique_colors(const Hypergraph& h, const Coloring& c) {
  if (!is_panchromatic(h, c))
    throw Error(ErrorCode::NotPanchromatic, "input coloring not panchromatic");
  auto sizes = c.class_sizes();
  std::vector<Color> uniques;
  for (Color col = 0; col < c.k; col++)
    if (sizes[col] == 1) uniques.push_back(col);

  std::vector<Color> remap(c.k);
  std::iota(remap.begin(), remap.end(), 0);
  size_t t = 0;
  for (; t + 1 < uniques.size(); t += 2) remap[uniques[t]] = uniques[t + 1];
  if (t < uniques.size()) {
    Color target = -1;
    for (Color col = 0; col < c.k; col++)
      if (sizes[col] >= 2) { target = col; break; }
    if (target >= 0) remap[uniques[t]] = target;
    // else: k == 1 with a single vertex; nothing to fold into.
  }

  std::vector<int> live_count(c.k, 0);
  Coloring out;
  out.colors.resize(c.n());
  for (int v = 0; v < c.n(); v++) live_count[remap[c.colors[v]]]++;
  std::vector<Color> compact(c.k, -1);
  Color next = 0;
  for (Color col = 0; col < c.k; col++)
    if (live_count[col] > 0) compact[col] = next++;
  out.k = next;
  for (int v = 0; v < c.n(); v++) out.colors[v] = compact[remap[c.colors[v]]];
  return out;
}

}  // namespace cistkit
