#include "colorings/brute.hpp"

#include "core/model.hpp"

namespace cistkit {

namespace {

// Calls fn for every total map {0..n-1} -> {0..k-1}; stops early on true.
template <typename Fn>
bool for_each_assignment(int n, int k, Fn&& fn) {
  std::vector<Color> colors(n, 0);
  while (true) {
    if (fn(colors)) return true;
    int pos = n - 1;
    while (pos >= 0 && colors[pos] == k - 1) colors[pos--] = 0;
    if (pos < 0) return false;
    colors[pos]++;
  }
}

bool uses_all_colors(const std::vector<Color>& colors, int k) {
  std::vector<char> used(k, 0);
  for (Color c : colors) used[c] = 1;
  for (int c = 0; c < k; c++)
    if (!used[c]) return false;
  return true;
}

}  // namespace

std::optional<Coloring> brute_exists_panchromatic(const Hypergraph& h, int k) {
  validate(h);
  std::optional<Coloring> out;
  for_each_assignment(h.n, k, [&](const std::vector<Color>& colors) {
    if (!uses_all_colors(colors, k)) return false;
    Coloring c{k, colors};
    if (!is_panchromatic(h, c)) return false;
    out = c;
    return true;
  });
  return out;
}

std::optional<Coloring> brute_exists_bipanchromatic(const Hypergraph& h,
                                                    int k) {
  validate(h);
  std::optional<Coloring> out;
  for_each_assignment(h.n, k, [&](const std::vector<Color>& colors) {
    if (!uses_all_colors(colors, k)) return false;
    Coloring c{k, colors};
    if (!is_bipanchromatic(h, c)) return false;
    out = c;
    return true;
  });
  return out;
}

namespace {

// Pigeonhole: a hyperedge with fewer than k vertices cannot carry k colors.
int min_edge_size(const Hypergraph& h) {
  int s = h.n;
  for (const auto& e : h.edges) s = std::min(s, static_cast<int>(e.size()));
  return s;
}

}  // namespace

int brute_panchromatic_number(const Hypergraph& h) {
  int best = 0;
  for (int k = 1; k <= min_edge_size(h); k++)
    if (brute_exists_panchromatic(h, k)) best = k;
  return best;
}

int brute_bipanchromatic_number(const Hypergraph& h) {
  int best = 0;
  for (int k = 1; k <= std::min(min_edge_size(h), h.n / 2); k++)
    if (brute_exists_bipanchromatic(h, k)) best = k;
  return best;
}

int brute_min_unique_colors(const Hypergraph& h, int k) {
  validate(h);
  int best = k + 1;
  for_each_assignment(h.n, k, [&](const std::vector<Color>& colors) {
    if (!uses_all_colors(colors, k)) return false;
    Coloring c{k, colors};
    if (!is_panchromatic(h, c)) return false;
    int uniques = 0;
    for (int sz : c.class_sizes()) uniques += sz == 1;
    best = std::min(best, uniques);
    return false;
  });
  if (best > k)
    throw Error(ErrorCode::Infeasible, "no panchromatic k-coloring exists");
  return best;
}

}  // namespace cistkit
