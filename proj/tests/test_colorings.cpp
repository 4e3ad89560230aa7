#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorings/brute.hpp"
#include "colorings/solver.hpp"
#include "harness/experiment.hpp"
#include "support/fixtures.hpp"

using namespace cistkit;
using testsupport::example_hg;
using testsupport::make_hg;

TEST_CASE("panchromatic and bipanchromatic predicates") {
  Hypergraph h = make_hg(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(is_panchromatic(h, Coloring{3, {0, 1, 2, 2}}));
  CHECK(!is_panchromatic(h, Coloring{3, {0, 1, 2, 1}}));  // edge 1 misses 2
  CHECK(is_bipanchromatic(h, Coloring{2, {0, 1, 1, 0}}));
  // panchromatic but color 2 is unique
  CHECK(!is_bipanchromatic(h, Coloring{3, {0, 1, 2, 2}}));

  ColoringStats st = coloring_stats(Coloring{3, {0, 1, 2, 2}});
  CHECK(st.class_sizes == std::vector<int>{1, 1, 2});
  CHECK(st.unique_colors == std::vector<Color>{0, 1});
}

TEST_CASE("existence solvers on the worked examples") {
  Hypergraph h = make_hg(4, {{0, 1, 2}, {0, 1, 3}});
  auto w3 = exists_panchromatic(h, 3);
  REQUIRE(w3.has_value());
  CHECK(is_panchromatic(h, *w3));
  CHECK(!exists_panchromatic(h, 4));  // edges have only 3 vertices
  CHECK(exists_panchromatic(h, 1).has_value());  // k=1 always works

  auto b2 = exists_bipanchromatic(h, 2);
  REQUIRE(b2.has_value());
  CHECK(is_bipanchromatic(h, *b2));
  CHECK(!exists_bipanchromatic(h, 3));
}

TEST_CASE("coloring numbers on the worked examples") {
  Hypergraph h = make_hg(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(panchromatic_number(h).value == 3);
  CHECK(bipanchromatic_number(h).value == 2);

  Hypergraph disjoint = make_hg(4, {{0, 1}, {2, 3}});
  CHECK(bipanchromatic_number(disjoint).value == 2);
  CHECK(min_unique_colors(disjoint, 2).value == 0);

  CHECK_THROWS_AS(bipanchromatic_number(make_hg(1, {{0}})), Error);
}

TEST_CASE("six-vertex running example: chi_p 3, chi_p2 2, one unique color") {
  Hypergraph h = example_hg();
  NumberResult pan = panchromatic_number(h);
  CHECK(pan.value == 3);
  NumberResult bipan = bipanchromatic_number(h);
  CHECK(bipan.value == 2);
  NumberResult al = min_unique_colors(h, 3);
  CHECK(al.value == 1);
  // the unique color sits on vertex 5, the one in every hyperedge
  ColoringStats st = coloring_stats(al.witness);
  REQUIRE(st.unique_colors.size() == 1);
  Color u = st.unique_colors[0];
  int holder = -1;
  for (int v = 0; v < h.n; v++)
    if (al.witness.colors[v] == u) holder = v;
  CHECK(holder == 5);
}

TEST_CASE("min_unique_colors infeasible for too many colors") {
  Hypergraph h = make_hg(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK_THROWS_AS(min_unique_colors(h, 4), Error);
}

TEST_CASE("min_unique witness is the lexicographically smallest attaining") {
  for (int s = 0; s < 30; s++) {
    Hypergraph h = random_hypergraph(5, 4, derive_seed(11, 5, 4, s));
    int k = panchromatic_number(h).value;
    if (k < 2) continue;
    NumberResult al = min_unique_colors(h, k);
    // exhaustive scan in lexicographic order; first coloring attaining alpha
    std::vector<Color> colors(h.n, 0);
    std::optional<std::vector<Color>> first;
    while (true) {
      Coloring c{k, colors};
      bool total = true;
      std::vector<char> used(k, 0);
      for (Color col : colors) used[col] = 1;
      for (int col = 0; col < k; col++) total = total && used[col];
      if (total && is_panchromatic(h, c)) {
        int uniq = 0;
        for (int sz : c.class_sizes()) uniq += sz == 1;
        if (uniq == al.value) {
          first = colors;
          break;
        }
      }
      int pos = h.n - 1;
      while (pos >= 0 && colors[pos] == k - 1) colors[pos--] = 0;
      if (pos < 0) break;
      colors[pos]++;
    }
    REQUIRE(first.has_value());
    CHECK(al.witness.colors == *first);
  }
}

TEST_CASE("oracle equivalence on seeded instances") {
  int done = 0;
  for (int n = 3; n <= 6; n++)
    for (int m = 2; m <= 6; m++)
      for (int s = 0; s < 8; s++) {
        Hypergraph h = random_hypergraph(n, m, derive_seed(5, n, m, s));
        NumberResult pan = panchromatic_number(h);
        CHECK(pan.value == brute_panchromatic_number(h));
        CHECK(is_panchromatic(h, pan.witness));
        if (n >= 2) {
          NumberResult bipan = bipanchromatic_number(h);
          CHECK(bipan.value == brute_bipanchromatic_number(h));
          CHECK(is_bipanchromatic(h, bipan.witness));
        }
        NumberResult al = min_unique_colors(h, pan.value);
        CHECK(al.value == brute_min_unique_colors(h, pan.value));
        done++;
      }
  CHECK(done == 4 * 5 * 8);
}

TEST_CASE("per-k existence agrees with enumeration") {
  for (int s = 0; s < 20; s++) {
    Hypergraph h = random_hypergraph(4, 3, derive_seed(21, 4, 3, s));
    for (int k = 1; k <= 4; k++) {
      CHECK(exists_panchromatic(h, k).has_value() ==
            brute_exists_panchromatic(h, k).has_value());
      CHECK(exists_bipanchromatic(h, k).has_value() ==
            brute_exists_bipanchromatic(h, k).has_value());
    }
  }
}

TEST_CASE("solvers are deterministic") {
  Hypergraph h = example_hg();
  CHECK(panchromatic_number(h).witness == panchromatic_number(h).witness);
  CHECK(bipanchromatic_number(h).witness == bipanchromatic_number(h).witness);
  CHECK(min_unique_colors(h, 3).witness == min_unique_colors(h, 3).witness);
}

TEST_CASE("group_unique_colors produces a bipanchromatic coloring") {
  for (int s = 0; s < 40; s++) {
    Hypergraph h = random_hypergraph(6, 5, derive_seed(31, 6, 5, s));
    NumberResult pan = panchromatic_number(h);
    NumberResult al = min_unique_colors(h, pan.value);
    int target = pan.value - (al.value + 1) / 2;
    if (target < 1) continue;
    Coloring g = group_unique_colors(h, al.witness);
    CHECK(g.k == target);
    CHECK(is_panchromatic(h, g));
    if (al.value == 0 || target < pan.value) {
      // grouping removed all unique colors
      CHECK(coloring_stats(g).unique_colors.empty());
      CHECK(is_bipanchromatic(h, g));
    }
  }
}
