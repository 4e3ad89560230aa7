#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cist/construct.hpp"
#include "cist/exact.hpp"
#include "cist/verify.hpp"
#include "colorings/solver.hpp"
#include "core/model.hpp"
#include "harness/experiment.hpp"
#include "support/fixtures.hpp"

using namespace cistkit;
using testsupport::make_hg;
using testsupport::make_sg;

namespace {

// The classic pair of completely independent spanning trees of K_4:
// paths 0-1-2-3 and 2-0-3-1.
std::vector<SpanningTree> k4_pair() {
  return {{{Edge(0, 1), Edge(1, 2), Edge(2, 3)}},
          {{Edge(0, 2), Edge(0, 3), Edge(1, 3)}}};
}

// d = 4 with six I-vertices, each adjacent to one vertex of {0,1} and one
// of {2,3}; admits exactly two completely independent spanning trees.
SplitGraph two_class_sg() {
  return make_sg(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("verify_cist accepts the K_4 golden pair") {
  CHECK(verify_cist_clique(4, k4_pair()).ok);

  // the same trees inside a split graph host
  SplitGraph g = make_sg(4, {{0, 1, 2, 3}});
  auto trees = k4_pair();
  trees[0].edges.push_back(Edge(1, 4));
  trees[1].edges.push_back(Edge(0, 4));
  CHECK(verify_cist(g, trees).ok);
}

TEST_CASE("verify_cist rejects each violation with the right reason") {
  SplitGraph g = make_sg(4, {{0, 1, 2, 3}});

  auto trees = k4_pair();
  trees[0].edges.push_back(Edge(1, 4));
  trees[1].edges.push_back(Edge(1, 4));
  VerifyResult r = verify_cist(g, trees);
  CHECK(!r.ok);
  CHECK(r.reason == CistFailure::SharedEdge);
  CHECK(r.edge == Edge(1, 4));

  trees = k4_pair();
  trees[0].edges.push_back(Edge(1, 4));
  trees[1].edges.push_back(Edge(2, 4));  // vertex 2 internal in both trees
  r = verify_cist(g, trees);
  CHECK(!r.ok);
  CHECK(r.reason == CistFailure::DegreeViolation);
  CHECK(r.vertex == 2);

  trees = {{{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(1, 4)}},
           {{Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 3)}}};
  std::swap(trees[0].edges[2], trees[0].edges[3]);
  CHECK(verify_cist(g, trees).ok);  // sanity: order does not matter

  // cycle instead of a tree
  trees[0].edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(1, 4)};
  r = verify_cist(g, trees);
  CHECK(!r.ok);
  CHECK(r.reason == CistFailure::NotTree);

  // wrong edge count: spanning requires |V| - 1 edges
  trees[0].edges = {Edge(0, 1), Edge(1, 2), Edge(2, 3)};
  r = verify_cist(g, trees);
  CHECK(!r.ok);
  CHECK(r.reason == CistFailure::NotSpanning);

  // I-I edges do not exist in a split graph
  SplitGraph g2 = make_sg(4, {{0, 1, 2}, {0, 1, 3}});
  trees = {{{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(1, 4), Edge(1, 5)}},
           {{Edge(0, 2), Edge(0, 3), Edge(1, 3), Edge(0, 4), Edge(4, 5)}}};
  r = verify_cist(g2, trees);
  CHECK(!r.ok);
  CHECK(r.reason == CistFailure::EdgeNotInHost);
  CHECK(r.edge == Edge(4, 5));
}

TEST_CASE("verify_cist_partition on the two-class example") {
  SplitGraph g = two_class_sg();
  CistPartition p;
  p.classes = {{0, 1, 4, 5, 8}, {2, 3, 6, 7, 9}};
  CHECK(verify_cist_partition(g, p).ok);

  // moving I-vertex 8 across makes it a singleton tree component between
  // the classes (it has no neighbor in class 0 anymore... it does: 0)
  CistPartition bad;
  bad.classes = {{0, 4, 5, 8}, {1, 2, 3, 6, 7, 9}};
  PartitionVerifyResult r = verify_cist_partition(g, bad);
  CHECK(!r.ok);

  CistPartition not_partition;
  not_partition.classes = {{0, 1}, {1, 2, 3}};
  CHECK(verify_cist_partition(g, not_partition).reason ==
        PartitionFailure::NotPartition);
}

TEST_CASE("clique_cist builds verified trees") {
  CistCertificate two = clique_cist(4, {{0, 1}, {2, 3}});
  CHECK(two.k() == 2);
  CHECK(verify_cist_clique(4, two.trees).ok);

  CistCertificate one = clique_cist(3, {{0, 1, 2}});
  CHECK(one.k() == 1);
  CHECK(verify_cist_clique(3, one.trees).ok);

  // larger mixes, classes of uneven size
  CistCertificate c = clique_cist(7, {{0, 1, 6}, {2, 3}, {4, 5}});
  CHECK(c.k() == 3);
  CHECK(verify_cist_clique(7, c.trees).ok);
  for (int t = 0; t < 3; t++)  // class members are internal in their tree
    CHECK(c.trees[t].edges.size() == 6);

  CHECK_THROWS_AS(clique_cist(4, {{0, 1}, {1, 2, 3}}), Error);  // overlap
  CHECK_THROWS_AS(clique_cist(4, {{0, 1}, {2}}), Error);        // singleton
  CHECK_THROWS_AS(clique_cist(5, {{0, 1}, {2, 3}}), Error);     // not covering
  CHECK_THROWS_AS(clique_cist(3, {{0}, {1, 2}}), Error);
}

TEST_CASE("clique_cist over random class partitions") {
  for (int s = 0; s < 60; s++) {
    std::uint64_t seed = derive_seed(42, 8, 0, s);
    int d = 4 + static_cast<int>(seed % 5);  // 4..8
    int k = 2 + static_cast<int>((seed >> 8) % (d / 2 - 1));
    // deal vertices round-robin, then dump the tail into the last class
    std::vector<VertexSet> classes(k);
    for (int v = 0; v < 2 * k; v++) classes[v % k].push_back(v);
    for (int v = 2 * k; v < d; v++) classes[k - 1].push_back(v);
    CistCertificate c = clique_cist(d, classes);
    CHECK(verify_cist_clique(d, c.trees).ok);
  }
}

TEST_CASE("cist_from_bipanchromatic on the two-class example") {
  SplitGraph g = two_class_sg();
  Coloring c{2, {0, 0, 1, 1}};
  CHECK(is_bipanchromatic(hypergraph_of_split(g), c));
  CistCertificate cert = cist_from_bipanchromatic(g, c);
  CHECK(cert.k() == 2);
  CHECK(verify_cist(g, cert.trees).ok);

  CHECK_THROWS_AS(cist_from_bipanchromatic(g, Coloring{2, {0, 1, 0, 1}}),
                  Error);  // panchromatic but classes not aligned? verify code
}

TEST_CASE("cist_from_bipanchromatic on seeded instances") {
  int built = 0;
  for (int s = 0; s < 60; s++) {
    Hypergraph h = random_hypergraph(5, 4, derive_seed(77, 5, 4, s));
    NumberResult bipan = bipanchromatic_number(h);
    if (bipan.value < 2) continue;
    SplitGraph g = split_of_hypergraph(h);
    CistCertificate cert = cist_from_bipanchromatic(g, bipan.witness);
    CHECK(cert.k() == bipan.value);
    CHECK(verify_cist(g, cert.trees).ok);
    // and back: the certificate recolors D panchromatically
    Coloring back = cist_to_coloring(g, cert);
    CHECK(is_panchromatic(hypergraph_of_split(g), back));
    built++;
  }
  CHECK(built >= 20);
}

TEST_CASE("cist_from_panchromatic groups unique colors first") {
  Hypergraph h = testsupport::example_hg();  // chi_p 3, alpha 1
  SplitGraph g = split_of_hypergraph(h);
  NumberResult al = min_unique_colors(h, 3);
  CistCertificate cert = cist_from_panchromatic(g, al.witness);
  CHECK(cert.k() == 2);  // 3 - ceil(1/2)
  CHECK(verify_cist(g, cert.trees).ok);
}

TEST_CASE("cist_with_unique_color on the favorable configuration") {
  // x_D = 0 carries the unique color; y = I-vertex {0,2,3} has degree 3 > 2
  // and two neighbors of the non-unique color.
  SplitGraph g = make_sg(4, {{0, 2, 3}, {0, 1}, {0, 1, 2, 3}});
  Coloring c{2, {0, 1, 1, 1}};
  CHECK(is_panchromatic(hypergraph_of_split(g), c));
  auto cert = cist_with_unique_color(g, c);
  REQUIRE(cert.has_value());
  CHECK(cert->k() == 2);
  CHECK(verify_cist(g, cert->trees).ok);

  // hypothesis fails: no I-vertex of degree > 3 sees two vertices of the
  // second non-unique color
  SplitGraph small = make_sg(5, {{0, 1, 2, 4}, {0, 1, 3}, {0, 2, 4}});
  Coloring c3{3, {0, 1, 1, 2, 2}};
  CHECK(is_panchromatic(hypergraph_of_split(small), c3));
  CHECK(!cist_with_unique_color(small, c3).has_value());

  // wrong number of unique colors
  CHECK_THROWS_AS(cist_with_unique_color(g, Coloring{2, {0, 0, 1, 1}}), Error);
  // uniform corresponding hypergraph is excluded by hypothesis
  SplitGraph uni = make_sg(3, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(cist_with_unique_color(uni, Coloring{2, {0, 1, 1}}), Error);
}

TEST_CASE("cist_to_coloring rejects invalid certificates") {
  SplitGraph g = two_class_sg();
  CistCertificate junk;
  junk.trees.resize(2);
  junk.trees[0].edges = {Edge(0, 1)};
  junk.trees[1].edges = {Edge(2, 3)};
  CHECK_THROWS_AS(cist_to_coloring(g, junk), Error);
}

TEST_CASE("uniform dominating vertex obstructs k trees") {
  SplitGraph g = make_sg(3, {{0, 1}, {0, 2}});  // 2-uniform, 0 dominates I
  auto obs = uniform_dominating_obstruction(g, 2);
  REQUIRE(obs.has_value());
  CHECK(*obs == 0);
  CHECK(max_cist_exact(g) < 2);

  // not uniform -> no obstruction claimed
  CHECK(!uniform_dominating_obstruction(make_sg(3, {{0, 1}, {0, 1, 2}}), 2)
             .has_value());
  // uniform but no dominating vertex
  CHECK(!uniform_dominating_obstruction(
             make_sg(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), 2)
             .has_value());
}

TEST_CASE("max_cist_exact on frozen boundary instances") {
  // M equals the bipanchromatic number of the corresponding hypergraph
  SplitGraph lo = make_sg(4, {{0, 1, 2, 3}});
  CHECK(bipanchromatic_number(hypergraph_of_split(lo)).value == 2);
  CHECK(max_cist_exact(lo) == 2);

  // and the +1 end of the sandwich is attained
  SplitGraph hi = make_sg(4, {{0, 3}, {0, 1, 2, 3}, {0, 2}, {0, 1}});
  CHECK(bipanchromatic_number(hypergraph_of_split(hi)).value == 1);
  CHECK(max_cist_exact(hi) == 2);

  // k_cap truncates
  CHECK(max_cist_exact(lo, 1) == 1);

  SplitGraph big = make_sg(8, {{0, 1, 2, 3, 4, 5, 6, 7},
                               {0, 1, 2, 3, 4, 5, 6, 7},
                               {0, 1, 2, 3, 4, 5, 6, 7},
                               {0, 1, 2, 3, 4, 5, 6, 7},
                               {0, 1, 2, 3, 4, 5, 6, 7},
                               {0, 1, 2, 3, 4, 5, 6, 7},
                               {0, 1, 2, 3, 4, 5, 6, 7}});
  CHECK_THROWS_AS(max_cist_exact(big), Error);  // 15 vertices
}

TEST_CASE("tree-level search agrees with the partition oracle") {
  for (int s = 0; s < 25; s++) {
    Hypergraph h = random_hypergraph(5, 3, derive_seed(90, 5, 3, s));
    SplitGraph g = split_of_hypergraph(h);
    if (g.vertex_count() > 10) continue;
    int mx = max_cist_exact(g);
    for (int k = 2; k <= 3; k++) {
      auto cert = cist_search_trees(g, k);
      CHECK(cert.has_value() == (mx >= k));
      if (cert) CHECK(verify_cist(g, cert->trees).ok);
    }
  }
}

TEST_CASE("cist_report is coherent") {
  for (int s = 0; s < 15; s++) {
    Hypergraph h = random_hypergraph(5, 4, derive_seed(101, 5, 4, s));
    SplitGraph g = split_of_hypergraph(h);
    CistReport r = cist_report(g);
    CHECK(r.lower_bound >= 1);
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(r.certificate.k() == r.lower_bound);
    CHECK(verify_cist(g, r.certificate.trees).ok);
    if (g.vertex_count() <= 14) {
      REQUIRE(r.max_cist.has_value());
      CHECK(r.lower_bound <= *r.max_cist);
      CHECK(*r.max_cist <= r.upper_bound);
    }
  }
}
