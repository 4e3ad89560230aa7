#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cistkit {

// Error taxonomy shared by the whole toolkit. Codes map 1:1 onto the C API.
enum class ErrorCode : int {
  Ok = 0,
  ParseError,
  InvalidHypergraph,
  InvalidSplitGraph,
  InvalidColoring,
  IsolatedVertex,
  NotSplit,
  TooFewVertices,
  Infeasible,
  InvalidCertificate,
  InvalidClasses,
  NotBipanchromatic,
  NotPanchromatic,
  PreconditionViolated,
  TooLarge,
  NotConnected,
  WitnessInvalid,
  InternalVerification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

using Vertex = int;
using Color = int;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates

// Unordered vertex pair, stored normalized (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}
  bool operator==(const Edge&) const = default;
  bool operator<(const Edge& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};

// Vertices are dense ids 0..n-1; hyperedges are sorted vertex subsets,
// kept in input order (duplicates allowed).
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;

  bool operator==(const Hypergraph&) const = default;
  int m() const { return static_cast<int>(edges.size()); }
};

// Clique part D = ids 0..d-1, independent part I = ids d..d+i-1.
// Clique edges are implicit; only cross edges are stored.
struct SplitGraph {
  int d = 0;
  int i = 0;
  std::vector<VertexSet> cross_adj;  // per I-vertex, sorted D-neighbors

  bool operator==(const SplitGraph&) const = default;
  int vertex_count() const { return d + i; }
  long long edge_count() const {
    long long cross = 0;
    for (const auto& a : cross_adj) cross += static_cast<long long>(a.size());
    return static_cast<long long>(d) * (d - 1) / 2 + cross;
  }
  bool adjacent(Vertex a, Vertex b) const {
    if (a == b) return false;
    if (a < d && b < d) return true;
    if (a >= d && b >= d) return false;
    Vertex iv = std::max(a, b), dv = std::min(a, b);
    const auto& nb = cross_adj[iv - d];
    return std::binary_search(nb.begin(), nb.end(), dv);
  }
};

// Total map vertex -> color in 0..k-1; every color used at least once.
struct Coloring {
  int k = 0;
  std::vector<Color> colors;

  bool operator==(const Coloring&) const = default;
  int n() const { return static_cast<int>(colors.size()); }
  std::vector<int> class_sizes() const {
    std::vector<int> s(k, 0);
    for (Color c : colors) s[c]++;
    return s;
  }
};

struct SpanningTree {
  std::vector<Edge> edges;
  bool operator==(const SpanningTree&) const = default;
};

struct CistCertificate {
  std::vector<SpanningTree> trees;
  int k() const { return static_cast<int>(trees.size()); }
};

struct CistPartition {
  std::vector<VertexSet> classes;
  int k() const { return static_cast<int>(classes.size()); }
};

}  // namespace cistkit
