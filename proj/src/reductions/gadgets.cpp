#include "reductions/gadgets.hpp"

#include <numeric>

#include "core/model.hpp"

namespace cistkit {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw Error(ErrorCode::WitnessInvalid, msg);
}

}  // namespace

BicpGadget build_bicp_gadget(const Hypergraph& h) {
  validate(h);
  BicpGadget gadget;
  const int n = h.n;
  gadget.h_prime.n = 2 * n;
  gadget.copy1.resize(n);
  gadget.copy2.resize(n);
  std::iota(gadget.copy1.begin(), gadget.copy1.end(), 0);
  std::iota(gadget.copy2.begin(), gadget.copy2.end(), n);
  for (const auto& e : h.edges) gadget.h_prime.edges.push_back(e);
  for (const auto& e : h.edges) {
    VertexSet shifted;
    for (Vertex v : e) shifted.push_back(v + n);
    gadget.h_prime.edges.push_back(std::move(shifted));
  }
  VertexSet all(2 * n);
  std::iota(all.begin(), all.end(), 0);
  gadget.h_prime.edges.push_back(std::move(all));
  return gadget;
}

CistGadget build_cist_gadget(const Hypergraph& h) {
  validate(h, /*require_coverage=*/true);
  CistGadget gadget;
  const int n = h.n, m = h.m();
  gadget.g_prime.d = 2 * n;
  gadget.g_prime.i = 2 * m;
  for (const auto& e : h.edges) gadget.g_prime.cross_adj.push_back(e);
  for (const auto& e : h.edges) {
    VertexSet shifted;
    for (Vertex v : e) shifted.push_back(v + n);
    gadget.g_prime.cross_adj.push_back(std::move(shifted));
  }
  // copy maps over V(G(H)) = D followed by I
  gadget.copy1.resize(n + m);
  gadget.copy2.resize(n + m);
  for (int v = 0; v < n; v++) {
    gadget.copy1[v] = v;
    gadget.copy2[v] = v + n;
  }
  for (int j = 0; j < m; j++) {
    gadget.copy1[n + j] = 2 * n + j;
    gadget.copy2[n + j] = 2 * n + m + j;
  }
  validate(gadget.g_prime);
  return gadget;
}

Coloring map_bicp_witness_forward(const BicpGadget& gadget, const Hypergraph& h,
                                  const Coloring& c) {
  require(is_panchromatic(h, c), "coloring is not panchromatic on H");
  Coloring out;
  out.k = c.k;
  out.colors.resize(2 * h.n);
  for (Vertex v = 0; v < h.n; v++) {
    out.colors[gadget.copy1[v]] = c.colors[v];
    out.colors[gadget.copy2[v]] = c.colors[v];
  }
  require(is_bipanchromatic(gadget.h_prime, out),
          "duplicated coloring is not bipanchromatic on H'");
  return out;
}

Coloring map_bicp_witness_backward(const BicpGadget& gadget,
                                   const Hypergraph& h,
                                   const Coloring& c_prime) {
  require(is_bipanchromatic(gadget.h_prime, c_prime),
          "coloring is not bipanchromatic on H'");
  Coloring out;
  out.k = c_prime.k;
  out.colors.resize(h.n);
  for (Vertex v = 0; v < h.n; v++)
    out.colors[v] = c_prime.colors[gadget.copy1[v]];
  require(is_panchromatic(h, out), "restriction is not panchromatic on H");
  return out;
}

CistCertificate map_cist_witness_forward(const CistGadget& gadget,
                                         const Hypergraph& h,
                                         const Coloring& c) {
  if (c.k < 2)
    throw Error(ErrorCode::PreconditionViolated,
                "reduction is stated for k >= 2");
  require(is_panchromatic(h, c), "coloring is not panchromatic on H");
  Coloring doubled;
  doubled.k = c.k;
  doubled.colors.resize(2 * h.n);
  for (Vertex v = 0; v < h.n; v++) {
    doubled.colors[v] = c.colors[v];
    doubled.colors[v + h.n] = c.colors[v];
  }
  return cist_from_bipanchromatic(gadget.g_prime, doubled);
}

Coloring map_cist_witness_backward(const CistGadget& gadget,
                                   const Hypergraph& h,
                                   const CistCertificate& cert) {
  Coloring on_d_prime = cist_to_coloring(gadget.g_prime, cert);
  Coloring out;
  out.k = on_d_prime.k;
  out.colors.resize(h.n);
  for (Vertex v = 0; v < h.n; v++) out.colors[v] = on_d_prime.colors[v];
  require(is_panchromatic(h, out),
          "copy-1 restriction is not panchromatic on H");
  return out;
}

}  // namespace cistkit
