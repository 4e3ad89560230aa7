#include "core/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/model.hpp"

namespace cistkit {

namespace {

// Splits into content lines, dropping comments and blank lines.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == 'c') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<long long> tokens_of(const std::string& line) {
  std::vector<long long> out;
  std::istringstream in(line);
  long long x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) {
    in.clear();
    std::string junk;
    if (in >> junk)
      throw Error(ErrorCode::ParseError, "unexpected token '" + junk + "'");
  }
  return out;
}

void expect_header(const std::string& line, const std::string& tag,
                   const std::string& kind, long long& a, long long& b) {
  std::istringstream in(line);
  std::string t, k;
  if (!(in >> t >> k >> a >> b) || t != tag || k != kind)
    throw Error(ErrorCode::ParseError,
                "expected '" + tag + " " + kind + " <..> <..>' header");
}

VertexSet parse_vertex_set(const std::string& line) {
  auto toks = tokens_of(line);
  VertexSet s;
  for (long long t : toks) s.push_back(static_cast<Vertex>(t));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty hypergraph file");
  long long n, m;
  expect_header(lines[0], "p", "hg", n, m);
  if (static_cast<long long>(lines.size()) != m + 1)
    throw Error(ErrorCode::ParseError, "hyperedge line count mismatch");
  Hypergraph h;
  h.n = static_cast<int>(n);
  for (long long j = 1; j <= m; j++) h.edges.push_back(parse_vertex_set(lines[j]));
  validate(h);
  return h;
}

SplitGraph parse_split_graph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty split graph file");
  long long d, i;
  expect_header(lines[0], "p", "sg", d, i);
  if (static_cast<long long>(lines.size()) != i + 1)
    throw Error(ErrorCode::ParseError, "I-vertex line count mismatch");
  SplitGraph g;
  g.d = static_cast<int>(d);
  g.i = static_cast<int>(i);
  for (long long j = 1; j <= i; j++)
    g.cross_adj.push_back(parse_vertex_set(lines[j]));
  validate(g);
  return g;
}

Coloring parse_coloring(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty coloring file");
  std::istringstream in(lines[0]);
  std::string t, kind;
  long long k;
  if (!(in >> t >> kind >> k) || t != "s" || kind != "col")
    throw Error(ErrorCode::ParseError, "expected 's col <k>' header");
  Coloring c;
  c.k = static_cast<int>(k);
  c.colors.assign(lines.size() - 1, -1);
  for (size_t j = 1; j < lines.size(); j++) {
    auto toks = tokens_of(lines[j]);
    if (toks.size() != 2)
      throw Error(ErrorCode::ParseError, "expected '<vertex> <color>' line");
    long long v = toks[0], col = toks[1];
    if (v < 0 || v >= static_cast<long long>(c.colors.size()) || c.colors[v] != -1)
      throw Error(ErrorCode::ParseError, "bad or repeated vertex id");
    c.colors[v] = static_cast<Color>(col);
  }
  validate(c, c.n());
  return c;
}

std::string write_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hg " << h.n << " " << h.m() << "\n";
  for (const auto& e : h.edges) {
    for (size_t j = 0; j < e.size(); j++) out << (j ? " " : "") << e[j];
    out << "\n";
  }
  return out.str();
}

std::string write_split_graph(const SplitGraph& g) {
  std::ostringstream out;
  out << "p sg " << g.d << " " << g.i << "\n";
  for (const auto& nb : g.cross_adj) {
    for (size_t j = 0; j < nb.size(); j++) out << (j ? " " : "") << nb[j];
    out << "\n";
  }
  return out.str();
}

std::string write_coloring(const Coloring& c) {
  std::ostringstream out;
  out << "s col " << c.k << "\n";
  for (int v = 0; v < c.n(); v++) out << v << " " << c.colors[v] << "\n";
  return out.str();
}

CistCertificate parse_certificate(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("trees"))
    throw Error(ErrorCode::ParseError, "expected {\"k\":..,\"trees\":[..]}");
  CistCertificate cert;
  for (const auto& jt : j["trees"]) {
    SpanningTree t;
    for (const auto& je : jt) {
      if (!je.is_array() || je.size() != 2)
        throw Error(ErrorCode::ParseError, "edge must be a [u,v] pair");
      t.edges.emplace_back(je[0].get<int>(), je[1].get<int>());
    }
    cert.trees.push_back(std::move(t));
  }
  if (j["k"].get<int>() != cert.k())
    throw Error(ErrorCode::ParseError, "k does not match tree count");
  return cert;
}

std::string write_certificate(const CistCertificate& cert) {
  nlohmann::json j;
  j["k"] = cert.k();
  j["trees"] = nlohmann::json::array();
  for (const auto& t : cert.trees) {
    nlohmann::json jt = nlohmann::json::array();
    for (const auto& e : t.edges) jt.push_back({e.u, e.v});
    j["trees"].push_back(jt);
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

}  // namespace cistkit
