#pragma once

#include <string>

#include "core/types.hpp"

namespace cistkit {

// Line-oriented text formats. Comment lines start with 'c'; tokens are
// separated by arbitrary whitespace.
//   .hg : "p hg <n> <m>" then m hyperedge lines
//   .sg : "p sg <d> <i>" then i D-neighborhood lines
//   .col: "s col <k>" then n "<vertex> <color>" lines
Hypergraph parse_hypergraph(const std::string& text);
SplitGraph parse_split_graph(const std::string& text);
Coloring parse_coloring(const std::string& text);

std::string write_hypergraph(const Hypergraph& h);
std::string write_split_graph(const SplitGraph& g);
std::string write_coloring(const Coloring& c);

// trees.json: { "k": int, "trees": [ [ [u,v], ... ], ... ] }
CistCertificate parse_certificate(const std::string& json_text);
std::string write_certificate(const CistCertificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cistkit
