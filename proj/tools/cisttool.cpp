// cisttool: command-line front end over the cistkit shared library.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cistkit.h"

namespace {

// 0 success, 2 invalid input, 3 a constructor emitted a certificate that
// failed its own verifier.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct ToolError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(ck_status status) {
  int code = status == CK_INTERNAL_VERIFICATION ? kExitInternal : kExitInvalid;
  std::string msg = ck_last_error();
  if (msg.empty()) msg = ck_status_name(status);
  throw ToolError{code, std::string(ck_status_name(status)) + ": " + msg};
}

void check(ck_status status) {
  if (status != CK_OK) fail(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolError{kExitInvalid, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ToolError{kExitInvalid, "cannot write " + path};
  out << content;
}

// Owns a char* from the C API.
struct CkString {
  char* ptr = nullptr;
  ~CkString() { ck_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct HgHandle {
  ck_hypergraph* h = nullptr;
  ~HgHandle() { ck_hypergraph_free(h); }
};

struct SgHandle {
  ck_splitgraph* g = nullptr;
  ~SgHandle() { ck_splitgraph_free(g); }
};

HgHandle load_hg(const std::string& path) {
  HgHandle h;
  check(ck_hypergraph_parse(slurp(path).c_str(), &h.h));
  return h;
}

SgHandle load_sg(const std::string& path) {
  SgHandle g;
  check(ck_splitgraph_parse(slurp(path).c_str(), &g.g));
  return g;
}

// "<lo>..<hi>" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ToolError{kExitInvalid, "bad range '" + text + "'"};
  }
}

std::string witness_path(const std::string& input, const std::string& out_dir,
                         const std::string& tag) {
  std::filesystem::path p(input);
  std::string name = p.stem().string() + "." + tag + ".col";
  if (!out_dir.empty()) return (std::filesystem::path(out_dir) / name).string();
  return (p.parent_path() / name).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact panchromatic colorings and completely independent "
               "spanning trees in split graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "csv";
  app.add_option("--seed", seed, "master random seed");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string in_file, aux_file, out_file;
  int k_arg = 0;

  // color chi-p | chi-p2 | alpha
  auto* color = app.add_subcommand("color", "exact coloring numbers");
  color->require_subcommand(1);
  auto* chi_p = color->add_subcommand("chi-p", "panchromatic number");
  chi_p->add_option("input", in_file, "hypergraph file")->required();
  auto* chi_p2 = color->add_subcommand("chi-p2", "bipanchromatic number");
  chi_p2->add_option("input", in_file, "hypergraph file")->required();
  auto* alpha = color->add_subcommand("alpha", "minimum unique colors");
  alpha->add_option("input", in_file, "hypergraph file")->required();
  alpha->add_option("--k", k_arg, "number of colors (default chi_p)");

  // cist verify | construct | exact
  auto* cist = app.add_subcommand("cist", "completely independent trees");
  cist->require_subcommand(1);
  auto* cist_verify = cist->add_subcommand("verify", "check a certificate");
  cist_verify->add_option("input", in_file, "split graph file")->required();
  cist_verify->add_option("trees", aux_file, "trees.json")->required();
  auto* cist_construct =
      cist->add_subcommand("construct", "build certificate and bounds report");
  cist_construct->add_option("input", in_file, "split graph file")->required();
  auto* cist_exact = cist->add_subcommand("exact", "exact maximum (small inputs)");
  cist_exact->add_option("input", in_file, "split graph file")->required();
  cist_exact->add_option("--k-cap", k_arg, "cap on the number of trees");

  // reduce bicp | cist | map-witness
  auto* reduce = app.add_subcommand("reduce", "hardness-reduction gadgets");
  reduce->require_subcommand(1);
  auto* red_bicp = reduce->add_subcommand("bicp", "two copies + universal edge");
  red_bicp->add_option("input", in_file, "hypergraph file")->required();
  red_bicp->add_option("-o,--output", out_file, "output .hg")->required();
  auto* red_cist = reduce->add_subcommand("cist", "doubled split graph");
  red_cist->add_option("input", in_file, "hypergraph file")->required();
  red_cist->add_option("-o,--output", out_file, "output .sg")->required();
  std::string map_kind, map_dir;
  auto* red_map = reduce->add_subcommand("map-witness",
                                         "carry witnesses across a reduction");
  red_map->add_option("kind", map_kind, "bicp or cist")
      ->required()
      ->check(CLI::IsMember({"bicp", "cist"}));
  red_map->add_option("direction", map_dir, "fwd or bwd")
      ->required()
      ->check(CLI::IsMember({"fwd", "bwd"}));
  red_map->add_option("input", in_file, "source hypergraph file")->required();
  red_map->add_option("witness", aux_file, "witness file (.col or trees.json)")
      ->required();
  red_map->add_option("-o,--output", out_file, "mapped witness file")
      ->required();

  // lp export
  auto* lp = app.add_subcommand("lp", "integer-program export");
  lp->require_subcommand(1);
  std::string lp_kind;
  auto* lp_export = lp->add_subcommand("export", "write an .lp model");
  lp_export->add_option("kind", lp_kind, "pan, bipan or alpha")
      ->required()
      ->check(CLI::IsMember({"pan", "bipan", "alpha"}));
  lp_export->add_option("input", in_file, "hypergraph file")->required();
  lp_export->add_option("-o,--output", out_file, "output .lp")->required();

  // experiment conjecture
  auto* experiment = app.add_subcommand("experiment", "seeded experiments");
  experiment->require_subcommand(1);
  std::string n_range = "4..8", m_offset_range = "-1..4";
  int samples = 20;
  auto* conjecture =
      experiment->add_subcommand("conjecture", "test the equality conjecture");
  conjecture->add_option("--n", n_range, "vertex-count range lo..hi");
  conjecture->add_option("--m-offset", m_offset_range,
                         "hyperedge offset range (m = n + offset)");
  conjecture->add_option("--samples", samples, "instances per grid cell");

  CLI11_PARSE(app, argc, argv);

  try {
    if (chi_p->parsed() || chi_p2->parsed()) {
      HgHandle h = load_hg(in_file);
      int value = 0;
      CkString witness;
      bool pan = chi_p->parsed();
      check(pan ? ck_chi_p(h.h, &value, &witness.ptr)
                : ck_chi_p2(h.h, &value, &witness.ptr));
      std::string tag = pan ? "chi_p" : "chi_p2";
      std::string path = witness_path(in_file, out_dir, tag);
      spit(path, witness.str());
      std::cout << tag << " = " << value << "\n"
                << "witness: " << path << "\n";
    } else if (alpha->parsed()) {
      HgHandle h = load_hg(in_file);
      int k = k_arg;
      if (k <= 0) check(ck_chi_p(h.h, &k, nullptr));
      int value = 0;
      CkString witness;
      check(ck_alpha(h.h, k, &value, &witness.ptr));
      std::string path = witness_path(in_file, out_dir, "alpha");
      spit(path, witness.str());
      std::cout << "alpha_" << k << " = " << value << "\n"
                << "witness: " << path << "\n";
    } else if (cist_verify->parsed()) {
      SgHandle g = load_sg(in_file);
      int ok = 0;
      CkString reason;
      check(ck_cist_verify(g.g, slurp(aux_file).c_str(), &ok, &reason.ptr));
      std::cout << (ok ? "valid" : "invalid: " + reason.str()) << "\n";
      return ok ? kExitOk : kExitInvalid;
    } else if (cist_construct->parsed()) {
      SgHandle g = load_sg(in_file);
      CkString trees, report;
      check(ck_cist_construct(g.g, &trees.ptr, &report.ptr));
      std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
      std::filesystem::create_directories(dir);
      spit((dir / "trees.json").string(), trees.str());
      spit((dir / "cist_report.json").string(), report.str());
      std::cout << report.str();
    } else if (cist_exact->parsed()) {
      SgHandle g = load_sg(in_file);
      int value = 0;
      check(ck_cist_exact(g.g, k_arg, &value));
      std::cout << "max_cist = " << value << "\n";
    } else if (red_bicp->parsed() || red_cist->parsed()) {
      HgHandle h = load_hg(in_file);
      CkString out;
      check(red_bicp->parsed() ? ck_reduce_bicp(h.h, &out.ptr)
                               : ck_reduce_cist(h.h, &out.ptr));
      spit(out_file, out.str());
      std::cout << "wrote " << out_file << "\n";
    } else if (red_map->parsed()) {
      HgHandle h = load_hg(in_file);
      std::string witness = slurp(aux_file);
      CkString out;
      if (map_kind == "bicp") {
        check(map_dir == "fwd"
                  ? ck_map_witness_bicp_fwd(h.h, witness.c_str(), &out.ptr)
                  : ck_map_witness_bicp_bwd(h.h, witness.c_str(), &out.ptr));
      } else {
        check(map_dir == "fwd"
                  ? ck_map_witness_cist_fwd(h.h, witness.c_str(), &out.ptr)
                  : ck_map_witness_cist_bwd(h.h, witness.c_str(), &out.ptr));
      }
      spit(out_file, out.str());
      std::cout << "wrote " << out_file << "\n";
    } else if (lp_export->parsed()) {
      HgHandle h = load_hg(in_file);
      CkString out;
      check(ck_lp_export(h.h, lp_kind.c_str(), &out.ptr));
      spit(out_file, out.str());
      std::cout << "wrote " << out_file << "\n";
    } else if (conjecture->parsed()) {
      auto [n_lo, n_hi] = parse_range(n_range);
      auto [off_lo, off_hi] = parse_range(m_offset_range);
      CkString summary;
      std::string dir = out_dir.empty() ? "." : out_dir;
      check(ck_experiment_conjecture(n_lo, n_hi, off_lo, off_hi, samples, seed,
                                     dir.c_str(), format.c_str(),
                                     &summary.ptr));
      std::cout << summary.str();
    }
  } catch (const ToolError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitOk;
}
