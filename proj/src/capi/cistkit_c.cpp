#include "cistkit.h"

#include <cstring>
#include <exception>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "cist/construct.hpp"
#include "cist/exact.hpp"
#include "cist/verify.hpp"
#include "colorings/solver.hpp"
#include "core/io.hpp"
#include "core/model.hpp"
#include "harness/experiment.hpp"
#include "lp/lp_model.hpp"
#include "reductions/gadgets.hpp"

using namespace cistkit;

struct ck_hypergraph {
  Hypergraph h;
};
struct ck_splitgraph {
  SplitGraph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes + last-error message.
template <typename Fn>
ck_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<ck_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CK_INTERNAL_VERIFICATION;
  }
}

const char* failure_name(CistFailure f) {
  switch (f) {
    case CistFailure::None: return "ok";
    case CistFailure::EdgeNotInHost: return "edge not in host graph";
    case CistFailure::NotTree: return "tree condition violated";
    case CistFailure::NotSpanning: return "tree is not spanning";
    case CistFailure::SharedEdge: return "edge shared between trees";
    case CistFailure::DegreeViolation:
      return "vertex internal in more than one tree";
  }
  return "unknown";
}

nlohmann::json report_to_json(const CistReport& r) {
  nlohmann::json j;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["lower_method"] = r.lower_method;
  j["upper_method"] = r.upper_method;
  if (r.max_cist)
    j["max_cist"] = *r.max_cist;
  else
    j["max_cist"] = nullptr;
  return j;
}

}  // namespace

extern "C" {

const char* ck_status_name(ck_status status) {
  switch (status) {
    case CK_OK: return "ok";
    case CK_PARSE_ERROR: return "parse_error";
    case CK_INVALID_HYPERGRAPH: return "invalid_hypergraph";
    case CK_INVALID_SPLITGRAPH: return "invalid_splitgraph";
    case CK_INVALID_COLORING: return "invalid_coloring";
    case CK_ISOLATED_VERTEX: return "isolated_vertex";
    case CK_NOT_SPLIT: return "not_split";
    case CK_TOO_FEW_VERTICES: return "too_few_vertices";
    case CK_INFEASIBLE: return "infeasible";
    case CK_INVALID_CERTIFICATE: return "invalid_certificate";
    case CK_INVALID_CLASSES: return "invalid_classes";
    case CK_NOT_BIPANCHROMATIC: return "not_bipanchromatic";
    case CK_NOT_PANCHROMATIC: return "not_panchromatic";
    case CK_PRECONDITION_VIOLATED: return "precondition_violated";
    case CK_TOO_LARGE: return "too_large";
    case CK_NOT_CONNECTED: return "not_connected";
    case CK_WITNESS_INVALID: return "witness_invalid";
    case CK_INTERNAL_VERIFICATION: return "internal_verification";
  }
  return "unknown";
}

const char* ck_last_error(void) { return g_last_error.c_str(); }

void ck_string_free(char* s) { delete[] s; }

ck_status ck_hypergraph_parse(const char* text, ck_hypergraph** out) {
  return guard([&] { *out = new ck_hypergraph{parse_hypergraph(text)}; });
}

ck_status ck_splitgraph_parse(const char* text, ck_splitgraph** out) {
  return guard([&] { *out = new ck_splitgraph{parse_split_graph(text)}; });
}

void ck_hypergraph_free(ck_hypergraph* h) { delete h; }
void ck_splitgraph_free(ck_splitgraph* g) { delete g; }

ck_status ck_hypergraph_write(const ck_hypergraph* h, char** out_text) {
  return guard([&] { *out_text = dup_string(write_hypergraph(h->h)); });
}

ck_status ck_splitgraph_write(const ck_splitgraph* g, char** out_text) {
  return guard([&] { *out_text = dup_string(write_split_graph(g->g)); });
}

ck_status ck_split_of_hypergraph(const ck_hypergraph* h, ck_splitgraph** out) {
  return guard([&] { *out = new ck_splitgraph{split_of_hypergraph(h->h)}; });
}

ck_status ck_hypergraph_of_split(const ck_splitgraph* g, ck_hypergraph** out) {
  return guard([&] { *out = new ck_hypergraph{hypergraph_of_split(g->g)}; });
}

ck_status ck_chi_p(const ck_hypergraph* h, int* value, char** witness_col) {
  return guard([&] {
    NumberResult r = panchromatic_number(h->h);
    *value = r.value;
    if (witness_col) *witness_col = dup_string(write_coloring(r.witness));
  });
}

ck_status ck_chi_p2(const ck_hypergraph* h, int* value, char** witness_col) {
  return guard([&] {
    NumberResult r = bipanchromatic_number(h->h);
    *value = r.value;
    if (witness_col) *witness_col = dup_string(write_coloring(r.witness));
  });
}

ck_status ck_alpha(const ck_hypergraph* h, int k, int* value,
                   char** witness_col) {
  return guard([&] {
    NumberResult r = min_unique_colors(h->h, k);
    *value = r.value;
    if (witness_col) *witness_col = dup_string(write_coloring(r.witness));
  });
}

ck_status ck_cist_verify(const ck_splitgraph* g, const char* trees_json,
                         int* ok, char** reason) {
  return guard([&] {
    CistCertificate cert = parse_certificate(trees_json);
    VerifyResult r = verify_cist(g->g, cert.trees);
    *ok = r.ok ? 1 : 0;
    if (reason) *reason = dup_string(failure_name(r.reason));
  });
}

ck_status ck_cist_construct(const ck_splitgraph* g, char** trees_json,
                            char** report_json) {
  return guard([&] {
    CistReport r = cist_report(g->g);
    if (trees_json) *trees_json = dup_string(write_certificate(r.certificate));
    if (report_json)
      *report_json = dup_string(report_to_json(r).dump(2) + "\n");
  });
}

ck_status ck_cist_exact(const ck_splitgraph* g, int k_cap, int* value) {
  return guard([&] { *value = max_cist_exact(g->g, k_cap); });
}

ck_status ck_reduce_bicp(const ck_hypergraph* h, char** out_hg_text) {
  return guard([&] {
    BicpGadget gadget = build_bicp_gadget(h->h);
    *out_hg_text = dup_string(write_hypergraph(gadget.h_prime));
  });
}

ck_status ck_reduce_cist(const ck_hypergraph* h, char** out_sg_text) {
  return guard([&] {
    CistGadget gadget = build_cist_gadget(h->h);
    *out_sg_text = dup_string(write_split_graph(gadget.g_prime));
  });
}

ck_status ck_map_witness_bicp_fwd(const ck_hypergraph* h, const char* col_text,
                                  char** out_col) {
  return guard([&] {
    BicpGadget gadget = build_bicp_gadget(h->h);
    Coloring c = parse_coloring(col_text);
    *out_col = dup_string(
        write_coloring(map_bicp_witness_forward(gadget, h->h, c)));
  });
}

ck_status ck_map_witness_bicp_bwd(const ck_hypergraph* h, const char* col_text,
                                  char** out_col) {
  return guard([&] {
    BicpGadget gadget = build_bicp_gadget(h->h);
    Coloring c = parse_coloring(col_text);
    *out_col = dup_string(
        write_coloring(map_bicp_witness_backward(gadget, h->h, c)));
  });
}

ck_status ck_map_witness_cist_fwd(const ck_hypergraph* h, const char* col_text,
                                  char** out_trees_json) {
  return guard([&] {
    CistGadget gadget = build_cist_gadget(h->h);
    Coloring c = parse_coloring(col_text);
    *out_trees_json = dup_string(
        write_certificate(map_cist_witness_forward(gadget, h->h, c)));
  });
}

ck_status ck_map_witness_cist_bwd(const ck_hypergraph* h,
                                  const char* trees_json, char** out_col) {
  return guard([&] {
    CistGadget gadget = build_cist_gadget(h->h);
    CistCertificate cert = parse_certificate(trees_json);
    *out_col = dup_string(
        write_coloring(map_cist_witness_backward(gadget, h->h, cert)));
  });
}

ck_status ck_lp_export(const ck_hypergraph* h, const char* kind,
                       char** out_lp_text) {
  return guard([&] {
    std::string k = kind ? kind : "";
    std::string text;
    if (k == "pan") {
      text = export_panchromatic_lp(h->h);
    } else if (k == "bipan") {
      text = export_bipanchromatic_lp(h->h, panchromatic_number(h->h).value);
    } else if (k == "alpha") {
      text = export_alpha_lp(h->h, panchromatic_number(h->h).value);
    } else {
      throw Error(ErrorCode::PreconditionViolated,
                  "unknown model kind '" + k + "' (expected pan|bipan|alpha)");
    }
    *out_lp_text = dup_string(text);
  });
}

ck_status ck_random_hypergraph(int n, int m, uint64_t seed,
                               char** out_hg_text) {
  return guard([&] {
    *out_hg_text = dup_string(write_hypergraph(random_hypergraph(n, m, seed)));
  });
}

ck_status ck_eq3_check(const ck_hypergraph* h, uint64_t seed_label,
                       char** record_json) {
  return guard([&] {
    ExperimentRecord rec = eq3_check(h->h, seed_label);
    nlohmann::json j = {{"seed", rec.seed},     {"n", rec.n},
                        {"m", rec.m},           {"chi_p", rec.chi_p},
                        {"alpha", rec.alpha},   {"chi_p2", rec.chi_p2},
                        {"eq3", rec.eq3_holds}};
    if (record_json) *record_json = dup_string(j.dump(2) + "\n");
  });
}

ck_status ck_experiment_conjecture(int n_lo, int n_hi, int m_off_lo,
                                   int m_off_hi, int samples, uint64_t seed,
                                   const char* out_dir, const char* format,
                                   char** summary_json_out) {
  return guard([&] {
    GridSpec spec;
    spec.n_lo = n_lo;
    spec.n_hi = n_hi;
    spec.m_off_lo = m_off_lo;
    spec.m_off_hi = m_off_hi;
    spec.samples = samples;
    spec.seed = seed;
    if (spec.n_lo < 1 || spec.n_hi < spec.n_lo || spec.samples < 1 ||
        spec.m_off_hi < spec.m_off_lo)
      throw Error(ErrorCode::PreconditionViolated, "bad grid parameters");

    GridResult result = run_conjecture_grid(spec);

    std::string fmt = format ? format : "csv";
    if (fmt != "csv" && fmt != "json")
      throw Error(ErrorCode::PreconditionViolated,
                  "unknown report format '" + fmt + "' (expected csv|json)");

    std::filesystem::path dir(out_dir ? out_dir : ".");
    std::filesystem::create_directories(dir);
    if (fmt == "csv")
      write_file((dir / "report.csv").string(), report_csv(result));
    else
      write_file((dir / "report.json").string(), report_json(result));
    std::string summary = summary_json(spec, result);
    write_file((dir / "summary.json").string(), summary);

    // Counterexamples, if any, get their instance and three witnesses dumped
    // next to the report so they can be re-checked by hand.
    int idx = 0;
    for (const auto& rec : result.records) {
      if (rec.eq3_holds) continue;
      std::string stem = "violation_" + std::to_string(idx++);
      write_file((dir / (stem + ".hg")).string(),
                 write_hypergraph(rec.instance));
      write_file((dir / (stem + "_pan.col")).string(),
                 write_coloring(rec.w_pan));
      write_file((dir / (stem + "_alpha.col")).string(),
                 write_coloring(rec.w_alpha));
      write_file((dir / (stem + "_bipan.col")).string(),
                 write_coloring(rec.w_bipan));
    }

    if (summary_json_out) *summary_json_out = dup_string(summary);
  });
}

}  // extern "C"
