#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorings/solver.hpp"
#include "core/io.hpp"
#include "harness/experiment.hpp"
#include "lp/lp_model.hpp"
#include "support/fixtures.hpp"
#include "support/lp_eval.hpp"

using namespace cistkit;
using testsupport::make_hg;
using testsupport::lp_optimum;

namespace {

std::string golden(const std::string& name) {
  return read_file(std::string(CISTKIT_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("exported models match the golden files byte for byte") {
  Hypergraph a = parse_hypergraph(golden("a.hg"));
  Hypergraph b = parse_hypergraph(golden("b.hg"));
  int chi_a = panchromatic_number(a).value;
  int chi_b = panchromatic_number(b).value;

  CHECK(export_panchromatic_lp(a) == golden("a_pan.lp"));
  CHECK(export_bipanchromatic_lp(a, chi_a) == golden("a_bipan.lp"));
  CHECK(export_alpha_lp(a, chi_a) == golden("a_alpha.lp"));
  CHECK(export_panchromatic_lp(b) == golden("b_pan.lp"));
  CHECK(export_bipanchromatic_lp(b, chi_b) == golden("b_bipan.lp"));
  CHECK(export_alpha_lp(b, chi_b) == golden("b_alpha.lp"));
}

TEST_CASE("model structure") {
  Hypergraph h = make_hg(3, {{0, 1}, {1, 2}});
  LpModel pan = panchromatic_lp(h);
  CHECK(pan.maximize);
  // n*c link + n one + m*c cover, with c = n
  CHECK(pan.constraints.size() == 3 * 3 + 3 + 2 * 3);
  CHECK(pan.binaries.size() == 3 * 3 + 3);

  LpModel bipan = bipanchromatic_lp(h, 2);
  CHECK(bipan.constraints.size() == 3 * 2 + 3 + 2 * 2 + 2);
  CHECK(bipan.binaries.size() == 3 * 2 + 2);

  LpModel alpha = alpha_lp(h, 2);
  CHECK(!alpha.maximize);
  CHECK(alpha.constraints.size() == 2 * 2 + 3 + 2);
  CHECK(alpha.binaries.size() == 3 * 2 + 2);
}

TEST_CASE("writer is deterministic and uses LF endings") {
  Hypergraph h = make_hg(3, {{0, 1}, {1, 2}});
  std::string once = export_panchromatic_lp(h);
  CHECK(once == export_panchromatic_lp(h));
  CHECK(once.find('\r') == std::string::npos);
  CHECK(once.substr(0, 9) == "Maximize\n");
  CHECK(once.substr(once.size() - 4) == "End\n");
}

TEST_CASE("binary enumeration of tiny models reproduces the exact numbers") {
  std::vector<Hypergraph> tiny = {
      make_hg(2, {{0, 1}}),
      make_hg(3, {{0, 1}, {1, 2}}),
      make_hg(3, {{0, 1, 2}}),
      make_hg(4, {{0, 1}, {2, 3}}),
  };
  for (const auto& h : tiny) {
    int chi = panchromatic_number(h).value;
    int chi2 = bipanchromatic_number(h).value;
    int alpha = min_unique_colors(h, chi).value;

    if (h.n <= 3) {  // pan model has n(n+1) variables
      auto pan_opt = lp_optimum(panchromatic_lp(h));
      REQUIRE(pan_opt.has_value());
      CHECK(*pan_opt == chi);
    }
    auto bipan_opt = lp_optimum(bipanchromatic_lp(h, chi));
    REQUIRE(bipan_opt.has_value());
    CHECK(*bipan_opt == chi2);

    auto alpha_opt = lp_optimum(alpha_lp(h, chi));
    REQUIRE(alpha_opt.has_value());
    CHECK(*alpha_opt == alpha);
  }
}

TEST_CASE("alpha model is infeasible beyond chi_p") {
  Hypergraph h = make_hg(3, {{0, 1}, {1, 2}});  // chi_p = 2
  CHECK(!lp_optimum(alpha_lp(h, 3)).has_value());
}
