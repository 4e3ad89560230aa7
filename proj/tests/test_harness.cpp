#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "colorings/solver.hpp"
#include "core/model.hpp"
#include "harness/experiment.hpp"
#include "support/fixtures.hpp"

using namespace cistkit;
using testsupport::make_hg;

namespace {

// drops the trailing millis column from each CSV row
std::string strip_millis(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    out << line.substr(0, line.rfind(',')) << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("random_hypergraph is deterministic and well formed") {
  Hypergraph a = random_hypergraph(6, 5, 123);
  Hypergraph b = random_hypergraph(6, 5, 123);
  CHECK(a == b);
  CHECK(a.n == 6);
  CHECK(a.m() == 5);
  CHECK_NOTHROW(validate(a, /*require_coverage=*/true));

  // different seeds almost surely differ
  int distinct = 0;
  for (std::uint64_t s = 0; s < 20; s++)
    distinct += random_hypergraph(6, 5, s) == a ? 0 : 1;
  CHECK(distinct >= 19);

  CHECK_THROWS_AS(random_hypergraph(0, 3, 1), Error);
  CHECK_THROWS_AS(random_hypergraph(3, 0, 1), Error);
}

TEST_CASE("every vertex is covered even for sparse draws") {
  for (std::uint64_t s = 0; s < 50; s++) {
    Hypergraph h = random_hypergraph(8, 1, s);
    CHECK_NOTHROW(validate(h, /*require_coverage=*/true));
    for (const auto& e : h.edges) CHECK(!e.empty());
  }
}

TEST_CASE("derive_seed separates grid cells") {
  std::set<std::uint64_t> seen;
  for (int n = 4; n <= 8; n++)
    for (int m = 3; m <= 12; m++)
      for (int idx = 0; idx < 20; idx++)
        seen.insert(derive_seed(42, n, m, idx));
  CHECK(seen.size() == 5 * 10 * 20);
  CHECK(derive_seed(42, 4, 3, 0) != derive_seed(43, 4, 3, 0));
}

TEST_CASE("eq3_check on the worked example") {
  ExperimentRecord rec = eq3_check(make_hg(4, {{0, 1}, {2, 3}}), 9);
  CHECK(rec.seed == 9);
  CHECK(rec.chi_p == 2);
  CHECK(rec.alpha == 0);
  CHECK(rec.chi_p2 == 2);
  CHECK(rec.eq3_holds);
  CHECK(is_panchromatic(rec.instance, rec.w_pan));
  CHECK(is_bipanchromatic(rec.instance, rec.w_bipan));
}

TEST_CASE("eq3_check on the six-vertex running example") {
  ExperimentRecord rec = eq3_check(testsupport::example_hg());
  CHECK(rec.chi_p == 3);
  CHECK(rec.alpha == 1);
  CHECK(rec.chi_p2 == 2);
  CHECK(rec.eq3_holds);  // 2 == 3 - ceil(1/2)
}

TEST_CASE("conjecture grid is deterministic and consistent") {
  GridSpec spec;
  spec.n_lo = 4;
  spec.n_hi = 5;
  spec.m_off_lo = -1;
  spec.m_off_hi = 1;
  spec.samples = 4;
  spec.seed = 31337;

  GridResult a = run_conjecture_grid(spec);
  GridResult b = run_conjecture_grid(spec);
  CHECK(a.records.size() == 2 * 3 * 4);
  CHECK(strip_millis(report_csv(a)) == strip_millis(report_csv(b)));

  for (const auto& rec : a.records) {
    CHECK(rec.chi_p2 >= rec.chi_p - (rec.alpha + 1) / 2);  // hard invariant
    CHECK(rec.eq3_holds ==
          (rec.chi_p2 == rec.chi_p - (rec.alpha + 1) / 2));
  }
}

TEST_CASE("reports carry the expected fields") {
  GridSpec spec;
  spec.n_lo = 4;
  spec.n_hi = 4;
  spec.m_off_lo = 0;
  spec.m_off_hi = 0;
  spec.samples = 2;
  spec.seed = 5;
  GridResult r = run_conjecture_grid(spec);

  std::string csv = report_csv(r);
  CHECK(csv.rfind("seed,n,m,chi_p,alpha,chi_p2,eq3,millis\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  std::string json = report_json(r);
  CHECK(json.find("\"chi_p\"") != std::string::npos);

  std::string summary = summary_json(spec, r);
  CHECK(summary.find("\"violations\"") != std::string::npos);
  CHECK(summary.find("\"isomorphism_dedup\": false") != std::string::npos);
  CHECK(summary.find("\"all_hold\"") != std::string::npos);
}
