#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uchp/checks.hpp"

using uchp::CheckParams;
using uchp::CheckReport;
using uchp::RunConfig;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

// every report must satisfy the pass <=> residual <= tolerance contract
void check_contract(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CAPTURE(r.params);
    CHECK(r.pass == (r.residual <= r.tolerance));
    CHECK(!r.statement.empty());
    CHECK(starts_with(r.provenance, "run:"));
    CHECK(r.provenance.size() == 4 + 16);
    CHECK(!contains(r.params, ","));  // params must stay CSV-safe
  }
}

}  // namespace

TEST_CASE("config serialization round-trips") {
  RunConfig cfg;
  cfg.workers = 3;
  cfg.seed = 42;
  cfg.tol_quad = 1e-7;
  cfg.line_halfwidth = 12.5;
  cfg.out_json = "report.json";
  const RunConfig back = uchp::parse_config(uchp::serialize_config(cfg));
  CHECK(back == cfg);
  CHECK_FALSE(back == RunConfig{});
}

TEST_CASE("config parser accepts comments and whitespace") {
  const std::string text =
      "# run profile\n"
      "\n"
      "  n_c = 64  # coarser plane rule\n"
      "seed=11\n";
  const RunConfig cfg = uchp::parse_config(text);
  CHECK(cfg.n_c == 64);
  CHECK(cfg.seed == 11);
  CHECK(cfg.n_r == RunConfig{}.n_r);
}

TEST_CASE("config parser rejects malformed input") {
  CHECK_THROWS_AS(uchp::parse_config("bogus = 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(uchp::parse_config("just some words\n"), std::invalid_argument);
  CHECK_THROWS_AS(uchp::parse_config("n_c = sixty\n"), std::invalid_argument);
  CHECK_THROWS_AS(uchp::parse_config("workers = 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(uchp::parse_config("tol_quad = -1e-8\n"), std::invalid_argument);
}

TEST_CASE("config file loading") {
  const std::string path = "uchp_test_config.tmp";
  {
    std::ofstream out(path);
    out << "n_c2 = 24\nmax_order = 5\n";
  }
  const RunConfig cfg = uchp::load_config_file(path);
  CHECK(cfg.n_c2 == 24);
  CHECK(cfg.max_order == 5);
  std::remove(path.c_str());
  CHECK_THROWS_AS(uchp::load_config_file("no_such_file.cfg"), std::runtime_error);
}

TEST_CASE("catalog lists every check exactly once") {
  const auto& ids = uchp::check_catalog();
  CHECK(ids.size() == 28);
  for (const auto& id : ids) {
    CAPTURE(id);
    CHECK(uchp::is_check_id(id));
    CHECK(!uchp::check_statement(id).empty());
    CHECK(std::count(ids.begin(), ids.end(), id) == 1);
  }
  CHECK_FALSE(uchp::is_check_id("no_such_check"));
  CHECK_THROWS_AS(uchp::check_statement("no_such_check"), std::invalid_argument);
  CHECK_THROWS_AS(uchp::run_check("no_such_check", {}, RunConfig{}),
                  std::invalid_argument);
}

TEST_CASE("pinned fourier eigenvalue run reports -i for orders (1,2)") {
  CheckParams p;
  p.m = 1;
  p.n = 2;
  p.nu = 1.0;
  const auto reports = uchp::run_check("fourier_eigen", p, RunConfig{});
  REQUIRE(reports.size() == 1);
  check_contract(reports);
  CHECK(reports[0].pass);
  CHECK(reports[0].residual <= 1e-6);
  CHECK(starts_with(reports[0].sign_outcome, "eigenvalue = -i"));
  CHECK(contains(reports[0].params, "m=1"));
  CHECK(contains(reports[0].params, "n=2"));
}

TEST_CASE("vanishing check rejects the nonzero (0,0) moment") {
  CheckParams p;
  p.m = 0;
  p.n = 0;
  try {
    uchp::run_check("vanishing", p, RunConfig{});
    FAIL("expected a constraint rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(contains(e.what(), "pi/nu"));
    CHECK(contains(e.what(), "m >= 1"));
  }
}

TEST_CASE("vanishing moments hold at a pinned order") {
  CheckParams p;
  p.m = 2;
  p.n = 3;
  p.nu = 2.0;
  const auto reports = uchp::run_check("vanishing", p, RunConfig{});
  REQUIRE(reports.size() == 1);
  check_contract(reports);
  CHECK(reports[0].pass);
  CHECK(reports[0].params == "nu=2 m=2 n=3");
  CHECK(reports[0].quad_orders == "n_c=80");
}

TEST_CASE("cheap whole-sweep checks pass under the default profile") {
  const RunConfig cfg;
  for (const std::string id :
       {"reproducing", "landau_eigen", "rescaling", "gaussian_rep", "mehler",
        "exp_gen", "diag_probability"}) {
    CAPTURE(id);
    const auto reports = uchp::run_check(id, {}, cfg);
    CHECK(reports.size() == 3);
    check_contract(reports);
    for (const auto& r : reports) {
      CAPTURE(r.params);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("sign-resolved checks pick exactly one candidate") {
  RunConfig cfg;
  CheckParams p;
  p.nu = 1.0;

  SUBCASE("plane substitution includes the 1/sqrt(2) scaling") {
    const auto reports = uchp::run_check("b2_gamma", p, cfg);
    REQUIRE(reports.size() == 1);
    check_contract(reports);
    CHECK(reports[0].pass);
    CHECK(starts_with(reports[0].sign_outcome, "resolved: g = g_i/sqrt(2)"));
    CHECK(contains(reports[0].sign_outcome, "rejected g = g_i "));
  }

  SUBCASE("diagonal restriction needs the +i rotation") {
    const auto reports = uchp::run_check("restriction_fourier", p, cfg);
    REQUIRE(reports.size() == 1);
    check_contract(reports);
    CHECK(reports[0].pass);
    CHECK(starts_with(reports[0].sign_outcome, "resolved: theta=+i"));
  }

  SUBCASE("both conjugation routes resolve") {
    const auto reports = uchp::run_check("fourier_conjugation", p, cfg);
    REQUIRE(reports.size() == 2);
    check_contract(reports);
    CHECK(contains(reports[0].params, "variant=composition"));
    CHECK(reports[0].pass);
    CHECK(starts_with(reports[0].sign_outcome, "resolved: theta=+i"));
    CHECK(contains(reports[1].params, "variant=groundstate"));
    CHECK(reports[1].pass);
    CHECK(starts_with(reports[1].sign_outcome,
                      "resolved: F~ = M(-nu/2) o F o M(+nu/2)"));
  }

  SUBCASE("phase-space intertwining fixes prefactor and sign") {
    const auto reports = uchp::run_check("wigner_intertwine", p, cfg);
    REQUIRE(reports.size() == 1);
    check_contract(reports);
    CHECK(reports[0].pass);
    CHECK(starts_with(reports[0].sign_outcome,
                      "resolved: C = 2/sqrt(nu) sigma = -1"));
  }
}

TEST_CASE("image grid check validates pinned orders") {
  CheckParams p;
  p.m = 9;
  CHECK_THROWS_AS(uchp::run_check("image_Fn", p, RunConfig{}),
                  std::invalid_argument);
}

TEST_CASE("refining the quadrature does not lose accuracy") {
  CheckParams p;
  p.m = 2;
  p.n = 2;
  p.nu = 1.0;
  RunConfig coarse;
  coarse.n_c = 40;
  RunConfig fine;
  fine.n_c = 80;
  const double r_coarse = uchp::run_check("action_T", p, coarse)[0].residual;
  const double r_fine = uchp::run_check("action_T", p, fine)[0].residual;
  CHECK(r_fine <= std::max(2.0 * r_coarse, 1e-12));
}

TEST_CASE("empty suite is an empty pass") {
  const auto summary = uchp::run_suite({}, RunConfig{});
  CHECK(summary.pass);
  CHECK(summary.reports.empty());
}

TEST_CASE("suite validates ids and dedupes in catalog order") {
  CHECK_THROWS_AS(uchp::run_suite({"reproducing", "nope"}, RunConfig{}),
                  std::invalid_argument);
  const auto summary =
      uchp::run_suite({"landau_eigen", "reproducing", "reproducing"}, RunConfig{});
  CHECK(summary.pass);
  REQUIRE(summary.reports.size() == 6);  // two checks, three weights each
  CHECK(summary.reports[0].id == "reproducing");
  CHECK(summary.reports[3].id == "landau_eigen");
  check_contract(summary.reports);
}

TEST_CASE("identical runs serialize byte-identically") {
  RunConfig cfg;
  cfg.seed = 7;
  const std::vector<std::string> ids{"reproducing", "rescaling", "mehler"};
  const auto first = uchp::run_suite(ids, cfg);
  const auto second = uchp::run_suite(ids, cfg);
  const std::string json_a = uchp::reports_to_json(first.reports, cfg.seed);
  const std::string json_b = uchp::reports_to_json(second.reports, cfg.seed);
  CHECK(json_a == json_b);

  RunConfig other = cfg;
  other.seed = 8;
  const auto third = uchp::run_suite(ids, other);
  CHECK(json_a != uchp::reports_to_json(third.reports, other.seed));
}

TEST_CASE("worker pool reproduces the sequential suite") {
  RunConfig seq;
  RunConfig par;
  par.workers = 3;
  const std::vector<std::string> ids{"reproducing", "rescaling", "exp_gen",
                                     "landau_eigen"};
  const auto a = uchp::run_suite(ids, seq);
  auto b = uchp::run_suite(ids, par);
  // the worker count is part of the config hash, so compare field-by-field
  REQUIRE(a.reports.size() == b.reports.size());
  for (size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].id == b.reports[i].id);
    CHECK(a.reports[i].params == b.reports[i].params);
    CHECK(a.reports[i].residual == b.reports[i].residual);
    CHECK(a.reports[i].pass == b.reports[i].pass);
  }
}

TEST_CASE("reports round-trip through json") {
  RunConfig cfg;
  const auto summary = uchp::run_suite({"reproducing", "vanishing"}, cfg);
  const std::string json = uchp::reports_to_json(summary.reports, cfg.seed);
  CHECK(contains(json, "\"schema\": 1"));
  CHECK_FALSE(contains(json, "seconds"));  // timings stay out of the stable record
  const auto back = uchp::reports_from_json(json);
  REQUIRE(back.size() == summary.reports.size());
  for (size_t i = 0; i < back.size(); ++i) {
    const auto& x = summary.reports[i];
    const auto& y = back[i];
    CHECK(x.id == y.id);
    CHECK(x.params == y.params);
    CHECK(x.residual == y.residual);
    CHECK(x.tolerance == y.tolerance);
    CHECK(x.pass == y.pass);
    CHECK(x.quad_orders == y.quad_orders);
    CHECK(x.sign_outcome == y.sign_outcome);
    CHECK(x.statement == y.statement);
    CHECK(x.provenance == y.provenance);
    CHECK(y.seconds == 0.0);
  }
  CHECK_THROWS(uchp::reports_from_json("{\"schema\": 2, \"reports\": []}"));
}

TEST_CASE("csv output carries the timing column") {
  CheckReport r;
  r.id = "demo";
  r.params = "nu=1";
  r.residual = 0.5;
  r.tolerance = 1.0;
  r.pass = true;
  r.seconds = 0.25;
  const std::string csv = uchp::reports_to_csv({r});
  CHECK(starts_with(csv, "check_id,params,residual,tolerance,pass,seconds\n"));
  CHECK(contains(csv, "demo,nu=1,0.5,1,true,0.250000\n"));
}
