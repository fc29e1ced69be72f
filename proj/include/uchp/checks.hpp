#pragma once

// Registry of named numerical checks.  Each check evaluates one identity two
// independent ways (quadrature or truncated series against a closed form, or
// two transform compositions against each other), reduces the disagreement to
// a single residual, and reports it against a pinned tolerance.  The registry
// is closed: check_catalog() lists every id.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uchp {

// Knobs shared by every check run.  Values serialize to a flat key=value text
// block; parse_config(serialize_config(c)) reproduces c exactly.
struct RunConfig {
  int n_r = 80;     // Gauss nodes for line integrals against exp(-nu x^2)
  int n_c = 80;     // per-axis Gauss nodes for plane integrals
  int n_c2 = 40;    // per-axis Gauss nodes for two-plane integrals
  int n_line = 256; // target node count for the oscillatory line rule
  double line_halfwidth = 14.0;
  int workers = 1;
  int chunk = 8192; // summation chunk; fixed chunking keeps totals
                    // independent of the worker count
  std::uint64_t seed = 7;
  int max_order = 6;    // sweep bound on polynomial indices
  int max_order_c2 = 4; // sweep bound where two-plane quadrature is involved
  double tol_coeff = 1e-12;     // exact coefficient arithmetic
  double tol_series = 1e-9;     // truncated series vs closed form
  double tol_quad = 1e-8;       // single plane quadrature
  double tol_compose = 1e-6;    // composed transforms / two-plane quadrature
  double tol_roundtrip = 1e-5;  // inverse round-trips
  std::string out_json;
  std::string out_csv;
};

bool operator==(const RunConfig& a, const RunConfig& b);

std::string serialize_config(const RunConfig& cfg);
// Throws std::invalid_argument naming the offending key or value.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Optional pins narrowing a check's default parameter sweep.  A pinned value
// that violates a check's validity domain is rejected with the constraint
// spelled out.
struct CheckParams {
  std::optional<int> m;
  std::optional<int> n;
  std::optional<double> nu;
};

struct CheckReport {
  std::string id;
  std::string params;       // the sweep actually run, key=value text
  double residual = 0.0;    // max over sampled points of |LHS-RHS|/max(|RHS|,1)
                            // (per-check deviations are stated in `statement`)
  double tolerance = 0.0;
  bool pass = false;        // residual <= tolerance
  std::string quad_orders;  // quadrature sizes used, "-" for exact routes
  double seconds = 0.0;     // wall time; reported in CSV only, never in JSON
  std::string sign_outcome; // which candidate form held, for ambiguous identities
  std::string statement;    // the identity under test, written out
  std::string provenance;   // deterministic fingerprint of (id, params, seed, config)
};

struct SuiteSummary {
  std::vector<CheckReport> reports;
  bool pass = true;
};

// All ids in canonical order.
const std::vector<std::string>& check_catalog();
bool is_check_id(const std::string& id);
// Throws std::invalid_argument for unknown ids.
std::string check_statement(const std::string& id);

// Runs one check; most produce one report per weight parameter in the sweep.
// Deterministic: identical (id, params, cfg) give identical reports apart
// from the wall time.
std::vector<CheckReport> run_check(const std::string& id, const CheckParams& params,
                                   const RunConfig& cfg);

// Runs the given ids (deduplicated, catalog order preserved).  An empty list
// yields an empty passing summary.  cfg.workers > 1 distributes whole checks
// across threads; the report order does not depend on scheduling.
SuiteSummary run_suite(const std::vector<std::string>& ids, const RunConfig& cfg);

// JSON document (schema field = 1) holding every report except the wall time,
// so that byte-identical runs produce byte-identical files.
std::string reports_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed);
// Inverse of reports_to_json; wall times come back as zero.
std::vector<CheckReport> reports_from_json(const std::string& text);

// One row per report under the header
// check_id,params,residual,tolerance,pass,seconds
std::string reports_to_csv(const std::vector<CheckReport>& reports);

}  // namespace uchp
