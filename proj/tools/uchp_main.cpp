// Command-line front end: evaluate polynomials and closed forms, apply the
// integral transforms at chosen points, and run the verification suite.
#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uchp/checks.hpp"
#include "uchp/genfun.hpp"
#include "uchp/handles.hpp"
#include "uchp/polynomials.hpp"
#include "uchp/quadrature.hpp"
#include "uchp/transforms.hpp"

namespace {

using uchp::cplx;

// ---------------------------------------------------------------------------
// value formatting: 15 significant digits, complex values as a+bi

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_cplx(cplx v) {
  const double im = v.imag();
  return fmt_real(v.real()) + (std::signbit(im) ? "-" : "+") +
         fmt_real(std::abs(im)) + "i";
}

// ---------------------------------------------------------------------------
// complex literals
//
// grammar:  complex := real | imag | real ('+'|'-') unsigned-imag
//           imag    := ['+'|'-'] unsigned-imag
//           unsigned-imag := [unsigned-real] 'i'
//           real    := decimal float, optional sign and exponent
// examples: 1.5   -2e-3   i   -i   2i   1+0i   -1.25e2-0.5i

double parse_real_literal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number in complex literal");
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size())
      throw std::invalid_argument("trailing characters in number: " + text);
    return v;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse number: " + text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range: " + text);
  }
}

double parse_imag_magnitude(const std::string& text) {
  // text excludes the trailing 'i'; "" and "+"/"-" mean one
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real_literal(text);
}

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  // find the split sign between real and imaginary parts: a '+'/'-' that is
  // neither leading nor part of an exponent
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '+' && s[i] != '-') continue;
    const char prev = s[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    split = i;  // keep the last candidate: handles 1e+3-2i
  }
  const bool has_i = s.back() == 'i';
  if (split != std::string::npos && has_i) {
    const double re = parse_real_literal(s.substr(0, split));
    const double im =
        parse_imag_magnitude(s.substr(split, s.size() - 1 - split));
    return {re, im};
  }
  if (has_i) return {0.0, parse_imag_magnitude(s.substr(0, s.size() - 1))};
  return {parse_real_literal(s), 0.0};
}

std::vector<cplx> parse_point(const std::string& raw, size_t arity) {
  std::vector<cplx> comps;
  size_t start = 0;
  while (true) {
    const size_t comma = raw.find(',', start);
    comps.push_back(parse_complex(raw.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (comps.size() != arity)
    throw std::invalid_argument("point '" + raw + "' has " +
                                std::to_string(comps.size()) +
                                " components; this transform takes " +
                                std::to_string(arity));
  return comps;
}

// ---------------------------------------------------------------------------
// input functions: uchp:m,n  hermite:m  hermprod:j,k  mono:m,n  gauss[:a]

struct InputSpec {
  std::string head;
  std::vector<std::string> args;
};

InputSpec split_input(const std::string& raw) {
  InputSpec spec;
  const size_t colon = raw.find(':');
  spec.head = raw.substr(0, colon);
  if (colon != std::string::npos) {
    size_t start = colon + 1;
    while (true) {
      const size_t comma = raw.find(',', start);
      spec.args.push_back(raw.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return spec;
}

int parse_index(const std::string& text) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a nonnegative integer index, got '" +
                                text + "'");
  }
}

void need_args(const InputSpec& spec, size_t count) {
  if (spec.args.size() != count)
    throw std::invalid_argument("input '" + spec.head + "' takes " +
                                std::to_string(count) + " index argument(s)");
}

double gauss_width(const InputSpec& spec, double nu) {
  if (spec.args.empty()) return 0.5 * nu;
  need_args(spec, 1);
  const double a = parse_real_literal(spec.args[0]);
  if (!(a > 0.0)) throw std::invalid_argument("gauss width must be > 0");
  return a;
}

uchp::FunctionR input_r(const std::string& raw, double nu) {
  const auto spec = split_input(raw);
  if (spec.head == "hermite") {
    need_args(spec, 1);
    return uchp::hermite_combo({uchp::HermiteTerm{cplx(1.0), parse_index(spec.args[0])}},
                               nu);
  }
  if (spec.head == "gauss") {
    const double a = gauss_width(spec, nu);
    uchp::FunctionR f;
    f.nu = nu;
    f.eval = [a](double x) { return cplx(std::exp(-a * x * x), 0.0); };
    return f;
  }
  throw std::invalid_argument("this transform takes a real-line input: "
                              "hermite:m or gauss[:a]");
}

uchp::FunctionR2 input_r2(const std::string& raw, double nu) {
  const auto spec = split_input(raw);
  if (spec.head == "hermprod") {
    need_args(spec, 2);
    return uchp::hermite_gauss_r2(parse_index(spec.args[0]),
                                  parse_index(spec.args[1]), nu);
  }
  if (spec.head == "gauss") {
    const double a = gauss_width(spec, nu);
    uchp::FunctionR2 f;
    f.eval = [a](double x, double y) {
      return cplx(std::exp(-a * (x * x + y * y)), 0.0);
    };
    return f;
  }
  throw std::invalid_argument("this transform takes a plane input: "
                              "hermprod:j,k or gauss[:a]");
}

uchp::FunctionC input_c(const std::string& raw, double nu) {
  const auto spec = split_input(raw);
  if (spec.head == "uchp") {
    need_args(spec, 2);
    return uchp::uchp_combo({uchp::UchpTerm{cplx(1.0), parse_index(spec.args[0]),
                                            parse_index(spec.args[1])}},
                            nu);
  }
  if (spec.head == "gauss") {
    const double a = gauss_width(spec, nu);
    uchp::FunctionC f;
    f.nu = nu;
    f.eval = [a](cplx z) { return cplx(std::exp(-a * std::norm(z)), 0.0); };
    return f;
  }
  throw std::invalid_argument("this transform takes a complex-plane input: "
                              "uchp:m,n or gauss[:a]");
}

uchp::FunctionC2 input_c2(const std::string& raw) {
  const auto spec = split_input(raw);
  if (spec.head == "mono") {
    need_args(spec, 2);
    return uchp::mono_combo({uchp::MonoTerm{cplx(1.0), parse_index(spec.args[0]),
                                            parse_index(spec.args[1])}});
  }
  throw std::invalid_argument("this transform takes a two-variable input: mono:m,n");
}

// ---------------------------------------------------------------------------
// option bags

struct EvalUchpOpts {
  int m = 0, n = 0;
  double nu = 1.0;
  std::string z = "0+0i";
};

struct EvalHermiteOpts {
  int n = 0;
  double nu = 1.0, x = 0.0;
};

struct EvalLaguerreOpts {
  int m = 0;
  double x = 0.0;
};

struct EvalNormOpts {
  int m = 0, n = 0;
  double nu = 1.0;
};

struct EvalGenfunOpts {
  std::string formula;
  double nu = 1.0, mu = 1.0, x = 0.0;
  int m = 0, n = 0, mp = 0;
  std::string z = "0+0i", w = "0+0i", u = "0+0i", v = "0+0i", t = "1+0i",
              xi = "1+0i";
  int series = 0;  // 0 = closed form
};

struct TransformOpts {
  std::string kind;
  std::string input;
  std::vector<std::string> at;
  double nu = 1.0;
  int level = 0;       // B1_level
  int level_in = 0;    // T_pair
  int level_out = 0;   // T_pair
  int direction = 1;   // fourier
  int quad = 80;
  int quad2 = 40;
  double halfwidth = 14.0;
  int points = 256;
};

struct CheckOpts {
  std::string suite;
  std::string config;
  std::string out;
  std::string csv;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_order;
  std::optional<int> workers;
  std::optional<int> m, n;
  std::optional<double> nu;
};

// ---------------------------------------------------------------------------
// eval subcommands

int run_eval_uchp(const EvalUchpOpts& o) {
  const auto h = uchp::complex_hermite(o.m, o.n, o.nu);
  std::cout << fmt_cplx(h.eval(parse_complex(o.z))) << "\n";
  return 0;
}

int run_eval_hermite(const EvalHermiteOpts& o) {
  std::cout << fmt_real(uchp::real_hermite(o.n, o.nu).eval(o.x)) << "\n";
  return 0;
}

int run_eval_laguerre(const EvalLaguerreOpts& o) {
  std::cout << fmt_real(uchp::laguerre(o.m).eval(o.x)) << "\n";
  return 0;
}

int run_eval_norm(const EvalNormOpts& o) {
  std::cout << fmt_real(uchp::uchp_norm_sq(o.m, o.n, o.nu)) << "\n";
  return 0;
}

uchp::GenFormulaId formula_from_name(const std::string& name) {
  static const std::map<std::string, uchp::GenFormulaId> names{
      {"exp2var", uchp::GenFormulaId::exp2var},
      {"one_index", uchp::GenFormulaId::one_index},
      {"mehler", uchp::GenFormulaId::mehler},
      {"bilinear", uchp::GenFormulaId::bilinear},
      {"mixed", uchp::GenFormulaId::mixed_real_complex},
      {"laguerre_diag", uchp::GenFormulaId::laguerre_diag},
      {"diag_t", uchp::GenFormulaId::diag_t},
      {"diag_t1", uchp::GenFormulaId::diag_t1},
      {"kernel_level", uchp::GenFormulaId::kernel_level_n},
  };
  const auto it = names.find(name);
  if (it == names.end()) {
    std::string known;
    for (const auto& [k, v] : names) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown formula '" + name + "'; known: " + known);
  }
  return it->second;
}

int run_eval_genfun(const EvalGenfunOpts& o) {
  uchp::GenParams p;
  p.nu = o.nu;
  p.mu = o.mu;
  p.x = o.x;
  p.m = o.m;
  p.n = o.n;
  p.mp = o.mp;
  p.z = parse_complex(o.z);
  p.w = parse_complex(o.w);
  p.u = parse_complex(o.u);
  p.v = parse_complex(o.v);
  p.t = parse_complex(o.t);
  p.xi = parse_complex(o.xi);
  const auto id = formula_from_name(o.formula);
  if (const auto violation = uchp::genfun_constraint_violation(id, p))
    throw std::invalid_argument("formula '" + o.formula + "' " + *violation);
  if (o.series > 0) {
    const auto s = uchp::genfun_series(id, p, o.series);
    std::cout << fmt_cplx(s.value) << "\n";
    std::cerr << "tail estimate: " << fmt_real(s.tail) << "\n";
  } else {
    std::cout << fmt_cplx(uchp::genfun_closed_form(id, p)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// transform subcommand

size_t transform_arity(const std::string& kind) {
  if (kind == "B2" || kind == "T" || kind == "wigner" || kind == "G") return 2;
  return 1;
}

int run_transform(const TransformOpts& o) {
  const double nu = o.nu;
  uchp::require_positive_nu(nu);
  const size_t arity = transform_arity(o.kind);
  if (o.at.empty()) throw std::invalid_argument("at least one --at point is required");

  const auto rule = uchp::gauss_hermite_rule(o.quad);
  bool warned = false;
  const auto value_at = [&](const std::vector<cplx>& pt) -> cplx {
    if (o.kind == "B1")
      return uchp::bargmann1_at(input_r(o.input, nu), nu, pt[0], rule);
    if (o.kind == "B1_level")
      return uchp::bargmann1_level_at(input_r(o.input, nu), o.level, nu, pt[0], rule);
    if (o.kind == "B2")
      return uchp::bargmann2_at(input_r2(o.input, nu), nu, pt[0], pt[1], rule);
    if (o.kind == "T")
      return uchp::t_forward_at(input_c(o.input, nu), nu, pt[0], pt[1], rule);
    if (o.kind == "T_inverse")
      return uchp::t_inverse_at(input_c2(o.input), nu, pt[0],
                                uchp::gauss_hermite_rule(o.quad2));
    if (o.kind == "T_pair")
      return uchp::t_pair_at(input_c(o.input, nu), o.level_in, o.level_out, nu,
                             pt[0], rule);
    if (o.kind == "fourier")
      return uchp::shifted_fourier_at(input_c(o.input, nu), nu, pt[0], rule,
                                      o.direction);
    if (o.kind == "wigner") {
      if (pt[0].imag() != 0.0 || pt[1].imag() != 0.0)
        throw std::invalid_argument("wigner points are real pairs x,y");
      const auto li = uchp::wigner_at(input_r2(o.input, nu), nu, pt[0].real(),
                                      pt[1].real(), o.halfwidth, o.points);
      if (li.decay_warning && !warned) {
        warned = true;
        std::cerr << "warning: integrand has not decayed at the window edge; "
                     "increase --halfwidth\n";
      }
      return li.value;
    }
    if (o.kind == "G")
      return uchp::g_composite_at(input_r(o.input, nu), nu, pt[0], pt[1], rule);
    throw std::invalid_argument("unknown transform kind: " + o.kind);
  };

  std::vector<std::vector<cplx>> pts;
  for (const auto& raw : o.at) pts.push_back(parse_point(raw, arity));

  if (pts.size() == 1) {
    std::cout << fmt_cplx(value_at(pts[0])) << "\n";
    return 0;
  }
  std::cout << (arity == 2 ? "arg1,arg2,value" : "arg1,value") << "\n";
  for (const auto& pt : pts) {
    for (const auto& c : pt) std::cout << fmt_cplx(c) << ",";
    std::cout << fmt_cplx(value_at(pt)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check subcommand

std::vector<std::string> expand_suite(const std::string& suite) {
  if (suite == "all") return uchp::check_catalog();
  std::vector<std::string> ids;
  size_t start = 0;
  while (true) {
    const size_t comma = suite.find(',', start);
    const std::string id = suite.substr(start, comma - start);
    if (!uchp::is_check_id(id)) throw std::invalid_argument("unknown check id: " + id);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ids;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

int run_check_cmd(const CheckOpts& o) {
  uchp::RunConfig cfg;
  if (!o.config.empty()) cfg = uchp::load_config_file(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (o.max_order) cfg.max_order = *o.max_order;
  if (o.workers) cfg.workers = *o.workers;

  const auto ids = expand_suite(o.suite);
  std::vector<uchp::CheckReport> reports;
  bool all_pass = true;
  if (o.m || o.n || o.nu) {
    uchp::CheckParams params;
    params.m = o.m;
    params.n = o.n;
    params.nu = o.nu;
    for (const auto& id : ids)
      for (auto& r : uchp::run_check(id, params, cfg)) {
        all_pass = all_pass && r.pass;
        reports.push_back(std::move(r));
      }
  } else {
    auto summary = uchp::run_suite(ids, cfg);
    all_pass = summary.pass;
    reports = std::move(summary.reports);
  }

  const std::string json = uchp::reports_to_json(reports, cfg.seed);
  const std::string json_path = o.out.empty() ? cfg.out_json : o.out;
  if (!json_path.empty())
    write_file(json_path, json);
  else
    std::cout << json;
  const std::string csv_path = o.csv.empty() ? cfg.out_csv : o.csv;
  if (!csv_path.empty()) write_file(csv_path, uchp::reports_to_csv(reports));

  size_t passed = 0;
  for (const auto& r : reports)
    if (r.pass) ++passed;
  std::cerr << reports.size() << " check records, " << passed << " passed, "
            << (reports.size() - passed) << " failed\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "univariate complex Hermite polynomials, Gaussian-kernel transforms, and "
      "a numerical identity verification suite"};
  app.require_subcommand(1);
  app.footer(
      "complex literals follow a+bi: '1.5', '-2e-3', 'i', '2i', '1+0i', "
      "'-1.25e2-0.5i'.\n"
      "transform inputs: uchp:m,n (polynomial), hermite:m (weighted line "
      "polynomial),\n"
      "hermprod:j,k (weighted plane product), mono:m,n (monomial z^m w^n), "
      "gauss[:a]\n"
      "(exp(-a|.|^2), default a = nu/2). exit codes: 0 success, 1 a check "
      "failed,\n"
      "2 invalid usage or constraint violation.");

  // --- eval
  auto* eval = app.add_subcommand("eval", "evaluate polynomials and closed forms");
  eval->require_subcommand(1);

  EvalUchpOpts eu;
  auto* ev_uchp = eval->add_subcommand(
      "uchp", "H_{m,n}(z) with the conjugate slot set to conj(z)");
  ev_uchp->add_option("--m", eu.m, "holomorphic order")->required();
  ev_uchp->add_option("--n", eu.n, "antiholomorphic order")->required();
  ev_uchp->add_option("--nu", eu.nu, "weight parameter (default 1)");
  ev_uchp->add_option("--z", eu.z, "evaluation point, a+bi")->required();

  EvalHermiteOpts eh;
  auto* ev_herm = eval->add_subcommand("hermite", "real Hermite polynomial H_n(x; nu)");
  ev_herm->add_option("--n", eh.n, "order")->required();
  ev_herm->add_option("--nu", eh.nu, "weight parameter (default 1)");
  ev_herm->add_option("--x", eh.x, "evaluation point")->required();

  EvalLaguerreOpts el;
  auto* ev_lag = eval->add_subcommand("laguerre", "Laguerre polynomial L_m(x)");
  ev_lag->add_option("--m", el.m, "order")->required();
  ev_lag->add_option("--x", el.x, "evaluation point")->required();

  EvalNormOpts en;
  auto* ev_norm = eval->add_subcommand(
      "norm", "squared Gaussian-weighted norm of H_{m,n}: (pi/nu) m! n! nu^(m+n)");
  ev_norm->add_option("--m", en.m, "holomorphic order")->required();
  ev_norm->add_option("--n", en.n, "antiholomorphic order")->required();
  ev_norm->add_option("--nu", en.nu, "weight parameter (default 1)");

  EvalGenfunOpts eg;
  auto* ev_gen = eval->add_subcommand(
      "genfun", "closed form (or truncated series with --series) of a summation formula");
  ev_gen->add_option("--formula", eg.formula,
                     "exp2var|one_index|mehler|bilinear|mixed|laguerre_diag|"
                     "diag_t|diag_t1|kernel_level")
      ->required();
  ev_gen->add_option("--nu", eg.nu, "weight parameter (default 1)");
  ev_gen->add_option("--mu", eg.mu, "real-line weight for mixed (default 1)");
  ev_gen->add_option("--x", eg.x, "real argument");
  ev_gen->add_option("--m", eg.m, "index m");
  ev_gen->add_option("--n", eg.n, "index n");
  ev_gen->add_option("--mp", eg.mp, "index m'");
  ev_gen->add_option("--z", eg.z, "complex argument z");
  ev_gen->add_option("--w", eg.w, "complex argument w");
  ev_gen->add_option("--u", eg.u, "complex parameter u");
  ev_gen->add_option("--v", eg.v, "complex parameter v");
  ev_gen->add_option("--t", eg.t, "complex parameter t (default 1)");
  ev_gen->add_option("--xi", eg.xi, "complex parameter xi (default 1)");
  ev_gen->add_option("--series", eg.series,
                     "evaluate the truncated series at this order instead");

  // --- transform
  TransformOpts to;
  auto* tr = app.add_subcommand("transform",
                                "apply an integral transform at chosen points");
  tr->add_option("kind", to.kind, "B1|B1_level|B2|T|T_inverse|T_pair|fourier|wigner|G")
      ->required();
  tr->add_option("--nu", to.nu, "weight parameter (default 1)");
  tr->add_option("--input", to.input, "input function token")->required();
  tr->add_option("--at", to.at,
                 "evaluation point: comma-separated components, one option "
                 "occurrence per point")
      ->required();
  tr->add_option("--level", to.level, "component index for B1_level");
  tr->add_option("--level-in", to.level_in, "source level for T_pair");
  tr->add_option("--level-out", to.level_out, "target level for T_pair");
  tr->add_option("--direction", to.direction, "phase direction for fourier, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  tr->add_option("--quad", to.quad, "nodes per axis for plane quadrature (default 80)");
  tr->add_option("--quad2", to.quad2,
                 "nodes per axis for two-plane quadrature (default 40)");
  tr->add_option("--halfwidth", to.halfwidth, "window half-width for wigner");
  tr->add_option("--points", to.points, "panel points for wigner");

  // --- check
  CheckOpts co;
  auto* ch = app.add_subcommand("check", "run identity checks and write reports");
  ch->add_option("--suite", co.suite, "'all' or comma-separated check ids")->required();
  ch->add_option("--config", co.config, "run configuration file (key = value lines)");
  ch->add_option("--out", co.out, "write the JSON report here instead of stdout");
  ch->add_option("--csv", co.csv, "also write a CSV report here");
  ch->add_option("--seed", co.seed, "seed for sampled points and coefficients");
  ch->add_option("--max-order", co.max_order, "cap on swept polynomial orders");
  ch->add_option("--workers", co.workers, "worker threads across checks");
  ch->add_option("--m", co.m, "pin the first order");
  ch->add_option("--n", co.n, "pin the second order");
  ch->add_option("--nu", co.nu, "pin the weight parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (ev_uchp->parsed()) return run_eval_uchp(eu);
    if (ev_herm->parsed()) return run_eval_hermite(eh);
    if (ev_lag->parsed()) return run_eval_laguerre(el);
    if (ev_norm->parsed()) return run_eval_norm(en);
    if (ev_gen->parsed()) return run_eval_genfun(eg);
    if (tr->parsed()) return run_transform(to);
    if (ch->parsed()) return run_check_cmd(co);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
