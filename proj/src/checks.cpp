#include "uchp/checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <utility>

#include "json.hpp"
#include "uchp/genfun.hpp"
#include "uchp/handles.hpp"
#include "uchp/polynomials.hpp"
#include "uchp/quadrature.hpp"
#include "uchp/transforms.hpp"

namespace uchp {
namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

// ---------------------------------------------------------------------------
// formatting / hashing

std::string fmt_double(double v) {
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string fmt_cplx(cplx v) {
  std::string s = fmt_double(v.real());
  if (!(v.imag() < 0.0)) s += "+";
  s += fmt_double(v.imag());
  s += "i";
  return s;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

cplx ipow(cplx base, int e) {
  cplx r(1.0);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

void update_resid(double& r, cplx lhs, cplx rhs) {
  r = std::max(r, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0));
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double stop() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

// ---------------------------------------------------------------------------
// deterministic point and coefficient streams

double halton(std::uint64_t i, int base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
  }
  return r;
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit01(std::uint64_t& s) {
  return static_cast<double>(splitmix(s) >> 11) * 0x1.0p-53;
}

cplx rand_coeff(std::uint64_t& s) {
  const double re = 2.0 * unit01(s) - 1.0;
  const double im = 2.0 * unit01(s) - 1.0;
  return cplx(re, im);
}

struct Ctx {
  const RunConfig& cfg;
  QuadratureRule rule_r;
  QuadratureRule rule_c;
  QuadratureRule rule_c2;
  std::uint64_t idx0;        // low-discrepancy start index, seed-shifted
  std::string cfg_text;      // serialized config, hashed into provenance
};

cplx disc_point(const Ctx& ctx, std::uint64_t j, double radius) {
  const std::uint64_t i = ctx.idx0 + j;
  return std::polar(radius * std::sqrt(halton(i, 2)), 2.0 * kPi * halton(i, 3));
}

cplx disc_point_b(const Ctx& ctx, std::uint64_t j, double radius) {
  const std::uint64_t i = ctx.idx0 + j;
  return std::polar(radius * std::sqrt(halton(i, 5)), 2.0 * kPi * halton(i, 7));
}

cplx circle_point(const Ctx& ctx, std::uint64_t j) {
  return std::polar(1.0, 2.0 * kPi * halton(ctx.idx0 + j, 11));
}

std::uint64_t combo_stream(const Ctx& ctx, std::string_view tag) {
  return ctx.cfg.seed * 0x9E3779B97F4A7C15ull ^ fnv1a64(tag);
}

// ---------------------------------------------------------------------------
// sweeps and report assembly

std::vector<double> nu_sweep(const CheckParams& p) {
  if (p.nu) {
    require_positive_nu(*p.nu);
    return {*p.nu};
  }
  return {0.5, 1.0, 2.0};
}

void require_order(const std::optional<int>& v, int minimum, const char* check,
                   const char* name) {
  if (v && *v < minimum)
    throw std::invalid_argument(std::string(check) + ": " + name +
                                " must be >= " + std::to_string(minimum));
}

std::vector<std::pair<int, int>> order_pairs(const CheckParams& p, int mcap, int ncap,
                                             int mmin = 0, int nmin = 0) {
  std::vector<std::pair<int, int>> pairs;
  const int mlo = p.m ? *p.m : mmin;
  const int mhi = p.m ? *p.m : mcap;
  const int nlo = p.n ? *p.n : nmin;
  const int nhi = p.n ? *p.n : ncap;
  for (int m = mlo; m <= mhi; ++m)
    for (int n = nlo; n <= nhi; ++n) pairs.emplace_back(m, n);
  return pairs;
}

std::string order_params(const CheckParams& p, int mcap, int ncap) {
  std::string s;
  s += p.m ? " m=" + std::to_string(*p.m) : " m<=" + std::to_string(mcap);
  s += p.n ? " n=" + std::to_string(*p.n) : " n<=" + std::to_string(ncap);
  return s;
}

CheckReport finish(const Ctx& ctx, const std::string& id, std::string params,
                   double residual, double tol, std::string quad, double seconds,
                   std::string sign = "") {
  CheckReport r;
  r.id = id;
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tol;
  r.pass = residual <= tol;
  r.quad_orders = std::move(quad);
  r.seconds = seconds;
  r.sign_outcome = std::move(sign);
  r.statement = check_statement(id);
  r.provenance =
      "run:" + hex16(fnv1a64(id + "\n" + r.params + "\n" +
                             std::to_string(ctx.cfg.seed) + "\n" + ctx.cfg_text));
  return r;
}

// A candidate form of an ambiguous identity together with its measured
// residual.  The check passes only when exactly one candidate fits.
struct Candidate {
  std::string label;
  double residual = 0.0;
};

std::pair<double, bool> resolve_candidates(const std::vector<Candidate>& cands,
                                           double tol, std::string& outcome) {
  const Candidate* best = &cands.front();
  std::vector<const Candidate*> fits;
  for (const auto& c : cands) {
    if (c.residual < best->residual) best = &c;
    if (c.residual <= tol) fits.push_back(&c);
  }
  if (fits.size() == 1) {
    std::string rej;
    for (const auto& c : cands)
      if (&c != fits.front())
        rej += "; rejected " + c.label + " (residual " + fmt_double(c.residual) + ")";
    outcome = "resolved: " + fits.front()->label + rej;
    return {fits.front()->residual, true};
  }
  if (fits.empty()) {
    outcome = "unresolved: no candidate within tolerance; best " + best->label +
              " (residual " + fmt_double(best->residual) + ")";
    return {best->residual, false};
  }
  outcome = "ambiguous: " + std::to_string(fits.size()) + " candidates within tolerance:";
  for (const auto* c : fits) outcome += " " + c->label;
  return {2.0 * tol, false};  // keeps pass <=> residual <= tolerance
}

std::string quad_c(const Ctx& ctx) { return "n_c=" + std::to_string(ctx.cfg.n_c); }
std::string quad_c2(const Ctx& ctx) { return "n_c2=" + std::to_string(ctx.cfg.n_c2); }
std::string quad_r(const Ctx& ctx) { return "n_r=" + std::to_string(ctx.cfg.n_r); }

FunctionC uchp_basis(int m, int n, double nu) {
  return uchp_combo({UchpTerm{cplx(1.0), m, n}}, nu);
}

// ---------------------------------------------------------------------------
// kernel-transform checks

void check_action_T(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  require_order(p.m, 0, "action_T", "m");
  require_order(p.n, 0, "action_T", "n");
  const int cap = std::min(6, ctx.cfg.max_order);
  const auto pairs = order_pairs(p, cap, cap);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (auto [m, n] : pairs) {
      const BiPoly h = complex_hermite(m, n, nu);
      for (std::uint64_t j = 0; j < 5; ++j) {
        const cplx z = disc_point(ctx, j, 2.0);
        const cplx w = disc_point_b(ctx, j, 2.0);
        const auto f = [&](cplx xi) {
          return h.eval(xi) * std::exp(nu * (z * std::conj(xi) + w * xi - z * w));
        };
        const cplx lhs = integrate_gaussian_c(f, nu, ctx.rule_c, ctx.cfg.workers);
        const cplx rhs = (kPi / nu) * std::pow(nu, m + n) * ipow(z, m) * ipow(w, n);
        update_resid(resid, lhs, rhs);
      }
    }
    out.push_back(finish(ctx, "action_T",
                         "nu=" + fmt_double(nu) + order_params(p, cap, cap) + " pts=5",
                         resid, ctx.cfg.tol_compose, quad_c(ctx), timer.stop()));
  }
}

void check_vanishing(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  if ((p.m && *p.m < 1) || (p.n && *p.n < 1))
    throw std::invalid_argument(
        "vanishing: requires m >= 1 and n >= 1 (the (0,0) moment equals pi/nu, "
        "not zero)");
  const int cap = std::min(6, ctx.cfg.max_order);
  const auto pairs = order_pairs(p, cap, cap, 1, 1);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (auto [m, n] : pairs) {
      const BiPoly h = complex_hermite(m, n, nu);
      const cplx moment = integrate_gaussian_c([&](cplx xi) { return h.eval(xi); }, nu,
                                               ctx.rule_c, ctx.cfg.workers);
      resid = std::max(resid, std::abs(moment) / std::sqrt(uchp_norm_sq(m, n, nu)));
    }
    out.push_back(finish(ctx, "vanishing",
                         "nu=" + fmt_double(nu) + order_params(p, cap, cap), resid,
                         1e-10, quad_c(ctx), timer.stop()));
  }
}

void check_reproducing(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (std::uint64_t j = 0; j < 5; ++j) {
      const cplx z = disc_point(ctx, j, 2.0);
      const cplx w = disc_point_b(ctx, j, 2.0);
      const auto f = [&](cplx xi) {
        return std::exp(nu * (z * std::conj(xi) + w * xi));
      };
      const cplx lhs = integrate_gaussian_c(f, nu, ctx.rule_c, ctx.cfg.workers);
      const cplx rhs = (kPi / nu) * std::exp(nu * z * w);
      update_resid(resid, lhs, rhs);
    }
    out.push_back(finish(ctx, "reproducing", "nu=" + fmt_double(nu) + " pts=5", resid,
                         ctx.cfg.tol_quad, quad_c(ctx), timer.stop()));
  }
}

std::vector<UchpTerm> seeded_terms(std::uint64_t& stream,
                                   const std::vector<std::pair<int, int>>& pairs) {
  std::vector<UchpTerm> terms;
  terms.reserve(pairs.size());
  for (auto [m, n] : pairs) terms.push_back(UchpTerm{rand_coeff(stream), m, n});
  return terms;
}

// orders fed through the two-plane quadrature stay below the separate cap
std::vector<std::pair<int, int>> clamp_orders(std::vector<std::pair<int, int>> pairs,
                                              int cap) {
  for (auto& [m, n] : pairs) {
    m = std::min(m, cap);
    n = std::min(n, cap);
  }
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

void check_isometry_T(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "isometry_T");
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::pair<int, int>> basis;
      for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
          if ((m + n + k) % 3 != 0) basis.emplace_back(m, n);
      const auto psi = uchp_combo(seeded_terms(stream, basis), nu);
      const cplx direct = integrate_gaussian_c(
          [&](cplx xi) { return cplx(std::norm(psi.eval(xi)), 0.0); }, nu, ctx.rule_c,
          ctx.cfg.workers);
      const auto image = t_forward_exact(psi, nu);
      double transformed = 0.0;
      for (const auto& t : *image.terms)
        transformed += std::norm(t.coeff) * (kPi / nu) * (kPi / nu) * factorial(t.m) *
                       factorial(t.n) / std::pow(nu, t.m + t.n);
      update_resid(resid, direct, cplx(transformed, 0.0));
    }
    out.push_back(finish(ctx, "isometry_T",
                         "nu=" + fmt_double(nu) + " combos=3 m<=4 n<=4", resid,
                         ctx.cfg.tol_compose, quad_c(ctx), timer.stop()));
  }
}

void check_inverse_T(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "inverse_T");
  const std::vector<std::vector<std::pair<int, int>>> combos{
      {{0, 0}, {1, 0}, {1, 1}},
      {{1, 0}, {2, 1}},
      {{0, 1}, {1, 1}, {2, 0}},
      {{0, 0}, {2, 1}},
      {{1, 1}, {0, 2}, {2, 2}},
  };
  const auto nus = nu_sweep(p);
  std::map<double, std::pair<double, int>> per_nu;  // nu -> (residual, combos)
  Timer timer;
  for (size_t k = 0; k < combos.size(); ++k) {
    const double nu = nus[k % nus.size()];
    const auto psi = uchp_combo(
        seeded_terms(stream, clamp_orders(combos[k], ctx.cfg.max_order_c2)), nu);
    const auto image = t_forward_exact(psi, nu);
    double resid = per_nu.count(nu) ? per_nu[nu].first : 0.0;
    for (std::uint64_t j = 0; j < 2; ++j) {
      const cplx xi = disc_point(ctx, 3 * k + j, 0.8);
      const cplx back = t_inverse_at(image, nu, xi, ctx.rule_c2, ctx.cfg.workers);
      update_resid(resid, back, psi.eval(xi));
    }
    per_nu[nu] = {resid, per_nu.count(nu) ? per_nu[nu].second + 1 : 1};
  }
  const double each = timer.stop() / static_cast<double>(per_nu.size());
  for (const auto& [nu, rc] : per_nu)
    out.push_back(finish(ctx, "inverse_T",
                         "nu=" + fmt_double(nu) + " combos=" + std::to_string(rc.second) +
                             " pts=2",
                         rc.first, ctx.cfg.tol_roundtrip, quad_c2(ctx), each));
}

void check_image_Fn(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  require_order(p.m, 0, "image_Fn", "m");
  require_order(p.n, 0, "image_Fn", "n");
  if ((p.m && *p.m > 7) || (p.n && *p.n > 7))
    throw std::invalid_argument(
        "image_Fn: pinned order must be <= 7 (the circle grid has 8 points per axis)");
  std::vector<std::pair<int, int>> modes{{1, 1}, {2, 1}, {0, 2}};
  if (p.m || p.n) modes = {{p.m.value_or(1), p.n.value_or(1)}};
  const double rz = 0.9, rw = 0.7;
  constexpr int P = 8;
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (auto [m, n] : modes) {
      const auto h = uchp_basis(m, n, nu);
      std::array<std::array<cplx, P>, P> F{};
      for (int j = 0; j < P; ++j)
        for (int k = 0; k < P; ++k)
          F[static_cast<size_t>(j)][static_cast<size_t>(k)] = t_forward_at(
              h, nu, std::polar(rz, 2.0 * kPi * j / P), std::polar(rw, 2.0 * kPi * k / P),
              ctx.rule_c, ctx.cfg.workers);
      cplx target{};
      double junk = 0.0;
      for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) {
          cplx mode{};
          for (int j = 0; j < P; ++j)
            for (int k = 0; k < P; ++k)
              mode += F[static_cast<size_t>(j)][static_cast<size_t>(k)] *
                      std::polar(1.0, -2.0 * kPi * (a * j + b * k) / P);
          mode /= static_cast<double>(P * P);
          if (a == m && b == n)
            target = mode;
          else
            junk = std::max(junk, std::abs(mode));
        }
      resid = std::max(resid, junk / std::abs(target));
    }
    std::string modestr;
    for (auto [m, n] : modes)
      modestr += "(" + std::to_string(m) + " " + std::to_string(n) + ")";
    out.push_back(finish(ctx, "image_Fn",
                         "nu=" + fmt_double(nu) + " modes=" + modestr + " grid=8x8",
                         resid, ctx.cfg.tol_compose, quad_c(ctx), timer.stop()));
  }
}

void check_fourier_conjugation(const Ctx& ctx, const CheckParams& p,
                               std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "fourier_conjugation");
  for (double nu : nu_sweep(p)) {
    {  // composition route: T^{-1} Gamma_theta T against the conjugated Fourier
      Timer timer;
      const std::vector<std::vector<std::pair<int, int>>> combos{
          {{1, 0}, {2, 1}, {0, 3}},
          {{0, 0}, {1, 1}, {2, 0}, {1, 2}},
      };
      std::vector<Candidate> cands{{"theta=+i", 0.0}, {"theta=-i", 0.0}};
      for (size_t k = 0; k < combos.size(); ++k) {
        const auto phi = uchp_combo(
            seeded_terms(stream, clamp_orders(combos[k], ctx.cfg.max_order_c2)), nu);
        const auto image = t_forward_exact(phi, nu);
        const cplx xi = disc_point(ctx, 20 + k, 0.8);
        const cplx lhs = shifted_fourier_at(phi, nu, xi, ctx.rule_c, +1, ctx.cfg.workers);
        const std::array<cplx, 2> thetas{kI, -kI};
        for (size_t c = 0; c < thetas.size(); ++c) {
          const auto rotated = gamma_apply(mat_scale(thetas[c], kIdentityMat), image);
          const cplx rhs =
              t_inverse_at(rotated, nu, xi, ctx.rule_c2, ctx.cfg.workers);
          update_resid(cands[c].residual, rhs, lhs);
        }
      }
      std::string outcome;
      auto [resid, pass] = resolve_candidates(cands, ctx.cfg.tol_compose, outcome);
      (void)pass;
      out.push_back(finish(ctx, "fourier_conjugation",
                           "nu=" + fmt_double(nu) + " variant=composition combos=2 pts=1",
                           resid, ctx.cfg.tol_compose, quad_c(ctx) + " " + quad_c2(ctx),
                           timer.stop(), outcome));
    }
    {  // ground-state conjugation direction on Gaussians
      Timer timer;
      std::vector<Candidate> cands{{"F~ = M(-nu/2) o F o M(+nu/2)", 0.0},
                                   {"F~ = M(+nu/2) o F o M(-nu/2)", 0.0}};
      FunctionC unit;
      unit.eval = [](cplx) { return cplx(1.0); };
      for (int k = 0; k < 2; ++k) {
        const double b = 0.5 * nu + (k == 0 ? 0.8 : 1.3);
        FunctionC gauss;
        gauss.eval = [b](cplx u) { return std::exp(-b * std::norm(u)); };
        for (std::uint64_t j = 0; j < 2; ++j) {
          const cplx xi = disc_point(ctx, 30 + 2 * static_cast<std::uint64_t>(k) + j, 1.0);
          const cplx lhs =
              shifted_fourier_at(gauss, nu, xi, ctx.rule_c, +1, ctx.cfg.workers);
          const cplx inner =
              std::exp(0.5 * nu * std::norm(xi)) *
              plain_fourier_at(unit, b + 0.5 * nu, nu, xi, ctx.rule_c, ctx.cfg.workers);
          const cplx outer =
              std::exp(-0.5 * nu * std::norm(xi)) *
              plain_fourier_at(unit, b - 0.5 * nu, nu, xi, ctx.rule_c, ctx.cfg.workers);
          update_resid(cands[0].residual, inner, lhs);
          update_resid(cands[1].residual, outer, lhs);
        }
      }
      std::string outcome;
      auto [resid, pass] = resolve_candidates(cands, ctx.cfg.tol_compose, outcome);
      (void)pass;
      out.push_back(finish(ctx, "fourier_conjugation",
                           "nu=" + fmt_double(nu) + " variant=groundstate widths=2 pts=2",
                           resid, ctx.cfg.tol_compose, quad_c(ctx), timer.stop(),
                           outcome));
    }
  }
}

void check_restriction_fourier(const Ctx& ctx, const CheckParams& p,
                               std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "restriction_fourier");
  const std::vector<std::vector<int>> orders{{0, 1, 2}, {1, 2, 3}, {0, 3, 4}};
  for (double nu : nu_sweep(p)) {
    Timer timer;
    const double lift = std::sqrt(kPi / nu);
    std::vector<Candidate> cands{{"theta=+i", 0.0}, {"theta=-i", 0.0}};
    for (size_t k = 0; k < orders.size(); ++k) {
      std::vector<UchpTerm> terms;
      for (int m : orders[k]) terms.push_back(UchpTerm{rand_coeff(stream), m, 0});
      const auto psi = uchp_combo(terms, nu);
      const auto plane = t_forward_exact(psi, nu);
      const std::array<cplx, 2> thetas{kI, -kI};
      for (size_t c = 0; c < thetas.size(); ++c) {
        const auto restricted = scale_arg(thetas[c], restrict_diag(+1, plane));
        for (std::uint64_t j = 0; j < 3; ++j) {
          const cplx z = disc_point(ctx, 4 * k + j, 1.2);
          const cplx lhs = lift * restricted.eval(z);
          const cplx rhs =
              shifted_fourier_at(psi, 0.5 * nu, z, ctx.rule_c, +1, ctx.cfg.workers);
          update_resid(cands[c].residual, lhs, rhs);
        }
      }
    }
    std::string outcome;
    auto [resid, pass] = resolve_candidates(cands, ctx.cfg.tol_compose, outcome);
    (void)pass;
    out.push_back(finish(ctx, "restriction_fourier",
                         "nu=" + fmt_double(nu) + " combos=3 pts=3", resid,
                         ctx.cfg.tol_compose, quad_c(ctx), timer.stop(), outcome));
  }
}

void check_fourier_eigen(const Ctx& ctx, const CheckParams& p,
                         std::vector<CheckReport>& out) {
  require_order(p.m, 0, "fourier_eigen", "m");
  require_order(p.n, 0, "fourier_eigen", "n");
  std::vector<std::pair<int, int>> pairs;
  if (p.m && p.n) {
    pairs.emplace_back(*p.m, *p.n);
  } else if (p.m) {
    for (int n = 0; *p.m + n <= 8; ++n) pairs.emplace_back(*p.m, n);
  } else if (p.n) {
    for (int m = 0; m + *p.n <= 8; ++m) pairs.emplace_back(m, *p.n);
  } else {
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; m + n <= 8; ++n) pairs.emplace_back(m, n);
  }
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    std::string eigen_note;
    for (auto [m, n] : pairs) {
      const auto phi = uchp_basis(m, n, nu);
      const BiPoly h = complex_hermite(m, n, nu);
      const cplx eigen = ipow(kI, (m + n) % 4);
      cplx best_lhs{}, best_h{};
      for (std::uint64_t j = 0; j < 2; ++j) {
        const cplx xi = disc_point(ctx, j, 2.0);
        const cplx lhs = shifted_fourier_at(phi, nu, xi, ctx.rule_c, +1, ctx.cfg.workers);
        const cplx hv = h.eval(xi);
        update_resid(resid, lhs, eigen * hv);
        if (std::abs(hv) > std::abs(best_h)) {
          best_h = hv;
          best_lhs = lhs;
        }
      }
      if (pairs.size() == 1 && std::abs(best_h) > 0.0) {
        const cplx est = best_lhs / best_h;
        static const std::array<std::pair<cplx, const char*>, 4> wheel{
            {{cplx(1.0), "+1"}, {kI, "+i"}, {cplx(-1.0), "-1"}, {-kI, "-i"}}};
        const auto* nearest = &wheel[0];
        for (const auto& cand : wheel)
          if (std::abs(est - cand.first) < std::abs(est - nearest->first))
            nearest = &cand;
        eigen_note = std::string("eigenvalue = ") + nearest->second + " (estimate " +
                     fmt_cplx(est) + ")";
      }
    }
    const std::string span =
        (p.m || p.n) ? order_params(p, 8, 8) : std::string(" m+n<=8");
    out.push_back(finish(ctx, "fourier_eigen", "nu=" + fmt_double(nu) + span + " pts=2",
                         resid, ctx.cfg.tol_compose, quad_c(ctx), timer.stop(),
                         eigen_note));
  }
}

void check_b2_gamma(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "b2_gamma");
  const double root2 = std::sqrt(2.0);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    std::vector<Candidate> cands{{"g = g_i/sqrt(2)", 0.0}, {"g = g_i", 0.0}};
    for (int k = 0; k < 5; ++k) {
      const int j = static_cast<int>(splitmix(stream) % 4);
      const int l = static_cast<int>(splitmix(stream) % 4);
      const auto psi = hermite_gauss_r2(j, l, nu);
      const auto psi_c = as_plane(psi);
      for (std::uint64_t q = 0; q < 2; ++q) {
        const cplx z = disc_point(ctx, 2 * static_cast<std::uint64_t>(k) + q, 1.3);
        const cplx w = disc_point_b(ctx, 2 * static_cast<std::uint64_t>(k) + q, 1.3);
        const cplx lhs = bargmann2_at(psi, nu, z, w, ctx.rule_r, ctx.cfg.workers);
        const cplx scaled = t_forward_at(psi_c, nu, (z + kI * w) / root2,
                                         (z - kI * w) / root2, ctx.rule_c,
                                         ctx.cfg.workers);
        const cplx unscaled =
            t_forward_at(psi_c, nu, z + kI * w, z - kI * w, ctx.rule_c, ctx.cfg.workers);
        update_resid(cands[0].residual, scaled, lhs);
        update_resid(cands[1].residual, unscaled, lhs);
      }
    }
    std::string outcome;
    auto [resid, pass] = resolve_candidates(cands, ctx.cfg.tol_compose, outcome);
    (void)pass;
    out.push_back(finish(ctx, "b2_gamma", "nu=" + fmt_double(nu) + " fns=5 pts=2", resid,
                         ctx.cfg.tol_compose, quad_r(ctx) + " " + quad_c(ctx),
                         timer.stop(), outcome));
  }
}

void check_wigner_intertwine(const Ctx& ctx, const CheckParams& p,
                             std::vector<CheckReport>& out) {
  const std::vector<std::pair<cplx, cplx>> points{
      {cplx(0.7, 0.2), cplx(0.4, -0.1)}, {cplx(-0.5, 0.3), cplx(0.9, 0.4)}};
  for (double nu : nu_sweep(p)) {
    Timer timer;
    std::vector<Candidate> cands{
        {"C = 2/sqrt(nu) sigma = -1", 0.0},
        {"C = 2/sqrt(nu) sigma = +1", 0.0},
        {"C = sqrt(1/(2 nu)) sigma = -1", 0.0},
        {"C = sqrt(1/(2 nu)) sigma = +1", 0.0},
    };
    for (double a : {0.6, 1.1}) {
      const auto f = gaussian_r2(a);
      FunctionC wf;
      wf.eval = [&f, nu, &ctx](cplx xi) {
        return wigner_at(f, nu, xi.real(), xi.imag(), ctx.cfg.line_halfwidth,
                         ctx.cfg.n_line)
            .value;
      };
      const auto fc = as_plane(f);
      for (const auto& [z, w] : points) {
        const cplx lhs = t_forward_at(wf, nu, z, w, ctx.rule_c, ctx.cfg.workers);
        const cplx base =
            t_forward_at(fc, 0.5 * nu, -kI * z + w, -kI * z - w, ctx.rule_c,
                         ctx.cfg.workers);
        const cplx grow = std::exp(0.25 * nu * (z + w) * (z + w));
        const std::array<cplx, 4> rhs{
            (2.0 / std::sqrt(nu)) / grow * base,
            (2.0 / std::sqrt(nu)) * grow * base,
            std::sqrt(0.5 / nu) / grow * base,
            std::sqrt(0.5 / nu) * grow * base,
        };
        for (size_t c = 0; c < rhs.size(); ++c)
          update_resid(cands[c].residual, rhs[c], lhs);
      }
    }
    std::string outcome;
    auto [resid, pass] = resolve_candidates(cands, ctx.cfg.tol_compose, outcome);
    (void)pass;
    out.push_back(finish(ctx, "wigner_intertwine",
                         "nu=" + fmt_double(nu) + " widths=2 pts=2", resid,
                         ctx.cfg.tol_compose,
                         quad_c(ctx) + " n_line=" + std::to_string(ctx.cfg.n_line),
                         timer.stop(), outcome));
  }
}

void check_action_Tpair(const Ctx& ctx, const CheckParams& p,
                        std::vector<CheckReport>& out) {
  require_order(p.m, 0, "action_Tpair", "m");
  require_order(p.n, 0, "action_Tpair", "n");
  const int mcap = p.m ? *p.m : 5;
  const int ncap = p.n ? *p.n : 4;
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    std::uint64_t idx = 0;
    for (int m = p.m.value_or(0); m <= mcap; ++m)
      for (int n = p.n.value_or(0); n <= ncap; ++n)
        for (int np = 0; np <= 4; ++np) {
          const auto psi = uchp_basis(m, n, nu);
          const double scale = std::sqrt(factorial(n) * std::pow(nu, n) /
                                         (factorial(np) * std::pow(nu, np)));
          const BiPoly target = complex_hermite(m, np, nu);
          const cplx z = disc_point(ctx, idx++, 1.2);
          const cplx got = t_pair_at(psi, n, np, nu, z, ctx.rule_c, ctx.cfg.workers);
          update_resid(resid, got, scale * target.eval(z));
        }
    out.push_back(finish(ctx, "action_Tpair",
                         "nu=" + fmt_double(nu) + order_params(p, 5, 4) + " np<=4 pts=1",
                         resid, ctx.cfg.tol_compose, quad_c(ctx), timer.stop()));
  }
}

void check_unitary_Tpair(const Ctx& ctx, const CheckParams& p,
                         std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "unitary_Tpair");
  const std::vector<std::pair<int, int>> levels{{0, 1}, {1, 2}, {2, 0}};
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double parseval = 0.0;
    double roundtrip = 0.0;
    for (size_t k = 0; k < levels.size(); ++k) {
      const auto [n, np] = levels[k];
      std::vector<UchpTerm> terms;
      for (int m = 0; m <= 4; ++m) terms.push_back(UchpTerm{rand_coeff(stream), m, n});
      const auto psi = uchp_combo(terms, nu);
      const cplx direct = integrate_gaussian_c(
          [&](cplx xi) { return cplx(std::norm(psi.eval(xi)), 0.0); }, nu, ctx.rule_c,
          ctx.cfg.workers);
      const auto image = t_pair_exact(psi, n, np, nu);
      double transformed = 0.0;
      for (const auto& t : *image.terms)
        transformed += std::norm(t.coeff) * uchp_norm_sq(t.m, t.n, nu);
      update_resid(parseval, direct, cplx(transformed, 0.0));
      const cplx z = disc_point(ctx, 7 + k, 1.0);
      const cplx back = t_pair_at(image, np, n, nu, z, ctx.rule_c, ctx.cfg.workers);
      update_resid(roundtrip, back, psi.eval(z));
    }
    const double half = 0.5 * timer.stop();
    out.push_back(finish(ctx, "unitary_Tpair",
                         "nu=" + fmt_double(nu) + " variant=parseval levels=3 m<=4",
                         parseval, ctx.cfg.tol_compose, quad_c(ctx), half));
    out.push_back(finish(ctx, "unitary_Tpair",
                         "nu=" + fmt_double(nu) + " variant=roundtrip levels=3 m<=4",
                         roundtrip, ctx.cfg.tol_roundtrip, quad_c(ctx), half));
  }
}

// ---------------------------------------------------------------------------
// summation-formula checks

void run_genfun_check(const Ctx& ctx, const CheckParams& p, const std::string& id,
                      GenFormulaId gid, std::vector<CheckReport>& out) {
  require_order(p.m, 0, id.c_str(), "m");
  require_order(p.n, 0, id.c_str(), "n");
  const int cap = std::min(3, ctx.cfg.max_order);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (std::uint64_t j = 0; j < 5; ++j) {
      GenParams gp;
      gp.nu = nu;
      gp.z = disc_point(ctx, j, 1.4);
      gp.w = disc_point_b(ctx, j, 1.4);
      gp.m = p.m ? *p.m : static_cast<int>(j % static_cast<std::uint64_t>(cap + 1));
      gp.n = p.n ? *p.n : static_cast<int>((j + 1) % static_cast<std::uint64_t>(cap + 1));
      gp.mp = static_cast<int>((j + 2) % static_cast<std::uint64_t>(cap + 1));
      switch (gid) {
        case GenFormulaId::exp2var:
          gp.u = 0.8 * disc_point(ctx, j + 11, 1.0);
          gp.v = 0.8 * disc_point_b(ctx, j + 11, 1.0);
          break;
        case GenFormulaId::one_index:
          gp.u = disc_point(ctx, j + 11, 0.9);
          break;
        case GenFormulaId::mehler:
        case GenFormulaId::laguerre_diag:
          gp.t = circle_point(ctx, j);
          break;
        case GenFormulaId::bilinear:
          gp.t = circle_point(ctx, j);
          gp.u = std::polar((0.18 + 0.45 * halton(ctx.idx0 + j, 13)) / nu,
                            2.0 * kPi * halton(ctx.idx0 + j, 17));
          break;
        case GenFormulaId::mixed_real_complex:
          gp.mu = (j % 2 == 0) ? 0.8 : 1.3;
          gp.x = -1.0 + 2.0 * halton(ctx.idx0 + j, 13);
          gp.xi = std::polar(0.4 + 0.5 * halton(ctx.idx0 + j, 17),
                             2.0 * kPi * halton(ctx.idx0 + j, 19));
          gp.z = disc_point(ctx, j, 1.2);
          break;
        case GenFormulaId::kernel_level_n:
          gp.x = -1.2 + 2.4 * halton(ctx.idx0 + j, 13);
          gp.z = disc_point(ctx, j, 1.2);
          break;
        default:
          break;
      }
      if (auto viol = genfun_constraint_violation(gid, gp))
        throw std::logic_error(id + ": generated an invalid point: " + *viol);
      const cplx rhs = genfun_closed_form(gid, gp);
      const cplx lhs = genfun_series(gid, gp, 64).value;
      update_resid(resid, lhs, rhs);
    }
    out.push_back(finish(ctx, id, "nu=" + fmt_double(nu) + " pts=5 trunc=64", resid,
                         ctx.cfg.tol_series, "-", timer.stop()));
  }
}

void check_diag_probability(const Ctx& ctx, const CheckParams& p,
                            std::vector<CheckReport>& out) {
  require_order(p.m, 0, "diag_probability", "m");
  const int cap = p.m ? *p.m : std::min(4, ctx.cfg.max_order);
  const int mlo = p.m ? *p.m : 0;
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    // unit-circle parameter against the Laguerre closed form
    for (std::uint64_t j = 0; j < 5; ++j) {
      GenParams gp;
      gp.nu = nu;
      gp.m = mlo + static_cast<int>(j % static_cast<std::uint64_t>(cap - mlo + 1));
      gp.z = disc_point(ctx, j, 1.3);
      gp.t = circle_point(ctx, j);
      const cplx rhs = genfun_closed_form(GenFormulaId::diag_t, gp);
      const cplx lhs = genfun_series(GenFormulaId::diag_t, gp, 64).value;
      update_resid(resid, lhs, rhs);
    }
    // the t = 1 series has nonnegative terms: its partial sums must climb
    // monotonically to the closed value
    for (int m = mlo; m <= cap; ++m) {
      const cplx z = disc_point(ctx, static_cast<std::uint64_t>(m) + 3, 1.3);
      const auto tab = complex_hermite_values(z, std::conj(z), nu, m, 64);
      GenParams gp;
      gp.nu = nu;
      gp.m = m;
      gp.z = z;
      const double closed = genfun_closed_form(GenFormulaId::diag_t1, gp).real();
      double sum = 0.0;
      double worst_drop = 0.0;
      for (int k = 0; k <= 64; ++k) {
        const double term = std::norm(tab[static_cast<size_t>(m)][static_cast<size_t>(k)]) /
                            (factorial(k) * std::pow(nu, k));
        const double next = sum + term;
        worst_drop = std::max(worst_drop, sum - next);
        sum = next;
      }
      resid = std::max(resid, std::abs(sum - closed) / std::max(closed, 1.0));
      resid = std::max(resid, worst_drop / std::max(closed, 1.0));
    }
    out.push_back(finish(ctx, "diag_probability",
                         "nu=" + fmt_double(nu) + (p.m ? " m=" + std::to_string(*p.m)
                                                       : " m<=" + std::to_string(cap)) +
                             " pts=5 trunc=64",
                         resid, ctx.cfg.tol_series, "-", timer.stop()));
  }
}

// ---------------------------------------------------------------------------
// structural / coefficient checks

void check_landau_eigen(const Ctx& ctx, const CheckParams& p,
                        std::vector<CheckReport>& out) {
  require_order(p.m, 0, "landau_eigen", "m");
  require_order(p.n, 0, "landau_eigen", "n");
  const auto pairs = order_pairs(p, 8, 8);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (auto [m, n] : pairs) {
      const BiPoly h = complex_hermite(m, n, nu);
      const BiPoly defect = landau_apply(h, nu) - cplx(nu * n) * h;
      resid = std::max(resid, defect.max_abs_coeff() / std::max(h.max_abs_coeff(), 1.0));
    }
    out.push_back(finish(ctx, "landau_eigen",
                         "nu=" + fmt_double(nu) + order_params(p, 8, 8), resid,
                         ctx.cfg.tol_coeff, "-", timer.stop()));
  }
}

void check_annihilation_image(const Ctx& ctx, const CheckParams& p,
                              std::vector<CheckReport>& out) {
  auto stream = combo_stream(ctx, "annihilation_image");
  const double h = 1e-3;
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    std::vector<FunctionR> phis;
    phis.push_back(hermite_combo({HermiteTerm{cplx(1.0), 0}}, nu));
    phis.push_back(hermite_combo({HermiteTerm{rand_coeff(stream), 0},
                                  HermiteTerm{rand_coeff(stream), 1},
                                  HermiteTerm{rand_coeff(stream), 2}},
                                 nu));
    for (const auto& phi : phis) {
      for (std::uint64_t j = 0; j < 5; ++j) {
        const cplx z = disc_point(ctx, j, 1.0);
        const cplx w = disc_point_b(ctx, j, 1.0);
        const auto G = [&](cplx zz, cplx ww) {
          return g_composite_at(phi, nu, zz, ww, ctx.rule_r, ctx.cfg.workers);
        };
        // fourth-order central differences in each slot
        const auto stencil = [&](const std::function<cplx(double)>& f) {
          return (-f(2.0) + 8.0 * f(1.0) - 8.0 * f(-1.0) + f(-2.0)) / (12.0 * h);
        };
        const cplx dz = stencil([&](double s) { return G(z + s * h, w); });
        const cplx dw = stencil([&](double s) { return G(z, w + s * h); });
        const double scale = std::max(std::abs(G(z, w)), 1.0);
        resid = std::max(resid, std::abs(dz + kI * dw) / scale);
      }
    }
    // quadrature route against the closed image of the Hermite family
    for (int m = 0; m <= 4; ++m) {
      const auto hm = hermite_combo({HermiteTerm{cplx(1.0), m}}, nu);
      for (std::uint64_t j = 0; j < 2; ++j) {
        const cplx z = disc_point(ctx, 11 + j, 1.0);
        const cplx w = disc_point_b(ctx, 11 + j, 1.0);
        const cplx got = g_composite_at(hm, nu, z, w, ctx.rule_r, ctx.cfg.workers);
        const cplx want =
            std::pow(nu / kPi, 0.75) * std::pow(nu, m) * ipow(z + kI * w, m);
        update_resid(resid, got, want);
      }
    }
    out.push_back(finish(ctx, "annihilation_image",
                         "nu=" + fmt_double(nu) + " fns=2 pts=5 h=" + fmt_double(h),
                         resid, ctx.cfg.tol_quad, quad_r(ctx), timer.stop()));
  }
}

void check_b1_level_action(const Ctx& ctx, const CheckParams& p,
                           std::vector<CheckReport>& out) {
  require_order(p.m, 0, "b1_level_action", "m");
  require_order(p.n, 0, "b1_level_action", "n");
  const int mcap = p.m ? *p.m : 5;
  const int ncap = p.n ? *p.n : 4;
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (int m = p.m.value_or(0); m <= mcap; ++m) {
      const auto phi = hermite_combo({HermiteTerm{cplx(1.0), m}}, nu);
      for (int n = p.n.value_or(0); n <= ncap; ++n) {
        const double scale =
            std::pow(nu / kPi, 0.25) *
            std::sqrt(std::pow(2.0, m) / (factorial(n) * std::pow(nu, n)));
        const BiPoly hmn = complex_hermite(m, n, nu);
        for (std::uint64_t j = 0; j < 2; ++j) {
          const cplx z = disc_point(ctx, j, 1.2);
          const cplx got =
              bargmann1_level_at(phi, n, nu, z, ctx.rule_r, ctx.cfg.workers);
          update_resid(resid, got, scale * hmn.eval(z));
        }
      }
    }
    out.push_back(finish(ctx, "b1_level_action",
                         "nu=" + fmt_double(nu) + order_params(p, 5, 4) + " pts=2",
                         resid, ctx.cfg.tol_compose, quad_r(ctx), timer.stop()));
  }
}

void check_kernel_level(const Ctx& ctx, const CheckParams& p,
                        std::vector<CheckReport>& out) {
  run_genfun_check(ctx, p, "kernel_level", GenFormulaId::kernel_level_n, out);
}

void check_norms(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  const int cap = std::min(4, ctx.cfg.max_order);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    std::vector<BiPoly> basis;
    std::vector<double> diag;
    for (int m = 0; m <= cap; ++m)
      for (int n = 0; n <= cap; ++n) {
        basis.push_back(complex_hermite(m, n, nu));
        diag.push_back(uchp_norm_sq(m, n, nu));
      }
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = a; b < basis.size(); ++b) {
        const cplx gram = integrate_gaussian_c(
            [&](cplx xi) { return basis[a].eval(xi) * std::conj(basis[b].eval(xi)); },
            nu, ctx.rule_c, ctx.cfg.workers);
        if (a == b)
          resid = std::max(resid, std::abs(gram - diag[a]) / diag[a]);
        else
          resid = std::max(resid, std::abs(gram) / std::sqrt(diag[a] * diag[b]));
      }
    out.push_back(finish(ctx, "norms",
                         "nu=" + fmt_double(nu) + " m<=" + std::to_string(cap) +
                             " n<=" + std::to_string(cap),
                         resid, ctx.cfg.tol_quad, quad_c(ctx), timer.stop()));
  }
}

void check_rescaling(const Ctx& ctx, const CheckParams& p, std::vector<CheckReport>& out) {
  require_order(p.m, 0, "rescaling", "m");
  require_order(p.n, 0, "rescaling", "n");
  const auto pairs = order_pairs(p, 8, 8);
  for (double nu : nu_sweep(p)) {
    Timer timer;
    double resid = 0.0;
    for (auto [m, n] : pairs) {
      const BiPoly h = complex_hermite(m, n, nu);
      for (std::uint64_t j = 0; j < 3; ++j) {
        const cplx z = disc_point(ctx, j, 1.5);
        resid = std::max(resid, uchp_rescaling_residual(m, n, nu, z) /
                                    std::max(std::abs(h.eval(z)), 1.0));
      }
    }
    for (int m = 0; m <= 8; ++m) {
      const RealPoly base = real_hermite(m, 1.0);
      const RealPoly squared = real_hermite(m, nu * nu);
      for (std::uint64_t j = 0; j < 3; ++j) {
        const double x = -1.5 + 3.0 * halton(ctx.idx0 + j, 13);
        const double lhs = std::pow(nu, m) * base.eval(nu * x);
        const double rhs = squared.eval(x);
        resid = std::max(resid, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0));
      }
    }
    out.push_back(finish(ctx, "rescaling",
                         "nu=" + fmt_double(nu) + order_params(p, 8, 8) + " pts=3",
                         resid, ctx.cfg.tol_coeff, "-", timer.stop()));
  }
}

void check_integral_rep(const Ctx& ctx, const CheckParams& p,
                        std::vector<CheckReport>& out) {
  require_order(p.m, 0, "integral_rep", "m");
  require_order(p.n, 0, "integral_rep", "n");
  struct Set {
    cplx alpha, beta;
    double gamma;
  };
  std::vector<Set> sets;
  if (p.nu) {
    require_positive_nu(*p.nu);
    const double r = std::sqrt(*p.nu);
    sets.push_back({std::polar(r, 0.4), std::polar(r, -0.4), 1.0});
  } else {
    sets.push_back({std::polar(1.2, 0.4), std::polar(0.9, -0.4), 1.1});
    sets.push_back({cplx(0.8), cplx(1.3), 0.7});
    sets.push_back({kI, -kI, 1.0});
  }
  const auto pairs = order_pairs(p, std::min(3, ctx.cfg.max_order),
                                 std::min(2, ctx.cfg.max_order));
  for (const auto& s : sets) {
    Timer timer;
    const double nu = (s.alpha * s.beta).real() / s.gamma;
    double resid = 0.0;
    for (auto [m, n] : pairs) {
      const BiPoly h = complex_hermite(m, n, nu);
      for (std::uint64_t j = 0; j < 2; ++j) {
        const cplx z = disc_point(ctx, j, 1.0);
        const cplx got = integral_rep_uchp(m, n, s.alpha, s.beta, s.gamma, z,
                                           ctx.rule_c, ctx.cfg.workers);
        update_resid(resid, got, h.eval(z));
      }
    }
    out.push_back(finish(ctx, "integral_rep",
                         "alpha=" + fmt_cplx(s.alpha) + " beta=" + fmt_cplx(s.beta) +
                             " gamma=" + fmt_double(s.gamma) +
                             order_params(p, std::min(3, ctx.cfg.max_order),
                                          std::min(2, ctx.cfg.max_order)) +
                             " pts=2",
                         resid, 1e-7, quad_c(ctx), timer.stop()));
  }
}

void check_gaussian_rep(const Ctx& ctx, const CheckParams& p,
                        std::vector<CheckReport>& out) {
  struct Set {
    double gamma;
    cplx alpha, beta;
  };
  const std::vector<Set> sets{
      {1.0, kI, -kI},
      {1.1, std::polar(1.2, 0.4), std::polar(0.9, -0.4)},
      {0.9, cplx(0.7), cplx(1.0)},
  };
  (void)p;
  for (const auto& s : sets) {
    Timer timer;
    double resid = 0.0;
    for (std::uint64_t j = 0; j < 5; ++j) {
      const cplx z = disc_point(ctx, j, 1.3);
      const auto f = [&](cplx xi) {
        return std::exp(s.alpha * xi * std::conj(z) - s.beta * std::conj(xi) * z);
      };
      const cplx lhs = integrate_gaussian_c(f, s.gamma, ctx.rule_c, ctx.cfg.workers);
      const cplx rhs =
          (kPi / s.gamma) * std::exp(-(s.alpha * s.beta / s.gamma) * std::norm(z));
      update_resid(resid, lhs, rhs);
    }
    out.push_back(finish(ctx, "gaussian_rep",
                         "gamma=" + fmt_double(s.gamma) + " alpha=" + fmt_cplx(s.alpha) +
                             " beta=" + fmt_cplx(s.beta) + " pts=5",
                         resid, ctx.cfg.tol_quad, quad_c(ctx), timer.stop()));
  }
}

void check_mehler(const Ctx& c, const CheckParams& p, std::vector<CheckReport>& o) {
  run_genfun_check(c, p, "mehler", GenFormulaId::mehler, o);
}
void check_bilinear_gen(const Ctx& c, const CheckParams& p, std::vector<CheckReport>& o) {
  run_genfun_check(c, p, "bilinear_gen", GenFormulaId::bilinear, o);
}
void check_exp_gen(const Ctx& c, const CheckParams& p, std::vector<CheckReport>& o) {
  run_genfun_check(c, p, "exp_gen", GenFormulaId::exp2var, o);
}
void check_one_index_gen(const Ctx& c, const CheckParams& p, std::vector<CheckReport>& o) {
  run_genfun_check(c, p, "one_index_gen", GenFormulaId::one_index, o);
}
void check_mixed_gen(const Ctx& c, const CheckParams& p, std::vector<CheckReport>& o) {
  run_genfun_check(c, p, "mixed_gen", GenFormulaId::mixed_real_complex, o);
}
void check_laguerre_diag(const Ctx& c, const CheckParams& p, std::vector<CheckReport>& o) {
  run_genfun_check(c, p, "laguerre_diag", GenFormulaId::laguerre_diag, o);
}

// ---------------------------------------------------------------------------
// registry

struct Entry {
  void (*fn)(const Ctx&, const CheckParams&, std::vector<CheckReport>&);
  const char* statement;
};

const std::vector<std::pair<std::string, Entry>>& registry() {
  static const std::vector<std::pair<std::string, Entry>> reg{
      {"action_T",
       {check_action_T,
        "int_C exp(-nu|xi|^2) H_{m,n}(xi) exp(nu(z conj(xi) + w xi - z w)) dA(xi)"
        " = (pi/nu) nu^(m+n) z^m w^n"}},
      {"vanishing",
       {check_vanishing,
        "int_C exp(-nu|xi|^2) H_{m,n}(xi) dA(xi) = 0 whenever m >= 1 and n >= 1;"
        " the residual is the moment over the norm of H_{m,n}"}},
      {"reproducing",
       {check_reproducing,
        "int_C exp(-nu|xi|^2) exp(nu z conj(xi)) exp(nu w xi) dA(xi)"
        " = (pi/nu) exp(nu z w)"}},
      {"isometry_T",
       {check_isometry_T,
        "the kernel transform T preserves the Gaussian-weighted L2 norm:"
        " the quadrature norm of psi equals the coefficient norm of T psi"}},
      {"inverse_T",
       {check_inverse_T,
        "the adjoint-kernel integral inverts T: applying it to the forward image"
        " of a polynomial combination returns the combination pointwise"}},
      {"image_Fn",
       {check_image_Fn,
        "T H_{m,n} is proportional to z^m w^n: on centred circles every other"
        " Fourier mode vanishes, so the quotient by w^n is holomorphic in z"}},
      {"fourier_conjugation",
       {check_fourier_conjugation,
        "T^{-1} Gamma_theta T equals the Gaussian-conjugated Fourier transform for"
        " exactly one theta in {+i, -i}; the ground-state conjugation"
        " F~ = M(d) o F o M(-d) holds for exactly one direction d in {-nu/2, +nu/2}"
        " with M(a) = multiplication by exp(-a|z|^2)"}},
      {"restriction_fourier",
       {check_restriction_fourier,
        "sqrt(pi/nu) (T psi)(theta z, theta z) equals the half-parameter conjugated"
        " Fourier transform of psi for exactly one theta in {+i, -i}, on"
        " combinations of the holomorphic family H_{m,0}"}},
      {"fourier_eigen",
       {check_fourier_eigen,
        "the Gaussian-conjugated Fourier transform maps H_{m,n} to"
        " i^(m+n) H_{m,n}; every eigenvalue estimate lies in {1, i, -1, -i}"}},
      {"b2_gamma",
       {check_b2_gamma,
        "B2 psi (z, w) = (T psi)(g (z, w)) for exactly one g in"
        " {g_i, g_i/sqrt(2)}, with g_i = [[1, i], [1, -i]]"}},
      {"wigner_intertwine",
       {check_wigner_intertwine,
        "T^nu (W^nu f)(z, w) = C exp(sigma (nu/4)(z+w)^2) (T^{nu/2} f)(-iz+w, -iz-w)"
        " for exactly one (C, sigma) with C in {sqrt(1/(2 nu)), 2/sqrt(nu)} and"
        " sigma in {+1, -1}, on radial Gaussians"}},
      {"action_Tpair",
       {check_action_Tpair,
        "T_{n,n'} H_{m,n} = sqrt(n! nu^n / (n'! nu^n')) H_{m,n'}"}},
      {"unitary_Tpair",
       {check_unitary_Tpair,
        "T_{n,n'} preserves the Gaussian-weighted norm between the level-n and"
        " level-n' families, and T_{n',n} inverts it pointwise"}},
      {"mehler",
       {check_mehler,
        "sum_k t^k H_{m,k}(z) H_{k,m'}(w) / (k! nu^k) = (-t)^m'"
        " H_{m,m'}(z - t w, conj(z - t w)) exp(nu t w conj(z)) for |t| = 1"}},
      {"bilinear_gen",
       {check_bilinear_gen,
        "sum_{m,k} u^m t^k H_{m,k}(z) H_{k,m'}(w) / (m! k! nu^k) = (-nu t)^m'"
        " (conj(z) - conj(t) conj(w) - u)^m'"
        " exp(nu t conj(z) w + nu u (z - t w)) for |t| = 1 and nu |u| < 1"}},
      {"exp_gen",
       {check_exp_gen,
        "sum_{m,n} u^m v^n H_{m,n}(z) / (m! n!)"
        " = exp(nu (u z + v conj(z) - u v))"}},
      {"one_index_gen",
       {check_one_index_gen,
        "sum_m u^m H_{m,n}(z) / m! = nu^n (conj(z) - u)^n exp(nu u z)"}},
      {"mixed_gen",
       {check_mixed_gen,
        "sum_m xi^m H_m(x; mu) conj(H_{m,n}(z; nu)) / (m! nu^m)"
        " = exp(-mu (xi^2 conj(z)^2 - 2 x xi conj(z)))"
        " H_n(conj(z) + nu z / (2 mu xi^2) - x/xi; mu xi^2)"}},
      {"b1_level_action",
       {check_b1_level_action,
        "the level-n line transform maps H_m to"
        " (nu/pi)^{1/4} sqrt(2^m / (n! nu^n)) H_{m,n}"}},
      {"kernel_level",
       {check_kernel_level,
        "sum_m H_m(x) H_{m,n}(z) / (2^{m/2} nu^m m!), normalized, equals the"
        " closed Gaussian-times-Hermite kernel of the level-n line transform"}},
      {"laguerre_diag",
       {check_laguerre_diag,
        "sum_k t^k H_{m,k}(z) H_{k,m}(w) / (k! nu^k) = (nu t)^m m!"
        " L_m(nu |z - t w|^2) exp(nu t w conj(z)) for |t| = 1"}},
      {"diag_probability",
       {check_diag_probability,
        "sum_k t^k |H_{m,k}(z)|^2 / (k! nu^k) = m! (nu t)^m"
        " L_m(nu |1 - t|^2 |z|^2) exp(nu t |z|^2) for |t| = 1; at t = 1 the"
        " terms are nonnegative, the partial sums climb monotonically, and the"
        " total is m! nu^m exp(nu |z|^2)"}},
      {"landau_eigen",
       {check_landau_eigen,
        "(-d^2/(dz dzbar) + nu zbar d/dzbar) H_{m,n} = nu n H_{m,n},"
        " exactly in coefficients"}},
      {"annihilation_image",
       {check_annihilation_image,
        "(d/dz + i d/dw) annihilates the composite image G phi"
        " = sqrt(nu/pi) (B1 phi)((z + i w)/sqrt(2)), and on the Hermite family"
        " G H_m = (nu/pi)^{3/4} nu^m (z + i w)^m"}},
      {"norms",
       {check_norms,
        "<H_{m,n}, H_{m',n'}> = delta_{mm'} delta_{nn'} (pi/nu) m! n! nu^{m+n}"
        " under the exp(-nu|z|^2) weight"}},
      {"rescaling",
       {check_rescaling,
        "H_{m,n}(z; nu) = nu^{(m+n)/2} H_{m,n}(sqrt(nu) z; 1) and"
        " nu^m H_m(nu x; 1) = H_m(x; nu^2)"}},
      {"integral_rep",
       {check_integral_rep,
        "(gamma/pi) (-alpha)^m beta^n exp((alpha beta/gamma)|z|^2)"
        " int_C xi^m conj(xi)^n exp(-gamma|xi|^2 + alpha xi conj(z)"
        " - beta conj(xi) z) dA = H_{m,n}(z; alpha beta / gamma)"
        " for real positive alpha beta"}},
      {"gaussian_rep",
       {check_gaussian_rep,
        "int_C exp(-gamma|xi|^2 + alpha xi conj(z) - beta conj(xi) z) dA"
        " = (pi/gamma) exp(-(alpha beta/gamma)|z|^2)"}},
  };
  return reg;
}

void validate_config(const RunConfig& cfg) {
  const auto bad = [](const std::string& msg) {
    throw std::invalid_argument("config: " + msg);
  };
  if (cfg.n_r < 1) bad("n_r must be >= 1");
  if (cfg.n_c < 1) bad("n_c must be >= 1");
  if (cfg.n_c2 < 1) bad("n_c2 must be >= 1");
  if (cfg.n_line < 1) bad("n_line must be >= 1");
  if (!(cfg.line_halfwidth > 0.0)) bad("line_halfwidth must be > 0");
  if (cfg.workers < 1) bad("workers must be >= 1");
  if (cfg.chunk < 1) bad("chunk must be >= 1");
  if (cfg.max_order < 0) bad("max_order must be >= 0");
  if (cfg.max_order_c2 < 0) bad("max_order_c2 must be >= 0");
  if (!(cfg.tol_coeff > 0.0)) bad("tol_coeff must be > 0");
  if (!(cfg.tol_series > 0.0)) bad("tol_series must be > 0");
  if (!(cfg.tol_quad > 0.0)) bad("tol_quad must be > 0");
  if (!(cfg.tol_compose > 0.0)) bad("tol_compose must be > 0");
  if (!(cfg.tol_roundtrip > 0.0)) bad("tol_roundtrip must be > 0");
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface

const std::vector<std::string>& check_catalog() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, entry] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

bool is_check_id(const std::string& id) {
  for (const auto& [known, entry] : registry())
    if (known == id) return true;
  return false;
}

std::string check_statement(const std::string& id) {
  for (const auto& [known, entry] : registry())
    if (known == id) return entry.statement;
  throw std::invalid_argument("unknown check id: " + id);
}

std::vector<CheckReport> run_check(const std::string& id, const CheckParams& params,
                                   const RunConfig& cfg) {
  validate_config(cfg);
  if (params.nu) require_positive_nu(*params.nu);
  for (const auto& [known, entry] : registry()) {
    if (known != id) continue;
    Ctx ctx{cfg,
            gauss_hermite_rule(cfg.n_r),
            gauss_hermite_rule(cfg.n_c),
            gauss_hermite_rule(cfg.n_c2),
            1 + cfg.seed % 64,
            serialize_config(cfg)};
    std::vector<CheckReport> out;
    entry.fn(ctx, params, out);
    return out;
  }
  throw std::invalid_argument("unknown check id: " + id);
}

SuiteSummary run_suite(const std::vector<std::string>& ids, const RunConfig& cfg) {
  validate_config(cfg);
  for (const auto& id : ids)
    if (!is_check_id(id)) throw std::invalid_argument("unknown check id: " + id);
  std::vector<std::string> selected;
  for (const auto& id : check_catalog())
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) selected.push_back(id);

  SuiteSummary summary;
  if (selected.empty()) return summary;

  std::vector<std::vector<CheckReport>> slots(selected.size());
  if (cfg.workers <= 1 || selected.size() == 1) {
    for (size_t i = 0; i < selected.size(); ++i)
      slots[i] = run_check(selected[i], CheckParams{}, cfg);
  } else {
    RunConfig inner = cfg;
    inner.workers = 1;  // whole checks are distributed instead
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto work = [&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= selected.size()) return;
        try {
          slots[i] = run_check(selected[i], CheckParams{}, inner);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const size_t n_threads = std::min<size_t>(static_cast<size_t>(cfg.workers),
                                              selected.size());
    pool.reserve(n_threads);
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  for (auto& reports : slots)
    for (auto& r : reports) {
      summary.pass = summary.pass && r.pass;
      summary.reports.push_back(std::move(r));
    }
  return summary;
}

// ---------------------------------------------------------------------------
// config serialization

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.n_r == b.n_r && a.n_c == b.n_c && a.n_c2 == b.n_c2 && a.n_line == b.n_line &&
         a.line_halfwidth == b.line_halfwidth && a.workers == b.workers &&
         a.chunk == b.chunk && a.seed == b.seed && a.max_order == b.max_order &&
         a.max_order_c2 == b.max_order_c2 && a.tol_coeff == b.tol_coeff &&
         a.tol_series == b.tol_series && a.tol_quad == b.tol_quad &&
         a.tol_compose == b.tol_compose && a.tol_roundtrip == b.tol_roundtrip &&
         a.out_json == b.out_json && a.out_csv == b.out_csv;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "n_r = " << cfg.n_r << "\n";
  os << "n_c = " << cfg.n_c << "\n";
  os << "n_c2 = " << cfg.n_c2 << "\n";
  os << "n_line = " << cfg.n_line << "\n";
  os << "line_halfwidth = " << fmt_double(cfg.line_halfwidth) << "\n";
  os << "workers = " << cfg.workers << "\n";
  os << "chunk = " << cfg.chunk << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "max_order = " << cfg.max_order << "\n";
  os << "max_order_c2 = " << cfg.max_order_c2 << "\n";
  os << "tol_coeff = " << fmt_double(cfg.tol_coeff) << "\n";
  os << "tol_series = " << fmt_double(cfg.tol_series) << "\n";
  os << "tol_quad = " << fmt_double(cfg.tol_quad) << "\n";
  os << "tol_compose = " << fmt_double(cfg.tol_compose) << "\n";
  os << "tol_roundtrip = " << fmt_double(cfg.tol_roundtrip) << "\n";
  os << "out_json = " << cfg.out_json << "\n";
  os << "out_csv = " << cfg.out_csv << "\n";
  return os.str();
}

namespace {

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    throw std::invalid_argument("config: cannot parse value for key '" + key +
                                "': " + value);
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not of the form key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n_r") cfg.n_r = parse_number<int>(key, value);
    else if (key == "n_c") cfg.n_c = parse_number<int>(key, value);
    else if (key == "n_c2") cfg.n_c2 = parse_number<int>(key, value);
    else if (key == "n_line") cfg.n_line = parse_number<int>(key, value);
    else if (key == "line_halfwidth") cfg.line_halfwidth = parse_number<double>(key, value);
    else if (key == "workers") cfg.workers = parse_number<int>(key, value);
    else if (key == "chunk") cfg.chunk = parse_number<int>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "max_order") cfg.max_order = parse_number<int>(key, value);
    else if (key == "max_order_c2") cfg.max_order_c2 = parse_number<int>(key, value);
    else if (key == "tol_coeff") cfg.tol_coeff = parse_number<double>(key, value);
    else if (key == "tol_series") cfg.tol_series = parse_number<double>(key, value);
    else if (key == "tol_quad") cfg.tol_quad = parse_number<double>(key, value);
    else if (key == "tol_compose") cfg.tol_compose = parse_number<double>(key, value);
    else if (key == "tol_roundtrip") cfg.tol_roundtrip = parse_number<double>(key, value);
    else if (key == "out_json") cfg.out_json = value;
    else if (key == "out_csv") cfg.out_csv = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  validate_config(cfg);
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---------------------------------------------------------------------------
// report serialization

std::string reports_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed) {
  nlohmann::ordered_json root;
  root["schema"] = 1;
  root["seed"] = seed;
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  root["pass"] = all;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["params"] = r.params;
    o["residual"] = r.residual;
    o["tolerance"] = r.tolerance;
    o["pass"] = r.pass;
    o["quad_orders"] = r.quad_orders;
    o["sign_outcome"] = r.sign_outcome;
    o["statement"] = r.statement;
    o["provenance"] = r.provenance;
    arr.push_back(std::move(o));
  }
  root["reports"] = std::move(arr);
  return root.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  const auto root = nlohmann::json::parse(text);
  if (!root.contains("schema") || root["schema"].get<int>() != 1)
    throw std::runtime_error("unsupported report schema");
  std::vector<CheckReport> reports;
  for (const auto& o : root.at("reports")) {
    CheckReport r;
    r.id = o.at("id").get<std::string>();
    r.params = o.at("params").get<std::string>();
    r.residual = o.at("residual").get<double>();
    r.tolerance = o.at("tolerance").get<double>();
    r.pass = o.at("pass").get<bool>();
    r.quad_orders = o.at("quad_orders").get<std::string>();
    r.sign_outcome = o.at("sign_outcome").get<std::string>();
    r.statement = o.at("statement").get<std::string>();
    r.provenance = o.at("provenance").get<std::string>();
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "check_id,params,residual,tolerance,pass,seconds\n";
  for (const auto& r : reports) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.6f", r.seconds);
    out += r.id + "," + r.params + "," + fmt_double(r.residual) + "," +
           fmt_double(r.tolerance) + "," + (r.pass ? "true" : "false") + "," + seconds +
           "\n";
  }
  return out;
}

}  // namespace uchp
