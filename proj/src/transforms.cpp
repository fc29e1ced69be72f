#include "uchp/transforms.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

namespace uchp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

cplx ipow(cplx base, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void require_terms(bool have, const char* what) {
  if (!have)
    throw std::invalid_argument(std::string(what) +
                                ": exact path requires a handle with basis terms");
}

void require_matching_nu(double handle_nu, double nu, const char* what) {
  if (handle_nu != nu)
    throw std::invalid_argument(std::string(what) +
                                ": handle basis parameter does not match nu");
}

}  // namespace

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) {
  return Mat2{lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
              lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 mat_scale(cplx s, const Mat2& g) { return Mat2{s * g.a, s * g.b, s * g.c, s * g.d}; }

const Mat2 kIdentityMat{1.0, 0.0, 0.0, 1.0};
const Mat2 kGiMat{1.0, cplx(0.0, 1.0), 1.0, cplx(0.0, -1.0)};

FunctionC2 gamma_apply(const Mat2& g, const FunctionC2& f) {
  FunctionC2 out;
  out.eval = [g, base = f.eval](cplx z, cplx w) {
    return base(g.a * z + g.b * w, g.c * z + g.d * w);
  };
  if (f.terms) {
    std::map<std::pair<int, int>, cplx> acc;
    for (const auto& t : *f.terms) {
      // (a z + b w)^m (c z + d w)^n expanded binomially
      for (int p = 0; p <= t.m; ++p) {
        const cplx left = binomial(t.m, p) * ipow(g.a, p) * ipow(g.b, t.m - p);
        for (int q = 0; q <= t.n; ++q) {
          const cplx right = binomial(t.n, q) * ipow(g.c, q) * ipow(g.d, t.n - q);
          acc[{p + q, (t.m - p) + (t.n - q)}] += t.coeff * left * right;
        }
      }
    }
    std::vector<MonoTerm> terms;
    terms.reserve(acc.size());
    for (const auto& [key, coeff] : acc)
      terms.push_back(MonoTerm{coeff, key.first, key.second});
    out.terms = std::move(terms);
  }
  return out;
}

FunctionC restrict_diag(int sign, const FunctionC2& F) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("restrict_diag: sign must be +1 or -1");
  FunctionC out;
  out.eval = [sign, base = F.eval](cplx z) {
    return base(z, sign > 0 ? z : std::conj(z));
  };
  return out;
}

FunctionC scale_arg(cplx theta, const FunctionC& f) {
  FunctionC out;
  out.eval = [theta, base = f.eval](cplx z) { return base(theta * z); };
  return out;
}

cplx bargmann1_at(const FunctionR& phi, double nu, cplx z,
                  const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const cplx pref = std::pow(nu / kPi, 0.75) * std::exp(-0.5 * nu * z * z);
  const cplx s = std::sqrt(2.0) * nu * z;
  const auto f = phi.eval;
  const cplx integral = integrate_gaussian_r(
      [s, f](double x) { return std::exp(s * x) * f(x); }, nu, rule, workers);
  return pref * integral;
}

cplx bargmann1_level_at(const FunctionR& phi, int n, double nu, cplx z,
                        const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  if (n < 0) throw std::invalid_argument("bargmann1_level_at: n must be >= 0");
  const cplx pref = std::pow(nu / kPi, 0.75) *
                    std::exp(-0.5 * nu * z * z) /
                    std::sqrt(std::pow(2.0, n) * std::pow(nu, n) * factorial(n));
  const cplx s = std::sqrt(2.0) * nu * z;
  const double center = std::sqrt(2.0) * z.real();  // (z + conj z)/sqrt(2)
  auto hn = std::make_shared<RealPoly>(real_hermite(n, nu));
  const auto f = phi.eval;
  const cplx integral = integrate_gaussian_r(
      [s, f, hn, center](double x) {
        return std::exp(s * x) * hn->eval(center - x) * f(x);
      },
      nu, rule, workers);
  return pref * integral;
}

FunctionC bargmann1_level_exact(const FunctionR& phi, int n, double nu) {
  require_terms(phi.terms.has_value(), "bargmann1_level_exact");
  require_matching_nu(phi.nu, nu, "bargmann1_level_exact");
  if (n < 0) throw std::invalid_argument("bargmann1_level_exact: n must be >= 0");
  const double level = std::sqrt(factorial(n) * std::pow(nu, n));
  std::vector<UchpTerm> terms;
  terms.reserve(phi.terms->size());
  for (const auto& t : *phi.terms) {
    const double scale =
        std::pow(nu / kPi, 0.25) * std::sqrt(std::pow(2.0, t.m)) / level;
    terms.push_back(UchpTerm{t.coeff * scale, t.m, n});
  }
  return uchp_combo(std::move(terms), nu);
}

cplx bargmann2_at(const FunctionR2& psi, double nu, cplx z, cplx w,
                  const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const cplx pref =
      std::pow(nu / kPi, 1.5) * std::exp(-0.5 * nu * (z * z + w * w));
  const cplx sx = std::sqrt(2.0) * nu * z;
  const cplx sy = std::sqrt(2.0) * nu * w;
  const auto f = psi.eval;
  const cplx integral = integrate_gaussian_r2(
      [sx, sy, f](double x, double y) { return std::exp(sx * x + sy * y) * f(x, y); },
      nu, rule, workers);
  return pref * integral;
}

cplx t_forward_at(const FunctionC& psi, double nu, cplx z, cplx w,
                  const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const cplx pref = std::pow(nu / kPi, 1.5) * std::exp(-nu * z * w);
  const auto f = psi.eval;
  const cplx integral = integrate_gaussian_c(
      [nu, z, w, f](cplx xi) {
        return std::exp(nu * (z * std::conj(xi) + w * xi)) * f(xi);
      },
      nu, rule, workers);
  return pref * integral;
}

FunctionC2 t_forward_exact(const FunctionC& psi, double nu) {
  require_terms(psi.terms.has_value(), "t_forward_exact");
  require_matching_nu(psi.nu, nu, "t_forward_exact");
  const double root = std::sqrt(nu / kPi);
  std::vector<MonoTerm> terms;
  terms.reserve(psi.terms->size());
  for (const auto& t : *psi.terms)
    terms.push_back(MonoTerm{t.coeff * root * std::pow(nu, t.m + t.n), t.m, t.n});
  return mono_combo(std::move(terms));
}

cplx t_inverse_at(const FunctionC2& phi, double nu, cplx xi,
                  const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const cplx pref = std::pow(nu / kPi, 1.5);
  const auto f = phi.eval;
  const cplx xibar = std::conj(xi);
  const cplx integral = integrate_gaussian_c2(
      [nu, xi, xibar, f](cplx z, cplx w) {
        const cplx zb = std::conj(z);
        const cplx wb = std::conj(w);
        return std::exp(nu * (zb * xi + wb * xibar - zb * wb)) * f(z, w);
      },
      nu, rule, workers);
  return pref * integral;
}

cplx t_pair_at(const FunctionC& psi, int n, int np, double nu, cplx z,
               const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  if (n < 0 || np < 0)
    throw std::invalid_argument("t_pair_at: levels must be >= 0");
  const double sign = (np % 2 == 0) ? 1.0 : -1.0;
  const double pref =
      sign * nu /
      (kPi * std::sqrt(factorial(n) * factorial(np) * std::pow(nu, n + np)));
  auto poly = std::make_shared<BiPoly>(complex_hermite(n, np, nu));
  const auto f = psi.eval;
  const cplx integral = integrate_gaussian_c(
      [nu, z, poly, f](cplx xi) {
        return std::exp(nu * std::conj(xi) * z) * poly->eval(xi - z) * f(xi);
      },
      nu, rule, workers);
  return pref * integral;
}

FunctionC t_pair_exact(const FunctionC& psi, int n, int np, double nu) {
  require_terms(psi.terms.has_value(), "t_pair_exact");
  require_matching_nu(psi.nu, nu, "t_pair_exact");
  if (n < 0 || np < 0)
    throw std::invalid_argument("t_pair_exact: levels must be >= 0");
  const double scale = std::sqrt(factorial(n) * std::pow(nu, n) /
                                 (factorial(np) * std::pow(nu, np)));
  std::vector<UchpTerm> terms;
  for (const auto& t : *psi.terms) {
    if (t.n != n) continue;  // orthogonal to the level-n space: maps to zero
    terms.push_back(UchpTerm{t.coeff * scale, t.m, np});
  }
  return uchp_combo(std::move(terms), nu);
}

cplx shifted_fourier_at(const FunctionC& phi, double nu, cplx xi,
                        const QuadratureRule& rule, int direction,
                        int workers) {
  require_positive_nu(nu);
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("shifted_fourier_at: direction must be +1 or -1");
  const double half = 0.5 * nu;
  const cplx pref = nu / (2.0 * kPi) * std::exp(half * std::norm(xi));
  const cplx phase = cplx(0.0, direction * half);
  const auto f = phi.eval;
  const cplx integral = integrate_gaussian_c(
      [phase, xi, f](cplx u) {
        return std::exp(phase * (xi * std::conj(u) + std::conj(xi) * u)) * f(u);
      },
      half, rule, workers);
  return pref * integral;
}

cplx plain_fourier_at(const FunctionC& phi_reduced, double decay, double nu,
                      cplx xi, const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  if (!(decay > 0.0))
    throw std::invalid_argument("plain_fourier_at: decay rate must be > 0");
  const cplx phase = cplx(0.0, 0.5 * nu);
  const auto f = phi_reduced.eval;
  const cplx integral = integrate_gaussian_c(
      [phase, xi, f](cplx u) {
        return std::exp(phase * (xi * std::conj(u) + std::conj(xi) * u)) * f(u);
      },
      decay, rule, workers);
  return nu / (2.0 * kPi) * integral;
}

LineIntegral wigner_at(const FunctionR2& f, double nu, double x, double y,
                       double halfwidth, int n_points) {
  require_positive_nu(nu);
  const auto g = f.eval;
  LineIntegral li = integrate_line(
      [nu, x, y, g](double t) {
        return std::exp(cplx(0.0, -nu * x * t)) * g(y + 0.5 * t, y - 0.5 * t);
      },
      halfwidth, n_points);
  li.value *= 1.0 / std::sqrt(2.0 * kPi);
  return li;
}

cplx g_composite_at(const FunctionR& phi, double nu, cplx z, cplx w,
                    const QuadratureRule& rule, int workers) {
  const cplx arg = (z + cplx(0.0, 1.0) * w) / std::sqrt(2.0);
  return std::sqrt(nu / kPi) * bargmann1_at(phi, nu, arg, rule, workers);
}

cplx integral_rep_uchp(int m, int n, cplx alpha, cplx beta, double gamma,
                       cplx z, const QuadratureRule& rule, int workers) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("integral_rep_uchp: orders must be >= 0");
  if (!(gamma > 0.0))
    throw std::invalid_argument("integral_rep_uchp: gamma must be > 0");
  const cplx ab = alpha * beta;
  if (std::abs(ab.imag()) > 1e-12 * std::max(1.0, std::abs(ab)) ||
      !(ab.real() > 0.0))
    throw std::invalid_argument(
        "integral_rep_uchp: alpha*beta must be a positive real number");
  const double nu = ab.real() / gamma;
  const cplx pref =
      (gamma / kPi) * ipow(-alpha, m) * ipow(beta, n) * std::exp(nu * std::norm(z));
  const cplx zb = std::conj(z);
  const cplx integral = integrate_gaussian_c(
      [m, n, alpha, beta, z, zb](cplx xi) {
        return ipow(xi, m) * ipow(std::conj(xi), n) *
               std::exp(alpha * xi * zb - beta * std::conj(xi) * z);
      },
      gamma, rule, workers);
  return pref * integral;
}

cplx cst_kernel(const CstBasis& basis_x, const CstBasis& basis_y, cplx x,
                cplx y, int truncation) {
  if (truncation < 1)
    throw std::invalid_argument("cst_kernel: truncation must be >= 1");
  cplx acc = 0.0;
  for (int k = 0; k < truncation; ++k) {
    const double nx = basis_x.norm(k);
    const double ny = basis_y.norm(k);
    if (!(nx > 0.0) || !(ny > 0.0) || !std::isfinite(nx) || !std::isfinite(ny))
      throw std::invalid_argument("cst_kernel: basis norms must be strictly positive");
    acc += std::conj(basis_x.eval(k, x)) * basis_y.eval(k, y) / (nx * ny);
  }
  return acc;
}

}  // namespace uchp
