#include "uchp/genfun.hpp"

#include <cmath>
#include <stdexcept>

namespace uchp {

namespace {

cplx ipow(cplx b, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

bool unit_modulus(cplx t) { return std::abs(std::abs(t) - 1.0) <= 1e-12; }

}  // namespace

const char* genfun_name(GenFormulaId id) {
  switch (id) {
    case GenFormulaId::exp2var: return "exp2var";
    case GenFormulaId::one_index: return "one_index";
    case GenFormulaId::mehler: return "mehler";
    case GenFormulaId::bilinear: return "bilinear";
    case GenFormulaId::mixed_real_complex: return "mixed_real_complex";
    case GenFormulaId::laguerre_diag: return "laguerre_diag";
    case GenFormulaId::diag_t: return "diag_t";
    case GenFormulaId::diag_t1: return "diag_t1";
    case GenFormulaId::kernel_level_n: return "kernel_level_n";
  }
  return "unknown";
}

std::optional<std::string> genfun_constraint_violation(GenFormulaId id, const GenParams& p) {
  require_positive_nu(p.nu);
  if (p.m < 0 || p.n < 0 || p.mp < 0)
    throw std::invalid_argument("genfun: indices must be nonnegative");
  switch (id) {
    case GenFormulaId::mehler:
    case GenFormulaId::laguerre_diag:
    case GenFormulaId::diag_t:
      if (!unit_modulus(p.t)) return "requires |t| = 1";
      break;
    case GenFormulaId::bilinear:
      if (!unit_modulus(p.t)) return "requires |t| = 1";
      if (!(p.nu * std::abs(p.u) < 1.0)) return "requires nu*|u| < 1";
      break;
    case GenFormulaId::mixed_real_complex:
      require_positive_nu(p.mu);
      if (std::abs(p.xi) < 1e-12) return "requires xi != 0";
      break;
    default:
      break;
  }
  return std::nullopt;
}

cplx genfun_closed_form(GenFormulaId id, const GenParams& p) {
  if (auto v = genfun_constraint_violation(id, p))
    throw std::domain_error(std::string("genfun_closed_form: ") + *v);
  const cplx zb = std::conj(p.z);
  const cplx wb = std::conj(p.w);
  const cplx tb = std::conj(p.t);
  switch (id) {
    case GenFormulaId::exp2var:
      return std::exp(p.nu * (p.u * p.z + p.v * zb - p.u * p.v));
    case GenFormulaId::one_index:
      return std::pow(p.nu, p.n) * ipow(zb - p.u, p.n) * std::exp(p.nu * p.u * p.z);
    case GenFormulaId::mehler:
      return ipow(-p.t, p.mp) *
             complex_hermite(p.m, p.mp, p.nu).eval(p.z - p.t * p.w, zb - tb * wb) *
             std::exp(p.nu * p.t * p.w * zb);
    case GenFormulaId::bilinear:
      return ipow(-p.nu * p.t, p.mp) * ipow(zb - tb * wb - p.u, p.mp) *
             std::exp(p.nu * p.t * zb * p.w + p.nu * p.u * (p.z - p.t * p.w));
    case GenFormulaId::mixed_real_complex: {
      const cplx s = p.mu * p.xi * p.xi;  // scale parameter of the right-hand Hermite
      const cplx arg = zb + p.nu * p.z / (2.0 * s) - p.x / p.xi;
      return std::exp(-p.mu * (p.xi * p.xi * zb * zb - 2.0 * p.x * p.xi * zb)) *
             hermite_value(p.n, s, arg);
    }
    case GenFormulaId::laguerre_diag:
      return ipow(p.nu * p.t, p.m) * factorial(p.m) *
             laguerre(p.m).eval(p.nu * std::norm(p.z - p.t * p.w)) *
             std::exp(p.nu * p.t * p.w * zb);
    case GenFormulaId::diag_t: {
      const double zz = std::norm(p.z);
      return factorial(p.m) * ipow(p.nu * p.t, p.m) *
             laguerre(p.m).eval(p.nu * std::norm(cplx(1.0) - p.t) * zz) *
             std::exp(p.nu * p.t * zz);
    }
    case GenFormulaId::diag_t1:
      return factorial(p.m) * std::pow(p.nu, p.m) * std::exp(p.nu * std::norm(p.z));
    case GenFormulaId::kernel_level_n: {
      const double pref = std::pow(p.nu / M_PI, 0.75) /
                          std::sqrt(std::pow(2.0, p.n) * std::pow(p.nu, p.n) * factorial(p.n));
      const cplx expo = std::exp(-0.5 * p.nu * p.z * p.z + std::sqrt(2.0) * p.nu * p.x * p.z);
      const cplx arg = (p.z + zb) / std::sqrt(2.0) - p.x;
      return pref * expo * hermite_value(p.n, p.nu, arg);
    }
  }
  throw std::logic_error("genfun_closed_form: unknown id");
}

SeriesValue genfun_series(GenFormulaId id, const GenParams& p, int trunc) {
  if (trunc < 1 || trunc > 169)
    throw std::invalid_argument("genfun_series: trunc must lie in [1, 169]");
  if (auto v = genfun_constraint_violation(id, p))
    throw std::domain_error(std::string("genfun_series: ") + *v);
  const cplx zb = std::conj(p.z);
  const cplx wb = std::conj(p.w);
  SeriesValue out;
  switch (id) {
    case GenFormulaId::exp2var: {
      const auto tab = complex_hermite_values(p.z, zb, p.nu, trunc, trunc);
      for (int s = 0; s <= trunc; ++s) {
        cplx shell = 0.0;
        for (int m = 0; m <= s; ++m) {
          const int n = s - m;
          shell += ipow(p.u, m) * ipow(p.v, n) * tab[static_cast<size_t>(m)][static_cast<size_t>(n)] /
                   (factorial(m) * factorial(n));
        }
        out.value += shell;
        out.tail = std::abs(shell);
      }
      return out;
    }
    case GenFormulaId::one_index: {
      const auto tab = complex_hermite_values(p.z, zb, p.nu, trunc, p.n);
      for (int k = 0; k <= trunc; ++k) {
        const cplx term = ipow(p.u, k) * tab[static_cast<size_t>(k)][static_cast<size_t>(p.n)] / factorial(k);
        out.value += term;
        out.tail = std::abs(term);
      }
      return out;
    }
    case GenFormulaId::mehler:
    case GenFormulaId::laguerre_diag: {
      const int mp = (id == GenFormulaId::laguerre_diag) ? p.m : p.mp;
      const auto A = complex_hermite_values(p.z, zb, p.nu, p.m, trunc);
      const auto B = complex_hermite_values(p.w, wb, p.nu, trunc, mp);
      for (int n = 0; n <= trunc; ++n) {
        const cplx term = ipow(p.t, n) * A[static_cast<size_t>(p.m)][static_cast<size_t>(n)] *
                          B[static_cast<size_t>(n)][static_cast<size_t>(mp)] /
                          (factorial(n) * std::pow(p.nu, n));
        out.value += term;
        out.tail = std::abs(term);
      }
      return out;
    }
    case GenFormulaId::bilinear: {
      const auto A = complex_hermite_values(p.z, zb, p.nu, trunc, trunc);
      const auto B = complex_hermite_values(p.w, wb, p.nu, trunc, p.mp);
      for (int s = 0; s <= trunc; ++s) {
        cplx shell = 0.0;
        for (int m = 0; m <= s; ++m) {
          const int n = s - m;
          shell += ipow(p.u, m) * ipow(p.t, n) * A[static_cast<size_t>(m)][static_cast<size_t>(n)] *
                   B[static_cast<size_t>(n)][static_cast<size_t>(p.mp)] /
                   (factorial(m) * factorial(n) * std::pow(p.nu, n));
        }
        out.value += shell;
        out.tail = std::abs(shell);
      }
      return out;
    }
    case GenFormulaId::mixed_real_complex: {
      const auto C = complex_hermite_values(p.z, zb, p.nu, trunc, p.n);
      for (int m = 0; m <= trunc; ++m) {
        const cplx hm = hermite_value(m, p.mu, p.x);
        const cplx term = ipow(p.xi, m) * hm *
                          std::conj(C[static_cast<size_t>(m)][static_cast<size_t>(p.n)]) /
                          (factorial(m) * std::pow(p.nu, m));
        out.value += term;
        out.tail = std::abs(term);
      }
      return out;
    }
    case GenFormulaId::diag_t:
    case GenFormulaId::diag_t1: {
      const cplx t = (id == GenFormulaId::diag_t1) ? cplx(1.0) : p.t;
      const auto A = complex_hermite_values(p.z, zb, p.nu, p.m, trunc);
      for (int n = 0; n <= trunc; ++n) {
        const cplx term = ipow(t, n) *
                          std::norm(A[static_cast<size_t>(p.m)][static_cast<size_t>(n)]) /
                          (factorial(n) * std::pow(p.nu, n));
        out.value += term;
        out.tail = std::abs(term);
      }
      return out;
    }
    case GenFormulaId::kernel_level_n: {
      const auto A = complex_hermite_values(p.z, zb, p.nu, trunc, p.n);
      const double pref =
          std::pow(p.nu / M_PI, 0.75) / std::sqrt(factorial(p.n) * std::pow(p.nu, p.n));
      for (int m = 0; m <= trunc; ++m) {
        const cplx hm = hermite_value(m, p.nu, p.x);
        const cplx term = hm * A[static_cast<size_t>(m)][static_cast<size_t>(p.n)] /
                          (std::sqrt(std::pow(2.0, m)) * std::pow(p.nu, m) * factorial(m));
        out.value += term;
        out.tail = std::abs(term);
      }
      out.value *= pref;
      out.tail *= pref;
      return out;
    }
  }
  throw std::logic_error("genfun_series: unknown id");
}

}  // namespace uchp
