#pragma once

#include <complex>
#include <optional>
#include <string>

#include "uchp/polynomials.hpp"

namespace uchp {

// Summation formulas connecting the polynomial families.  Each id names one
// identity that can be evaluated two ways: a closed-form right-hand side and
// a truncated series left-hand side.  Agreement of the two routes at generic
// points is the correctness evidence.
enum class GenFormulaId {
  exp2var,             // sum_{m,n} u^m v^n H_{m,n}(z)/(m! n!)          = exp(nu(uz + v zb - uv))
  one_index,           // sum_k u^k H_{k,n}(z)/k!                       = nu^n (zb - u)^n exp(nu u z)
  mehler,              // sum_n t^n H_{m,n}(z) H_{n,m'}(w)/(n! nu^n)    = (-t)^m' H_{m,m'}(z-tw, zb-conj(t)wb) exp(nu t w zb)
  bilinear,            // sum_{m,n} u^m t^n H_{m,n}(z) H_{n,m'}(w)/(m! n! nu^n)
                       //                                               = (-nu t)^m' (zb - conj(t)wb - u)^m' exp(nu t zb w + nu u(z - tw))
  mixed_real_complex,  // sum_m xi^m H_m(x; mu) conj(H_{m,n}(z))/(m! nu^m)
                       //                                               = exp(-mu(xi^2 zb^2 - 2x xi zb)) H_n(zb + nu z/(2 mu xi^2) - x/xi; mu xi^2)
  laguerre_diag,       // sum_n t^n H_{m,n}(z) H_{n,m}(w)/(n! nu^n)     = (nu t)^m m! L_m(nu|z-tw|^2) exp(nu t w zb)
  diag_t,              // sum_n t^n |H_{m,n}(z)|^2/(n! nu^n)            = m! (nu t)^m L_m(nu|1-t|^2|z|^2) exp(nu t |z|^2)
  diag_t1,             // the t = 1 case: sum_n |H_{m,n}(z)|^2/(n! nu^n) = m! nu^m exp(nu|z|^2)
  kernel_level_n,      // sum_m H_m(x) H_{m,n}(z)/(2^(m/2) nu^m m!) scaled
                       //                                               = closed Gaussian-times-Hermite kernel, see source
};

const char* genfun_name(GenFormulaId id);

// Evaluation point and index data shared by all formulas.  Only the fields a
// given formula reads are meaningful for it; zb/wb are always conj(z)/conj(w).
struct GenParams {
  double nu = 1.0;
  double mu = 1.0;
  double x = 0.0;
  int m = 0, n = 0, mp = 0;
  cplx z{}, w{}, u{}, v{}, t{1.0, 0.0}, xi{};
};

// Returns a description of the violated domain condition, or nullopt if the
// parameters are admissible for the formula.
std::optional<std::string> genfun_constraint_violation(GenFormulaId id, const GenParams& p);

// Closed-form side.  Throws std::domain_error when a constraint is violated.
cplx genfun_closed_form(GenFormulaId id, const GenParams& p);

struct SeriesValue {
  cplx value{};
  double tail = 0.0;  // magnitude of the last partial-sum increment
};

// Truncated series side; trunc is the maximal summation index (or shell for
// double sums) and must lie in [1, 169].
SeriesValue genfun_series(GenFormulaId id, const GenParams& p, int trunc = 64);

}  // namespace uchp
