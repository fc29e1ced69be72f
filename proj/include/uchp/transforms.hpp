#pragma once

#include "uchp/handles.hpp"
#include "uchp/quadrature.hpp"

namespace uchp {

// Integral transforms on Gaussian-weighted spaces.  Every *_at function
// evaluates the transformed function at one output point by quadrature; the
// *_exact variants propagate basis coefficients through the known action
// formulas and require the input handle to carry terms.

// 2x2 complex matrix acting on (z, w) as (a z + b w, c z + d w).
struct Mat2 {
  cplx a, b, c, d;
};

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);
Mat2 mat_scale(cplx s, const Mat2& g);

extern const Mat2 kIdentityMat;
// [[1, i], [1, -i]]; divided by sqrt(2) it is unitary.
extern const Mat2 kGiMat;

// Substitution action (Gamma_g f)(z, w) = f(a z + b w, c z + d w).  Monomial
// terms, when present, are propagated by binomial expansion, giving a second
// independent representation of the result.
FunctionC2 gamma_apply(const Mat2& g, const FunctionC2& f);

// sign = +1: z -> F(z, z);  sign = -1: z -> F(z, conj(z)).
FunctionC restrict_diag(int sign, const FunctionC2& F);

// One-variable substitution z -> f(theta z).
FunctionC scale_arg(cplx theta, const FunctionC& f);

// (nu/pi)^{3/4} Int exp(-nu (x - z/sqrt(2))^2) phi(x) dx
cplx bargmann1_at(const FunctionR& phi, double nu, cplx z,
                  const QuadratureRule& rule, int workers = 1);

// Level-n variant: same kernel times
// (2^n nu^n n!)^{-1/2} H^nu_n((z + conj z)/sqrt(2) - x).
cplx bargmann1_level_at(const FunctionR& phi, int n, double nu, cplx z,
                        const QuadratureRule& rule, int workers = 1);

// Exact action on Hermite combinations:
// H^nu_m -> (nu/pi)^{1/4} (2^m / (n! nu^n))^{1/2} H^nu_{m,n}.
FunctionC bargmann1_level_exact(const FunctionR& phi, int n, double nu);

// Product-kernel transform on the plane:
// (nu/pi)^{3/2} Int exp(-nu (x - z/sqrt2)^2 - nu (y - w/sqrt2)^2) psi dx dy.
cplx bargmann2_at(const FunctionR2& psi, double nu, cplx z, cplx w,
                  const QuadratureRule& rule, int workers = 1);

// (nu/pi)^{3/2} Int exp(-nu (z - xi)(w - conj xi)) psi(xi) dA(xi)
cplx t_forward_at(const FunctionC& psi, double nu, cplx z, cplx w,
                  const QuadratureRule& rule, int workers = 1);

// Exact action: H^nu_{m,n} -> (nu/pi)^{1/2} nu^{m+n} z^m w^n.
FunctionC2 t_forward_exact(const FunctionC& psi, double nu);

// (nu/pi)^{3/2} Int_{C^2} exp(-nu(|z|^2+|w|^2)
//                             + nu(conj(z) xi + conj(w) conj(xi)
//                                  - conj(z) conj(w))) phi(z,w) dA(z) dA(w)
cplx t_inverse_at(const FunctionC2& phi, double nu, cplx xi,
                  const QuadratureRule& rule, int workers = 1);

// Pair transform between level spaces:
// ((-1)^{n'} nu / (pi sqrt(n! n'! nu^{n+n'})))
//   Int exp(-nu|xi|^2 + nu conj(xi) z) H^nu_{n,n'}(xi - z, conj(xi - z))
//       psi(xi) dA(xi)
cplx t_pair_at(const FunctionC& psi, int n, int np, double nu, cplx z,
               const QuadratureRule& rule, int workers = 1);

// Exact action: H^nu_{m,n} -> (n! nu^n / (n'! nu^{n'}))^{1/2} H^nu_{m,n'};
// terms whose second index differs from n map to zero.
FunctionC t_pair_exact(const FunctionC& psi, int n, int np, double nu);

// Gaussian-conjugated Fourier transform
// (nu/2pi) Int exp((nu/2)(xi + s i u)(conj(xi) + s i conj(u))) phi(u) dA(u)
// with direction s = +1 or -1.
cplx shifted_fourier_at(const FunctionC& phi, double nu, cplx xi,
                        const QuadratureRule& rule, int direction = +1,
                        int workers = 1);

// Plain Fourier transform (nu/2pi) Int exp(i nu Re(xi conj(u))) phi(u) dA(u)
// evaluated for phi(u) = exp(-decay |u|^2) phi_reduced(u); the caller passes
// the reduced (tame) factor and the decay rate separately.
cplx plain_fourier_at(const FunctionC& phi_reduced, double decay, double nu,
                      cplx xi, const QuadratureRule& rule, int workers = 1);

// (1/2pi)^{1/2} Int exp(-i nu x t) f(y + t/2, y - t/2) dt over a finite
// window; the decay warning of the line rule is passed through.
LineIntegral wigner_at(const FunctionR2& f, double nu, double x, double y,
                       double halfwidth, int n_points);

// (nu/pi)^{1/2} times the line transform evaluated at (z + i w)/sqrt(2);
// the image is annihilated by d/dz + i d/dw.
cplx g_composite_at(const FunctionR& phi, double nu, cplx z, cplx w,
                    const QuadratureRule& rule, int workers = 1);

// (gamma/pi) (-alpha)^m beta^n
//   Int xi^m conj(xi)^n exp((alpha beta / gamma)|z|^2 - gamma |xi|^2
//                           + alpha xi conj(z) - beta conj(xi) z) dA(xi),
// valid when alpha*beta is a positive real; equals H^nu_{m,n}(z, conj z)
// with nu = alpha*beta/gamma.
cplx integral_rep_uchp(int m, int n, cplx alpha, cplx beta, double gamma,
                       cplx z, const QuadratureRule& rule, int workers = 1);

// One orthogonal family for the coherent-states kernel: an indexed evaluator
// and the corresponding norms (all strictly positive).
struct CstBasis {
  std::function<cplx(int, cplx)> eval;
  std::function<double(int)> norm;
};

// Sum_{k < truncation} conj(e_k(x)) f_k(y) / (|e_k| |f_k|)
cplx cst_kernel(const CstBasis& basis_x, const CstBasis& basis_y, cplx x,
                cplx y, int truncation);

}  // namespace uchp
