#pragma once

// Univariate complex Hermite polynomials H_{m,n}(z, conj z | nu), the rescaled
// real Hermite family H_n(x | nu), Laguerre polynomials, and the Wirtinger
// calculus acting on them.  Everything here is exact coefficient arithmetic;
// quadrature lives elsewhere.

#include <complex>
#include <stdexcept>
#include <vector>

namespace uchp {

using cplx = std::complex<double>;

// n! as a double.  Exact through 22!, correctly rounded beyond, and refused
// above 170 where the result no longer fits in a double.
double factorial(int n);

void require_positive_nu(double nu);

// Polynomial in one real variable with real coefficients, lowest degree first.
class RealPoly {
 public:
  RealPoly() : c_(1, 0.0) {}
  explicit RealPoly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int j) const;
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double x) const;
  cplx eval(cplx x) const;  // same Horner scheme continued to complex argument

 private:
  std::vector<double> c_;
};

// Polynomial in the pair (z, zbar) treated as independent variables.
// Coefficient (j, k) multiplies z^j zbar^k.  Values are immutable once built;
// arithmetic returns trimmed copies so equal polynomials have equal storage.
class BiPoly {
 public:
  BiPoly() : rows_(1), cols_(1), c_(1, cplx{}) {}

  static BiPoly constant(cplx v);
  static BiPoly monomial(int j, int k, cplx v);

  int deg_z() const { return rows_ - 1; }
  int deg_zbar() const { return cols_ - 1; }
  cplx coeff(int j, int k) const;
  bool is_zero() const;
  double max_abs_coeff() const;

  // Evaluation at a point of the complex plane (zbar = conj z) and at an
  // independent Wirtinger pair.
  cplx eval(cplx z) const { return eval(z, std::conj(z)); }
  cplx eval(cplx z, cplx zbar) const;

  BiPoly shifted_z() const;     // multiplication by z
  BiPoly shifted_zbar() const;  // multiplication by zbar

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(cplx s, const BiPoly& p);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

 private:
  BiPoly(int rows, int cols) : rows_(rows), cols_(cols), c_(static_cast<size_t>(rows) * cols, cplx{}) {}
  cplx& at(int j, int k) { return c_[static_cast<size_t>(j) * cols_ + k]; }
  cplx at(int j, int k) const { return c_[static_cast<size_t>(j) * cols_ + k]; }
  void trim();

  int rows_, cols_;
  std::vector<cplx> c_;
};

// Rescaled real Hermite polynomial: H_0 = 1, H_1 = 2 nu x, and
// H_{n+1} = 2 nu x H_n - 2 nu n H_{n-1}.  Coefficients are dyadically exact
// for dyadic nu.
RealPoly real_hermite(int n, double nu);

// Laguerre polynomial L_m (parameter 0): L_0 = 1, L_1 = 1 - x,
// (m+1) L_{m+1} = (2m + 1 - x) L_m - m L_{m-1}.
RealPoly laguerre(int m);

// Univariate complex Hermite polynomial H_{m,n}(z, zbar | nu), built by the
// ladder H_{m+1,n} = nu z H_{m,n} - nu n H_{m,n-1} from H_{0,n} = (nu zbar)^n.
// deg_z = m, deg_zbar = n, and the z^m zbar^n coefficient is nu^{m+n}.
BiPoly complex_hermite(int m, int n, double nu);

// Table of values H_{j,k}(z, zbar | nu) for 0 <= j <= mmax, 0 <= k <= nmax,
// computed by the same ladder in values.  Intended for series summation where
// building every coefficient array would be wasteful.
std::vector<std::vector<cplx>> complex_hermite_values(cplx z, cplx zbar, double nu,
                                                      int mmax, int nmax);

// Value of the rescaled real Hermite polynomial with the scale parameter and
// the argument both allowed complex (the recurrence is polynomial in both, so
// no branch choices arise).
cplx hermite_value(int n, cplx scale, cplx y);

// Wirtinger derivatives on coefficient arrays.
BiPoly wirtinger_dz(const BiPoly& p);
BiPoly wirtinger_dzbar(const BiPoly& p);

// The magnetic-Laplacian action  -d^2 p / dz dzbar + nu zbar dp/dzbar,
// exact in coefficients.  H_{m,n} is an eigenvector with eigenvalue nu * n.
BiPoly landau_apply(const BiPoly& p, double nu);

// Squared norms against the Gaussian weight exp(-nu |z|^2) on the plane and
// exp(-nu x^2) on the line:
//   |H_{m,n}|^2 = (pi/nu) m! n! nu^{m+n},   |H_m|^2 = (pi/nu)^{1/2} 2^m nu^m m!.
double uchp_norm_sq(int m, int n, double nu);
double real_hermite_norm_sq(int m, double nu);

// |H_{m,n}(z | nu) - nu^{(m+n)/2} H_{m,n}(sqrt(nu) z | 1)|, which should sit
// at rounding level; the two sides are built by independent ladder runs.
double uchp_rescaling_residual(int m, int n, double nu, cplx z);

}  // namespace uchp
