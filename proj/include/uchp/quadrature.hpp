#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uchp {

using cplx = std::complex<double>;

// Thrown when an integrand produces a non-finite value; the message records
// the node that triggered it.
struct QuadratureError : std::runtime_error {
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Nodes and weights for integration against exp(-x^2) on the real line.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss rule with N nodes, exact on polynomials of degree <= 2N-1.
// N must lie in [1, 200].  Nodes/weights are exactly symmetric about 0.
QuadratureRule gauss_hermite_rule(int N);

// Deterministic chunked compensated summation.  Terms are grouped into fixed
// index chunks; each chunk is summed in index order and the chunk totals are
// combined in chunk order, so the result does not depend on the worker count.
cplx kahan_chunked_sum(std::size_t count, const std::function<cplx(std::size_t)>& term,
                       int workers = 1, std::size_t chunk = 8192);

// integral over R of exp(-nu x^2) f(x) dx
cplx integrate_gaussian_r(const std::function<cplx(double)>& f, double nu,
                          const QuadratureRule& rule, int workers = 1);

// integral over R^2 of exp(-nu (x^2 + y^2)) f(x, y) dx dy
cplx integrate_gaussian_r2(const std::function<cplx(double, double)>& f, double nu,
                           const QuadratureRule& rule, int workers = 1);

// integral over C of exp(-nu |xi|^2) f(xi) dlambda(xi), dlambda = planar Lebesgue
cplx integrate_gaussian_c(const std::function<cplx(cplx)>& f, double nu,
                          const QuadratureRule& rule, int workers = 1);

// integral over C^2 of exp(-nu (|z|^2 + |w|^2)) f(z, w) dlambda(z) dlambda(w)
cplx integrate_gaussian_c2(const std::function<cplx(cplx, cplx)>& f, double nu,
                           const QuadratureRule& rule, int workers = 1);

struct LineIntegral {
  cplx value{};
  // Set when the integrand is not negligible at the interval endpoints,
  // i.e. the truncation of an unbounded domain looks unsafe.
  bool decay_warning = false;
};

// integral over [-halfwidth, halfwidth] of f(x) dx via composite
// Clenshaw-Curtis panels; n_points is a target total node count.
LineIntegral integrate_line(const std::function<cplx(double)>& f, double halfwidth,
                            int n_points);

}  // namespace uchp
