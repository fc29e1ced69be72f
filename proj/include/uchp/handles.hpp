#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "uchp/polynomials.hpp"

namespace uchp {

// Function handles: pure evaluators over R, R^2, C, or C^2, optionally
// carrying a basis-coefficient representation that transforms can use for
// exact (quadrature-free) evaluation.  Handles are immutable once built.

// coeff * H^nu_m(x)
struct HermiteTerm {
  cplx coeff;
  int m = 0;
};

// coeff * H^nu_{m,n}(z, conj(z))
struct UchpTerm {
  cplx coeff;
  int m = 0;
  int n = 0;
};

// coeff * z^m w^n
struct MonoTerm {
  cplx coeff;
  int m = 0;
  int n = 0;
};

struct FunctionR {
  std::function<cplx(double)> eval;
  std::optional<std::vector<HermiteTerm>> terms;
  double nu = 1.0;  // basis parameter when terms are present
};

struct FunctionR2 {
  std::function<cplx(double, double)> eval;
};

struct FunctionC {
  std::function<cplx(cplx)> eval;
  std::optional<std::vector<UchpTerm>> terms;
  double nu = 1.0;
};

struct FunctionC2 {
  std::function<cplx(cplx, cplx)> eval;
  std::optional<std::vector<MonoTerm>> terms;
};

// z^m w^n summation used by the exact paths and by FunctionC2 evaluators.
cplx eval_mono_terms(const std::vector<MonoTerm>& terms, cplx z, cplx w);

// Combination builders.  Each returns a handle whose evaluator and term list
// describe the same function; an empty term list gives the zero function.
FunctionR hermite_combo(std::vector<HermiteTerm> terms, double nu);
FunctionC uchp_combo(std::vector<UchpTerm> terms, double nu);
FunctionC2 mono_combo(std::vector<MonoTerm> terms);

// exp(-a (x^2 + y^2))
FunctionR2 gaussian_r2(double a);
// H^nu_j(x) H^nu_k(y) exp(-nu (x^2 + y^2) / 2)
FunctionR2 hermite_gauss_r2(int j, int k, double nu);

// Identify R^2 with the complex plane via xi = x + iy.
FunctionC as_plane(const FunctionR2& f);
FunctionR2 as_r2(const FunctionC& f);

}  // namespace uchp
