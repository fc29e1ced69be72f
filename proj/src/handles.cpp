#include "uchp/handles.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace uchp {

namespace {

cplx ipow(cplx base, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

cplx eval_mono_terms(const std::vector<MonoTerm>& terms, cplx z, cplx w) {
  cplx acc = 0.0;
  for (const auto& t : terms) acc += t.coeff * ipow(z, t.m) * ipow(w, t.n);
  return acc;
}

FunctionR hermite_combo(std::vector<HermiteTerm> terms, double nu) {
  require_positive_nu(nu);
  auto polys = std::make_shared<std::vector<RealPoly>>();
  polys->reserve(terms.size());
  for (const auto& t : terms) polys->push_back(real_hermite(t.m, nu));

  FunctionR out;
  out.nu = nu;
  out.eval = [terms, polys](double x) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i)
      acc += terms[i].coeff * (*polys)[i].eval(x);
    return acc;
  };
  out.terms = std::move(terms);
  return out;
}

FunctionC uchp_combo(std::vector<UchpTerm> terms, double nu) {
  require_positive_nu(nu);
  auto polys = std::make_shared<std::vector<BiPoly>>();
  polys->reserve(terms.size());
  for (const auto& t : terms) polys->push_back(complex_hermite(t.m, t.n, nu));

  FunctionC out;
  out.nu = nu;
  out.eval = [terms, polys](cplx z) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i)
      acc += terms[i].coeff * (*polys)[i].eval(z);
    return acc;
  };
  out.terms = std::move(terms);
  return out;
}

FunctionC2 mono_combo(std::vector<MonoTerm> terms) {
  FunctionC2 out;
  out.eval = [terms](cplx z, cplx w) { return eval_mono_terms(terms, z, w); };
  out.terms = std::move(terms);
  return out;
}

FunctionR2 gaussian_r2(double a) {
  FunctionR2 out;
  out.eval = [a](double x, double y) {
    return cplx(std::exp(-a * (x * x + y * y)), 0.0);
  };
  return out;
}

FunctionR2 hermite_gauss_r2(int j, int k, double nu) {
  require_positive_nu(nu);
  auto pj = std::make_shared<RealPoly>(real_hermite(j, nu));
  auto pk = std::make_shared<RealPoly>(real_hermite(k, nu));
  FunctionR2 out;
  out.eval = [pj, pk, nu](double x, double y) {
    return pj->eval(x) * pk->eval(y) *
           std::exp(-0.5 * nu * (x * x + y * y));
  };
  return out;
}

FunctionC as_plane(const FunctionR2& f) {
  FunctionC out;
  out.eval = [g = f.eval](cplx xi) { return g(xi.real(), xi.imag()); };
  return out;
}

FunctionR2 as_r2(const FunctionC& f) {
  FunctionR2 out;
  out.eval = [g = f.eval](double x, double y) { return g(cplx(x, y)); };
  return out;
}

}  // namespace uchp
