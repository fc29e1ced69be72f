#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "uchp/genfun.hpp"

using uchp::cplx;
using uchp::GenFormulaId;
using uchp::GenParams;

namespace {

// Shared pass criterion: the truncated series must match the closed form to
// high relative accuracy and its own tail must certify convergence.
void check_agreement(GenFormulaId id, const GenParams& p, int trunc = 64) {
  CAPTURE(uchp::genfun_name(id));
  const cplx closed = uchp::genfun_closed_form(id, p);
  const auto series = uchp::genfun_series(id, p, trunc);
  const double scale = std::max(1.0, std::abs(closed));
  CHECK(std::abs(series.value - closed) <= 1e-9 * scale);
  CHECK(series.tail <= 1e-12 * scale);
}

cplx phase(double theta) { return std::polar(1.0, theta); }

}  // namespace

TEST_CASE("two-variable exponential generating function") {
  GenParams p;
  p.nu = 1.3;
  p.z = cplx(0.6, 0.3);
  p.u = cplx(0.5, -0.2);
  p.v = cplx(-0.3, 0.4);
  check_agreement(GenFormulaId::exp2var, p);

  p.nu = 0.5;
  p.z = cplx(-1.1, 0.7);
  p.u = cplx(0.0, 0.8);
  p.v = cplx(0.2, 0.1);
  check_agreement(GenFormulaId::exp2var, p);
}

TEST_CASE("one-index generating function") {
  GenParams p;
  p.nu = 0.8;
  p.z = cplx(0.4, -0.9);
  p.u = cplx(0.7, 0.3);
  for (int n : {0, 1, 3}) {
    p.n = n;
    check_agreement(GenFormulaId::one_index, p);
  }
}

TEST_CASE("kernel-type bilinear sum over the second index") {
  GenParams p;
  p.nu = 1.2;
  p.z = cplx(0.5, 0.4);
  p.w = cplx(-0.3, 0.6);
  p.t = phase(0.7);
  for (int m : {0, 1, 2})
    for (int mp : {0, 1, 2}) {
      p.m = m;
      p.mp = mp;
      check_agreement(GenFormulaId::mehler, p);
    }
  // real unit t on both ends of the circle
  p.m = 1;
  p.mp = 2;
  p.t = cplx(-1.0, 0.0);
  check_agreement(GenFormulaId::mehler, p);
  p.t = cplx(1.0, 0.0);
  check_agreement(GenFormulaId::mehler, p);
}

TEST_CASE("fully summed bilinear generating function") {
  GenParams p;
  p.nu = 1.5;
  p.z = cplx(0.4, -0.2);
  p.w = cplx(0.3, 0.5);
  p.t = phase(0.4);
  p.u = cplx(0.15, -0.25);  // nu*|u| < 1
  for (int mp : {0, 1, 2}) {
    p.mp = mp;
    check_agreement(GenFormulaId::bilinear, p);
  }
}

TEST_CASE("mixed one-variable/two-index generating function") {
  GenParams p;
  p.z = cplx(0.5, 0.3);
  p.x = 0.35;
  SUBCASE("equal weight parameters") {
    p.nu = 1.1;
    p.mu = 1.1;
    for (double xi : {0.6, -0.8})
      for (int n : {0, 1, 2, 3}) {
        p.xi = cplx(xi, 0.0);
        p.n = n;
        CAPTURE(xi);
        CAPTURE(n);
        check_agreement(GenFormulaId::mixed_real_complex, p);
      }
  }
  SUBCASE("distinct weight parameters") {
    p.nu = 1.3;
    p.mu = 0.7;
    p.xi = cplx(0.5, 0.0);
    for (int n : {0, 1, 2}) {
      p.n = n;
      check_agreement(GenFormulaId::mixed_real_complex, p);
    }
  }
}

TEST_CASE("diagonal kernel sums collapse to Laguerre polynomials") {
  GenParams p;
  p.nu = 0.9;
  p.z = cplx(0.7, -0.1);
  p.w = cplx(-0.2, 0.4);
  p.t = phase(-0.9);
  for (int m : {0, 1, 3}) {
    p.m = m;
    check_agreement(GenFormulaId::laguerre_diag, p);
  }
}

TEST_CASE("diagonal probability-type sum at unit t") {
  GenParams p;
  p.nu = 0.7;
  p.z = cplx(1.1, -0.4);
  p.t = phase(2.2);
  for (int m : {0, 2}) {
    p.m = m;
    check_agreement(GenFormulaId::diag_t, p);
  }

  for (double nu : {0.5, 2.0}) {
    p.nu = nu;
    for (int m : {0, 1, 4}) {
      p.m = m;
      check_agreement(GenFormulaId::diag_t1, p);
    }
  }
}

TEST_CASE("summed form of the level kernel") {
  GenParams p;
  p.x = 0.45;
  p.z = cplx(0.3, 0.6);
  for (double nu : {0.5, 1.7}) {
    p.nu = nu;
    for (int n : {0, 1, 3}) {
      p.n = n;
      check_agreement(GenFormulaId::kernel_level_n, p);
    }
  }
}

TEST_CASE("nonnegative terms make the unit-t diagonal sum monotone") {
  const double nu = 1.4;
  const cplx z(0.8, 0.5);
  const int m = 2;
  double partial = 0.0;
  double prev = -1.0;
  const double closed = uchp::factorial(m) * std::pow(nu, m) * std::exp(nu * std::norm(z));
  for (int n = 0; n <= 20; ++n) {
    const cplx h = uchp::complex_hermite(m, n, nu).eval(z);
    partial += std::norm(h) / (uchp::factorial(n) * std::pow(nu, n));
    CHECK(partial >= prev);
    CHECK(partial <= closed * (1.0 + 1e-12));
    prev = partial;
  }
}

TEST_CASE("domain constraints are reported by name") {
  GenParams p;
  p.nu = 1.0;
  p.t = cplx(1.1, 0.0);
  const auto v1 = uchp::genfun_constraint_violation(GenFormulaId::mehler, p);
  REQUIRE(v1.has_value());
  CHECK(v1->find("|t| = 1") != std::string::npos);
  CHECK_THROWS_AS(uchp::genfun_closed_form(GenFormulaId::mehler, p), std::domain_error);
  CHECK_THROWS_AS(uchp::genfun_series(GenFormulaId::mehler, p), std::domain_error);

  p.t = phase(0.3);
  p.u = cplx(2.0, 0.0);
  const auto v2 = uchp::genfun_constraint_violation(GenFormulaId::bilinear, p);
  REQUIRE(v2.has_value());
  CHECK(v2->find("nu*|u| < 1") != std::string::npos);

  p.u = cplx(0.1, 0.0);
  CHECK_FALSE(uchp::genfun_constraint_violation(GenFormulaId::bilinear, p).has_value());

  p.xi = cplx(0.0, 0.0);
  const auto v3 = uchp::genfun_constraint_violation(GenFormulaId::mixed_real_complex, p);
  REQUIRE(v3.has_value());
  CHECK(v3->find("xi != 0") != std::string::npos);

  CHECK_THROWS_AS(uchp::genfun_series(GenFormulaId::exp2var, p, 0), std::invalid_argument);
  CHECK_THROWS_AS(uchp::genfun_series(GenFormulaId::exp2var, p, 170), std::invalid_argument);
}
