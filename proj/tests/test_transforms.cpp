#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "uchp/handles.hpp"
#include "uchp/polynomials.hpp"
#include "uchp/quadrature.hpp"
#include "uchp/transforms.hpp"

using uchp::cplx;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double uni(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

cplx rand_disc(std::mt19937_64& gen, double radius) {
  const double r = radius * std::sqrt(uni(gen));
  const double th = 2.0 * kPi * uni(gen);
  return cplx(r * std::cos(th), r * std::sin(th));
}

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

cplx ipow(cplx base, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

uchp::FunctionR hermite_basis_r(int m, double nu) {
  return uchp::hermite_combo({{cplx(1.0), m}}, nu);
}

uchp::FunctionC uchp_basis_c(int m, int n, double nu) {
  return uchp::uchp_combo({{cplx(1.0), m, n}}, nu);
}

}  // namespace

TEST_CASE("line transform of the ground state is constant") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const std::vector<cplx> points{cplx(0.0), cplx(0.7, 0.3), cplx(-1.2, 0.5)};
  for (double nu : {0.5, 1.0, 2.0}) {
    const auto one = hermite_basis_r(0, nu);
    const cplx want = std::pow(nu / kPi, 0.25);
    for (cplx z : points) {
      const cplx got = uchp::bargmann1_at(one, nu, z, rule);
      CHECK(rel_err(got, want) < 1e-10);
    }
  }
}

TEST_CASE("line transform action on the Hermite basis") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const cplx z(0.8, -0.4);
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 5; ++m) {
      const cplx got = uchp::bargmann1_at(hermite_basis_r(m, nu), nu, z, rule);
      const cplx want = std::pow(nu / kPi, 0.25) *
                        std::pow(2.0, 0.5 * m) * std::pow(nu, m) * ipow(z, m);
      CHECK(rel_err(got, want) < 1e-8);
    }
  }
  // pinned value: the first Hermite function maps to sqrt(2) (1/pi)^{1/4} z
  const cplx got = uchp::bargmann1_at(hermite_basis_r(1, 1.0), 1.0, z, rule);
  CHECK(rel_err(got, std::sqrt(2.0) * std::pow(1.0 / kPi, 0.25) * z) < 1e-10);
}

TEST_CASE("level transform action gives scaled polynomials") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const std::vector<cplx> points{cplx(0.6, 0.3), cplx(-0.4, 0.9)};
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const uchp::BiPoly hmn = uchp::complex_hermite(m, n, nu);
        const double scale =
            std::pow(nu / kPi, 0.25) *
            std::sqrt(std::pow(2.0, m) /
                      (uchp::factorial(n) * std::pow(nu, n)));
        for (cplx z : points) {
          const cplx got =
              uchp::bargmann1_level_at(hermite_basis_r(m, nu), n, nu, z, rule);
          CHECK(rel_err(got, scale * hmn.eval(z)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("level transform pinned value and exact path") {
  const auto rule = uchp::gauss_hermite_rule(80);
  // ground state, level 1, z = 1: (1/pi)^{1/4} H^1_{0,1}(1) = (1/pi)^{1/4}
  const cplx got =
      uchp::bargmann1_level_at(hermite_basis_r(0, 1.0), 1, 1.0, cplx(1.0), rule);
  CHECK(rel_err(got, std::pow(1.0 / kPi, 0.25)) < 1e-10);

  // exact path agrees with quadrature for a combination
  const double nu = 0.5;
  const auto phi = uchp::hermite_combo({{cplx(1.0, -0.5), 2}, {cplx(0.3), 0}}, nu);
  const auto image = uchp::bargmann1_level_exact(phi, 3, nu);
  for (cplx z : {cplx(0.4, 0.2), cplx(-0.8, 0.1)}) {
    const cplx via_quad = uchp::bargmann1_level_at(phi, 3, nu, z, rule);
    CHECK(rel_err(image.eval(z), via_quad) < 1e-8);
  }

  // zero input maps to zero
  const auto zero = uchp::hermite_combo({}, 1.0);
  CHECK(std::abs(uchp::bargmann1_level_at(zero, 2, 1.0, cplx(0.3, 0.1), rule)) <
        1e-14);
  CHECK_THROWS_AS(
      uchp::bargmann1_level_exact(uchp::FunctionR{[](double) { return cplx(0.0); },
                                                  std::nullopt, 1.0},
                                  1, 1.0),
      std::invalid_argument);
}

TEST_CASE("plane transform constants and factorization") {
  const auto rule = uchp::gauss_hermite_rule(60);
  uchp::FunctionR2 one;
  one.eval = [](double, double) { return cplx(1.0); };
  for (double nu : {0.5, 1.0, 2.0}) {
    const cplx got = uchp::bargmann2_at(one, nu, cplx(0.0), cplx(0.0), rule);
    CHECK(rel_err(got, std::sqrt(nu / kPi)) < 1e-10);
  }

  // product kernel: the image of H_j(x) H_k(y) is the product of line images
  const double nu = 1.3;
  const cplx z(0.5, 0.2), w(-0.3, 0.4);
  for (int j = 0; j <= 2; ++j) {
    for (int k = 0; k <= 2; ++k) {
      const auto pj = uchp::real_hermite(j, nu);
      const auto pk = uchp::real_hermite(k, nu);
      uchp::FunctionR2 prod;
      prod.eval = [&pj, &pk](double x, double y) {
        return pj.eval(x) * pk.eval(y);
      };
      const cplx got = uchp::bargmann2_at(prod, nu, z, w, rule);
      const cplx want = uchp::bargmann1_at(hermite_basis_r(j, nu), nu, z, rule) *
                        uchp::bargmann1_at(hermite_basis_r(k, nu), nu, w, rule);
      CHECK(rel_err(got, want) < 1e-9);
    }
  }
}

TEST_CASE("plane transform equals the substituted kernel transform") {
  // B^2 psi(z, w) = T psi((z+iw)/sqrt2, (z-iw)/sqrt2) under xi = x + iy;
  // the unscaled substitution (z+iw, z-iw) does not match.
  const auto rule = uchp::gauss_hermite_rule(80);
  const double nu = 1.0;
  const cplx z(0.6, -0.1), w(0.2, 0.5);
  const cplx i(0.0, 1.0);
  const double root2 = std::sqrt(2.0);
  const std::vector<std::pair<int, int>> orders{{0, 0}, {1, 0}, {1, 2}};
  for (auto [j, k] : orders) {
    const auto psi = uchp::hermite_gauss_r2(j, k, nu);
    const auto psi_c = uchp::as_plane(psi);
    const cplx lhs = uchp::bargmann2_at(psi, nu, z, w, rule);
    const cplx rhs = uchp::t_forward_at(psi_c, nu, (z + i * w) / root2,
                                        (z - i * w) / root2, rule);
    CHECK(rel_err(lhs, rhs) < 1e-7);
  }

  // without the 1/sqrt(2) normalization the substitution misses
  {
    const cplx zb(1.1, -0.4), wb(0.8, 0.6);
    const auto psi = uchp::hermite_gauss_r2(1, 2, nu);
    const auto psi_c = uchp::as_plane(psi);
    const cplx lhs = uchp::bargmann2_at(psi, nu, zb, wb, rule);
    const cplx unscaled =
        uchp::t_forward_at(psi_c, nu, zb + i * wb, zb - i * wb, rule);
    CHECK(rel_err(lhs, unscaled) > 1e-2);
  }
}

TEST_CASE("kernel transform action maps polynomials to monomials") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const std::vector<std::pair<cplx, cplx>> points{
      {cplx(1.0), cplx(1.0)}, {cplx(0.7, 0.2), cplx(-0.4, 0.1)}};
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const auto psi = uchp_basis_c(m, n, nu);
        for (auto [z, w] : points) {
          const cplx got = uchp::t_forward_at(psi, nu, z, w, rule);
          const cplx want = std::sqrt(nu / kPi) * std::pow(nu, m + n) *
                            ipow(z, m) * ipow(w, n);
          CHECK(rel_err(got, want) < 1e-7);
        }
      }
    }
  }
  // pinned: nu=1, (m,n)=(1,1) at (1,1) gives (1/pi)^{1/2}
  const cplx got =
      uchp::t_forward_at(uchp_basis_c(1, 1, 1.0), 1.0, cplx(1.0), cplx(1.0), rule);
  CHECK(rel_err(got, std::sqrt(1.0 / kPi)) < 1e-8);

  // exact path matches the formula and the quadrature
  const double nu = 2.0;
  const auto psi = uchp::uchp_combo({{cplx(0.5, 1.0), 2, 1}, {cplx(-0.3), 0, 0}}, nu);
  const auto image = uchp::t_forward_exact(psi, nu);
  REQUIRE(image.terms.has_value());
  for (auto [z, w] : points) {
    const cplx via_quad = uchp::t_forward_at(psi, nu, z, w, rule);
    CHECK(rel_err(image.eval(z, w), via_quad) < 1e-7);
  }
}

TEST_CASE("kernel transform inverse recovers the input") {
  const auto rule = uchp::gauss_hermite_rule(40);
  // constant: phi = (nu/pi)^{1/2} pulls back to 1
  for (double nu : {1.0, 2.0}) {
    const auto phi = uchp::mono_combo({{std::sqrt(nu / kPi), 0, 0}});
    const cplx got = uchp::t_inverse_at(phi, nu, cplx(0.3, -0.2), rule);
    CHECK(rel_err(got, cplx(1.0)) < 1e-6);
  }

  // round trip through the exact forward image
  const double nu = 1.0;
  const std::vector<std::pair<int, int>> orders{{0, 0}, {1, 0}, {1, 1}, {2, 1}};
  const std::vector<cplx> points{cplx(0.4, 0.1), cplx(-0.5, 0.3)};
  for (auto [m, n] : orders) {
    const auto psi = uchp_basis_c(m, n, nu);
    const auto forward = uchp::t_forward_exact(psi, nu);
    const auto hmn = uchp::complex_hermite(m, n, nu);
    for (cplx xi : points) {
      const cplx got = uchp::t_inverse_at(forward, nu, xi, rule);
      CHECK(rel_err(got, hmn.eval(xi)) < 1e-5);
    }
  }

  // zero input maps to zero
  const auto zero = uchp::mono_combo({});
  CHECK(std::abs(uchp::t_inverse_at(zero, 1.0, cplx(0.2, 0.2), rule)) == 0.0);
}

TEST_CASE("pair transform action between level spaces") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const cplx z(0.6, 0.3);
  const std::vector<std::pair<int, int>> levels{
      {0, 1}, {1, 0}, {2, 1}, {1, 2}, {2, 2}};
  for (double nu : {0.5, 1.0}) {
    for (auto [n, np] : levels) {
      const double scale = std::sqrt(uchp::factorial(n) * std::pow(nu, n) /
                                     (uchp::factorial(np) * std::pow(nu, np)));
      for (int m = 0; m <= 4; ++m) {
        const auto psi = uchp_basis_c(m, n, nu);
        const auto target = uchp::complex_hermite(m, np, nu);
        const cplx got = uchp::t_pair_at(psi, n, np, nu, z, rule);
        CHECK(rel_err(got, scale * target.eval(z)) < 1e-7);
      }
    }
  }
}

TEST_CASE("pair transform inverse pairing and level orthogonality") {
  const double nu = 1.0;
  const auto psi = uchp::uchp_combo({{cplx(1.0, 0.5), 3, 2}, {cplx(-0.4), 1, 2}}, nu);
  const auto roundtrip =
      uchp::t_pair_exact(uchp::t_pair_exact(psi, 2, 4, nu), 4, 2, nu);
  REQUIRE(roundtrip.terms.has_value());
  REQUIRE(roundtrip.terms->size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs((*roundtrip.terms)[i].coeff - (*psi.terms)[i].coeff) < 1e-12);
    CHECK((*roundtrip.terms)[i].n == 2);
  }

  // an input from a different level space maps to zero
  const auto dropped = uchp::t_pair_exact(uchp_basis_c(2, 3, nu), 1, 0, nu);
  CHECK(dropped.terms->empty());
  const auto rule = uchp::gauss_hermite_rule(80);
  const cplx via_quad =
      uchp::t_pair_at(uchp_basis_c(2, 2, nu), 1, 0, nu, cplx(0.5, -0.4), rule);
  CHECK(std::abs(via_quad) < 1e-7);
}

TEST_CASE("conjugated Fourier transform has polynomial eigenfunctions") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const cplx i(0.0, 1.0);
  const std::vector<cplx> points{cplx(0.7, -0.2), cplx(-0.3, 0.8)};
  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n + m <= 5; ++n) {
        const auto phi = uchp_basis_c(m, n, nu);
        const auto hmn = uchp::complex_hermite(m, n, nu);
        const cplx eigen = ipow(i, m + n);
        for (cplx xi : points) {
          const cplx got = uchp::shifted_fourier_at(phi, nu, xi, rule, +1);
          CHECK(rel_err(got, eigen * hmn.eval(xi)) < 1e-7);
        }
      }
    }
  }
  // reversed direction conjugates the eigenvalue
  const auto phi = uchp_basis_c(2, 1, 1.0);
  const auto h21 = uchp::complex_hermite(2, 1, 1.0);
  const cplx xi(0.4, 0.5);
  const cplx got = uchp::shifted_fourier_at(phi, 1.0, xi, rule, -1);
  CHECK(rel_err(got, ipow(-i, 3) * h21.eval(xi)) < 1e-7);
}

TEST_CASE("ground-state conjugation direction of the Fourier transform") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const double nu = 1.0;
  const cplx xi(0.5, 0.3);

  // on polynomials: conjugation with the inverse ground-state on the inside
  const auto phi = uchp_basis_c(1, 1, nu);
  const cplx lhs = uchp::shifted_fourier_at(phi, nu, xi, rule, +1);
  const cplx rhs = std::exp(0.5 * nu * std::norm(xi)) *
                   uchp::plain_fourier_at(phi, 0.5 * nu, nu, xi, rule);
  CHECK(rel_err(lhs, rhs) < 1e-8);

  // Gaussian witness separating the two candidate directions
  const double b = 1.2;
  uchp::FunctionC gauss;
  gauss.eval = [b](cplx u) { return std::exp(-b * std::norm(u)); };
  uchp::FunctionC unit;
  unit.eval = [](cplx) { return cplx(1.0); };
  const cplx lhs_g = uchp::shifted_fourier_at(gauss, nu, xi, rule, +1);
  const cplx inner_decay = std::exp(0.5 * nu * std::norm(xi)) *
                           uchp::plain_fourier_at(unit, b + 0.5 * nu, nu, xi, rule);
  const cplx outer_decay = std::exp(-0.5 * nu * std::norm(xi)) *
                           uchp::plain_fourier_at(unit, b - 0.5 * nu, nu, xi, rule);
  CHECK(rel_err(lhs_g, inner_decay) < 1e-8);
  CHECK(rel_err(lhs_g, outer_decay) > 1e-2);
}

TEST_CASE("Wigner transform of Gaussians") {
  const double L = 14.0;
  const int n_points = 256;

  // width-1/2 Gaussian at nu = 1: sqrt(2) exp(-x^2 - y^2)
  const auto f = uchp::gaussian_r2(0.5);
  const auto at_origin = uchp::wigner_at(f, 1.0, 0.0, 0.0, L, n_points);
  CHECK_FALSE(at_origin.decay_warning);
  CHECK(rel_err(at_origin.value, std::sqrt(2.0)) < 1e-12);
  const auto shifted = uchp::wigner_at(f, 1.0, 0.3, -0.4, L, n_points);
  CHECK(rel_err(shifted.value, std::sqrt(2.0) * std::exp(-0.09 - 0.16)) < 1e-10);

  // general width a: a^{-1/2} exp(-2 a y^2 - nu^2 x^2 / (2a))
  const double a = 0.8, nu = 1.5, x = 0.25, y = 0.35;
  const auto g = uchp::gaussian_r2(a);
  const auto got = uchp::wigner_at(g, nu, x, y, L, n_points);
  const double want = std::exp(-2.0 * a * y * y - nu * nu * x * x / (2.0 * a)) /
                      std::sqrt(a);
  CHECK(rel_err(got.value, want) < 1e-10);

  // zero input
  uchp::FunctionR2 zero;
  zero.eval = [](double, double) { return cplx(0.0); };
  CHECK(std::abs(uchp::wigner_at(zero, 1.0, 0.1, 0.2, L, n_points).value) == 0.0);

  // a function constant along the integration direction triggers the warning
  uchp::FunctionR2 ridge;
  ridge.eval = [](double u, double v) { return std::exp(-(u + v) * (u + v)); };
  CHECK(uchp::wigner_at(ridge, 1.0, 0.0, 0.4, L, n_points).decay_warning);
}

TEST_CASE("matrix substitution action and composition") {
  std::mt19937_64 gen(20240815u);
  const auto f = uchp::mono_combo(
      {{cplx(2.0, 1.0), 2, 1}, {cplx(-1.0), 0, 3}, {cplx(0.5), 1, 1}});

  // identity leaves the function unchanged
  const auto same = uchp::gamma_apply(uchp::kIdentityMat, f);
  for (int k = 0; k < 3; ++k) {
    const cplx z = rand_disc(gen, 2.0), w = rand_disc(gen, 2.0);
    CHECK(rel_err(same.eval(z, w), f.eval(z, w)) < 1e-14);
  }

  // the basic substitution z -> z + i w
  const auto zslot = uchp::mono_combo({{cplx(1.0), 1, 0}});
  const auto rotated = uchp::gamma_apply(uchp::kGiMat, zslot);
  const cplx z0(0.3, -0.7), w0(1.1, 0.4);
  CHECK(rel_err(rotated.eval(z0, w0), z0 + cplx(0.0, 1.0) * w0) < 1e-14);

  // scalar matrix -i id substitutes (z, w) -> (-i z, -i w)
  const auto minus_i = uchp::mat_scale(cplx(0.0, -1.0), uchp::kIdentityMat);
  const auto turned = uchp::gamma_apply(minus_i, f);
  CHECK(rel_err(turned.eval(z0, w0),
                f.eval(cplx(0.0, -1.0) * z0, cplx(0.0, -1.0) * w0)) < 1e-14);

  // composition contravariance: applying g after h substitutes h.g
  const uchp::Mat2 g{rand_disc(gen, 1.0), rand_disc(gen, 1.0),
                     rand_disc(gen, 1.0), rand_disc(gen, 1.0)};
  const uchp::Mat2 h{rand_disc(gen, 1.0), rand_disc(gen, 1.0),
                     rand_disc(gen, 1.0), rand_disc(gen, 1.0)};
  const auto two_step = uchp::gamma_apply(g, uchp::gamma_apply(h, f));
  const auto one_step = uchp::gamma_apply(uchp::mat_mul(h, g), f);
  for (int k = 0; k < 5; ++k) {
    const cplx z = rand_disc(gen, 2.0), w = rand_disc(gen, 2.0);
    CHECK(rel_err(two_step.eval(z, w), one_step.eval(z, w)) < 1e-12);
  }

  // dual representation: propagated terms agree with composed evaluation
  REQUIRE(two_step.terms.has_value());
  for (int k = 0; k < 10; ++k) {
    const cplx z = rand_disc(gen, 2.0), w = rand_disc(gen, 2.0);
    const cplx via_terms = uchp::eval_mono_terms(*two_step.terms, z, w);
    CHECK(rel_err(via_terms, two_step.eval(z, w)) < 1e-10);
  }

  // the normalized rotation matrix is unitary
  const double root2 = std::sqrt(2.0);
  const auto u = uchp::mat_scale(1.0 / root2, uchp::kGiMat);
  const uchp::Mat2 adj{std::conj(u.a), std::conj(u.c), std::conj(u.b),
                       std::conj(u.d)};
  const auto prod = uchp::mat_mul(u, adj);
  CHECK(std::abs(prod.a - 1.0) < 1e-15);
  CHECK(std::abs(prod.b) < 1e-15);
  CHECK(std::abs(prod.c) < 1e-15);
  CHECK(std::abs(prod.d - 1.0) < 1e-15);
}

TEST_CASE("diagonal restrictions of plane functions") {
  const auto f = uchp::mono_combo({{cplx(1.0), 1, 1}});  // z w
  const auto plus = uchp::restrict_diag(+1, f);
  const auto minus = uchp::restrict_diag(-1, f);
  const cplx z(0.7, -0.3);
  CHECK(rel_err(plus.eval(z), z * z) < 1e-14);
  CHECK(rel_err(minus.eval(z), cplx(std::norm(z))) < 1e-14);
  CHECK_THROWS_AS(uchp::restrict_diag(0, f), std::invalid_argument);
}

TEST_CASE("restricted kernel transform reproduces the half-parameter Fourier") {
  // On holomorphic inputs: (pi/nu)^{1/2} Gamma_{+i} R_+ T psi = F^{nu/2} psi.
  // The identity needs the (pi/nu)^{1/2} factor and fails for theta = -i.
  const auto rule = uchp::gauss_hermite_rule(80);
  const cplx i(0.0, 1.0);
  const std::vector<std::vector<uchp::UchpTerm>> combos{
      {{cplx(1.0), 0, 0}, {cplx(0.5, -0.2), 1, 0}, {cplx(-0.3), 3, 0}},
      {{cplx(0.0, 1.0), 2, 0}},
      {{cplx(1.0), 4, 0}, {cplx(0.0, 0.2), 1, 0}}};
  const std::vector<cplx> points{cplx(0.4, 0.2), cplx(-0.6, 0.1), cplx(0.1, -0.7)};
  for (double nu : {1.0, 0.5}) {
    const double lift = std::sqrt(kPi / nu);
    for (const auto& terms : combos) {
      const auto psi = uchp::uchp_combo(terms, nu);
      const auto plane = uchp::t_forward_exact(psi, nu);
      const auto lhs = uchp::scale_arg(i, uchp::restrict_diag(+1, plane));
      for (cplx z : points) {
        const cplx want = uchp::shifted_fourier_at(psi, 0.5 * nu, z, rule, +1);
        CHECK(rel_err(lift * lhs.eval(z), want) < 1e-7);
      }
    }
  }

  // theta = -i separates on a combination carrying odd degrees
  const double nu = 1.0;
  const auto psi = uchp::uchp_combo({{cplx(0.5, -0.2), 1, 0}}, nu);
  const auto plane = uchp::t_forward_exact(psi, nu);
  const auto wrong = uchp::scale_arg(-i, uchp::restrict_diag(+1, plane));
  const cplx z(0.4, 0.2);
  const cplx want = uchp::shifted_fourier_at(psi, 0.5 * nu, z, rule, +1);
  CHECK(rel_err(std::sqrt(kPi / nu) * wrong.eval(z), want) > 1e-2);
}

TEST_CASE("composite slice transform and its annihilator") {
  const auto rule = uchp::gauss_hermite_rule(80);
  const cplx i(0.0, 1.0);
  const cplx z(0.4, 0.1), w(-0.2, 0.3);
  for (double nu : {1.0, 0.5}) {
    for (int m = 0; m <= 4; ++m) {
      const cplx got =
          uchp::g_composite_at(hermite_basis_r(m, nu), nu, z, w, rule);
      const cplx want =
          std::pow(nu / kPi, 0.75) * std::pow(nu, m) * ipow(z + i * w, m);
      CHECK(rel_err(got, want) < 1e-8);
    }
  }

  // d/dz + i d/dw annihilates the image (fourth-order differences, h = 1e-3)
  const double nu = 1.0;
  const double h = 1e-3;
  const auto phi =
      uchp::hermite_combo({{cplx(1.0), 2}, {cplx(0.5, 0.3), 0}}, nu);
  const std::vector<std::pair<cplx, cplx>> probes{
      {cplx(0.0), cplx(0.0)},
      {cplx(0.5, 0.2), cplx(-0.1, 0.4)},
      {cplx(-0.7, 0.1), cplx(0.3, -0.3)},
      {cplx(0.2, -0.6), cplx(0.6, 0.2)},
      {cplx(1.0, 0.5), cplx(-0.5, -0.2)}};
  auto G = [&](cplx zz, cplx ww) {
    return uchp::g_composite_at(phi, nu, zz, ww, rule);
  };
  for (auto [zz, ww] : probes) {
    const cplx dz = (-G(zz + 2 * h, ww) + 8.0 * G(zz + h, ww) -
                     8.0 * G(zz - h, ww) + G(zz - 2 * h, ww)) /
                    (12.0 * h);
    const cplx dw = (-G(zz, ww + 2 * h) + 8.0 * G(zz, ww + h) -
                     8.0 * G(zz, ww - h) + G(zz, ww - 2 * h)) /
                    (12.0 * h);
    const double scale = std::max(1.0, std::abs(G(zz, ww)));
    CHECK(std::abs(dz + i * dw) < 1e-8 * scale);
  }

  // zero input maps to zero
  CHECK(std::abs(uchp::g_composite_at(uchp::hermite_combo({}, 1.0), 1.0, z, w,
                                      rule)) < 1e-14);
}

TEST_CASE("coherent-states kernel sums") {
  // trivial one-element bases
  uchp::CstBasis ones{[](int, cplx) { return cplx(1.0); },
                      [](int) { return 1.0; }};
  CHECK(rel_err(uchp::cst_kernel(ones, ones, cplx(0.0), cplx(0.0), 1), 1.0) <
        1e-15);

  // Hermite-to-level bases reproduce the closed-form level kernel
  const double nu = 1.0;
  const double x = 0.3;
  const cplx z(0.5, 0.2);
  for (int n : {0, 1, 2}) {
    uchp::CstBasis bx{
        [nu](int k, cplx xx) { return uchp::real_hermite(k, nu).eval(xx); },
        [nu](int k) { return std::sqrt(uchp::real_hermite_norm_sq(k, nu)); }};
    uchp::CstBasis by{
        [nu, n](int k, cplx zz) {
          return uchp::complex_hermite(k, n, nu).eval(zz);
        },
        [nu, n](int k) { return std::sqrt(uchp::uchp_norm_sq(k, n, nu)); }};
    const cplx got = uchp::cst_kernel(bx, by, cplx(x), z, 40);
    const cplx closed =
        std::pow(nu / kPi, 0.75) /
        std::sqrt(std::pow(2.0, n) * std::pow(nu, n) * uchp::factorial(n)) *
        std::exp(-0.5 * nu * z * z + std::sqrt(2.0) * nu * x * z) *
        uchp::real_hermite(n, nu).eval(std::sqrt(2.0) * z.real() - x);
    CHECK(rel_err(got, closed) < 1e-8);
  }

  // polynomial-to-monomial bases reproduce the plane kernel; square-ring
  // enumeration by max(m, n) keeps the dropped tail far below tolerance
  const cplx xi(0.3, -0.2), zz(0.3, 0.15), ww(0.1, 0.1);
  const std::size_t n_terms = 49;  // every m, n <= 6
  std::vector<std::pair<int, int>> order;
  for (int r = 0; order.size() < n_terms; ++r) {
    for (int m = 0; m <= r && order.size() < n_terms; ++m)
      order.emplace_back(m, r);
    for (int n = 0; n < r && order.size() < n_terms; ++n)
      order.emplace_back(r, n);
  }
  uchp::CstBasis bx{[nu, &order](int k, cplx p) {
                      auto [m, n] = order[k];
                      return uchp::complex_hermite(m, n, nu).eval(p);
                    },
                    [nu, &order](int k) {
                      auto [m, n] = order[k];
                      return std::sqrt(uchp::uchp_norm_sq(m, n, nu));
                    }};
  uchp::CstBasis by{[&order, ww](int k, cplx p) {
                      auto [m, n] = order[k];
                      return ipow(p, m) * ipow(ww, n);
                    },
                    [nu, &order](int k) {
                      auto [m, n] = order[k];
                      return std::sqrt(std::pow(kPi / nu, 2) *
                                       uchp::factorial(m) * uchp::factorial(n) /
                                       std::pow(nu, m + n));
                    }};
  const cplx got = uchp::cst_kernel(bx, by, xi, zz, static_cast<int>(n_terms));
  const cplx closed = std::pow(nu / kPi, 1.5) *
                      std::exp(nu * (zz * std::conj(xi) + ww * xi - zz * ww));
  CHECK(rel_err(got, closed) < 1e-8);

  // zero norms are rejected
  uchp::CstBasis bad{[](int, cplx) { return cplx(1.0); },
                     [](int k) { return k == 0 ? 1.0 : 0.0; }};
  CHECK_THROWS_AS(uchp::cst_kernel(bad, ones, cplx(0.0), cplx(0.0), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(uchp::cst_kernel(ones, ones, cplx(0.0), cplx(0.0), 0),
                  std::invalid_argument);
}

TEST_CASE("integral representation of the polynomials") {
  const auto rule = uchp::gauss_hermite_rule(80);

  // order (0,0) collapses to 1 for any admissible parameters
  const cplx z0(0.7, 0.2);
  CHECK(rel_err(uchp::integral_rep_uchp(0, 0, cplx(1.0), cplx(1.0), 1.0, z0, rule),
                1.0) < 1e-10);
  CHECK(rel_err(uchp::integral_rep_uchp(0, 0, cplx(0.0, 1.0), cplx(0.0, -1.0),
                                        1.0, z0, rule),
                1.0) < 1e-10);

  // pinned: m=n=1, alpha=beta=gamma=1 at z=0.5 gives -0.75
  CHECK(rel_err(uchp::integral_rep_uchp(1, 1, cplx(1.0), cplx(1.0), 1.0,
                                        cplx(0.5), rule),
                -0.75) < 1e-8);

  // general complex parameters on the admissibility ray
  const cplx alpha = 1.2 * std::exp(cplx(0.0, 0.4));
  const cplx beta = 0.9 * std::exp(cplx(0.0, -0.4));
  const double gamma = 1.1;
  const double nu = (alpha * beta).real() / gamma;
  const cplx z(0.6, -0.35);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const cplx got =
          uchp::integral_rep_uchp(m, n, alpha, beta, gamma, z, rule);
      const cplx want = uchp::complex_hermite(m, n, nu).eval(z);
      CHECK(rel_err(got, want) < 1e-7);
    }
  }

  // constraint violations
  CHECK_THROWS_AS(uchp::integral_rep_uchp(0, 0, cplx(0.0, 1.0), cplx(0.0, 1.0),
                                          1.0, z, rule),
                  std::invalid_argument);
  CHECK_THROWS_AS(uchp::integral_rep_uchp(0, 0, cplx(0.0, 1.0), cplx(1.0), 1.0,
                                          z, rule),
                  std::invalid_argument);
  CHECK_THROWS_AS(uchp::integral_rep_uchp(0, 0, cplx(1.0), cplx(1.0), 0.0, z,
                                          rule),
                  std::invalid_argument);
}
