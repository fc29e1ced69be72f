#include "uchp/polynomials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace uchp {

namespace {

constexpr int kFactorialCap = 170;  // 171! overflows double

const std::array<double, kFactorialCap + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialCap + 1> t{};
    t[0] = 1.0;
    for (int k = 1; k <= kFactorialCap; ++k) t[k] = t[k - 1] * static_cast<double>(k);
    return t;
  }();
  return table;
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n > kFactorialCap)
    throw std::overflow_error("factorial: " + std::to_string(n) + "! exceeds double range (cap " +
                              std::to_string(kFactorialCap) + ")");
  return factorial_table()[static_cast<size_t>(n)];
}

void require_positive_nu(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw std::invalid_argument("nu must be a positive finite real");
}

RealPoly::RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, 0.0);
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
}

double RealPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return 0.0;
  return c_[static_cast<size_t>(j)];
}

double RealPoly::eval(double x) const {
  double acc = 0.0;
  for (size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
  return acc;
}

cplx RealPoly::eval(cplx x) const {
  cplx acc = 0.0;
  for (size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
  return acc;
}

BiPoly BiPoly::constant(cplx v) {
  BiPoly p;
  p.c_[0] = v;
  return p;
}

BiPoly BiPoly::monomial(int j, int k, cplx v) {
  if (j < 0 || k < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
  BiPoly p(j + 1, k + 1);
  p.at(j, k) = v;
  p.trim();
  return p;
}

cplx BiPoly::coeff(int j, int k) const {
  if (j < 0 || j >= rows_ || k < 0 || k >= cols_) return cplx{};
  return at(j, k);
}

bool BiPoly::is_zero() const {
  return rows_ == 1 && cols_ == 1 && c_[0] == cplx{};
}

double BiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const cplx& v : c_) m = std::max(m, std::abs(v));
  return m;
}

cplx BiPoly::eval(cplx z, cplx zbar) const {
  // Horner in z of row polynomials that are themselves Horner in zbar.
  cplx acc = 0.0;
  for (int j = rows_; j-- > 0;) {
    cplx row = 0.0;
    for (int k = cols_; k-- > 0;) row = row * zbar + at(j, k);
    acc = acc * z + row;
  }
  return acc;
}

BiPoly BiPoly::shifted_z() const {
  BiPoly r(rows_ + 1, cols_);
  for (int j = 0; j < rows_; ++j)
    for (int k = 0; k < cols_; ++k) r.at(j + 1, k) = at(j, k);
  r.trim();
  return r;
}

BiPoly BiPoly::shifted_zbar() const {
  BiPoly r(rows_, cols_ + 1);
  for (int j = 0; j < rows_; ++j)
    for (int k = 0; k < cols_; ++k) r.at(j, k + 1) = at(j, k);
  r.trim();
  return r;
}

void BiPoly::trim() {
  int rows = rows_, cols = cols_;
  auto row_zero = [&](int j) {
    for (int k = 0; k < cols; ++k)
      if (at(j, k) != cplx{}) return false;
    return true;
  };
  auto col_zero = [&](int k) {
    for (int j = 0; j < rows; ++j)
      if (at(j, k) != cplx{}) return false;
    return true;
  };
  while (rows > 1 && row_zero(rows - 1)) --rows;
  while (cols > 1 && col_zero(cols - 1)) --cols;
  if (rows == rows_ && cols == cols_) return;
  std::vector<cplx> packed(static_cast<size_t>(rows) * cols);
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < cols; ++k) packed[static_cast<size_t>(j) * cols + k] = at(j, k);
  rows_ = rows;
  cols_ = cols;
  c_ = std::move(packed);
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r(std::max(a.rows_, b.rows_), std::max(a.cols_, b.cols_));
  for (int j = 0; j < r.rows_; ++j)
    for (int k = 0; k < r.cols_; ++k) r.at(j, k) = a.coeff(j, k) + b.coeff(j, k);
  r.trim();
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r(std::max(a.rows_, b.rows_), std::max(a.cols_, b.cols_));
  for (int j = 0; j < r.rows_; ++j)
    for (int k = 0; k < r.cols_; ++k) r.at(j, k) = a.coeff(j, k) - b.coeff(j, k);
  r.trim();
  return r;
}

BiPoly operator*(cplx s, const BiPoly& p) {
  BiPoly r = p;
  for (cplx& v : r.c_) v *= s;
  r.trim();
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
  for (int j = 0; j < a.rows_; ++j)
    for (int k = 0; k < a.cols_; ++k) {
      const cplx av = a.at(j, k);
      if (av == cplx{}) continue;
      for (int p = 0; p < b.rows_; ++p)
        for (int q = 0; q < b.cols_; ++q) r.at(j + p, k + q) += av * b.at(p, q);
    }
  r.trim();
  return r;
}

RealPoly real_hermite(int n, double nu) {
  if (n < 0) throw std::invalid_argument("real_hermite: order must be nonnegative");
  require_positive_nu(nu);
  std::vector<double> prev{1.0};  // H_0
  if (n == 0) return RealPoly(prev);
  std::vector<double> cur{0.0, 2.0 * nu};  // H_1
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = 2.0 * nu * cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= 2.0 * nu * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RealPoly(cur);
}

RealPoly laguerre(int m) {
  if (m < 0) throw std::invalid_argument("laguerre: order must be nonnegative");
  std::vector<double> prev{1.0};
  if (m == 0) return RealPoly(prev);
  std::vector<double> cur{1.0, -1.0};
  for (int k = 1; k < m; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (size_t j = 0; j < cur.size(); ++j) {
      next[j] += (2.0 * k + 1.0) * cur[j];
      next[j + 1] -= cur[j];
    }
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= static_cast<double>(k) * prev[j];
    for (double& v : next) v /= (k + 1.0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RealPoly(cur);
}

BiPoly complex_hermite(int m, int n, double nu) {
  if (m < 0 || n < 0) throw std::invalid_argument("complex_hermite: orders must be nonnegative");
  require_positive_nu(nu);
  // Row j = 0: H_{0,k} = (nu zbar)^k for k <= n, then climb in the first index.
  std::vector<BiPoly> row(static_cast<size_t>(n) + 1);
  double pw = 1.0;
  for (int k = 0; k <= n; ++k) {
    row[static_cast<size_t>(k)] = BiPoly::monomial(0, k, pw);
    pw *= nu;
  }
  for (int j = 1; j <= m; ++j) {
    std::vector<BiPoly> next(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      BiPoly v = nu * row[static_cast<size_t>(k)].shifted_z();
      if (k > 0) v = v - (nu * static_cast<double>(k)) * row[static_cast<size_t>(k) - 1];
      next[static_cast<size_t>(k)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(n)];
}

std::vector<std::vector<cplx>> complex_hermite_values(cplx z, cplx zbar, double nu,
                                                      int mmax, int nmax) {
  if (mmax < 0 || nmax < 0)
    throw std::invalid_argument("complex_hermite_values: orders must be nonnegative");
  require_positive_nu(nu);
  std::vector<std::vector<cplx>> v(static_cast<size_t>(mmax) + 1,
                                   std::vector<cplx>(static_cast<size_t>(nmax) + 1));
  v[0][0] = 1.0;
  for (int k = 1; k <= nmax; ++k) v[0][static_cast<size_t>(k)] = nu * zbar * v[0][static_cast<size_t>(k) - 1];
  for (int j = 1; j <= mmax; ++j) {
    for (int k = 0; k <= nmax; ++k) {
      cplx val = nu * z * v[static_cast<size_t>(j) - 1][static_cast<size_t>(k)];
      if (k > 0) val -= nu * static_cast<double>(k) * v[static_cast<size_t>(j) - 1][static_cast<size_t>(k) - 1];
      v[static_cast<size_t>(j)][static_cast<size_t>(k)] = val;
    }
  }
  return v;
}

cplx hermite_value(int n, cplx scale, cplx y) {
  if (n < 0) throw std::invalid_argument("hermite_value: order must be nonnegative");
  cplx prev = 1.0;
  if (n == 0) return prev;
  cplx cur = 2.0 * scale * y;
  for (int k = 1; k < n; ++k) {
    cplx next = 2.0 * scale * y * cur - 2.0 * scale * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BiPoly wirtinger_dz(const BiPoly& p) {
  BiPoly r = BiPoly::constant(0.0);
  for (int j = 1; j <= p.deg_z(); ++j)
    for (int k = 0; k <= p.deg_zbar(); ++k) {
      const cplx c = p.coeff(j, k);
      if (c != cplx{}) r = r + BiPoly::monomial(j - 1, k, static_cast<double>(j) * c);
    }
  return r;
}

BiPoly wirtinger_dzbar(const BiPoly& p) {
  BiPoly r = BiPoly::constant(0.0);
  for (int j = 0; j <= p.deg_z(); ++j)
    for (int k = 1; k <= p.deg_zbar(); ++k) {
      const cplx c = p.coeff(j, k);
      if (c != cplx{}) r = r + BiPoly::monomial(j, k - 1, static_cast<double>(k) * c);
    }
  return r;
}

BiPoly landau_apply(const BiPoly& p, double nu) {
  require_positive_nu(nu);
  const BiPoly dzb = wirtinger_dzbar(p);
  return (nu * dzb.shifted_zbar()) - wirtinger_dz(dzb);
}

double uchp_norm_sq(int m, int n, double nu) {
  if (m < 0 || n < 0) throw std::invalid_argument("uchp_norm_sq: orders must be nonnegative");
  require_positive_nu(nu);
  const double v = (M_PI / nu) * factorial(m) * factorial(n) * std::pow(nu, m + n);
  if (!std::isfinite(v)) throw std::overflow_error("uchp_norm_sq: value exceeds double range");
  return v;
}

double real_hermite_norm_sq(int m, double nu) {
  if (m < 0) throw std::invalid_argument("real_hermite_norm_sq: order must be nonnegative");
  require_positive_nu(nu);
  const double v = std::sqrt(M_PI / nu) * std::pow(2.0, m) * std::pow(nu, m) * factorial(m);
  if (!std::isfinite(v)) throw std::overflow_error("real_hermite_norm_sq: value exceeds double range");
  return v;
}

double uchp_rescaling_residual(int m, int n, double nu, cplx z) {
  const double root = std::sqrt(nu);
  const cplx a = complex_hermite(m, n, nu).eval(z);
  const cplx b = std::pow(nu, 0.5 * (m + n)) * complex_hermite(m, n, 1.0).eval(root * z);
  return std::abs(a - b);
}

}  // namespace uchp
