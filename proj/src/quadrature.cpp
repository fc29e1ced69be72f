#include "uchp/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "uchp/polynomials.hpp"

namespace uchp {

namespace {

struct Kahan {
  cplx s{}, c{};
  void add(cplx v) {
    const cplx y = v - c;
    const cplx t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// Symmetric tridiagonal QL with implicit shifts.  Only the first component of
// each eigenvector is carried along (q), which is all the weights need.
// d holds the diagonal (becomes the eigenvalues), e the n-1 off-diagonals.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& q) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw std::runtime_error("tridiag_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = q[i + 1];
          q[i + 1] = s * q[i] + c * f;
          q[i] = c * q[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

[[noreturn]] void throw_nonfinite(const char* where, std::initializer_list<double> coords) {
  std::ostringstream os;
  os << where << ": non-finite integrand value at node (";
  bool first = true;
  for (double c : coords) {
    if (!first) os << ", ";
    os << c;
    first = false;
  }
  os << ")";
  throw QuadratureError(os.str());
}

cplx checked(cplx v, const char* where, std::initializer_list<double> coords) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw_nonfinite(where, coords);
  return v;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int N) {
  if (N < 1 || N > 200)
    throw std::invalid_argument("gauss_hermite_rule: node count must lie in [1, 200]");
  std::vector<double> d(static_cast<size_t>(N), 0.0);
  std::vector<double> e;
  e.reserve(static_cast<size_t>(N));
  for (int k = 1; k < N; ++k) e.push_back(std::sqrt(0.5 * k));
  std::vector<double> q(static_cast<size_t>(N), 0.0);
  q[0] = 1.0;
  tridiag_ql(d, e, q);

  std::vector<int> order(static_cast<size_t>(N));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[static_cast<size_t>(a)] < d[static_cast<size_t>(b)]; });

  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(N));
  rule.weights.resize(static_cast<size_t>(N));
  const double mu0 = std::sqrt(M_PI);  // total mass of exp(-x^2)
  for (int i = 0; i < N; ++i) {
    rule.nodes[static_cast<size_t>(i)] = d[static_cast<size_t>(order[static_cast<size_t>(i)])];
    const double qi = q[static_cast<size_t>(order[static_cast<size_t>(i)])];
    rule.weights[static_cast<size_t>(i)] = mu0 * qi * qi;
  }
  // The rule is symmetric in exact arithmetic; enforce that exactly so that
  // odd integrands cancel cleanly and runs are reproducible bit for bit.
  for (int i = 0, j = N - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[static_cast<size_t>(j)] - rule.nodes[static_cast<size_t>(i)]);
    rule.nodes[static_cast<size_t>(j)] = x;
    rule.nodes[static_cast<size_t>(i)] = -x;
    const double w = 0.5 * (rule.weights[static_cast<size_t>(i)] + rule.weights[static_cast<size_t>(j)]);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(j)] = w;
  }
  if (N % 2 == 1) rule.nodes[static_cast<size_t>(N / 2)] = 0.0;
  return rule;
}

cplx kahan_chunked_sum(std::size_t count, const std::function<cplx(std::size_t)>& term,
                       int workers, std::size_t chunk) {
  if (workers < 1) workers = 1;
  if (chunk == 0) chunk = 8192;
  const std::size_t nchunks = (count + chunk - 1) / chunk;
  std::vector<cplx> partial(nchunks);
  std::vector<std::exception_ptr> errs(nchunks);

  auto run_chunk = [&](std::size_t ci) {
    const std::size_t lo = ci * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    Kahan acc;
    try {
      for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
      partial[ci] = acc.s;
    } catch (...) {
      errs[ci] = std::current_exception();
    }
  };

  if (workers == 1 || nchunks <= 1) {
    for (std::size_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (;;) {
        const std::size_t ci = next.fetch_add(1);
        if (ci >= nchunks) return;
        run_chunk(ci);
      }
    };
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), nchunks);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }
  // Report the error from the earliest chunk so failures are deterministic.
  for (std::size_t ci = 0; ci < nchunks; ++ci)
    if (errs[ci]) std::rethrow_exception(errs[ci]);

  Kahan total;
  for (const cplx& v : partial) total.add(v);
  return total.s;
}

cplx integrate_gaussian_r(const std::function<cplx(double)>& f, double nu,
                          const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const double root = std::sqrt(nu);
  const std::size_t N = rule.nodes.size();
  const cplx s = kahan_chunked_sum(
      N,
      [&](std::size_t i) {
        const double x = rule.nodes[i] / root;
        return rule.weights[i] * checked(f(x), "integrate_gaussian_r", {x});
      },
      workers);
  return s / root;
}

cplx integrate_gaussian_r2(const std::function<cplx(double, double)>& f, double nu,
                           const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const double root = std::sqrt(nu);
  const std::size_t N = rule.nodes.size();
  const cplx s = kahan_chunked_sum(
      N * N,
      [&](std::size_t i) {
        const std::size_t a = i / N, b = i % N;
        const double x = rule.nodes[a] / root;
        const double y = rule.nodes[b] / root;
        return rule.weights[a] * rule.weights[b] *
               checked(f(x, y), "integrate_gaussian_r2", {x, y});
      },
      workers);
  return s / nu;
}

cplx integrate_gaussian_c(const std::function<cplx(cplx)>& f, double nu,
                          const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const double root = std::sqrt(nu);
  const std::size_t N = rule.nodes.size();
  const cplx s = kahan_chunked_sum(
      N * N,
      [&](std::size_t i) {
        const std::size_t a = i / N, b = i % N;
        const cplx xi(rule.nodes[a] / root, rule.nodes[b] / root);
        return rule.weights[a] * rule.weights[b] *
               checked(f(xi), "integrate_gaussian_c", {xi.real(), xi.imag()});
      },
      workers);
  return s / nu;
}

cplx integrate_gaussian_c2(const std::function<cplx(cplx, cplx)>& f, double nu,
                           const QuadratureRule& rule, int workers) {
  require_positive_nu(nu);
  const double root = std::sqrt(nu);
  const std::size_t N = rule.nodes.size();
  const cplx s = kahan_chunked_sum(
      N * N * N * N,
      [&](std::size_t i) {
        const std::size_t a = i / (N * N * N);
        const std::size_t b = (i / (N * N)) % N;
        const std::size_t c = (i / N) % N;
        const std::size_t d = i % N;
        const cplx z(rule.nodes[a] / root, rule.nodes[b] / root);
        const cplx w(rule.nodes[c] / root, rule.nodes[d] / root);
        return rule.weights[a] * rule.weights[b] * rule.weights[c] * rule.weights[d] *
               checked(f(z, w), "integrate_gaussian_c2",
                       {z.real(), z.imag(), w.real(), w.imag()});
      },
      workers);
  return s / (nu * nu);
}

LineIntegral integrate_line(const std::function<cplx(double)>& f, double halfwidth,
                            int n_points) {
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth))
    throw std::invalid_argument("integrate_line: halfwidth must be positive and finite");
  constexpr int n = 64;  // Clenshaw-Curtis order per panel
  const int panels = std::max(1, (n_points + n / 2) / n);

  // Weights for the n+1 point rule on [-1, 1]; endpoints get half weight c_k.
  std::vector<double> cx(n + 1), cw(n + 1);
  for (int k = 0; k <= n; ++k) {
    cx[static_cast<size_t>(k)] = std::cos(k * M_PI / n);
    double sum = 0.0;
    for (int j = 1; j <= n / 2; ++j) {
      const double bj = (j == n / 2) ? 1.0 : 2.0;
      sum += bj / (4.0 * j * j - 1.0) * std::cos(2.0 * j * k * M_PI / n);
    }
    const double ck = (k == 0 || k == n) ? 1.0 : 2.0;
    cw[static_cast<size_t>(k)] = (ck / n) * (1.0 - sum);
  }

  Kahan acc;
  double maxabs = 0.0;
  double edge_left = 0.0, edge_right = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = -halfwidth + 2.0 * halfwidth * p / panels;
    const double b = -halfwidth + 2.0 * halfwidth * (p + 1) / panels;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int k = 0; k <= n; ++k) {
      const double x = mid + half * cx[static_cast<size_t>(k)];
      const cplx v = checked(f(x), "integrate_line", {x});
      maxabs = std::max(maxabs, std::abs(v));
      if (p == 0 && k == n) edge_left = std::abs(v);
      if (p == panels - 1 && k == 0) edge_right = std::abs(v);
      acc.add(half * cw[static_cast<size_t>(k)] * v);
    }
  }
  LineIntegral out;
  out.value = acc.s;
  out.decay_warning = std::max(edge_left, edge_right) >= 1e-16 * std::max(1.0, maxabs);
  return out;
}

}  // namespace uchp
