#include "ptq/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ptq::linalg {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, int max_sweeps) {
  assert(static_cast<std::size_t>(n) * n == a.size());
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off == 0.0) break;

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale += std::abs(at(i, i));
    scale = std::max(scale, 1.0);
    if (std::sqrt(off) < 1e-15 * scale) break;

    // Rotations below the threshold are skipped early in the sweep cycle.
    double thresh = sweep < 3 ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq * apq <= thresh) continue;
        double app = at(p, p);
        double aqq = at(q, q);
        double diff = aqq - app;
        double t;
        if (std::abs(apq) < 1e-300) continue;
        double theta = diff / (2.0 * apq);
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = at(k, p);
          double akq = at(k, q);
          at(k, p) = akp - s * (akq + tau * akp);
          at(p, k) = at(k, p);
          at(k, q) = akq + s * (akp - tau * akq);
          at(q, k) = at(k, q);
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::ranges::sort(eig);
  return eig;
}

int count_below(const Tridiagonal& t, double x) {
  const int n = static_cast<int>(t.diag.size());
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double d = 1.0;
  for (int i = 0; i < n; ++i) {
    double off2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = t.diag[i] - x - off2 / d;
    if (std::abs(d) < tiny) d = d < 0.0 ? -tiny : tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int k) {
  const int n = static_cast<int>(t.diag.size());
  if (k < 1 || k > n) {
    throw std::invalid_argument("lowest_eigenvalues: k out of range");
  }
  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i < n - 1 ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }

  std::vector<double> eig(k);
  for (int idx = 1; idx <= k; ++idx) {
    double a = lo;
    double b = hi;
    // Invariant: count_below(a) < idx <= count_below(b).
    while (b - a > 1e-14 * std::max(1.0, std::max(std::abs(a), std::abs(b)))) {
      double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(t, mid) >= idx) {
        b = mid;
      } else {
        a = mid;
      }
    }
    eig[idx - 1] = 0.5 * (a + b);
  }
  return eig;
}

std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda, int iterations) {
  const int n = static_cast<int>(t.diag.size());
  // Shift slightly off the eigenvalue so the solve stays well-posed.
  double scale = 0.0;
  for (double d : t.diag) scale = std::max(scale, std::abs(d));
  double shift = lambda + 1e-11 * std::max(1.0, scale);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < iterations; ++it) {
    // LU solve of (T - shift) w = v with partial pivoting; row swaps create
    // fill-in on a second superdiagonal.
    std::vector<double> d(n), u1(std::max(0, n - 1)), u2(std::max(0, n - 2), 0.0);
    std::vector<double> x = v;
    for (int i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    for (int i = 0; i + 1 < n; ++i) u1[i] = t.off[i];

    for (int i = 0; i + 1 < n; ++i) {
      // Elimination never touches the subdiagonal of later rows.
      double sub = t.off[i];
      if (std::abs(d[i]) >= std::abs(sub)) {
        if (d[i] == 0.0) d[i] = 1e-300;
        double m = sub / d[i];
        d[i + 1] -= m * u1[i];
        x[i + 1] -= m * x[i];
      } else {
        // Swap rows i and i+1: row i becomes (sub, d[i+1], u1[i+1]).
        double old_d = d[i];
        double old_u1 = u1[i];
        d[i] = sub;
        u1[i] = d[i + 1];
        u2[i] = i + 1 < n - 1 ? u1[i + 1] : 0.0;
        std::swap(x[i], x[i + 1]);
        double m = old_d / d[i];
        d[i + 1] = old_u1 - m * u1[i];
        if (i + 1 < n - 1) u1[i + 1] = -m * u2[i];
        x[i + 1] -= m * x[i];
      }
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;

    for (int i = n - 1; i >= 0; --i) {
      double s = x[i];
      if (i + 1 < n) s -= u1[i] * x[i + 1];
      if (i + 2 < n) s -= u2[i] * x[i + 2];
      x[i] = s / d[i];
    }
    double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (norm == 0.0 || !std::isfinite(norm)) break;
    for (double& xi : x) xi /= norm;
    v = std::move(x);
  }
  return v;
}

}  // namespace ptq::linalg
