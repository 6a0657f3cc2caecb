#include "ptq/oscillator_basis.hpp"

#include "ptq/errors.hpp"
#include "ptq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ptq::spectra {

namespace {

// Basis ground-state expectation of the Hamiltonian at length scale ell:
// <p^2> = 1/(2 ell^2), <y^(2j)> = (2j-1)!! (ell^2/2)^j, odd moments vanish.
double ground_expectation(const PotentialSpec& pot, double ell) {
  double e = pot.kinetic_coeff / (2.0 * ell * ell);
  double moment = 1.0;  // (ell^2/2)^j
  double dfact = 1.0;   // (2j-1)!!
  for (int j = 1; 2 * j <= pot.degree(); ++j) {
    moment *= ell * ell / 2.0;
    dfact *= 2 * j - 1;
    std::size_t idx = static_cast<std::size_t>(2 * j);
    if (idx < pot.poly_coeffs.size()) e += pot.poly_coeffs[idx] * dfact * moment;
  }
  return e;
}

double auto_length_scale(const PotentialSpec& pot) {
  double best_ell = 1.0;
  double best = ground_expectation(pot, 1.0);
  for (int i = 0; i <= 240; ++i) {
    double ell = std::exp(-3.5 + 7.0 * i / 240.0);
    double e = ground_expectation(pot, ell);
    if (e < best) {
      best = e;
      best_ell = ell;
    }
  }
  return best_ell;
}

// Lowest k Rayleigh-Ritz eigenvalues in the first n basis states. Matrix
// elements of y^m are exact: powers are formed in an enlarged space so the
// n x n block is the true projection of the operator.
std::vector<double> solve_truncated(const PotentialSpec& pot, double ell, int n, int k) {
  const int deg = pot.degree();
  const int n_ext = n + deg;
  const std::size_t stride = static_cast<std::size_t>(n_ext);

  // y is tridiagonal with zero diagonal: y[m+1][m] = ell*sqrt((m+1)/2).
  std::vector<double> yoff(n_ext - 1);
  for (int m = 0; m + 1 < n_ext; ++m) yoff[m] = ell * std::sqrt((m + 1) / 2.0);

  std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
  auto hat = [&](int r, int c) -> double& { return h[static_cast<std::size_t>(r) * n + c]; };

  // Potential: accumulate c_m * y^m via repeated tridiagonal right-multiply.
  std::vector<double> power(stride * stride, 0.0);
  for (int i = 0; i < n_ext; ++i) power[i * stride + i] = 1.0;
  for (int m = 0; m <= deg; ++m) {
    double cm = m < static_cast<int>(pot.poly_coeffs.size()) ? pot.poly_coeffs[m] : 0.0;
    if (cm != 0.0) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) hat(r, c) += cm * power[r * stride + c];
    }
    if (m == deg) break;
    std::vector<double> next(stride * stride, 0.0);
    for (int r = 0; r < n_ext; ++r) {
      for (int c = 0; c < n_ext; ++c) {
        double v = 0.0;
        if (c > 0) v += power[r * stride + (c - 1)] * yoff[c - 1];
        if (c + 1 < n_ext) v += power[r * stride + (c + 1)] * yoff[c];
        next[r * stride + c] = v;
      }
    }
    power = std::move(next);
  }

  // Kinetic term: p^2 has diag (2m+1)/(2 ell^2), off-2 -sqrt((m+1)(m+2))/(2 ell^2).
  double inv2l2 = 1.0 / (2.0 * ell * ell);
  for (int m = 0; m < n; ++m) {
    hat(m, m) += pot.kinetic_coeff * (2 * m + 1) * inv2l2;
    if (m + 2 < n) {
      double v = -pot.kinetic_coeff * std::sqrt(double(m + 1) * (m + 2)) * inv2l2;
      hat(m, m + 2) += v;
      hat(m + 2, m) += v;
    }
  }

  std::vector<double> eig = linalg::jacobi_eigenvalues(std::move(h), n);
  eig.resize(k);
  return eig;
}

}  // namespace

EigResult oscillator_basis_eigs(const PotentialSpec& pot, const BasisConfig& basis, int k) {
  if (k < 1) throw std::invalid_argument("oscillator_basis_eigs: k must be >= 1");
  if (basis.n_basis < 2 * k) {
    throw std::invalid_argument("oscillator_basis_eigs: need n_basis >= 2k");
  }

  double ell = basis.omega > 0 ? 1.0 / std::sqrt(basis.omega) : auto_length_scale(pot);

  int n = basis.n_basis;
  std::vector<double> values;
  std::vector<double> conv(k);
  for (;;) {
    int n_small = std::max(2 * k, n - std::max(8, n / 8));
    std::vector<double> small = solve_truncated(pot, ell, n_small, k);
    values = solve_truncated(pot, ell, n, k);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      conv[i] = std::abs(values[i] - small[i]);
      if (basis.rel_tol > 0 && conv[i] > basis.rel_tol * std::max(1.0, std::abs(values[i]))) {
        ok = false;
      }
    }
    if (ok || basis.rel_tol <= 0) break;
    if (basis.max_n_basis >= 2 * n) {
      n *= 2;
      continue;
    }
    throw NotConverged("oscillator_basis_eigs: estimate above rel_tol at n_basis = " +
                       std::to_string(n));
  }

  EigResult r;
  r.method = "basis";
  r.values = std::move(values);
  r.convergence = std::move(conv);
  r.params = {{"n_basis", std::to_string(n)},
              {"omega", format_sci(1.0 / (ell * ell))},
              {"k", std::to_string(k)}};
  return r;
}

}  // namespace ptq::spectra
