#pragma once

#include <vector>

namespace ptq::linalg {

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations with thresholding. Returns all n eigenvalues sorted
/// ascending. The input is consumed as workspace.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, int max_sweeps = 64);

/// Symmetric tridiagonal matrix: diag.size() == n, off.size() == n-1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T count).
int count_below(const Tridiagonal& t, double x);

/// Lowest k eigenvalues by Sturm-sequence bisection, sorted ascending.
std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int k);

/// Eigenvector for an isolated eigenvalue via shifted inverse iteration;
/// returns a unit vector.
std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda, int iterations = 4);

}  // namespace ptq::linalg
