#pragma once

#include "ptq/eig_result.hpp"
#include "ptq/potential.hpp"

namespace ptq::spectra {

/// Oscillator-basis truncation config. The expansion basis consists of the
/// first n_basis eigenfunctions of p^2 + omega^2 y^2; omega <= 0 selects the
/// scale automatically by minimizing the basis ground-state expectation of
/// the Hamiltonian over a coarse 1-D search.
struct BasisConfig {
  int n_basis = 256;
  double omega = 0.0;
  double rel_tol = 0.0;    // > 0: enforce per-eigenvalue convergence estimate
  int max_n_basis = 0;     // > 0: double n_basis until rel_tol is met (cap)
};

/// Variational (Rayleigh-Ritz) matrix truncation: the Hamiltonian is
/// projected onto the basis with exact ladder-operator matrix elements and
/// diagonalized densely. Returns the lowest k eigenvalues; the convergence
/// estimate per eigenvalue comes from comparing against a smaller-basis run.
///
/// Throws NotConverged when rel_tol > 0 cannot be met within max_n_basis.
EigResult oscillator_basis_eigs(const PotentialSpec& pot, const BasisConfig& basis, int k);

}  // namespace ptq::spectra
