#pragma once

#include "ptq/eig_result.hpp"
#include "ptq/potential.hpp"

namespace ptq::spectra {

/// Uniform Dirichlet grid on [-half_width, half_width].
struct GridConfig {
  double half_width = 8.0;  // L
  int n_points = 4000;      // interior points of the fine grid
  double boundary_mass_tol = 1e-8;
  double rel_tol = 0.0;  // > 0: enforce the Richardson error estimate
};

/// Three-point discretization of kinetic*p^2 + V(y) with Dirichlet ends,
/// lowest k eigenvalues by Sturm-sequence bisection on the symmetric
/// tridiagonal system. Eigenvalues are Richardson-combined from the fine and
/// half-resolution grids (the raw second-order values are extrapolated to
/// fourth order); the convergence estimate is the h^2 Richardson term.
///
/// Throws BoxTooSmall when V at the walls fails to dominate the requested
/// eigenvalues or eigenfunction mass leaks to the boundary, and NotConverged
/// when rel_tol > 0 is not met.
EigResult finite_difference_eigs(const PotentialSpec& pot, const GridConfig& grid, int k);

}  // namespace ptq::spectra
