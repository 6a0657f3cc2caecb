#pragma once

#include <vector>

namespace ptq::spectra {

/// Numeric description of a Schrödinger problem kinetic*p^2 + V(y) on the
/// real line, with V(y) = sum_k poly_coeffs[k] * y^k. The highest-degree
/// coefficient must be positive (confining potential, spectrum bounded
/// below); construction validates this.
struct PotentialSpec {
  double kinetic_coeff = 1.0;
  std::vector<double> poly_coeffs;  // index = power of y

  PotentialSpec() = default;
  PotentialSpec(double kinetic, std::vector<double> coeffs);

  double eval(double y) const;
  double derivative(double y) const;
  int degree() const;

  /// p^2 + y^2, the built-in sanity potential with spectrum 2n+1.
  static PotentialSpec harmonic();
};

}  // namespace ptq::spectra
