#pragma once

#include "ptq/operator_poly.hpp"

namespace ptq::metric {

using weyl::OperatorPoly;
using weyl::Rational;

/// The quartic contour Hamiltonian mapped to the real line, split exactly
/// into Hermitian and anti-Hermitian parts:
///
///   H  = (1/2){(1+ix), p^2} - (1/2)p - alpha (1+ix)^2 - 4 m^2 (1+ix)
///   H0 = p^2 - (1/2)p + alpha (x^2 - 1) - 4 m^2
///   H1 = (i/2){x, p^2} - 2i(alpha + 2 m^2) x
///
/// with alpha = 16 g. The mass term is the image of m^2 z^2 on the contour
/// z = -2i sqrt(1+ix), where z^2 = -4(1+ix).
struct HamiltonianModel {
  Rational g;      // quartic coupling, > 0
  Rational alpha;  // 16 g
  Rational m2;     // mass-squared, >= 0
  OperatorPoly H;
  OperatorPoly H0;  // Hermitian part
  OperatorPoly H1;  // anti-Hermitian part
};

/// Builds the model for coupling g > 0 and mass-squared m2 >= 0.
/// Throws std::invalid_argument outside that domain.
HamiltonianModel build_model(const Rational& g, const Rational& m2 = Rational(0));

}  // namespace ptq::metric
