#include "ptq/hamiltonian_model.hpp"

#include <stdexcept>

namespace ptq::metric {

using weyl::GaussianRational;

HamiltonianModel build_model(const Rational& g, const Rational& m2) {
  if (g <= 0) {
    throw std::invalid_argument("build_model: coupling g must be positive");
  }
  if (m2 < 0) {
    throw std::invalid_argument("build_model: mass-squared m2 must be non-negative");
  }
  Rational alpha = 16 * g;

  OperatorPoly one = OperatorPoly::constant(1);
  OperatorPoly contour = one + GaussianRational::i() * OperatorPoly::x();  // 1 + ix
  OperatorPoly p2 = OperatorPoly::p(2);

  OperatorPoly H = GaussianRational(Rational(1, 2)) * anticommutator(contour, p2) -
                   GaussianRational(Rational(1, 2)) * OperatorPoly::p() -
                   GaussianRational(alpha) * (contour * contour);
  if (m2 > 0) {
    // m^2 z^2 on the contour: z^2 = -4(1+ix)
    H -= GaussianRational(4 * m2) * contour;
  }

  auto parts = weyl::hermitian_split(H);
  HamiltonianModel model{g, alpha, m2, std::move(H), std::move(parts.hermitian),
                         std::move(parts.anti_hermitian)};
  return model;
}

}  // namespace ptq::metric
