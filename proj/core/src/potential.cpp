#include "ptq/potential.hpp"

#include <stdexcept>

namespace ptq::spectra {

PotentialSpec::PotentialSpec(double kinetic, std::vector<double> coeffs)
    : kinetic_coeff(kinetic), poly_coeffs(std::move(coeffs)) {
  if (kinetic_coeff <= 0.0) {
    throw std::invalid_argument("PotentialSpec: kinetic coefficient must be positive");
  }
  while (!poly_coeffs.empty() && poly_coeffs.back() == 0.0) poly_coeffs.pop_back();
  if (poly_coeffs.empty() || poly_coeffs.back() <= 0.0 || poly_coeffs.size() % 2 == 0) {
    throw std::invalid_argument(
        "PotentialSpec: potential must be confining (even degree, positive leading coefficient)");
  }
}

double PotentialSpec::eval(double y) const {
  double v = 0.0;
  for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) v = v * y + *it;
  return v;
}

double PotentialSpec::derivative(double y) const {
  double v = 0.0;
  for (int k = degree(); k >= 1; --k) v = v * y + k * poly_coeffs[static_cast<std::size_t>(k)];
  return v;
}

int PotentialSpec::degree() const { return static_cast<int>(poly_coeffs.size()) - 1; }

PotentialSpec PotentialSpec::harmonic() { return PotentialSpec(1.0, {0.0, 0.0, 1.0}); }

}  // namespace ptq::spectra
