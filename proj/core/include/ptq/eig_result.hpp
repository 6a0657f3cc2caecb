#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ptq::spectra {

/// Computed spectrum slice with per-eigenvalue diagnostics.
struct EigResult {
  std::string method;          // "basis", "fd", "shoot-line", "shoot-rays", ...
  std::vector<double> values;  // sorted ascending
  std::vector<double> convergence;  // estimated absolute error per value
  std::vector<double> residuals;    // solver-specific residual per value (may be empty)
  std::vector<std::pair<std::string, std::string>> params;  // config echo, ordered
};

/// Fixed 12-significant-digit scientific notation, locale-independent.
std::string format_sci(double v);

/// CSV rows "index,eigenvalue,error_estimate" with a header line.
std::string to_csv(const EigResult& r);

}  // namespace ptq::spectra
