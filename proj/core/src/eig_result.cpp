#include "ptq/eig_result.hpp"

#include <cstdio>

namespace ptq::spectra {

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

std::string to_csv(const EigResult& r) {
  std::string out = "index,eigenvalue,error_estimate\n";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    double err = i < r.convergence.size() ? r.convergence[i] : 0.0;
    out += std::to_string(i) + "," + format_sci(r.values[i]) + "," + format_sci(err) + "\n";
  }
  return out;
}

}  // namespace ptq::spectra
