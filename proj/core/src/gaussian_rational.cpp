#include "ptq/gaussian_rational.hpp"

#include <sstream>
#include <stdexcept>

namespace ptq::weyl {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.squared_modulus();
  if (n == 0) {
    throw std::domain_error("GaussianRational: division by zero");
  }
  // z / w = z * conj(w) / |w|^2
  *this *= o.conjugate();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_string(const GaussianRational& v) {
  if (v.im == 0) {
    return to_string(v.re);
  }
  std::string im_part;
  if (v.im == 1) {
    im_part = "i";
  } else if (v.im == -1) {
    im_part = "-i";
  } else {
    im_part = to_string(v.im) + "*i";
  }
  if (v.re == 0) {
    return im_part;
  }
  std::string out = to_string(v.re);
  if (v.im > 0) {
    out += "+";
  }
  return out + im_part;
}

bool is_plain_unsigned_integer(const GaussianRational& v) {
  return v.im == 0 && v.re >= 0 && denominator(v.re) == 1;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0 && c != '/' && c != '-' && c != '+') {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace ptq::weyl
