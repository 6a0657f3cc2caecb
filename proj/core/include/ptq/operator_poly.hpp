#pragma once

#include "ptq/gaussian_rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace ptq::weyl {

/// Exponents of a normal-ordered monomial x^xpow * p^ppow.
struct MonomialKey {
  int xpow = 0;
  int ppow = 0;

  int degree() const { return xpow + ppow; }
  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

/// Polynomial in the symbols x and p with [x, p] = i, stored in normal order:
/// every x factor to the left of every p factor, at most one term per
/// exponent pair, no zero coefficients. The zero polynomial is the empty map.
///
/// Values are immutable in practice and all operations are pure, so they may
/// be shared freely across threads.
class OperatorPoly {
 public:
  using TermMap = std::map<MonomialKey, GaussianRational>;

  OperatorPoly() = default;

  static OperatorPoly constant(GaussianRational c);
  static OperatorPoly monomial(int xpow, int ppow, GaussianRational c = GaussianRational(1));
  static OperatorPoly x(int power = 1) { return monomial(power, 0); }
  static OperatorPoly p(int power = 1) { return monomial(0, power); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of x^xpow * p^ppow (zero if the term is absent).
  GaussianRational coeff(int xpow, int ppow) const;

  int max_x_degree() const;
  int max_p_degree() const;
  int degree() const;

  /// Accumulates c * x^xpow * p^ppow, erasing the term if it cancels.
  void add_term(const MonomialKey& key, const GaussianRational& c);

  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly& operator*=(const GaussianRational& s);

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator-(OperatorPoly a);
  friend OperatorPoly operator*(OperatorPoly a, const GaussianRational& s) { return a *= s; }
  friend OperatorPoly operator*(const GaussianRational& s, OperatorPoly a) { return a *= s; }

  /// Normal-ordered product, exact: p^b x^a is rewritten via px = xp - i.
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);

  bool operator==(const OperatorPoly&) const = default;

 private:
  TermMap terms_;
};

enum class BracketKind { commutator, anticommutator };

/// ab - ba or ab + ba, normal-ordered, exact.
OperatorPoly bracket(const OperatorPoly& a, const OperatorPoly& b, BracketKind kind);
OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly anticommutator(const OperatorPoly& a, const OperatorPoly& b);

/// Hermitian adjoint: conjugate every coefficient, reverse factor order
/// (x and p are individually self-adjoint), re-normal-order.
OperatorPoly adjoint(const OperatorPoly& a);

struct HermitianParts {
  OperatorPoly hermitian;       // (a + a†)/2
  OperatorPoly anti_hermitian;  // (a - a†)/2
};

/// Exact split a = S + A with S† = S and A† = -A.
HermitianParts hermitian_split(const OperatorPoly& a);

bool is_hermitian(const OperatorPoly& a);
bool is_anti_hermitian(const OperatorPoly& a);

/// True iff every stored term has xpow = 0 (a polynomial in p alone).
bool depends_only_on_p(const OperatorPoly& a);

enum class FourierDirection { forward, inverse };

/// Canonical automorphism induced by the Fourier transform:
/// forward maps x -> -p, p -> x; inverse maps x -> p, p -> -x.
/// Preserves [x, p] = i; inverse(forward(a)) == a.
OperatorPoly fourier_map(const OperatorPoly& a, FourierDirection dir = FourierDirection::forward);

/// Canonical text rendering with deterministic term order (ascending total
/// degree, then ascending xpow), e.g. "2*p + (-1/48)*p^3".
std::string render(const OperatorPoly& a);

}  // namespace ptq::weyl
