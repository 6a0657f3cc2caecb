#include "ptq/operator_poly.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace ptq::weyl {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

// Coefficient of x^(a-k) p^(b-k) in the normal ordering of p^b x^a:
//   k! * C(b,k) * C(a,k) * (-i)^k
// which is what repeated application of px = xp - i produces.
GaussianRational swap_coefficient(int b, int a, int k) {
  Integer m = binomial(b, k) * binomial(a, k);
  for (int j = 2; j <= k; ++j) m *= j;
  Rational mag(m);
  switch (k % 4) {
    case 0: return {mag, Rational(0)};
    case 1: return {Rational(0), -mag};
    case 2: return {-mag, Rational(0)};
    default: return {Rational(0), mag};
  }
}

}  // namespace

OperatorPoly OperatorPoly::constant(GaussianRational c) { return monomial(0, 0, std::move(c)); }

OperatorPoly OperatorPoly::monomial(int xpow, int ppow, GaussianRational c) {
  assert(xpow >= 0 && ppow >= 0);
  OperatorPoly r;
  r.add_term({xpow, ppow}, c);
  return r;
}

GaussianRational OperatorPoly::coeff(int xpow, int ppow) const {
  auto it = terms_.find({xpow, ppow});
  return it == terms_.end() ? GaussianRational() : it->second;
}

int OperatorPoly::max_x_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.xpow);
  return d;
}

int OperatorPoly::max_p_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.ppow);
  return d;
}

int OperatorPoly::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.degree());
  return d;
}

void OperatorPoly::add_term(const MonomialKey& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

OperatorPoly operator-(OperatorPoly a) {
  for (auto& [key, c] : a.terms_) c = -c;
  return a;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // (x^a1 p^b1)(x^a2 p^b2) = x^a1 [p^b1 x^a2] p^b2
      GaussianRational cc = ca * cb;
      int kmax = std::min(ka.ppow, kb.xpow);
      for (int k = 0; k <= kmax; ++k) {
        out.add_term({ka.xpow + kb.xpow - k, ka.ppow + kb.ppow - k},
                     cc * swap_coefficient(ka.ppow, kb.xpow, k));
      }
    }
  }
  return out;
}

OperatorPoly bracket(const OperatorPoly& a, const OperatorPoly& b, BracketKind kind) {
  OperatorPoly ab = a * b;
  OperatorPoly ba = b * a;
  return kind == BracketKind::commutator ? ab - ba : ab + ba;
}

OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return bracket(a, b, BracketKind::commutator);
}

OperatorPoly anticommutator(const OperatorPoly& a, const OperatorPoly& b) {
  return bracket(a, b, BracketKind::anticommutator);
}

OperatorPoly adjoint(const OperatorPoly& a) {
  // (c x^a p^b)† = conj(c) p^b x^a, then re-normal-order.
  OperatorPoly out;
  for (const auto& [key, c] : a.terms()) {
    GaussianRational cc = c.conjugate();
    int kmax = std::min(key.ppow, key.xpow);
    for (int k = 0; k <= kmax; ++k) {
      out.add_term({key.xpow - k, key.ppow - k},
                   cc * swap_coefficient(key.ppow, key.xpow, k));
    }
  }
  return out;
}

HermitianParts hermitian_split(const OperatorPoly& a) {
  OperatorPoly dag = adjoint(a);
  GaussianRational half(Rational(1, 2));
  return {half * (a + dag), half * (a - dag)};
}

bool is_hermitian(const OperatorPoly& a) { return adjoint(a) == a; }

bool is_anti_hermitian(const OperatorPoly& a) { return adjoint(a) == -a; }

bool depends_only_on_p(const OperatorPoly& a) {
  return std::ranges::all_of(a.terms(), [](const auto& t) { return t.first.xpow == 0; });
}

OperatorPoly fourier_map(const OperatorPoly& a, FourierDirection dir) {
  // forward: x^a p^b -> (-p)^a x^b; inverse: x^a p^b -> p^a (-x)^b.
  // Either way the image is p^a x^b up to sign, which needs re-ordering.
  OperatorPoly out;
  for (const auto& [key, c] : a.terms()) {
    int sign_pow = dir == FourierDirection::forward ? key.xpow : key.ppow;
    GaussianRational cc = sign_pow % 2 == 0 ? c : -c;
    int kmax = std::min(key.xpow, key.ppow);
    for (int k = 0; k <= kmax; ++k) {
      out.add_term({key.ppow - k, key.xpow - k},
                   cc * swap_coefficient(key.xpow, key.ppow, k));
    }
  }
  return out;
}

std::string render(const OperatorPoly& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<MonomialKey, GaussianRational>> ts(a.terms().begin(), a.terms().end());
  std::ranges::sort(ts, [](const auto& lhs, const auto& rhs) {
    if (lhs.first.degree() != rhs.first.degree()) return lhs.first.degree() < rhs.first.degree();
    return lhs.first.xpow < rhs.first.xpow;
  });
  std::string out;
  for (const auto& [key, c] : ts) {
    std::string sym;
    if (key.xpow > 0) sym += key.xpow == 1 ? "x" : "x^" + std::to_string(key.xpow);
    if (key.ppow > 0) {
      if (!sym.empty()) sym += "*";
      sym += key.ppow == 1 ? "p" : "p^" + std::to_string(key.ppow);
    }
    std::string cs = to_string(c);
    if (!is_plain_unsigned_integer(c)) cs = "(" + cs + ")";
    std::string term;
    if (sym.empty()) {
      term = cs;
    } else if (c == GaussianRational(1)) {
      term = sym;
    } else {
      term = cs + "*" + sym;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace ptq::weyl
