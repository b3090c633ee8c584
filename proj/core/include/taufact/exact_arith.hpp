#pragma once

// Exact integer and dense integer-polynomial arithmetic.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace taufact {

using Integer = mpz_class;

/// Dense polynomial with Integer coefficients; `coeff(i)` is the coefficient
/// of x^i. Always normalized: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly monomial(std::size_t degree, const Integer& c = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  /// Constant term (zero for the zero polynomial).
  Integer constant_term() const { return coeff(0); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Integer& c);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Division by a monic polynomial over the integers. Throws
/// Error(NonMonicDivisor) when `g` is zero or its leading coefficient is not 1.
DivMod poly_divmod_monic(const Poly& a, const Poly& g);

/// Content (gcd of coefficients, nonnegative); zero for the zero polynomial.
Integer content(const Poly& a);

/// Evaluates `p` at the polynomial `at` (composition p(at)).
Poly compose(const Poly& p, const Poly& at);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }
inline Poly operator-(const Poly& a) { return poly_neg(a); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

/// Total order used everywhere output must be deterministic: by degree, then
/// coefficients compared from the highest power down. On constants this is
/// ordinary integer order.
bool poly_less(const Poly& a, const Poly& b);

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/// Floor-style remainder into [0, m). Requires m > 0.
Integer mod_nonneg(const Integer& a, const Integer& m);

/// Renders like `x^2+2*x+1`, `-x-1`, `7`, `0`.
std::string to_string(const Poly& p);
std::string to_string(const Integer& n);

/// Parses the polynomial text syntax: terms `c`, `x`, `c*x`, `x^k`, `c*x^k`
/// (also `cx^k`) joined by `+`/`-`, whitespace ignored. Throws
/// Error(ParseError).
Poly parse_poly(std::string_view text);

/// Decimal integer with optional leading sign. Throws Error(ParseError).
Integer parse_integer(std::string_view text);

}  // namespace taufact
