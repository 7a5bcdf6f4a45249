#pragma once

// Exact arithmetic in the rational function field Q(q).
//
// Every coefficient handled by the library is a QScalar: a quotient of two
// Laurent polynomials with rational coefficients, kept in a canonical reduced
// form so that equality is a structural comparison.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uqkit {

using Rational = mpq_class;

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest exponent; the zero polynomial has no
/// coefficients, otherwise the first and last stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Rational c);

  static LaurentPoly monomial(int exponent, Rational c = 1);
  /// Build from an ascending coefficient list starting at exponent `low`.
  static LaurentPoly from_coeffs(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low() const { return low_; }
  /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
  int high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  Rational coeff(int exponent) const;
  const std::vector<Rational>& dense() const { return coeffs_; }
  /// Nonzero (exponent, coefficient) pairs in ascending exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentPoly shifted(int by) const;
  LaurentPoly scaled(const Rational& c) const;
  Rational eval(const Rational& q0) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return scaled(-1); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Descending-exponent text, e.g. `q^2-1/2*q+3-q^-1`.
  std::string str() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Element of Q(q) in canonical form.
///
/// Invariants: den is an ordinary polynomial (lowest exponent 0) with coprime
/// integer coefficients and positive leading coefficient; gcd(num, den) = 1
/// after removing the Laurent shift of num; zero is 0/1.
class QScalar {
 public:
  QScalar() : den_(Rational(1)) {}
  QScalar(int n) : num_(Rational(n)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  QScalar(long n) : num_(Rational(n)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  explicit QScalar(const Rational& c) : num_(c), den_(Rational(1)) {}
  explicit QScalar(LaurentPoly p) : num_(std::move(p)), den_(Rational(1)) {}

  /// num/den reduced to canonical form; throws DivisionByZero when den = 0.
  static QScalar fraction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  /// True when the denominator is 1.
  bool is_laurent() const { return den_.is_one(); }

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  QScalar operator-() const;
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;
  static QScalar parse(std::string_view text);

 private:
  QScalar(LaurentPoly num, LaurentPoly den, int /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& x);

/// q^e.
QScalar qpow(int e);
/// Multiplicative inverse; throws DivisionByZero on 0.
QScalar inv(const QScalar& x);
/// x^e for any integer e (negative exponents require x != 0).
QScalar pow(const QScalar& x, int e);

/// Exact value at q = q0. Rejects q0 in {0, 1, -1} with ForbiddenSpecialization
/// and raises PoleError when the denominator vanishes at q0.
Rational evaluate(const QScalar& x, const Rational& q0);

/// n_b = 1 + b + ... + b^{n-1}.
QScalar gauss_integer(int n, const QScalar& base);
/// n!_b = 1_b 2_b ... n_b, with 0!_b = 1.
QScalar gauss_factorial(int n, const QScalar& base);
/// n!_b / (m!_b (n-m)!_b); requires n >= m >= 0.
QScalar gauss_binomial(int n, int m, const QScalar& base);

}  // namespace uqkit
