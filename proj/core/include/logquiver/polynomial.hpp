#pragma once

#include <string>
#include <utility>
#include <vector>

#include "logquiver/half_laurent.hpp"
#include "logquiver/rational.hpp"

namespace logquiver {

/// Dense univariate polynomial in q over the rationals. coeffs()[k] is the q^k coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(long c);  // NOLINT
  static Polynomial monomial(int degree, const Rational& c = Rational(1));
  /// q^n - 1
  static Polynomial q_power_minus_one(int n);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const Rational& leading() const { return coeffs_.back(); }
  Rational coefficient(int k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder of Euclidean division.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial monic() const;
  Rational evaluate(const Rational& q) const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  /// Reinterprets the polynomial in q as a Laurent polynomial in q^{1/2}.
  HalfLaurent to_half_laurent() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// |GL_n(F_q)| = prod_{k=0}^{n-1} (q^n - q^k).
Polynomial gl_order(int n);

}  // namespace logquiver
