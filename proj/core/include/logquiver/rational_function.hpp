#pragma once

#include <optional>
#include <string>

#include "logquiver/polynomial.hpp"

namespace logquiver {

/// Reduced fraction of polynomials in q. The denominator is monic and
/// coprime to the numerator, so equality is structural.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : den_(1) {}
  RationalFunctionQ(Polynomial num);  // NOLINT
  RationalFunctionQ(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  std::optional<Polynomial> as_polynomial() const;

  RationalFunctionQ operator-() const { return {-num_, den_}; }
  friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a + (-b); }
  friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
  RationalFunctionQ& operator+=(const RationalFunctionQ& o) { return *this = *this + o; }
  RationalFunctionQ& operator-=(const RationalFunctionQ& o) { return *this = *this - o; }
  RationalFunctionQ& operator*=(const RationalFunctionQ& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at q = q0; throws if the denominator vanishes there.
  Rational evaluate(const Rational& q0) const;
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// q^n for any integer n, as a rational function.
RationalFunctionQ q_power(int n);

}  // namespace logquiver
