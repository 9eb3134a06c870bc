#pragma once

#include <map>
#include <optional>
#include <string>

#include "logquiver/rational.hpp"

namespace logquiver {

/// Laurent polynomial in q^{1/2} with exact rational coefficients.
///
/// Exponents are stored as integers counting powers of q^{1/2}, so the key 3
/// stands for q^{3/2}. Zero coefficients are never stored.
class HalfLaurent {
 public:
  using Terms = std::map<int, Rational>;

  HalfLaurent() = default;
  HalfLaurent(const Rational& c);  // NOLINT: constants convert implicitly
  HalfLaurent(long c) : HalfLaurent(Rational(c)) {}  // NOLINT

  /// c * q^{half/2}
  static HalfLaurent monomial(int half, const Rational& c = Rational(1));
  /// q^{n/2} - q^{-n/2}
  static HalfLaurent q_difference(int n);
  /// Quantum integer [n]_q = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}); [-n]_q = -[n]_q.
  static HalfLaurent quantum_integer(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(int half) const;
  void add_term(int half, const Rational& c);

  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  HalfLaurent& operator*=(const Rational& c);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const HalfLaurent& b) { return a *= b; }
  friend HalfLaurent operator*(HalfLaurent a, const Rational& c) { return a *= c; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  /// Multiplies by q^{half/2}.
  HalfLaurent shifted(int half) const;
  /// Bar involution q^{1/2} -> q^{-1/2}.
  HalfLaurent bar() const;
  bool is_bar_invariant() const { return *this == bar(); }
  /// Substitutes q^{1/2} -> q^{k/2}.
  HalfLaurent dilate(int k) const;
  /// Value at q^{1/2} = 1.
  Rational at_one() const;
  bool has_integer_coefficients() const;

  /// Exact division; nullopt if the divisor does not divide this.
  std::optional<HalfLaurent> divide_exact(const HalfLaurent& divisor) const;

  /// Human-readable form, e.g. "-q^(1/2) - q^(-1/2)".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace logquiver
