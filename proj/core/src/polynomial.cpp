#include "logquiver/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace logquiver {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::q_power_minus_one(int n) { return monomial(n) - Polynomial(1); }

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(Polynomial a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  std::vector<Rational> q(std::max(0, degree() - divisor.degree() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const Rational c = rem.leading() / divisor.leading();
    q[shift] = c;
    rem -= monomial(shift, c) * divisor;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Rational Polynomial::evaluate(const Rational& q) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool Polynomial::has_nonnegative_coefficients() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

HalfLaurent Polynomial::to_half_laurent() const {
  HalfLaurent r;
  for (size_t k = 0; k < coeffs_.size(); ++k) r.add_term(2 * static_cast<int>(k), coeffs_[k]);
  return r;
}

std::string Polynomial::to_string() const {
  return to_half_laurent().to_string();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial gl_order(int n) {
  Polynomial r(1);
  for (int k = 0; k < n; ++k) r = r * (Polynomial::monomial(n) - Polynomial::monomial(k));
  return r;
}

}  // namespace logquiver
