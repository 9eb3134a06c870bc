#include "logquiver/half_laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace logquiver {

HalfLaurent::HalfLaurent(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

HalfLaurent HalfLaurent::monomial(int half, const Rational& c) {
  HalfLaurent r;
  r.add_term(half, c);
  return r;
}

HalfLaurent HalfLaurent::q_difference(int n) {
  HalfLaurent r;
  r.add_term(n, Rational(1));
  r.add_term(-n, Rational(-1));
  return r;
}

HalfLaurent HalfLaurent::quantum_integer(int n) {
  HalfLaurent r;
  const int sign = n < 0 ? -1 : 1;
  const int a = n < 0 ? -n : n;
  for (int k = -(a - 1); k <= a - 1; k += 2) r.add_term(k, Rational(sign));
  return r;
}

bool HalfLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational HalfLaurent::coefficient(int half) const {
  auto it = terms_.find(half);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HalfLaurent::add_term(int half, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(half, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int HalfLaurent::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero");
  return terms_.begin()->first;
}

int HalfLaurent::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero");
  return terms_.rbegin()->first;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  if (terms_.empty()) return *this;
  if (o.is_constant()) return *this *= o.coefficient(0);
  HalfLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

HalfLaurent HalfLaurent::shifted(int half) const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + half, c);
  return r;
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

HalfLaurent HalfLaurent::dilate(int k) const {
  if (k == 0) return HalfLaurent(at_one());
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

Rational HalfLaurent::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool HalfLaurent::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

std::optional<HalfLaurent> HalfLaurent::divide_exact(const HalfLaurent& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  HalfLaurent rem = *this;
  HalfLaurent quot;
  const int dtop = divisor.max_exponent();
  const int dlow = divisor.min_exponent();
  const Rational lead = divisor.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const int rtop = rem.max_exponent();
    if (rtop - dtop < rem.min_exponent() - dlow) return std::nullopt;
    const Rational c = rem.terms_.rbegin()->second / lead;
    quot.add_term(rtop - dtop, c);
    for (const auto& [e, v] : divisor.terms_) rem.add_term(e + rtop - dtop, -c * v);
  }
  return quot;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (e % 2 == 0) {
      if (e != 2) os << "^" << e / 2;
    } else {
      os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

}  // namespace logquiver
