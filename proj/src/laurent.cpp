#include "kstate/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kstate {

LaurentPolynomial::LaurentPolynomial(BigInt constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(BigInt coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

BigInt LaurentPolynomial::evaluate(long t) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && t != 1 && t != -1) throw std::domain_error("negative power of non-unit");
    // t^-1 == t for t = +-1
    sum += c * boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(e < 0 ? -e : e));
  }
  return sum;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return *this = std::move(out);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPolynomial remainder = *this;
  LaurentPolynomial quotient;
  const int lead_exp = divisor.max_exponent();
  const BigInt& lead = divisor.terms_.rbegin()->second;
  while (!remainder.is_zero()) {
    const int e = remainder.max_exponent();
    if (e - lead_exp < min_exponent() - divisor.min_exponent())
      throw std::domain_error("polynomial division is not exact");
    const BigInt& c = remainder.terms_.rbegin()->second;
    if (c % lead != 0) throw std::domain_error("polynomial division is not exact");
    const LaurentPolynomial step = monomial(c / lead, e - lead_exp);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coefficient(-e) != c) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return *this;
  const int span_sum = min_exponent() + max_exponent();
  const int center = span_sum >= 0 ? span_sum / 2 : -((-span_sum + 1) / 2);
  LaurentPolynomial out = shifted(-center);
  const BigInt at_one = out.evaluate(1);
  const bool negate = at_one < 0 || (at_one == 0 && out.terms_.rbegin()->second < 0);
  return negate ? -out : out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << '*';
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace kstate
