#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace kstate {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(BigInt constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(long constant) : LaurentPolynomial(BigInt(constant)) {}  // NOLINT

  static LaurentPolynomial monomial(BigInt coefficient, int exponent);

  const std::map<int, BigInt>& coefficients() const noexcept { return terms_; }
  BigInt coefficient(int exponent) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  BigInt evaluate(long t) const;  // requires t = +-1 when negative exponents are present

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  LaurentPolynomial operator-() const;

  /// Exact division; throws std::domain_error when `divisor` does not divide *this.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  LaurentPolynomial shifted(int by) const;

  /// True when p(t) = p(1/t) coefficientwise.
  bool is_symmetric() const;

  /// Multiplies by +-t^k so the result is centered at exponent 0 with p(1) > 0
  /// (leading coefficient > 0 when p(1) = 0). Odd exponent spans are centered at
  /// floor((min + max) / 2) and are then not symmetric.
  LaurentPolynomial normalized() const;

  /// e.g. "t^-1 - 1 + t"
  std::string to_string() const;

  bool operator==(const LaurentPolynomial&) const = default;

private:
  void add_term(int exponent, const BigInt& coefficient);
  std::map<int, BigInt> terms_;
};

}  // namespace kstate
