#pragma once

#include <utility>
#include <vector>

#include "kstate/laurent.hpp"

namespace kstate::detail {

inline BigInt exact_div(const BigInt& a, const BigInt& b) { return a / b; }
inline LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.divide_exact(b);
}
inline bool is_zero(const BigInt& a) { return a == 0; }
inline bool is_zero(const LaurentPolynomial& a) { return a.is_zero(); }

/// Fraction-free Gaussian elimination over an integral domain. Every division is exact.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1L);
  bool negate = false;
  T previous(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T(0L);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
    }
    previous = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

}  // namespace kstate::detail
