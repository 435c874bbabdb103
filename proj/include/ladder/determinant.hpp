#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ladder {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Cofactor expansion along the first row. Exponential; reference route.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n == 1) return m[0][0];
  T acc{};
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> sub(n - 1, std::vector<T>());
    for (std::size_t i = 1; i < n; ++i) {
      sub[i - 1].reserve(n - 1);
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) sub[i - 1].push_back(m[i][jj]);
    }
    T term = m[0][j] * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Fraction-free elimination; every division is exact in the base ring.
// Needs ADL-visible is_zero(T) and exact_div(T, T).
template <class T>
T det_bareiss(Matrix<T> m) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  if (n == 1) return m[0][0];

  bool negate = false;
  T prev{};
  bool have_prev = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!is_zero(m[i][k])) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return T{};  // singular column
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = have_prev ? exact_div(num, prev) : num;
      }
    prev = m[k][k];
    have_prev = true;
  }
  T d = m[n - 1][n - 1];
  return negate ? -d : d;
}

// Bareiss with cofactor fallback; the fallback only triggers if an exact
// division step is rejected.
template <class T>
T determinant(const Matrix<T>& m) {
  try {
    return det_bareiss(m);
  } catch (const std::domain_error&) {
    return det_cofactor(m);
  }
}

}  // namespace ladder
