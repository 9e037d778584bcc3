#include "orbiknot/integer_matrix.hpp"

#include <utility>

namespace orbiknot {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::without_row_col(std::size_t k) const {
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == k) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

BigInt determinant(IntMatrix m) {
  auto const n = m.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// col_dst -= q * col_src
void sub_col(IntMatrix &m, std::size_t dst, std::size_t src, BigInt const &q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m, bool track_columns) {
  auto const rows = m.rows(), cols = m.cols();
  auto const rank_cap = std::min(rows, cols);
  SmithForm out;
  if (track_columns) out.column_transform = IntMatrix::identity(cols);
  IntMatrix &q = out.column_transform;

  for (std::size_t t = 0; t < rank_cap; ++t) {
    while (true) {
      // Least nonzero |entry| in the trailing block.
      std::size_t pi = rows, pj = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) == 0) continue;
          BigInt a = abs(m(i, j));
          if (pi == rows || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      if (track_columns) swap_cols(q, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        BigInt f = m(i, t) / m(t, t);
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= f * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        BigInt f = m(t, j) / m(t, t);
        sub_col(m, j, t, f);
        if (track_columns) sub_col(q, j, t, f);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad_row, j);
    }
    if (m(t, t) < 0) {
      for (std::size_t i = 0; i < rows; ++i) m(i, t) = -m(i, t);
      if (track_columns) {
        for (std::size_t i = 0; i < cols; ++i) q(i, t) = -q(i, t);
      }
    }
    out.diagonal.push_back(m(t, t));
  }
  return out;
}

}  // namespace orbiknot
