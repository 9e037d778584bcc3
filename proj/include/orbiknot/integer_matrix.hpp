#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbiknot {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  BigInt const &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  IntMatrix without_row_col(std::size_t k) const;

  friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free Gaussian elimination. Empty matrix has determinant 1.
BigInt determinant(IntMatrix m);

struct SmithForm {
  // min(rows, cols) non-negative entries, each dividing the next.
  std::vector<BigInt> diagonal;
  // Unimodular column transform Q with P*A*Q = D (only when requested).
  IntMatrix column_transform;
};

/// Smith normal form, pivoting on the entry of least absolute value.
SmithForm smith_normal_form(IntMatrix m, bool track_columns = false);

}  // namespace orbiknot
