#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsp/rational.hpp"

namespace hsp {

// Dense row-major matrix over Q.  Both dimensions are at least 1.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> row(std::size_t r) const;
  RatMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

Rat det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Reduced row echelon form; `pivots` receives the pivot column of each
// nonzero row, in order.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

// Unique solution of m x = b for square nonsingular m.
std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& b);

// Fraction-free determinant of an integer matrix.
Int det_int(std::vector<std::vector<Int>> m);

// Nonzero invariant factors d_1 | d_2 | ... of the lattice spanned by the
// rows of `generators`.
std::vector<Int> smith_invariants(const std::vector<std::vector<Int>>& generators);

// Index [Z^dim : L] of the lattice generated by `generators`, or nullopt if
// L has rank below dim.
std::optional<Int> lattice_index(const std::vector<std::vector<long>>& generators,
                                 std::size_t dim);

}  // namespace hsp
