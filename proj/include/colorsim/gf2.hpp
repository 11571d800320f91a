#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "colorsim/pauli.hpp"

namespace colorsim {

// Dense matrix over GF(2), rows stored as packed bit vectors.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

  BitVec& row(std::size_t r) { return data_[r]; }
  const BitVec& row(std::size_t r) const { return data_[r]; }

  void append_row(const BitVec& v);

  // y = A * x over GF(2).
  BitVec apply(const BitVec& x) const;

  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVec> data_;
};

// Any solution x of A x = b, or nullopt when b is outside the column space.
std::optional<BitVec> gf2_solve(const BinaryMatrix& a, const BitVec& b);

// Basis of the null space of A; size is cols - rank.
std::vector<BitVec> kernel_basis(const BinaryMatrix& a);

// Row-reduced echelon form computed in place; returns pivot column per
// reduced row, in order. Rows beyond the returned count are zero.
std::vector<std::size_t> rref_in_place(BinaryMatrix& a);

// True iff v lies in the row space of A.
bool in_row_space(const BinaryMatrix& a, const BitVec& v);

}  // namespace colorsim
