#include "colorsim/gf2.hpp"

#include <stdexcept>

namespace colorsim {

void BinaryMatrix::append_row(const BitVec& v) {
  if (v.size() != cols_) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    else throw std::invalid_argument("append_row: width mismatch");
  }
  data_.push_back(v);
  ++rows_;
}

BitVec BinaryMatrix::apply(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  BitVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y.set(r, data_[r].dot(x));
  return y;
}

std::vector<std::size_t> rref_in_place(BinaryMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && !a.get(piv, c)) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap(a.row(piv), a.row(r));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a.get(i, c)) a.row(i) ^= a.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t BinaryMatrix::rank() const {
  BinaryMatrix tmp = *this;
  return rref_in_place(tmp).size();
}

std::optional<BitVec> gf2_solve(const BinaryMatrix& a, const BitVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("gf2_solve: rhs size mismatch");
  // Eliminate on the augmented matrix [A | b].
  BinaryMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    aug.row(r) = BitVec(a.cols() + 1);
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
    aug.set(r, a.cols(), b.get(r));
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < a.cols() && r < aug.rows(); ++c) {
    std::size_t piv = r;
    while (piv < aug.rows() && !aug.get(piv, c)) ++piv;
    if (piv == aug.rows()) continue;
    if (piv != r) std::swap(aug.row(piv), aug.row(r));
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i != r && aug.get(i, c)) aug.row(i) ^= aug.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  // Inconsistent iff some zero row has rhs 1.
  for (std::size_t i = r; i < aug.rows(); ++i) {
    if (aug.get(i, a.cols())) return std::nullopt;
  }
  BitVec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], aug.get(i, a.cols()));
  return x;
}

std::vector<BitVec> kernel_basis(const BinaryMatrix& a) {
  BinaryMatrix red = a;
  std::vector<std::size_t> pivots = rref_in_place(red);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    BitVec v(a.cols());
    v.set(c, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (red.get(i, c)) v.set(pivots[i], true);
    }
    basis.push_back(v);
  }
  return basis;
}

bool in_row_space(const BinaryMatrix& a, const BitVec& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("in_row_space: size mismatch");
  BinaryMatrix red = a;
  std::vector<std::size_t> pivots = rref_in_place(red);
  BitVec residue = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (residue.get(pivots[i])) residue ^= red.row(i);
  }
  return !residue.any();
}

}  // namespace colorsim
