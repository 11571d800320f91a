#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace colorsim {

// Packed bit vector over GF(2), little-endian within 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_) if (w) return true;
    return false;
  }

  // Parity of the AND with another vector, i.e. <a,b> over GF(2).
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1u;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// n-qubit Pauli operator in binary symplectic form, global phase dropped.
// Qubit i carries X iff x[i], Z iff z[i], Y iff both.
struct PauliOperator {
  std::size_t n = 0;
  BitVec x;
  BitVec z;

  PauliOperator() = default;
  explicit PauliOperator(std::size_t nq) : n(nq), x(nq), z(nq) {}

  static PauliOperator identity(std::size_t nq) { return PauliOperator(nq); }

  // 2-bit code at qubit i: 0=I, 1=X, 2=Z, 3=Y.
  unsigned pauli_at(std::size_t i) const {
    return static_cast<unsigned>(x.get(i)) | (static_cast<unsigned>(z.get(i)) << 1);
  }
  void set_pauli(std::size_t i, unsigned code) {
    x.set(i, code & 1u);
    z.set(i, (code >> 1) & 1u);
  }

  std::size_t weight() const {
    std::size_t c = 0;
    const auto& xw = x.words();
    const auto& zw = z.words();
    for (std::size_t w = 0; w < xw.size(); ++w) c += std::popcount(xw[w] | zw[w]);
    return c;
  }

  bool is_identity() const { return !x.any() && !z.any(); }

  bool operator==(const PauliOperator& o) const { return n == o.n && x == o.x && z == o.z; }
  bool operator!=(const PauliOperator& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Phase-free product: componentwise XOR of the x and z bit rows.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

// True iff a and b commute (symplectic inner product vanishes).
bool commutes(const PauliOperator& a, const PauliOperator& b);

// Parse strings like "XIZY" (qubit 0 first). Used by tests and fixtures.
PauliOperator pauli_from_string(const std::string& s);

}  // namespace colorsim
