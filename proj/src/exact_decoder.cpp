#include "colorsim/exact_decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace colorsim {

namespace {

constexpr double kLogZero = -1e9;  // finite sentinel for forbidden paulis

BitVec symplectic_row(const PauliOperator& p) {
  BitVec row(2 * p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    if (p.x.get(i)) row.set(i, true);
    if (p.z.get(i)) row.set(p.n + i, true);
  }
  return row;
}

}  // namespace

ExactMLDecoder::ExactMLDecoder(const StabilizerCode& code, const NoiseChannel& channel)
    : code_(code), channel_(channel) {
  // Per-qubit log probabilities and linear transition ratios.
  log_prob_.resize(code_.n);
  ratio_factor_.resize(code_.n);
  for (int q = 0; q < code_.n; ++q) {
    std::array<double, 4> lin;
    for (unsigned c = 0; c < 4; ++c) {
      lin[c] = channel_.prob_of(q, c);
      log_prob_[q][c] = lin[c] > 0.0 ? std::log(lin[c]) : kLogZero;
    }
    for (unsigned oldc = 0; oldc < 4; ++oldc)
      for (unsigned c = 0; c < 4; ++c)
        ratio_factor_[q][(oldc << 2) | c] = lin[oldc] > 0.0 ? lin[oldc ^ c] / lin[oldc] : 0.0;
  }

  // Maximal independent generator subset.
  BinaryMatrix accum(0, 2 * static_cast<std::size_t>(code_.n));
  std::size_t rank = 0;
  for (std::size_t g = 0; g < code_.generators.size(); ++g) {
    BinaryMatrix trial = accum;
    trial.append_row(symplectic_row(code_.generators[g]));
    std::size_t r = trial.rank();
    if (r > rank) {
      accum = std::move(trial);
      rank = r;
      ind_gens_.push_back(code_.generators[g]);
      ind_index_.push_back(g);
    }
  }
  if (static_cast<int>(ind_gens_.size()) != code_.n - code_.k)
    throw std::logic_error("exact decoder: generator rank inconsistent with k");
  if (ind_gens_.size() > 22)
    throw BudgetExceeded("exact decoder: stabilizer group too large to enumerate");

  solve_matrix_ = BinaryMatrix(ind_gens_.size(), 2 * static_cast<std::size_t>(code_.n));
  for (std::size_t g = 0; g < ind_gens_.size(); ++g) {
    const auto& p = ind_gens_[g];
    BitVec row(2 * p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
      if (p.z.get(i)) row.set(i, true);
      if (p.x.get(i)) row.set(p.n + i, true);
    }
    solve_matrix_.row(g) = row;
  }

  // Forbidden Pauli components. With p_X = p_Y channels the zero pattern is
  // always expressible as per-bit constraints.
  for (int q = 0; q < code_.n; ++q) {
    PauliProbs pr = channel_.probs_at(q);
    bool x_zero = pr[0] == 0.0 && pr[1] == 0.0;
    bool z_zero = pr[2] == 0.0 && pr[1] == 0.0;
    if (x_zero) constraints_.push_back({q, 0});
    if (z_zero) constraints_.push_back({q, 1});
  }
  constraint_matrix_ = BinaryMatrix(constraints_.size(), ind_gens_.size());
  for (std::size_t r = 0; r < constraints_.size(); ++r) {
    auto [q, bit] = constraints_[r];
    for (std::size_t g = 0; g < ind_gens_.size(); ++g) {
      bool v = bit == 0 ? ind_gens_[g].x.get(q) : ind_gens_[g].z.get(q);
      constraint_matrix_.set(r, g, v);
    }
  }
  for (const BitVec& kv : kernel_basis(constraint_matrix_)) {
    WalkStep step;
    step.pauli = PauliOperator::identity(code_.n);
    for (std::size_t g = 0; g < ind_gens_.size(); ++g)
      if (kv.get(g)) step.pauli = multiply(step.pauli, ind_gens_[g]);
    for (int q = 0; q < code_.n; ++q) {
      unsigned c = step.pauli.pauli_at(q);
      if (c != 0) step.support.push_back({q, c});
    }
    walk_basis_.push_back(std::move(step));
  }
  // Gray order toggles low indices most often; put the cheap steps there.
  std::sort(walk_basis_.begin(), walk_basis_.end(),
            [](const WalkStep& a, const WalkStep& b) { return a.support.size() < b.support.size(); });

  num_classes_ = 1 << (2 * code_.k);
}

PauliOperator ExactMLDecoder::logical_rep(int label) const {
  PauliOperator rep = PauliOperator::identity(code_.n);
  for (int i = 0; i < code_.k; ++i) {
    if ((label >> (2 * i)) & 1) rep = multiply(rep, code_.logicals[i].x_bar);
    if ((label >> (2 * i)) & 2) rep = multiply(rep, code_.logicals[i].z_bar);
  }
  return rep;
}

PauliOperator ExactMLDecoder::pure_error_for(const Syndrome& s) const {
  if (s.bits.size() != code_.generators.size())
    throw std::invalid_argument("decode: syndrome length mismatch");
  BitVec rhs(ind_gens_.size());
  for (std::size_t g = 0; g < ind_gens_.size(); ++g) rhs.set(g, s.bits.get(ind_index_[g]));
  auto sol = gf2_solve(solve_matrix_, rhs);
  if (!sol) throw std::invalid_argument("decode: malformed syndrome (no pure error)");
  PauliOperator e0(code_.n);
  for (int i = 0; i < code_.n; ++i) {
    e0.x.set(i, sol->get(i));
    e0.z.set(i, sol->get(code_.n + i));
  }
  // Validate the dependent generator bits as well.
  Syndrome check = syndrome_of(code_, e0);
  if (!(check.bits == s.bits)) throw std::invalid_argument("decode: inconsistent syndrome");
  return e0;
}

ExactMLDecoder::ClassSums ExactMLDecoder::class_sums(const PauliOperator& pure_error) const {
  ClassSums sums;
  sums.probs.assign(num_classes_, 0.0);

  for (int label = 0; label < num_classes_; ++label) {
    PauliOperator base = multiply(pure_error, logical_rep(label));

    // Particular subgroup element satisfying the zero-probability
    // constraints, when one exists.
    if (!constraints_.empty()) {
      BitVec rhs(constraints_.size());
      for (std::size_t r = 0; r < constraints_.size(); ++r) {
        auto [q, bit] = constraints_[r];
        rhs.set(r, bit == 0 ? base.x.get(q) : base.z.get(q));
      }
      auto part = gf2_solve(constraint_matrix_, rhs);
      if (!part) continue;  // every error in this class hits a forbidden pauli
      for (std::size_t g = 0; g < ind_gens_.size(); ++g)
        if (part->get(g)) base = multiply(base, ind_gens_[g]);
    }

    double log_start = 0.0;
    for (int q = 0; q < code_.n; ++q) log_start += log_prob_[q][base.pauli_at(q)];
    if (log_start < kLogZero / 2) continue;  // forbidden even after adjustment

    // Walk the compatible subgroup in Gray-code order, tracking the
    // probability ratio against the starting element in linear space. The
    // constraint handling above guarantees every visited Pauli component
    // has positive probability, so the ratio factors are finite.
    PauliOperator cur = base;
    double ratio = 1.0;
    double sum = 1.0;
    std::uint64_t steps = std::uint64_t{1} << walk_basis_.size();
    for (std::uint64_t t = 1; t < steps; ++t) {
      int j = std::countr_zero(t);
      const WalkStep& ws = walk_basis_[j];
      double f = 1.0;
      for (auto [q, c] : ws.support) {
        unsigned oldc = cur.pauli_at(q);
        f *= ratio_factor_[q][(oldc << 2) | c];
        cur.set_pauli(q, oldc ^ c);
      }
      ratio *= f;
      sum += ratio;
    }
    sums.probs[label] = std::exp(log_start) * sum;
  }
  return sums;
}

DecodeResult ExactMLDecoder::decode(const Syndrome& s) {
  PauliOperator e0 = pure_error_for(s);
  ClassSums sums = class_sums(e0);
  int best = 0;
  for (int label = 1; label < num_classes_; ++label)
    if (sums.probs[label] > sums.probs[best]) best = label;
  DecodeResult res;
  res.correction = multiply(e0, logical_rep(best));
  res.logical_class = best;
  res.class_probabilities = std::move(sums.probs);
  return res;
}

double ExactMLDecoder::logical_rate() {
  std::size_t m = ind_gens_.size();
  double cost = std::ldexp(1.0, static_cast<int>(m)) * num_classes_ *
                std::ldexp(1.0, static_cast<int>(walk_basis_.size()));
  if (cost > 5e8) throw BudgetExceeded("exact logical rate: enumeration too large");

  double fail = 0.0;
  for (std::uint64_t sbits = 0; sbits < (std::uint64_t{1} << m); ++sbits) {
    BitVec rhs(m);
    for (std::size_t g = 0; g < m; ++g) rhs.set(g, (sbits >> g) & 1);
    auto sol = gf2_solve(solve_matrix_, rhs);
    if (!sol) throw std::logic_error("logical_rate: independent syndrome unsolvable");
    PauliOperator e0(code_.n);
    for (int i = 0; i < code_.n; ++i) {
      e0.x.set(i, sol->get(i));
      e0.z.set(i, sol->get(code_.n + i));
    }
    ClassSums sums = class_sums(e0);
    int best = 0;
    double total = 0.0;
    for (int label = 0; label < num_classes_; ++label) {
      total += sums.probs[label];
      if (sums.probs[label] > sums.probs[best]) best = label;
    }
    fail += total - sums.probs[best];
  }
  return fail;
}

double ExactMLDecoder::total_probability() {
  std::size_t m = ind_gens_.size();
  double total = 0.0;
  for (std::uint64_t sbits = 0; sbits < (std::uint64_t{1} << m); ++sbits) {
    BitVec rhs(m);
    for (std::size_t g = 0; g < m; ++g) rhs.set(g, (sbits >> g) & 1);
    auto sol = gf2_solve(solve_matrix_, rhs);
    PauliOperator e0(code_.n);
    for (int i = 0; i < code_.n; ++i) {
      e0.x.set(i, sol->get(i));
      e0.z.set(i, sol->get(code_.n + i));
    }
    for (double p : class_sums(e0).probs) total += p;
  }
  return total;
}

double exact_logical_rate(const StabilizerCode& code, const NoiseChannel& channel) {
  ExactMLDecoder dec(code, channel);
  return dec.logical_rate();
}

}  // namespace colorsim
