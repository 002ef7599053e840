#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/machines.hpp"
#include "qk/report.hpp"

namespace qk {

// QK stored as the integer weight 2^{|codeword|} * rank: 2^{QK}. Weights
// make every infimum and comparison exact; no real logarithm is ever taken.
class QKValue {
 public:
  static QKValue infinite() { return QKValue(); }
  static QKValue finite(Int weight);

  bool is_finite() const { return weight_.has_value(); }
  const Int& weight() const;

  // log2(weight) when the weight is a power of two.
  std::optional<unsigned> exact_log2() const;

  std::string render() const;  // "weight=..." or "inf"

  friend bool operator==(const QKValue&, const QKValue&) = default;

 private:
  QKValue() = default;
  std::optional<Int> weight_;
};

// The minimizing table entry behind a finite QK value.
struct QKWitness {
  Codeword codeword;
  unsigned rank = 0;
  ExtScalar overlap;  // real, > epsilon by construction
};

struct QKResult {
  QKValue value = QKValue::infinite();
  std::optional<QKWitness> witness;
};

// inf { 2^{|sigma|} * rank : t(sigma) spans a subspace of C^{2^{|tau|}} with
// overlap strictly above epsilon }. Ortho outputs contribute their
// cardinality, Proj outputs their rank; Classical/Nat entries are ignored.
// Ties break toward the shortlex-first codeword.
QKResult qk_eps(const MachineTable& t, const DensityMatrix& tau, const Rational& eps);

// Compression machine: for each table entry with an n-qubit subspace output
// and each suffix of length ceil(log2(rank/eps)), emit the basis label of a
// heavy basis vector (suffix index mod heavy-set size, in basis order).
// Bases come from `basis_seq` when one matches the qubit count (each must be
// a full basis), else the standard basis; labels are basis-order indices as
// n-bit strings. Entries with an empty heavy set are omitted.
MachineTable compress_classical_machine(const MachineTable& u, const Rational& eps,
                                        const std::vector<OrthoSet>& basis_seq = {});

// Guarantee of the compression machine, checked exactly in weight form: for
// every n-bit label e with finite QK^eps(|e><e|) under `u`,
//   2^{K_P(e)} <= weight * 2^{ceil(log2(1/eps)) + 1}.
Report compress_guarantee_report(const MachineTable& u, const MachineTable& compressed,
                                 const Rational& eps, const std::vector<OrthoSet>& basis_seq = {});

// {0^n 1 -> Proj(I_n) : 1 <= n <= max_qubits}: witnesses
// QK^eps(tau) <= |tau| + K_enc(|tau|) for every tau up to max_qubits.
MachineTable standard_basis_machine(unsigned max_qubits);

// Counting bound N <= eps^{-1} 2^B with B the largest finite QK weight over
// the family; reported per vector, asserted only when every QK is finite.
Report counting_check(const MachineTable& t, const OrthoSet& family, const Rational& eps);

// Exact tracial lower bounds at level n with eps = 2^{-k}:
//  (a) any witness weight W satisfies W > 2^{n-k};
//  (b) W >= 2^{n-k} * 2^{K_M(n)} where M sends each codeword with an
//      m-qubit subspace output to Nat(m).
Report tracial_bound_check(const MachineTable& t, unsigned n, unsigned k);

}  // namespace qk
