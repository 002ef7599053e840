#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/complexity.hpp"
#include "qk/machines.hpp"
#include "qk/report.hpp"
#include "qk/states.hpp"

namespace qk {

// Finite prefix of a q-Sigma1 set: projections p_1..p_N, p_i on i qubits,
// with range(p_i (x) I) contained in range(p_{i+1}) exactly.
class QSigma1Prefix {
 public:
  static QSigma1Prefix make(std::vector<ExactProjection> projections);

  unsigned depth() const { return static_cast<unsigned>(projections_.size()); }
  const ExactProjection& level(unsigned i) const;  // 1-based
  const std::vector<ExactProjection>& projections() const { return projections_; }

 private:
  explicit QSigma1Prefix(std::vector<ExactProjection> p) : projections_(std::move(p)) {}
  std::vector<ExactProjection> projections_;
};

// Finite prefix of a quantum Martin-Loef test: level m carries tau-measure
// at most 2^{-m}, checked exactly on every projection of the level.
class QMLTestPrefix {
 public:
  static QMLTestPrefix make(std::vector<QSigma1Prefix> levels);

  std::size_t size() const { return levels_.size(); }
  const QSigma1Prefix& level(std::size_t m) const;  // 1-based

 private:
  explicit QMLTestPrefix(std::vector<QSigma1Prefix> l) : levels_(std::move(l)) {}
  std::vector<QSigma1Prefix> levels_;
};

// Finite prefix of a strong Solovay test: a list of special projections,
// each on its own qubit count, order-significant. When `declared_total` is
// present (the quantum Schnorr case) it must equal the exact sum of the
// members' tau-measures.
class StrongSolovayTestPrefix {
 public:
  static StrongSolovayTestPrefix make(std::string name, std::vector<ExactProjection> members,
                                      std::optional<Rational> declared_total);

  const std::string& name() const { return name_; }
  std::size_t size() const { return members_.size(); }
  const ExactProjection& member(std::size_t m) const;  // 0-based
  const std::vector<ExactProjection>& members() const { return members_; }
  const std::optional<Rational>& declared_total() const { return declared_total_; }

  Rational total_measure() const;

 private:
  StrongSolovayTestPrefix(std::string n, std::vector<ExactProjection> m, std::optional<Rational> t)
      : name_(std::move(n)), members_(std::move(m)), declared_total_(std::move(t)) {}
  std::string name_;
  std::vector<ExactProjection> members_;
  std::optional<Rational> declared_total_;
};

// Tr(rho_depth p_depth), exact. Nondecreasing in depth for coherent rho.
ExtScalar evaluate_qsigma(const QSigma1Prefix& g, const DensityPrefix& rho, unsigned depth);

struct FailureCount {
  std::size_t count = 0;
  std::vector<std::size_t> indices;  // 0-based member indices
};

// Members whose overlap with the matching state level strictly exceeds
// delta. The finite-depth observable standing in for "fails at infinitely
// many m".
FailureCount fails_at(const StrongSolovayTestPrefix& test, const DensityPrefix& rho,
                      const Rational& delta);

// Machine M of the Solovay-to-QK direction: encode_natural(m) -> Proj(S^m)
// for the 1-based member index m.
MachineTable test_to_machine(const StrongSolovayTestPrefix& test);

// For every member with overlap(rho, S^m) > eps, checks the weight bound
//   QK^eps(rho_{n_m}) <= 2^{K_enc(m)} * rank(S^m)
// against a direct qk_eps query on the produced table.
Report test_to_machine_report(const StrongSolovayTestPrefix& test, const DensityPrefix& rho,
                              const Rational& eps);

struct TestCompileResult {
  StrongSolovayTestPrefix test;
  std::vector<Codeword> sources;  // per member, the originating codeword
  Report certificate;
};

// The QK-to-Solovay direction: members P_sigma for every entry whose weight
// satisfies 2^{|sigma|} * rank < 2^{n_sigma + c}, with the exact Kraft
// certificate  sum tau(P_sigma) <= 2^c * kraft_sum(t).
TestCompileResult machine_to_test(const MachineTable& t, unsigned c);

// Same members plus the exact total measure, making the result a quantum
// Schnorr test prefix.
TestCompileResult schnorr_machine_to_test(const MachineTable& t, unsigned c);

struct SchnorrCompileResult {
  MachineTable table;
  std::vector<unsigned> cut_points;       // s_0 .. s_J (0-based member indices)
  std::vector<std::optional<ExactProjection>> groups;  // G_r, nullopt when empty
  Report report;
};

// Schnorr test-to-machine compiler: cut points s_j = least t with
// sum_{i<=t} tau(S^i) > total - 2^{-j}; group G_r spans the members with
// index in (s_r, s_{r+1}], lifted to the group's largest qubit count; the
// emitted table maps 0^r 1 0 -> Proj(G_{2r}) and 0^r 1 1 -> Proj(G_{2r+1}),
// skipping empty groups. Asserts tau(G_r) < 2^{-r} exactly for every
// emitted group. Requires declared_total.
SchnorrCompileResult schnorr_test_to_machine(const StrongSolovayTestPrefix& test);

// Tensor-padding construction along a computable set of lengths: for each
// entry witnessing QK^eps(rho_n) weight below 2^{n-c}, pads to the least
// element of c_set above n and checks (exactly) that the overlap is
// preserved and the padded weight stays below 2^{(n+s)-c}.
Report compset_machine(const MachineTable& t, const std::vector<unsigned>& c_set,
                       const DensityPrefix& rho, const Rational& eps, unsigned c);

struct Fiber {
  unsigned g_value = 0;
  std::vector<std::size_t> members;  // 0-based member indices
};

struct FiberPartitionResult {
  std::vector<Fiber> fibers;  // ascending g-value
  Report report;
};

// Fibers of g(m) = ceil(s * -log2 tau(S^m)), computed by exact integer
// comparisons (no logarithms): g(m) <= k iff 2^{p n_m} <= rank^p 2^{q k}
// for s = p/q. Also verifies the finite-prefix cutoff: members beyond the
// first index where the tail measure drops under 2^{-x/s} cannot join the
// fiber of x. Requires declared_total and nonzero members.
FiberPartitionResult fiber_partition(const StrongSolovayTestPrefix& test, const Rational& s);

}  // namespace qk
