#include "qk/complexity.hpp"

#include <algorithm>
#include <utility>

#include "qk/errors.hpp"

namespace qk {

QKValue QKValue::finite(Int weight) {
  if (weight <= 0) throw DomainError("QK weight must be positive");
  QKValue v;
  v.weight_ = std::move(weight);
  return v;
}

const Int& QKValue::weight() const {
  if (!weight_) throw DomainError("infinite QK value has no weight");
  return *weight_;
}

std::optional<unsigned> QKValue::exact_log2() const {
  if (!weight_ || !is_power_of_two(*weight_)) return std::nullopt;
  return static_cast<unsigned>(msb(*weight_));
}

std::string QKValue::render() const {
  if (!weight_) return "inf";
  std::string s = "weight=" + weight_->str();
  if (auto k = exact_log2()) s += " log2=" + std::to_string(*k);
  return s;
}

namespace {

// Sum_{v in F} <v|tau|v> without forming the projector.
ExtScalar family_overlap(const DensityMatrix& tau, const OrthoSet& f) {
  ExtScalar total;
  for (const auto& v : f.vectors()) total += state_overlap(tau, v);
  return total;
}

std::string label_bits(std::size_t index, unsigned n_qubits) {
  std::string bits(n_qubits, '0');
  for (unsigned b = 0; b < n_qubits; ++b)
    if (index & (std::size_t(1) << (n_qubits - 1 - b))) bits[b] = '1';
  return bits;
}

// The basis used for n-qubit outputs: a caller-supplied full basis when one
// matches, otherwise the standard basis.
const OrthoSet* find_basis(const std::vector<OrthoSet>& basis_seq, unsigned n) {
  for (const auto& b : basis_seq)
    if (b.n_qubits() == n) {
      if (!b.is_full_basis())
        throw DomainError("basis for " + std::to_string(n) + " qubits is not full");
      return &b;
    }
  return nullptr;
}

}  // namespace

QKResult qk_eps(const MachineTable& t, const DensityMatrix& tau, const Rational& eps) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  QKResult best;
  for (const auto& [code, output] : t.entries()) {
    const auto n = output_qubits(output);
    if (!n || *n != tau.n_qubits()) continue;
    ExtScalar ov;
    if (const auto* f = std::get_if<OrthoSet>(&output))
      ov = family_overlap(tau, *f);
    else
      ov = overlap(tau, std::get<ExactProjection>(output));
    if (compare_real(ov, eps) <= 0) continue;
    const unsigned rank = output_rank(output);
    Int weight = pow2(static_cast<unsigned>(code.length())) * rank;
    if (!best.value.is_finite() || weight < best.value.weight()) {
      best.value = QKValue::finite(std::move(weight));
      best.witness = QKWitness{code, rank, ov};
    }
  }
  return best;
}

MachineTable compress_classical_machine(const MachineTable& u, const Rational& eps,
                                        const std::vector<OrthoSet>& basis_seq) {
  if (eps <= 0 || eps > 1) throw DomainError("epsilon must lie in (0,1]");
  RawTable raw;
  raw.label = u.label() + "_P";
  for (const auto& [code, output] : u.entries()) {
    const auto n = output_qubits(output);
    if (!n) continue;
    const unsigned rank = output_rank(output);
    if (rank == 0) continue;
    const long suffix_len = ceil_log2(Rational(rank) / eps);
    if (suffix_len > 24) throw DomainError("suffix length too large; epsilon too small");

    const OrthoSet* provided = find_basis(basis_seq, *n);
    const OrthoSet basis = provided ? *provided : standard_basis(*n);
    const std::vector<std::size_t> heavy =
        heavy_basis_vectors(basis, output_projector(output), eps);
    if (heavy.empty()) continue;

    const std::size_t suffix_count = std::size_t(1) << suffix_len;
    for (std::size_t idx = 0; idx < suffix_count; ++idx) {
      const std::string suffix =
          suffix_len == 0 ? std::string() : label_bits(idx, static_cast<unsigned>(suffix_len));
      const std::size_t chosen = heavy[idx % heavy.size()];
      raw.entries.emplace_back(Codeword(code.bits + suffix),
                               ClassicalOut{label_bits(chosen, *n)});
    }
  }
  return must_validate(std::move(raw));  // prefix-free by construction
}

Report compress_guarantee_report(const MachineTable& u, const MachineTable& compressed,
                                 const Rational& eps, const std::vector<OrthoSet>& basis_seq) {
  Report report;
  const Int slack = pow2(static_cast<unsigned>(ceil_log2(1 / eps)) + 1);

  std::vector<unsigned> qubit_counts;
  for (const auto& [code, output] : u.entries()) {
    (void)code;
    if (auto n = output_qubits(output))
      if (std::find(qubit_counts.begin(), qubit_counts.end(), *n) == qubit_counts.end())
        qubit_counts.push_back(*n);
  }
  std::sort(qubit_counts.begin(), qubit_counts.end());

  for (unsigned n : qubit_counts) {
    const OrthoSet* provided = find_basis(basis_seq, n);
    const OrthoSet basis = provided ? *provided : standard_basis(n);
    for (std::size_t e = 0; e < basis.size(); ++e) {
      const QKResult res = qk_eps(u, DensityMatrix::from_pure(basis[e]), eps);
      if (!res.value.is_finite()) continue;
      const std::string label = label_bits(e, n);
      const auto kp = k_of(compressed, ClassicalOut{label});
      Claim claim;
      claim.name = "compress_guarantee_" + label;
      claim.witness = res.witness->codeword.bits;
      claim.rhs = (res.value.weight() * slack).str();
      if (kp) {
        claim.lhs = pow2(*kp).str();
        claim.pass = pow2(*kp) <= res.value.weight() * slack;
      } else {
        claim.lhs = "inf";
        claim.pass = false;
      }
      report.add(std::move(claim));
    }
  }
  return report;
}

MachineTable standard_basis_machine(unsigned max_qubits) {
  if (max_qubits == 0) throw DomainError("need at least one qubit level");
  RawTable raw;
  raw.label = "standard_basis";
  for (unsigned n = 1; n <= max_qubits; ++n)
    raw.entries.emplace_back(encode_natural(n), ExactProjection::identity(n));
  return must_validate(std::move(raw));
}

Report counting_check(const MachineTable& t, const OrthoSet& family, const Rational& eps) {
  Report report;
  std::optional<Int> max_weight;
  bool all_finite = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const QKResult res = qk_eps(t, DensityMatrix::from_pure(family[i]), eps);
    if (res.value.is_finite()) {
      report.note("vector " + std::to_string(i + 1) + ": " + res.value.render() + " witness=" +
                  res.witness->codeword.bits);
      if (!max_weight || res.value.weight() > *max_weight) max_weight = res.value.weight();
    } else {
      report.note("vector " + std::to_string(i + 1) + ": QK=inf (bound not asserted)");
      all_finite = false;
    }
  }
  if (all_finite && max_weight) {
    // N <= eps^{-1} 2^B, i.e. N * eps <= max weight
    const Rational lhs = Rational(family.size()) * eps;
    Claim claim;
    claim.name = "counting_bound";
    claim.lhs = std::to_string(family.size());
    claim.rhs = format_rational(Rational(*max_weight) / eps);
    claim.pass = lhs <= Rational(*max_weight);
    report.add(std::move(claim));
  }
  return report;
}

Report tracial_bound_check(const MachineTable& t, unsigned n, unsigned k) {
  if (n == 0) throw DomainError("tracial level must be at least 1");
  Report report;
  const QKResult res = qk_eps(t, DensityMatrix::tracial(n), pow2_rational(-static_cast<long>(k)));

  Claim weak;
  weak.name = "tracial_weight_above_2^(n-k)";
  weak.rhs = format_rational(pow2_rational(static_cast<long>(n) - static_cast<long>(k)));
  Claim full;
  full.name = "tracial_weight_above_2^(n-k+K_M(n))";

  if (!res.value.is_finite()) {
    report.note("QK^(2^-" + std::to_string(k) + ") of tracial_" + std::to_string(n) +
                " is infinite; bounds hold vacuously");
    weak.lhs = "inf";
    weak.pass = true;
    full.lhs = "inf";
    full.rhs = weak.rhs;
    full.pass = true;
    report.add(std::move(weak));
    report.add(std::move(full));
    return report;
  }

  const Int& w = res.value.weight();
  weak.lhs = w.str();
  weak.witness = res.witness->codeword.bits;
  // W > 2^{n-k}  <=>  W * 2^k > 2^n
  weak.pass = w * pow2(k) > pow2(n);
  report.add(std::move(weak));

  // the proof's auxiliary machine M: codeword -> qubit count of the output
  RawTable aux;
  aux.label = t.label() + "_M";
  for (const auto& [code, output] : t.entries())
    if (auto m = output_qubits(output))
      aux.entries.emplace_back(code, NatOut{*m});
  const MachineTable m_table = must_validate(std::move(aux));
  const auto km = k_of(m_table, NatOut{n});

  full.lhs = w.str();
  full.witness = res.witness->codeword.bits;
  if (!km) {
    // unreachable if the QK query was finite
    full.rhs = "inf";
    full.pass = false;
  } else {
    full.rhs = format_rational(pow2_rational(static_cast<long>(n) - static_cast<long>(k) +
                                             static_cast<long>(*km)));
    full.pass = w * pow2(k) >= pow2(n + *km);
  }
  report.add(std::move(full));
  return report;
}

}  // namespace qk
