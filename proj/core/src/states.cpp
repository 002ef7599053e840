#include "qk/states.hpp"

#include <utility>

#include "qk/errors.hpp"

namespace qk {

DensityPrefix DensityPrefix::make(std::vector<DensityMatrix> levels) {
  if (levels.empty()) throw ValidationError("a state prefix needs at least one level");
  for (unsigned k = 0; k < levels.size(); ++k)
    if (levels[k].n_qubits() != k + 1)
      throw ValidationError("level " + std::to_string(k + 1) + " is not on " +
                            std::to_string(k + 1) + " qubits");
  for (unsigned k = 1; k < levels.size(); ++k)
    if (partial_trace(levels[k]) != levels[k - 1])
      throw ValidationError("prefix is not coherent between levels " + std::to_string(k) +
                            " and " + std::to_string(k + 1));
  return DensityPrefix(std::move(levels));
}

const DensityMatrix& DensityPrefix::level(unsigned k) const {
  if (k == 0 || k > levels_.size()) throw DomainError("level index out of range");
  return levels_[k - 1];
}

SystemB SystemB::make(std::vector<std::array<QVector, 2>> bases) {
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (bases[k][0].n_qubits != 1 || bases[k][1].n_qubits != 1)
      throw ValidationError("system basis " + std::to_string(k + 1) + " is not one-qubit");
    OrthoViolation why;
    if (!OrthoSet::check({bases[k][0], bases[k][1]}, &why))
      throw ValidationError("system basis " + std::to_string(k + 1) +
                            " is not orthonormal: " + why.message);
  }
  return SystemB(std::move(bases));
}

DensityPrefix tracial_prefix(unsigned depth) {
  if (depth == 0) throw DomainError("depth must be at least 1");
  std::vector<DensityMatrix> levels;
  levels.reserve(depth);
  for (unsigned k = 1; k <= depth; ++k) levels.push_back(DensityMatrix::tracial(k));
  return DensityPrefix::make(std::move(levels));
}

DensityPrefix classical_prefix(std::string_view bits) {
  if (bits.empty()) throw DomainError("classical prefix needs at least one bit");
  std::vector<DensityMatrix> levels;
  levels.reserve(bits.size());
  for (std::size_t k = 1; k <= bits.size(); ++k)
    levels.push_back(DensityMatrix::from_pure(basis_vector(bits.substr(0, k))));
  return DensityPrefix::make(std::move(levels));
}

DensityPrefix product_prefix(const SystemB& system, std::string_view bits) {
  if (bits.empty()) throw DomainError("product prefix needs at least one bit");
  if (bits.size() > system.size())
    throw DomainError("bitstring longer than the system: " + std::to_string(bits.size()) + " > " +
                      std::to_string(system.size()));
  std::vector<DensityMatrix> levels;
  levels.reserve(bits.size());
  QVector current;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') throw DomainError("bitstring may contain only 0/1");
    const QVector& factor = system.pair(k)[bits[k] == '1'];
    current = k == 0 ? factor : tensor(current, factor);
    levels.push_back(DensityMatrix::from_pure(current));
  }
  return DensityPrefix::make(std::move(levels));
}

std::optional<std::string> induced_bitstring(const SystemB& system, const DensityPrefix& prefix) {
  if (prefix.depth() > system.size()) return std::nullopt;
  std::string bits;
  QVector current;
  for (unsigned k = 0; k < prefix.depth(); ++k) {
    bool matched = false;
    for (int b = 0; b < 2 && !matched; ++b) {
      QVector candidate = k == 0 ? system.pair(k)[b] : tensor(current, system.pair(k)[b]);
      if (DensityMatrix::from_pure(candidate) == prefix.level(k + 1)) {
        bits += b ? '1' : '0';
        current = std::move(candidate);
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return bits;
}

DensityPrefix mixture_prefix(const std::vector<Rational>& weights,
                             const std::vector<DensityPrefix>& components) {
  if (weights.size() != components.size() || weights.empty())
    throw DomainError("mixture needs matching nonempty weights and components");
  Rational total(0);
  for (const auto& w : weights) {
    if (w <= 0) throw DomainError("mixture weights must be positive");
    total += w;
  }
  if (total != 1) throw DomainError("mixture weights must sum to 1, got " + format_rational(total));
  const unsigned depth = components.front().depth();
  for (const auto& c : components)
    if (c.depth() != depth) throw DomainError("mixture components must share a depth");

  std::vector<DensityMatrix> levels;
  levels.reserve(depth);
  for (unsigned k = 1; k <= depth; ++k) {
    const std::size_t dim = std::size_t(1) << k;
    Mat m(dim, dim);
    for (std::size_t c = 0; c < components.size(); ++c)
      m = m + scale(ExtScalar(weights[c]), components[c].level(k).matrix());
    levels.push_back(DensityMatrix::make(k, std::move(m)));
  }
  return DensityPrefix::make(std::move(levels));
}

}  // namespace qk
