#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qk/linalg.hpp"

namespace qk {

// A coherent finite prefix rho_1..rho_N of a state: rho_k lives on k qubits
// and tracing out the last qubit of rho_k gives exactly rho_{k-1}.
class DensityPrefix {
 public:
  // Validates coherence level by level. Throws ValidationError.
  static DensityPrefix make(std::vector<DensityMatrix> levels);

  unsigned depth() const { return static_cast<unsigned>(levels_.size()); }
  // 1-based, matching the paper-facing convention rho_1..rho_N.
  const DensityMatrix& level(unsigned k) const;
  const std::vector<DensityMatrix>& levels() const { return levels_; }

  friend bool operator==(const DensityPrefix&, const DensityPrefix&) = default;

 private:
  explicit DensityPrefix(std::vector<DensityMatrix> levels) : levels_(std::move(levels)) {}
  std::vector<DensityMatrix> levels_;
};

// A finite run of one-qubit orthonormal bases (b^k_0, b^k_1); the k-th pair
// measures qubit k.
class SystemB {
 public:
  static SystemB make(std::vector<std::array<QVector, 2>> bases);

  std::size_t size() const { return bases_.size(); }
  const std::array<QVector, 2>& pair(std::size_t k) const { return bases_[k]; }
  const std::vector<std::array<QVector, 2>>& pairs() const { return bases_; }

 private:
  explicit SystemB(std::vector<std::array<QVector, 2>> b) : bases_(std::move(b)) {}
  std::vector<std::array<QVector, 2>> bases_;
};

// Level k is 2^{-k} I.
DensityPrefix tracial_prefix(unsigned depth);

// Level k is |x restricted to k><x restricted to k|.
DensityPrefix classical_prefix(std::string_view bits);

// Level k projects onto b^1_{x1} (x) ... (x) b^k_{xk}.
DensityPrefix product_prefix(const SystemB& system, std::string_view bits);

// The unique x with product_prefix(system, x) == prefix, if any.
std::optional<std::string> induced_bitstring(const SystemB& system, const DensityPrefix& prefix);

// Level-wise convex combination. Weights must be positive and sum to 1
// exactly; components must share the same depth.
DensityPrefix mixture_prefix(const std::vector<Rational>& weights,
                             const std::vector<DensityPrefix>& components);

}  // namespace qk
