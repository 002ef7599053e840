#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qk/linalg.hpp"

namespace qk {

// A program string: finite nonempty 0/1 word. Ordered shortlex so that
// enumeration over a table is deterministic.
struct Codeword {
  std::string bits;

  Codeword() = default;
  explicit Codeword(std::string b);

  std::size_t length() const { return bits.size(); }
  bool is_proper_prefix_of(const Codeword& other) const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend std::strong_ordering operator<=>(const Codeword& x, const Codeword& y) {
    if (x.bits.size() != y.bits.size()) return x.bits.size() <=> y.bits.size();
    return x.bits <=> y.bits;
  }
};

// 0^n 1, the canonical self-delimiting encoding of a natural number. All
// K(n)-style constants in the library are relative to this table.
Codeword encode_natural(unsigned n);
constexpr unsigned encode_natural_length(unsigned n) { return n + 1; }

struct ClassicalOut {
  std::string bits;  // may be empty
  friend bool operator==(const ClassicalOut&, const ClassicalOut&) = default;
};

struct NatOut {
  unsigned long value = 0;
  friend bool operator==(const NatOut&, const NatOut&) = default;
};

// What a table entry maps to. Ortho and Proj both denote a subspace; the
// definition of QK uses an output only through its span and its size, and
// rank plays the size role for Proj.
using MachineOutput = std::variant<OrthoSet, ExactProjection, ClassicalOut, NatOut>;

bool output_equal(const MachineOutput& x, const MachineOutput& y);
// Qubit count for Ortho/Proj outputs, nullopt for Classical/Nat.
std::optional<unsigned> output_qubits(const MachineOutput& o);
// |F| for Ortho, rank for Proj; 0 otherwise.
unsigned output_rank(const MachineOutput& o);
// The span projector of an Ortho/Proj output. Throws DomainError otherwise.
ExactProjection output_projector(const MachineOutput& o);
std::string describe_output(const MachineOutput& o);

// Pre-validation table data as parsed or assembled.
struct RawTable {
  std::string label;
  std::optional<Rational> declared_measure;
  std::vector<std::pair<Codeword, MachineOutput>> entries;
};

struct TableIssue {
  std::string message;
};

// A validated finite prefix-free machine table: stands in for the universal
// machine (or a computable measure machine) at desk scale.
class MachineTable {
 public:
  using EntryMap = std::map<Codeword, MachineOutput>;

  const std::string& label() const { return label_; }
  const EntryMap& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const std::optional<Rational>& declared_measure() const { return declared_measure_; }

 private:
  friend std::variant<MachineTable, std::vector<TableIssue>> validate_table(RawTable raw);
  MachineTable() = default;
  std::string label_;
  EntryMap entries_;
  std::optional<Rational> declared_measure_;
};

// Checks: nonempty 0/1 codewords, no duplicates, prefix-freeness, sound
// outputs, Kraft sum <= 1, and (when declared) measure == Kraft sum. On
// failure every issue found is reported, naming the offending codewords.
std::variant<MachineTable, std::vector<TableIssue>> validate_table(RawTable raw);

// Throwing wrapper for programmatic construction that is valid by design.
MachineTable must_validate(RawTable raw);

// Exact dyadic sum of 2^{-|codeword|} over the domain.
Rational kraft_sum(const MachineTable& t);

// Shortest codeword mapping exactly to `target`; nullopt when none does
// (complexity is infinite).
std::optional<unsigned> k_of(const MachineTable& t, const MachineOutput& target);

// Prepends `prefix` to every codeword: embeds the table behind a coding
// constant of |prefix| bits. Kraft sum scales by 2^{-|prefix|}.
MachineTable wrap_with_prefix(const MachineTable& t, const Codeword& prefix);

// The table {0^n 1 -> Nat(n) : 0 <= n <= max_n}.
MachineTable encode_natural_table(unsigned max_n);

}  // namespace qk
