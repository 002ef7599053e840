#include "qk/machines.hpp"

#include <utility>

#include "qk/errors.hpp"

namespace qk {

Codeword::Codeword(std::string b) : bits(std::move(b)) {
  if (bits.empty()) throw DomainError("codeword must be nonempty");
  for (char ch : bits)
    if (ch != '0' && ch != '1') throw DomainError("codeword may contain only 0/1: '" + bits + "'");
}

bool Codeword::is_proper_prefix_of(const Codeword& other) const {
  return bits.size() < other.bits.size() && other.bits.compare(0, bits.size(), bits) == 0;
}

Codeword encode_natural(unsigned n) {
  return Codeword(std::string(n, '0') + "1");
}

bool output_equal(const MachineOutput& x, const MachineOutput& y) {
  return std::visit(
      [](const auto& a, const auto& b) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, std::decay_t<decltype(b)>>)
          return a == b;
        else
          return false;
      },
      x, y);
}

std::optional<unsigned> output_qubits(const MachineOutput& o) {
  if (const auto* f = std::get_if<OrthoSet>(&o)) return f->n_qubits();
  if (const auto* p = std::get_if<ExactProjection>(&o)) return p->n_qubits();
  return std::nullopt;
}

unsigned output_rank(const MachineOutput& o) {
  if (const auto* f = std::get_if<OrthoSet>(&o)) return static_cast<unsigned>(f->size());
  if (const auto* p = std::get_if<ExactProjection>(&o)) return p->rank();
  return 0;
}

ExactProjection output_projector(const MachineOutput& o) {
  if (const auto* f = std::get_if<OrthoSet>(&o)) return projector_onto(*f);
  if (const auto* p = std::get_if<ExactProjection>(&o)) return *p;
  throw DomainError("output has no span projector");
}

std::string describe_output(const MachineOutput& o) {
  if (const auto* f = std::get_if<OrthoSet>(&o))
    return "ortho(" + std::to_string(f->size()) + " vectors, " + std::to_string(f->n_qubits()) +
           " qubits)";
  if (const auto* p = std::get_if<ExactProjection>(&o))
    return "proj(rank " + std::to_string(p->rank()) + ", " + std::to_string(p->n_qubits()) +
           " qubits)";
  if (const auto* s = std::get_if<ClassicalOut>(&o)) return "str " + s->bits;
  return "nat " + std::to_string(std::get<NatOut>(o).value);
}

std::variant<MachineTable, std::vector<TableIssue>> validate_table(RawTable raw) {
  std::vector<TableIssue> issues;

  for (std::size_t i = 0; i < raw.entries.size(); ++i)
    for (std::size_t j = 0; j < raw.entries.size(); ++j) {
      if (i == j) continue;
      const Codeword& a = raw.entries[i].first;
      const Codeword& b = raw.entries[j].first;
      if (i < j && a == b) issues.push_back({"duplicate codeword \"" + a.bits + "\""});
      if (a.is_proper_prefix_of(b))
        issues.push_back({"prefix violation: \"" + a.bits + "\" < \"" + b.bits + "\""});
    }

  Rational kraft(0);
  for (const auto& [code, output] : raw.entries) {
    kraft += Rational(1, pow2(static_cast<unsigned>(code.length())));
    (void)output;
  }
  if (kraft > 1) issues.push_back({"Kraft sum exceeds 1: " + format_rational(kraft)});
  if (raw.declared_measure && *raw.declared_measure != kraft)
    issues.push_back({"declared measure " + format_rational(*raw.declared_measure) +
                      " differs from Kraft sum " + format_rational(kraft)});

  if (!issues.empty()) return issues;

  MachineTable t;
  t.label_ = std::move(raw.label);
  t.declared_measure_ = std::move(raw.declared_measure);
  for (auto& [code, output] : raw.entries) t.entries_.emplace(std::move(code), std::move(output));
  return t;
}

MachineTable must_validate(RawTable raw) {
  auto result = validate_table(std::move(raw));
  if (auto* t = std::get_if<MachineTable>(&result)) return std::move(*t);
  std::string what = "invalid machine table:";
  for (const auto& issue : std::get<std::vector<TableIssue>>(result)) what += " " + issue.message + ";";
  throw ValidationError(what);
}

Rational kraft_sum(const MachineTable& t) {
  Rational sum(0);
  for (const auto& [code, output] : t.entries()) {
    sum += Rational(1, pow2(static_cast<unsigned>(code.length())));
    (void)output;
  }
  return sum;
}

std::optional<unsigned> k_of(const MachineTable& t, const MachineOutput& target) {
  // entries() is shortlex-ordered, so the first hit is the shortest
  for (const auto& [code, output] : t.entries())
    if (output_equal(output, target)) return static_cast<unsigned>(code.length());
  return std::nullopt;
}

MachineTable wrap_with_prefix(const MachineTable& t, const Codeword& prefix) {
  RawTable raw;
  raw.label = t.label() + "@" + prefix.bits;
  for (const auto& [code, output] : t.entries())
    raw.entries.emplace_back(Codeword(prefix.bits + code.bits), output);
  return must_validate(std::move(raw));
}

MachineTable encode_natural_table(unsigned max_n) {
  RawTable raw;
  raw.label = "encode_natural";
  for (unsigned n = 0; n <= max_n; ++n) raw.entries.emplace_back(encode_natural(n), NatOut{n});
  return must_validate(std::move(raw));
}

}  // namespace qk
