#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qk {

// One checked inequality or identity. Values are rendered exactly
// (integer weights or rationals), never as floats.
struct Claim {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string witness;  // codeword or "-"

  // `CLAIM <name> PASS|FAIL lhs=<exact> rhs=<exact> witness=<codeword>`
  std::string render() const;
};

struct Report {
  std::vector<std::string> info;
  std::vector<Claim> claims;

  bool all_pass() const;
  void add(Claim c) { claims.push_back(std::move(c)); }
  void note(std::string line) { info.push_back(std::move(line)); }
  void merge(Report other);
  void render(std::ostream& out) const;
};

}  // namespace qk
