#include "qk/report.hpp"

#include <ostream>

namespace qk {

std::string Claim::render() const {
  return "CLAIM " + name + (pass ? " PASS" : " FAIL") + " lhs=" + lhs + " rhs=" + rhs +
         " witness=" + (witness.empty() ? "-" : witness);
}

bool Report::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

void Report::merge(Report other) {
  for (auto& line : other.info) info.push_back(std::move(line));
  for (auto& c : other.claims) claims.push_back(std::move(c));
}

void Report::render(std::ostream& out) const {
  for (const auto& line : info) out << line << "\n";
  for (const auto& c : claims) out << c.render() << "\n";
}

}  // namespace qk
