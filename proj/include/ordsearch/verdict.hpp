#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ordsearch {

// One checked claim. Prints as `<check>: PASS|FAIL [witness: ...]`.
struct Verdict {
  std::string check;
  bool pass = false;
  std::string witness;

  explicit operator bool() const { return pass; }

  std::string line() const {
    std::string out = check + (pass ? ": PASS" : ": FAIL");
    if (!witness.empty()) out += " [witness: " + witness + "]";
    return out;
  }
};

inline Verdict pass_verdict(std::string check, std::string witness = {}) {
  return Verdict{std::move(check), true, std::move(witness)};
}

inline Verdict fail_verdict(std::string check, std::string witness = {}) {
  return Verdict{std::move(check), false, std::move(witness)};
}

inline bool all_pass(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (!v.pass) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const Verdict& v) { return os << v.line(); }

}  // namespace ordsearch
