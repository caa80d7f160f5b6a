#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qk {

using Modulus = std::int64_t;

/// Malformed or out-of-contract input: bad tables, bad moduli, parse errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure with a character offset into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration or table-size guard was exceeded.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure failed one of its defining checks.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One named check with the first violating tuple, if any.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<int> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(std::string_view name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }

  std::string summary() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.name;
      out += c.passed ? ": pass" : ": FAIL";
      if (!c.passed && !c.detail.empty()) out += " (" + c.detail + ")";
      out += '\n';
    }
    return out;
  }
};

inline std::string tuple_string(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace qk
