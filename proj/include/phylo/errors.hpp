#pragma once

#include <stdexcept>
#include <string>

namespace phylo {

// Budget or capacity exhausted. Signals "instance too large", never a wrong
// answer.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A guarantee that must hold by construction failed at runtime. Raised loudly
// so a broken invariant is never folded into a normal result.
class theorem_violation : public std::logic_error {
 public:
  explicit theorem_violation(const std::string& what)
      : std::logic_error(what) {}
};

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace phylo
