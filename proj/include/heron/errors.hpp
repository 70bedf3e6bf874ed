#pragma once

#include <stdexcept>
#include <string>

namespace heron {

/// Input is well formed but violates a mathematical precondition
/// (not Heronian, improper, even LCD, ...). Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The quaternion Euclidean loop failed to reduce the norm.
class GcdAbort : public DomainError {
 public:
  GcdAbort() : DomainError("no GCD exists / even-norm obstruction") {}
};

/// A search hit its node ceiling before completing. Maps to exit code 3.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(unsigned long long nodes)
      : std::runtime_error("budget exhausted after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}
  unsigned long long nodes() const noexcept { return nodes_; }

 private:
  unsigned long long nodes_;
};

}  // namespace heron
