#pragma once

#include <stdexcept>

namespace lca {

// Arguments outside an operation's domain (bad vertex id, zero palette, ...).
class CallerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A probe session would exceed its per-query budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A forest-only search met a cycle.
class NotAForest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Global preconditions that do not hold for the given input
// (infeasible generator parameters, wrong arboricity declaration, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lca
