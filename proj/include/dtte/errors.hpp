#pragma once

#include <stdexcept>
#include <string>

namespace dtte {

// Argument outside an operation's domain (bad grade, shape mismatch, negative mass).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Tetrad fails orthonormality, or E*E != 1 for Hermitian conjugation.
class InvalidTetrad : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares system or ideal basis has rank below its column count.
class DegenerateBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInIdeal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algebraic invariant that must hold by construction did not. Indicates a
// kernel bug, never bad user input.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dtte
