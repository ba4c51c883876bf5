#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geoimp {

enum class ErrorKind {
  // lattice
  NotAPoset,
  MissingBound,
  NotDistributive,
  TooLarge,
  NotMonotone,
  NotAFilter,
  NotAnIdeal,
  // implication
  NotAnImplication,
  NotMeetPreserving,
  NotLatticeMap,
  NotLeftInverse,
  NotSurjective,
  NotWbi,
  IntervalNotBoolean,
  // topology
  NotATopology,
  Discontinuous,
  InvalidCore,
  NotAnEmbedding,
  // frames
  InvalidFrame,
  NotInAlgebra,
  // representation
  NotJoinPreserving,
  NoRightAdjoint,
  TableMismatch,
  // geometry
  NotACategory,
  FiberMismatch,
  PreconditionViolated,
  // io
  ParseError,
  UnknownName,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// A rejected model. `witness` names the elements, pairs or sets that
/// falsify the violated law, in the model's own identifiers.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& message, std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::string witness_;
};

/// Two independent computations of the same fact disagreed. This always
/// indicates a bug in this library, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace geoimp
