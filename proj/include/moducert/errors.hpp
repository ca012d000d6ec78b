/// @file errors.hpp
/// Exception taxonomy shared by the whole toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace moducert {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when exact polynomial division leaves a nonzero remainder.
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

/// Thrown when two objects live over different variable contexts or lattices.
struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& msg) : Error(msg) {}
};

/// Thrown when a pair map cannot be surjective (neither component invertible).
struct NotSurjective : Error {
  explicit NotSurjective(const std::string& msg) : Error(msg) {}
};

/// Thrown when a ruled-surface invariant would drop below zero during a
/// backward reconstruction (the input graph cannot come from a blowup chain).
struct InvariantUnderflow : Error {
  explicit InvariantUnderflow(const std::string& msg) : Error(msg) {}
};

/// Thrown on malformed user input (bad graph files, invalid parameters).
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// Thrown when a component search exceeds its hard work limits.
struct BranchLimit : Error {
  explicit BranchLimit(const std::string& msg) : Error(msg) {}
};

/// Thrown on arithmetic that is undefined over the rationals (division by
/// zero, inverting a non-invertible element).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace moducert
