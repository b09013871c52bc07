#pragma once

#include <stdexcept>
#include <string>

namespace wronski {

/// Base for every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

/// Input outside an operation's domain (bad delta, missing heights, collinear
/// points, malformed triangulation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// A triangulation whose cells overlap, leave gaps or dangle.
class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Triangulation whose dual graph is not bipartite.
class NotFoldableError : public DomainError {
 public:
  NotFoldableError() : DomainError("not foldable") {}
};

/// Numerically or algebraically degenerate instance: tangential or repeated
/// intersections, non-finite intersections.
class DegenerateInstance : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// Elimination produced an identically zero eliminant after all retries.
class EliminationFailure : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace wronski
