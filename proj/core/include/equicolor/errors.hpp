#pragma once

#include <stdexcept>
#include <string>

namespace equicolor {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input violates a documented contract: edge bound, degree bound,
/// color count, malformed file. Maps to CLI exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A move would place a vertex next to a neighbor in its target class.
class IllegalMove : public PreconditionError {
 public:
  IllegalMove(const std::string& what, int vertex)
      : PreconditionError(what), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// A planned witness no longer certifies its arc.
class StalePlan : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// greedy_balanced_extend found no admissible class for a vertex.
class StuckVertex : public Error {
 public:
  StuckVertex(const std::string& what, int vertex)
      : Error(what), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// No accessibility improvement was found within the search budget.
/// Carries a JSON diagnostic dump of the stuck state. Maps to exit code 3.
class ImprovementNotFound : public Error {
 public:
  ImprovementNotFound(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace equicolor
