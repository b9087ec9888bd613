#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obbm {

struct NonPositiveWidth : std::runtime_error {
  std::size_t index;  // 1-based obstacle index
  char which;         // 'a' or 'b'
  NonPositiveWidth(std::size_t idx, char w)
      : std::runtime_error("non-positive width " + std::string(1, w) +
                           " at obstacle " + std::to_string(idx)),
        index(idx),
        which(w) {}
};

struct EmptyLandscape : std::invalid_argument {
  EmptyLandscape() : std::invalid_argument("operation requires at least one obstacle") {}
};

struct IndexRange : std::out_of_range {
  explicit IndexRange(const std::string& what) : std::out_of_range(what) {}
};

struct MismatchedLength : std::invalid_argument {
  explicit MismatchedLength(const std::string& what) : std::invalid_argument(what) {}
};

struct InfeasibleStep : std::runtime_error {
  InfeasibleStep() : std::runtime_error("step domain is empty for the given exponent pair") {}
};

struct DomainViolation : std::runtime_error {
  std::string constraint;  // e.g. "3.4", "3.5", "3.6"
  explicit DomainViolation(std::string c)
      : std::runtime_error("allocation violates constraint (" + c + ")"),
        constraint(std::move(c)) {}
};

struct NoFeasiblePoint : std::runtime_error {
  NoFeasiblePoint() : std::runtime_error("search found no feasible point") {}
};

struct ProbeOutOfRange : std::invalid_argument {
  explicit ProbeOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace obbm
