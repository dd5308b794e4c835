#ifndef TOKGRAPH_ERRORS_H_
#define TOKGRAPH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tokgraph {

// Invalid argument to a public operation. `field()` names the offending
// parameter so callers can report it without parsing the message.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Malformed serialized input (graph6, edge lists, label files).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A search exceeded its node or wall-clock budget. Solvers throw this
// instead of returning a possibly wrong answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal self-check failed (e.g. a generator that is not an
// automorphism). Always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tokgraph

#endif  // TOKGRAPH_ERRORS_H_
