#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsl {

// Requested board size exceeds the configured search cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computation routes produced different results.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A record violates one of the counting identities.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input. `line` is 1-based where applicable, `offset`
// is a byte offset into the input (0 when unknown).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t line, std::size_t offset)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", offset " +
                           std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace qsl
