#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// A parameter lies outside the window where an operation is defined.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the graph6 decoder; `position()` is the byte offset of the fault.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace turan
