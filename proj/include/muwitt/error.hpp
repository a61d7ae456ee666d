// Typed domain errors shared by all modules.  Every failure mode that a
// caller can provoke with well-formed but invalid input is reported through
// DomainError with a stable machine-readable name; programming errors use
// plain logic_error.
#pragma once

#include <stdexcept>
#include <string>

namespace muwitt {

class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail) {
  throw DomainError(name, detail);
}

}  // namespace muwitt
