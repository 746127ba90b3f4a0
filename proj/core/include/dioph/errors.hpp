#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dioph {

// Raised when an enumeration or grid would exceed a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t estimated)
      : std::runtime_error(what), estimated_(estimated) {}

  std::uint64_t estimated_count() const noexcept { return estimated_; }

 private:
  std::uint64_t estimated_;
};

// Parameter outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dioph
