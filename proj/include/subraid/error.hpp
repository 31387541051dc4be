#pragma once

#include <stdexcept>
#include <string>

namespace subraid {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A crossing cap (state-sum, Khovanov) was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, int crossings, int cap)
      : Error(what + ": " + std::to_string(crossings) + " crossings exceed the cap of " + std::to_string(cap)),
        crossings_(crossings),
        cap_(cap) {}
  int crossings() const noexcept { return crossings_; }
  int cap() const noexcept { return cap_; }

 private:
  int crossings_;
  int cap_;
};

}  // namespace subraid
