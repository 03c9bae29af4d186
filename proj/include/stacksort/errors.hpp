#pragma once

#include <stdexcept>
#include <string>

namespace stacksort {

// Thrown by exhaustive routines asked to sweep past their configured size.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& routine, int requested, int bound);

  int requested() const noexcept { return requested_; }
  int bound() const noexcept { return bound_; }

 private:
  int requested_;
  int bound_;
};

}  // namespace stacksort
