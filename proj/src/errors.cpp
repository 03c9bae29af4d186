#include "stacksort/errors.hpp"

namespace stacksort {

BoundExceeded::BoundExceeded(const std::string& routine, int requested, int bound)
    : std::runtime_error("oracle bound exceeded: " + routine + " asked for size " +
                         std::to_string(requested) + ", bound is " + std::to_string(bound)),
      requested_(requested),
      bound_(bound) {}

}  // namespace stacksort
