#pragma once

#include <cstddef>

namespace purespec {

// Size limits. Exceeding either one is an error, never a silent fallback.
struct Limits {
  std::size_t order_cap = 512;
  std::size_t lattice_cap = 100000;
};

}  // namespace purespec
