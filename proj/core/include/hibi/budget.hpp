#pragma once

#include <cstdint>

namespace hibi {

// Guards for the exponential enumerations. Exceeding a cap raises CapError
// rather than running away; the regularity engine degrades to bounds instead.
struct Budget {
  std::uint64_t max_lattice_elements = 1'000'000;
  std::uint64_t max_extensions = 10'000'000;
};

}  // namespace hibi
