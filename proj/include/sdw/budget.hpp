#ifndef SDW_BUDGET_HPP
#define SDW_BUDGET_HPP

#include <cstdint>

namespace sdw {

// Resource limits threaded through every potentially expensive operation.
// enum_visits bounds codeword/coset enumerations (number of vectors visited),
// synd_entries bounds syndrome table size (one byte per entry).
struct Budget {
  std::uint64_t enum_visits = std::uint64_t{1} << 30;
  std::uint64_t synd_entries = std::uint64_t{1} << 28;
  int workers = 1;
};

}  // namespace sdw

#endif
