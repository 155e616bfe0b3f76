#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "twoval/exec.hpp"

namespace twoval::detail {

// Smallest i in [0, n) with pred(i), or nullopt. `pred` must be pure.
template <class Pred>
std::optional<std::size_t> first_index(std::size_t n, Exec exec, Pred&& pred) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::size_t best = n;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) {
    std::size_t current;
#pragma omp atomic read
    current = best;
    const auto i = static_cast<std::size_t>(k);
    if (i >= current) continue;
    if (pred(i)) {
#pragma omp critical(twoval_first_index)
      if (i < best) best = i;
    }
  }
  if (best == n) return std::nullopt;
  return best;
}

}  // namespace twoval::detail
