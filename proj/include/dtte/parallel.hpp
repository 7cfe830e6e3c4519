#pragma once

#include <cstddef>
#include <cstdint>

namespace dtte {

// Kernels accept an execution policy so the serial loop stays available as the
// reference the OpenMP path is tested against.
enum class Exec { serial, parallel };

template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::parallel) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace dtte
