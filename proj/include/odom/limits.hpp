#pragma once

#include <cstddef>

namespace odom {

// Hard size guards. Exceeding any of them raises GuardExceeded instead of
// truncating or hanging.
struct Limits {
  std::size_t max_dominance_generators = 20;
  std::size_t max_minimal_nets = 100000;
  std::size_t max_taylor_generators = 14;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace odom
