#pragma once

#include <cstdint>
#include <vector>

#include "dcnet/network.hpp"

namespace dcnet {

// Knobs for the rejection-sampling generator. Small bounds on purpose: the
// generator exists to drive property tests and cross-checks, not benchmarks.
struct RandomNetSpec {
  int taxa = 4;          // 1..6
  int max_internal = 4;  // non-root internal vertices, 0..8
  double density = 0.3;  // 0 gives the trivial tree shape
  uint64_t seed = 0;
};

// Draw a ranked DAG above the leaves, wire orphans to a fresh root, then
// reject until the result is distinct-cluster. Deterministic per seed.
Network gen_random_dc(const RandomNetSpec& spec);

// Closure of {net} under all valid single simplification steps, up to
// network equality. Exponential; refuses networks over 8 vertices.
std::vector<Network> enumerate_all_cps(const Network& net);

}  // namespace dcnet
