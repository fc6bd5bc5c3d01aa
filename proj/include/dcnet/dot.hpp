#pragma once

#include <string>

#include "dcnet/network.hpp"

namespace dcnet {

// Graphviz rendering: one node per vertex labeled "<label> <cluster>",
// redundant arcs dashed. Deterministic byte-for-byte.
std::string export_dot(const Network& net);

}  // namespace dcnet
