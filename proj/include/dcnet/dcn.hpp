#pragma once

#include <string>
#include <string_view>

#include "dcnet/network.hpp"

namespace dcnet {

// .dcn text format. '#' starts a comment, blank lines are skipped.
// The first content line is `taxa <name>...`; every following line is
// `arc <parent-label> <child-label>`. Vertex ids are assigned in file
// order: taxa first, then other labels as they are first mentioned.
Network parse_network(std::string_view text);

// Deterministic inverse: the taxa line as given, then one arc line per arc
// sorted by (parent label, child label).
std::string serialize_network(const Network& net);

}  // namespace dcnet
