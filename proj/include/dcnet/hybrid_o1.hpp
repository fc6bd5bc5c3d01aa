#pragma once

#include "dcnet/matrix.hpp"
#include "dcnet/network.hpp"

namespace dcnet {

// O1 form: every hybrid vertex (in-degree >= 2) has out-degree exactly 1.
bool is_o1_network(const Network& net);
int hybrid_count(const Network& net);

// Repeatedly splice out hybrids of out-degree 1, reattaching their parents
// to the unique child, until none remain. Input must be in O1 form; the
// result of one splice may expose another, hence the loop.
Network contract_o1(const Network& net);

// Insert a fresh parent above every hybrid whose out-degree is not 1, so
// the result is in O1 form. Inserted vertices are labeled _h1, _h2, ... in
// the order the hybrids are found; inverse of contract_o1 on such images.
Network expand_o1(const Network& net);

// A network in O1 form is extended distinct-cluster when its contraction is
// distinct-cluster: only a hybrid and the child it will merge with may share
// a cluster.
bool is_extended_dc(const Network& net);

// Inheritance distance of the contractions.
BigInt d_o1(const Network& a, const Network& b);

// Contractions equal and the same number of hybrids. Exact on expansion
// images, where the hybrid structure is determined by the contraction.
bool o1_networks_equal(const Network& a, const Network& b);

}  // namespace dcnet
