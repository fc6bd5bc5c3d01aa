#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dcnet/network.hpp"

namespace dcnet {

// Path counts grow combinatorially, so entries are arbitrary-precision.
using BigInt = boost::multiprecision::cpp_int;

struct AdjacencyMatrix {
  std::vector<VertexId> order;  // topological
  std::vector<int> pos;         // vertex id -> row index
  std::vector<uint8_t> entries;

  int size() const { return static_cast<int>(order.size()); }
  uint8_t at(int i, int j) const {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(size()) +
                   static_cast<size_t>(j)];
  }
};

// entries[i][j] = number of directed paths order[i] -> order[j], the
// length-0 path included. Upper unitriangular in topological order.
struct InheritanceMatrix {
  std::vector<VertexId> order;
  std::vector<int> pos;
  std::vector<BigInt> entries;

  int size() const { return static_cast<int>(order.size()); }
  const BigInt& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(size()) +
                   static_cast<size_t>(j)];
  }
  const BigInt& paths(VertexId u, VertexId v) const {
    return at(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
  }
};

AdjacencyMatrix adjacency_matrix(const Network& net);

// Length of the longest directed path.
int max_path_length(const Network& net);

// Dynamic program over reverse topological order: a vertex's row is the unit
// row plus the sum of its children's rows.
InheritanceMatrix inheritance_matrix(const Network& net);

// Exact check that (I - A) * H = I.
bool verify_inverse_identity(const Network& net);

// Exhaustive DFS path enumeration; deliberately independent of the
// inheritance-matrix recurrence so the two can cross-check each other.
BigInt count_paths_oracle(const Network& net, VertexId u, VertexId v);

// Recover the arc set from path counts by back-substitution. The network is
// determined by its inheritance matrix.
std::vector<Arc> arcs_from_inheritance(const InheritanceMatrix& h);

}  // namespace dcnet
