#include "dcnet/matrix.hpp"

#include <algorithm>

namespace dcnet {

namespace {

std::vector<int> positions(const std::vector<VertexId>& order, int m) {
  std::vector<int> pos(static_cast<size_t>(m), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  return pos;
}

}  // namespace

AdjacencyMatrix adjacency_matrix(const Network& net) {
  const int m = net.vertex_count();
  AdjacencyMatrix a;
  a.order = net.topo_order();
  a.pos = positions(a.order, m);
  a.entries.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
  for (const Arc& e : net.arcs()) {
    int i = a.pos[static_cast<size_t>(e.parent)];
    int j = a.pos[static_cast<size_t>(e.child)];
    a.entries[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)] = 1;
  }
  return a;
}

int max_path_length(const Network& net) {
  // Longest path ending measured from each vertex downward.
  const auto& topo = net.topo_order();
  std::vector<int> depth(static_cast<size_t>(net.vertex_count()), 0);
  int best = 0;
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    VertexId v = *it;
    int d = 0;
    for (VertexId c : net.children(v))
      d = std::max(d, depth[static_cast<size_t>(c)] + 1);
    depth[static_cast<size_t>(v)] = d;
    best = std::max(best, d);
  }
  return best;
}

InheritanceMatrix inheritance_matrix(const Network& net) {
  const int m = net.vertex_count();
  InheritanceMatrix h;
  h.order = net.topo_order();
  h.pos = positions(h.order, m);
  h.entries.assign(static_cast<size_t>(m) * static_cast<size_t>(m), BigInt(0));
  auto row = [&](int i) { return h.entries.data() + static_cast<size_t>(i) * static_cast<size_t>(m); };
  for (int i = m - 1; i >= 0; --i) {
    VertexId u = h.order[static_cast<size_t>(i)];
    BigInt* ru = row(i);
    ru[i] = 1;
    for (VertexId c : net.children(u)) {
      const BigInt* rc = row(h.pos[static_cast<size_t>(c)]);
      for (int j = i + 1; j < m; ++j) ru[j] += rc[j];
    }
  }
  return h;
}

bool verify_inverse_identity(const Network& net) {
  AdjacencyMatrix a = adjacency_matrix(net);
  InheritanceMatrix h = inheritance_matrix(net);
  const int m = a.size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      BigInt sum = h.at(i, j);
      for (int k = 0; k < m; ++k)
        if (a.at(i, k)) sum -= h.at(k, j);
      if (sum != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

BigInt count_paths_oracle(const Network& net, VertexId u, VertexId v) {
  BigInt count = 0;
  // Walk every path; acyclicity bounds the recursion.
  auto dfs = [&](auto&& self, VertexId w) -> void {
    if (w == v) {
      ++count;
      return;
    }
    for (VertexId c : net.children(w)) self(self, c);
  };
  dfs(dfs, u);
  return count;
}

std::vector<Arc> arcs_from_inheritance(const InheritanceMatrix& h) {
  // Solve A * H = H - I row by row; H is unitriangular in its own order.
  const int m = h.size();
  std::vector<Arc> arcs;
  std::vector<BigInt> a(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      BigInt rhs = h.at(i, j);
      if (i == j) rhs -= 1;
      for (int k = 0; k < j; ++k)
        if (a[static_cast<size_t>(k)] != 0) rhs -= a[static_cast<size_t>(k)] * h.at(k, j);
      a[static_cast<size_t>(j)] = rhs;
      if (rhs != 0)
        arcs.push_back(Arc{h.order[static_cast<size_t>(i)], h.order[static_cast<size_t>(j)]});
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace dcnet
