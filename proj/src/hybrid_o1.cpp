#include "dcnet/hybrid_o1.hpp"

#include <algorithm>
#include <set>

#include "dcnet/metric.hpp"

namespace dcnet {

bool is_o1_network(const Network& net) {
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.is_hybrid(v) && net.out_degree(v) != 1) return false;
  return true;
}

int hybrid_count(const Network& net) {
  int k = 0;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.is_hybrid(v)) ++k;
  return k;
}

namespace {

Network splice_out(const Network& net, VertexId vid) {
  VertexId child = net.children(vid)[0];
  const int m = net.vertex_count();
  std::vector<Vertex> vertices;
  std::vector<VertexId> remap(static_cast<size_t>(m), -1);
  for (VertexId v = 0; v < m; ++v) {
    if (v == vid) continue;
    remap[static_cast<size_t>(v)] = static_cast<VertexId>(vertices.size());
    vertices.push_back(net.vertex(v));
  }
  std::vector<Arc> arcs;
  std::set<std::pair<VertexId, VertexId>> have;
  for (const Arc& a : net.arcs()) {
    if (a.parent == vid || a.child == vid) continue;
    Arc na{remap[static_cast<size_t>(a.parent)], remap[static_cast<size_t>(a.child)]};
    if (have.emplace(na.parent, na.child).second) arcs.push_back(na);
  }
  for (VertexId q : net.parents(vid)) {
    Arc na{remap[static_cast<size_t>(q)], remap[static_cast<size_t>(child)]};
    if (have.emplace(na.parent, na.child).second) arcs.push_back(na);
  }
  return Network::build(net.taxa(), std::move(vertices), std::move(arcs));
}

}  // namespace

Network contract_o1(const Network& net) {
  if (!is_o1_network(net))
    fail(Errc::NotO1Network, "input has a hybrid vertex whose out-degree is not 1");
  Network cur = net;
  for (;;) {
    VertexId found = -1;
    for (VertexId v = 0; v < cur.vertex_count(); ++v)
      if (cur.is_hybrid(v) && cur.out_degree(v) == 1) {
        found = v;
        break;
      }
    if (found == -1) return cur;
    cur = splice_out(cur, found);
  }
}

Network expand_o1(const Network& net) {
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.is_hybrid(v) && net.out_degree(v) == 1)
      fail(Errc::AlreadyHasO1Hybrid,
           "vertex '" + net.vertex(v).label + "' is already a hybrid of out-degree 1");

  std::vector<Vertex> vertices = net.vertices();
  std::set<std::string> labels;
  for (const Vertex& v : vertices) labels.insert(v.label);
  std::vector<Arc> arcs = net.arcs();
  int counter = 0;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (!net.is_hybrid(v)) continue;
    std::string label;
    do {
      label = "_h" + std::to_string(++counter);
    } while (labels.count(label));
    labels.insert(label);
    VertexId w = static_cast<VertexId>(vertices.size());
    vertices.push_back(Vertex{label, std::nullopt});
    for (Arc& a : arcs)
      if (a.child == v) a.child = w;
    arcs.push_back(Arc{w, v});
  }
  return Network::build(net.taxa(), std::move(vertices), std::move(arcs));
}

bool is_extended_dc(const Network& net) {
  if (!is_o1_network(net))
    fail(Errc::NotO1Network, "input has a hybrid vertex whose out-degree is not 1");
  return contract_o1(net).is_dc();
}

BigInt d_o1(const Network& a, const Network& b) {
  require_same_taxa(a, b);
  Network ca = contract_o1(a);
  Network cb = contract_o1(b);
  if (!ca.is_dc())
    fail(Errc::NotExtendedDC, "first input's contraction is not distinct-cluster");
  if (!cb.is_dc())
    fail(Errc::NotExtendedDC, "second input's contraction is not distinct-cluster");
  return inheritance_distance(ca, cb);
}

bool o1_networks_equal(const Network& a, const Network& b) {
  require_same_taxa(a, b);
  Network ca = contract_o1(a);
  Network cb = contract_o1(b);
  return hybrid_count(a) == hybrid_count(b) && networks_equal(ca, cb);
}

}  // namespace dcnet
