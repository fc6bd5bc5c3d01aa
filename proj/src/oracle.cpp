#include "dcnet/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>

#include "dcnet/dcn.hpp"
#include "dcnet/simplify.hpp"

namespace dcnet {

Network gen_random_dc(const RandomNetSpec& spec) {
  if (spec.taxa < 1 || spec.taxa > 6)
    fail(Errc::TooLarge, "generator supports 1..6 taxa");
  if (spec.max_internal < 0 || spec.max_internal > 8)
    fail(Errc::TooLarge, "generator supports at most 8 internal vertices");
  if (spec.taxa == 1) {
    // The only DC network on one taxon.
    TaxonSet taxa = TaxonSet::numbered(1);
    return Network::build(taxa, {Vertex{taxa.name(0), 0}}, {});
  }

  const int n = spec.taxa;
  TaxonSet taxa = TaxonSet::numbered(n);
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution slot(spec.density);
  std::bernoulli_distribution extra(spec.density * 0.4);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    int k = 0;
    for (int i = 0; i < spec.max_internal; ++i)
      if (slot(rng)) ++k;

    // Vertices: leaves 0..n-1, then internals by ascending rank, then root.
    std::vector<Vertex> vertices;
    for (int t = 0; t < n; ++t) vertices.push_back(Vertex{taxa.name(t), t});
    for (int i = 0; i < k; ++i)
      vertices.push_back(Vertex{"v" + std::to_string(i + 1), std::nullopt});
    VertexId root = static_cast<VertexId>(vertices.size());
    vertices.push_back(Vertex{"r", std::nullopt});

    std::set<std::pair<VertexId, VertexId>> arcset;
    // Each internal points at two distinct strictly lower-ranked vertices,
    // plus extras; leaves rank below every internal.
    for (int i = 0; i < k; ++i) {
      VertexId v = n + i;
      int pool = n + i;  // ids 0 .. n+i-1
      std::uniform_int_distribution<int> pick(0, pool - 1);
      VertexId c1 = pick(rng);
      VertexId c2 = pick(rng);
      while (c2 == c1) c2 = pick(rng);
      arcset.emplace(v, c1);
      arcset.emplace(v, c2);
      for (VertexId t = 0; t < static_cast<VertexId>(pool); ++t)
        if (t != c1 && t != c2 && extra(rng)) arcset.emplace(v, t);
    }
    // Root picks up everything still parentless, and at least two children
    // overall (a lone child would share the root's cluster).
    std::vector<int> indeg(vertices.size(), 0);
    for (const auto& [p, c] : arcset) ++indeg[static_cast<size_t>(c)];
    int root_out = 0;
    for (VertexId v = 0; v < root; ++v)
      if (indeg[static_cast<size_t>(v)] == 0) {
        arcset.emplace(root, v);
        ++root_out;
      }
    for (VertexId v = 0; v < root && root_out < 2; ++v)
      if (arcset.emplace(root, v).second) ++root_out;

    std::vector<Arc> arcs;
    arcs.reserve(arcset.size());
    for (const auto& [p, c] : arcset) arcs.push_back(Arc{p, c});
    Network net = Network::build(taxa, vertices, std::move(arcs));
    if (net.is_dc()) return net;
  }
  fail(Errc::GenerationExhausted, "no distinct-cluster network found in 10000 attempts");
}

std::vector<Network> enumerate_all_cps(const Network& net) {
  require_dc(net, "enumerate_all_cps");
  if (net.vertex_count() > 8)
    fail(Errc::TooLarge, "closure enumeration is capped at 8 vertices");

  auto key = [](const Network& x) { return serialize_network(x); };
  std::vector<Network> out;
  std::set<std::string> seen;
  std::deque<size_t> todo;
  out.push_back(net);
  seen.insert(key(net));
  todo.push_back(0);

  while (!todo.empty()) {
    // Copy: out may reallocate while we extend it.
    Network cur = out[todo.front()];
    todo.pop_front();
    std::vector<Network> nexts;
    for (VertexId v = 0; v < cur.vertex_count(); ++v)
      if (v != cur.root() && !cur.is_leaf(v))
        nexts.push_back(delete_vertex(cur, cur.cluster_of(v)));
    for (const Arc& a : redundant_arcs(cur))
      nexts.push_back(
          delete_redundant_arc(cur, cur.cluster_of(a.parent), cur.cluster_of(a.child)));
    for (Network& nx : nexts) {
      std::string k = key(nx);
      if (seen.insert(std::move(k)).second) {
        out.push_back(std::move(nx));
        todo.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

}  // namespace dcnet
