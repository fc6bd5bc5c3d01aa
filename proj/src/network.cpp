#include "dcnet/network.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace dcnet {

Network Network::build(TaxonSet taxa, std::vector<Vertex> vertices, std::vector<Arc> arcs) {
  Network net;
  net.taxa_ = std::move(taxa);
  net.vertices_ = std::move(vertices);
  net.arcs_ = std::move(arcs);

  const int m = net.vertex_count();
  const int n = net.taxa_.size();
  if (m == 0) fail(Errc::NoRoot, "network has no vertices");

  // Taxon assignments must hit every taxon exactly once.
  net.leaf_of_.assign(static_cast<size_t>(n), -1);
  for (VertexId v = 0; v < m; ++v) {
    const auto& vert = net.vertices_[static_cast<size_t>(v)];
    if (!vert.taxon) continue;
    int t = *vert.taxon;
    if (t < 0 || t >= n) fail(Errc::MissingTaxon, "taxon index out of range");
    if (net.leaf_of_[static_cast<size_t>(t)] != -1)
      fail(Errc::DuplicateTaxon, "taxon '" + net.taxa_.name(t) + "' appears on two vertices");
    net.leaf_of_[static_cast<size_t>(t)] = v;
  }
  for (int t = 0; t < n; ++t)
    if (net.leaf_of_[static_cast<size_t>(t)] == -1)
      fail(Errc::MissingTaxon, "taxon '" + net.taxa_.name(t) + "' has no vertex");

  net.children_.assign(static_cast<size_t>(m), {});
  net.parents_.assign(static_cast<size_t>(m), {});
  {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Arc& a : net.arcs_) {
      if (a.parent < 0 || a.parent >= m || a.child < 0 || a.child >= m)
        fail(Errc::SyntaxError, "arc endpoint out of range");
      if (a.parent == a.child)
        fail(Errc::CycleDetected,
             "self-loop at '" + net.vertex(a.parent).label + "'");
      if (!seen.emplace(a.parent, a.child).second)
        fail(Errc::DuplicateArc, "duplicate arc " + net.vertex(a.parent).label + " -> " +
                                     net.vertex(a.child).label);
      net.children_[static_cast<size_t>(a.parent)].push_back(a.child);
      net.parents_[static_cast<size_t>(a.child)].push_back(a.parent);
    }
  }
  for (auto& c : net.children_) std::sort(c.begin(), c.end());
  for (auto& p : net.parents_) std::sort(p.begin(), p.end());

  // Kahn's algorithm; a min-heap keeps the order deterministic.
  {
    std::vector<int> indeg(static_cast<size_t>(m));
    for (VertexId v = 0; v < m; ++v) indeg[static_cast<size_t>(v)] = net.in_degree(v);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    int sources = 0;
    for (VertexId v = 0; v < m; ++v)
      if (indeg[static_cast<size_t>(v)] == 0) {
        ready.push(v);
        ++sources;
        net.root_ = v;
      }
    net.topo_.reserve(static_cast<size_t>(m));
    while (!ready.empty()) {
      VertexId v = ready.top();
      ready.pop();
      net.topo_.push_back(v);
      for (VertexId c : net.children(v))
        if (--indeg[static_cast<size_t>(c)] == 0) ready.push(c);
    }
    if (static_cast<int>(net.topo_.size()) != m)
      fail(Errc::CycleDetected, "arc set contains a directed cycle");
    if (sources == 0) fail(Errc::NoRoot, "no vertex of in-degree 0");
    if (sources > 1) fail(Errc::MultipleRoots, "more than one vertex of in-degree 0");
  }

  // Leaves are exactly the taxon-labeled vertices.
  for (VertexId v = 0; v < m; ++v) {
    bool leaf = net.out_degree(v) == 0;
    bool labeled = net.vertices_[static_cast<size_t>(v)].taxon.has_value();
    if (leaf && !labeled)
      fail(Errc::UnlabeledLeaf, "vertex '" + net.vertex(v).label + "' has no children and no taxon");
    if (!leaf && labeled)
      fail(Errc::TaxonNotALeaf, "taxon '" + net.vertex(v).label + "' has children");
  }

  // Clusters by a reverse topological sweep.
  net.clusters_.assign(static_cast<size_t>(m), Cluster{});
  for (auto it = net.topo_.rbegin(); it != net.topo_.rend(); ++it) {
    VertexId v = *it;
    Cluster c;
    if (auto t = net.vertices_[static_cast<size_t>(v)].taxon)
      c = Cluster::singleton(*t);
    for (VertexId ch : net.children(v)) c = c | net.clusters_[static_cast<size_t>(ch)];
    net.clusters_[static_cast<size_t>(v)] = c;
  }

  // Reflexive transitive closure as bit rows, same sweep.
  net.words_ = (static_cast<size_t>(m) + 63) / 64;
  net.reach_.assign(static_cast<size_t>(m) * net.words_, 0);
  for (auto it = net.topo_.rbegin(); it != net.topo_.rend(); ++it) {
    VertexId v = *it;
    uint64_t* row = net.reach_.data() + static_cast<size_t>(v) * net.words_;
    row[static_cast<size_t>(v) / 64] |= uint64_t{1} << (v % 64);
    for (VertexId ch : net.children(v)) {
      const uint64_t* crow = net.reach_.data() + static_cast<size_t>(ch) * net.words_;
      for (size_t w = 0; w < net.words_; ++w) row[w] |= crow[w];
    }
  }

  // Distinct-cluster flag plus one offending pair for diagnostics.
  {
    std::vector<VertexId> by_cluster(net.topo_);
    std::sort(by_cluster.begin(), by_cluster.end(), [&](VertexId a, VertexId b) {
      Cluster ca = net.cluster_of(a), cb = net.cluster_of(b);
      return ca != cb ? ca < cb : a < b;
    });
    net.dc_ = true;
    for (size_t i = 1; i < by_cluster.size(); ++i) {
      if (net.cluster_of(by_cluster[i - 1]) == net.cluster_of(by_cluster[i])) {
        net.dc_ = false;
        net.dc_pair_ = {by_cluster[i - 1], by_cluster[i]};
        break;
      }
    }
  }

  return net;
}

bool Network::has_arc(VertexId u, VertexId v) const {
  auto ch = children(u);
  return std::binary_search(ch.begin(), ch.end(), v);
}

std::optional<VertexId> Network::find_label(std::string_view label) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (vertices_[static_cast<size_t>(v)].label == label) return v;
  return std::nullopt;
}

std::optional<VertexId> Network::vertex_with_cluster(Cluster c) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (clusters_[static_cast<size_t>(v)] == c) return v;
  return std::nullopt;
}

std::vector<VertexId> topological_order(const Network& net) { return net.topo_order(); }

std::vector<Cluster> compute_clusters(const Network& net) { return net.cluster_assignment(); }

DcCheck is_distinct_cluster(const Network& net) {
  return DcCheck{net.is_dc(), net.dc_violation()};
}

bool reachable(const Network& net, VertexId u, VertexId v) { return net.reaches(u, v); }

std::vector<Arc> redundant_arcs(const Network& net) {
  std::vector<Arc> out;
  for (const Arc& a : net.arcs()) {
    for (VertexId c : net.children(a.parent)) {
      if (c != a.child && net.reaches(c, a.child)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

ClassFlags classify(const Network& net) {
  ClassFlags f;
  f.is_dc = net.is_dc();

  f.is_tree = true;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.in_degree(v) >= 2) {
      f.is_tree = false;
      break;
    }

  // Tree-child: every non-leaf has a child that is its only parent's child,
  // i.e. a child of in-degree 1.
  f.is_tree_child = true;
  for (VertexId v = 0; v < net.vertex_count() && f.is_tree_child; ++v) {
    if (net.is_leaf(v)) continue;
    bool ok = false;
    for (VertexId c : net.children(v))
      if (net.in_degree(c) == 1) {
        ok = true;
        break;
      }
    if (!ok) f.is_tree_child = false;
  }

  bool has_out1 = false;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.out_degree(v) == 1) {
      has_out1 = true;
      break;
    }
  f.is_normal = f.is_tree_child && !has_out1 && redundant_arcs(net).empty();

  // Regular: DC and the arcs are exactly the covers of cluster containment.
  f.is_regular = f.is_dc;
  if (f.is_regular) {
    const int m = net.vertex_count();
    for (VertexId u = 0; u < m && f.is_regular; ++u) {
      Cluster cu = net.cluster_of(u);
      for (VertexId v = 0; v < m && f.is_regular; ++v) {
        if (u == v) continue;
        Cluster cv = net.cluster_of(v);
        if (!cv.strict_subset_of(cu)) {
          if (net.has_arc(u, v)) f.is_regular = false;
          continue;
        }
        bool cover = true;
        for (VertexId w = 0; w < m; ++w) {
          Cluster cw = net.cluster_of(w);
          if (cv.strict_subset_of(cw) && cw.strict_subset_of(cu)) {
            cover = false;
            break;
          }
        }
        if (cover != net.has_arc(u, v)) f.is_regular = false;
      }
    }
  }
  return f;
}

bool networks_equal(const Network& a, const Network& b) {
  require_same_taxa(a, b);
  require_dc(a, "networks_equal");
  require_dc(b, "networks_equal");
  auto key = [](const Network& net) {
    std::vector<Cluster> cs = net.cluster_assignment();
    std::sort(cs.begin(), cs.end());
    std::vector<std::pair<Cluster, Cluster>> as;
    as.reserve(net.arcs().size());
    for (const Arc& e : net.arcs())
      as.emplace_back(net.cluster_of(e.parent), net.cluster_of(e.child));
    std::sort(as.begin(), as.end());
    return std::make_pair(std::move(cs), std::move(as));
  };
  return key(a) == key(b);
}

void require_dc(const Network& net, const char* what) {
  if (net.is_dc()) return;
  auto pair = net.dc_violation();
  std::string msg = std::string(what) + " requires a distinct-cluster network";
  if (pair)
    msg += ": '" + net.vertex(pair->first).label + "' and '" +
           net.vertex(pair->second).label + "' share cluster " +
           net.cluster_of(pair->first).to_string(net.taxa());
  fail(Errc::NotDistinctCluster, std::move(msg));
}

void require_same_taxa(const Network& a, const Network& b) {
  if (!(a.taxa() == b.taxa()))
    fail(Errc::TaxonSetMismatch, "networks are over different taxon sets");
}

}  // namespace dcnet
