#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcnet/cluster.hpp"
#include "dcnet/errors.hpp"

namespace dcnet {

using VertexId = int;

struct Vertex {
  std::string label;
  std::optional<int> taxon;  // position in the taxon set; set iff this is a leaf
};

struct Arc {
  VertexId parent = 0;
  VertexId child = 0;
  auto operator<=>(const Arc&) const = default;
};

// Rooted acyclic digraph whose leaves are in bijection with a taxon set.
// Immutable once built: validation, the topological order, the cluster
// assignment and the transitive closure are all computed in build().
class Network {
public:
  static Network build(TaxonSet taxa, std::vector<Vertex> vertices, std::vector<Arc> arcs);

  const TaxonSet& taxa() const { return taxa_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Vertex& vertex(VertexId v) const { return vertices_[static_cast<size_t>(v)]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const VertexId> children(VertexId v) const {
    return children_[static_cast<size_t>(v)];
  }
  std::span<const VertexId> parents(VertexId v) const {
    return parents_[static_cast<size_t>(v)];
  }
  int out_degree(VertexId v) const { return static_cast<int>(children(v).size()); }
  int in_degree(VertexId v) const { return static_cast<int>(parents(v).size()); }
  bool has_arc(VertexId u, VertexId v) const;

  VertexId root() const { return root_; }
  bool is_leaf(VertexId v) const { return vertex(v).taxon.has_value(); }
  bool is_hybrid(VertexId v) const { return in_degree(v) >= 2; }
  VertexId leaf_of(int taxon) const { return leaf_of_[static_cast<size_t>(taxon)]; }
  std::optional<VertexId> find_label(std::string_view label) const;

  Cluster cluster_of(VertexId v) const { return clusters_[static_cast<size_t>(v)]; }
  const std::vector<Cluster>& cluster_assignment() const { return clusters_; }
  // First vertex carrying the cluster, in id order. Unique on DC networks.
  std::optional<VertexId> vertex_with_cluster(Cluster c) const;

  bool is_dc() const { return dc_; }
  const std::optional<std::pair<VertexId, VertexId>>& dc_violation() const {
    return dc_pair_;
  }

  // True iff v lies on a directed path from u (u itself included).
  bool reaches(VertexId u, VertexId v) const {
    return (reach_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >>
            (v % 64)) & 1;
  }
  const std::vector<VertexId>& topo_order() const { return topo_; }

private:
  Network() = default;

  TaxonSet taxa_;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  VertexId root_ = 0;
  std::vector<VertexId> leaf_of_;
  std::vector<VertexId> topo_;
  std::vector<Cluster> clusters_;
  size_t words_ = 0;
  std::vector<uint64_t> reach_;  // vertex-major closure bitmap, reflexive
  bool dc_ = false;
  std::optional<std::pair<VertexId, VertexId>> dc_pair_;
};

// Parents-before-children order, ties broken by vertex id.
std::vector<VertexId> topological_order(const Network& net);

std::vector<Cluster> compute_clusters(const Network& net);

struct DcCheck {
  bool distinct = false;
  std::optional<std::pair<VertexId, VertexId>> offending;
};
DcCheck is_distinct_cluster(const Network& net);

bool reachable(const Network& net, VertexId u, VertexId v);

// Arcs (a,b) for which some other directed a-to-b path exists.
std::vector<Arc> redundant_arcs(const Network& net);

struct ClassFlags {
  bool is_tree = false;
  bool is_tree_child = false;
  bool is_normal = false;
  bool is_regular = false;
  bool is_dc = false;
};
ClassFlags classify(const Network& net);

// Equality of DC networks over the same taxa: clusters are identities, so
// two networks are equal iff their cluster sets and cluster-pair arc sets agree.
bool networks_equal(const Network& a, const Network& b);

void require_dc(const Network& net, const char* what);
void require_same_taxa(const Network& a, const Network& b);

}  // namespace dcnet
