#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcnet/matrix.hpp"
#include "dcnet/network.hpp"

namespace dcnet {

// Sorted, duplicate-free list of clusters shared by a family of networks.
struct ClusterIndex {
  std::vector<Cluster> clusters;  // ascending by bit value

  int size() const { return static_cast<int>(clusters.size()); }
  std::optional<int> position(Cluster c) const;
};

ClusterIndex make_cluster_index(std::vector<Cluster> clusters);
ClusterIndex cluster_index(std::span<const Network* const> nets);

// Inheritance matrix re-indexed by cluster: rows and columns of clusters the
// network does not realize are zero (absent diagonal included).
struct EmbeddedMatrix {
  ClusterIndex index;
  std::vector<BigInt> entries;

  int size() const { return index.size(); }
  const BigInt& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(size()) +
                   static_cast<size_t>(j)];
  }
};

EmbeddedMatrix embed(const Network& net, const ClusterIndex& index);

// Entrywise L1 difference of the embedded matrices. The value does not
// depend on which common index is used, as long as it covers both networks.
BigInt inheritance_distance(const Network& a, const Network& b);
BigInt inheritance_distance_over(const Network& a, const Network& b,
                                 const ClusterIndex& index);

// Exact p-norm variant: the p-th root is left unevaluated.
struct Distance {
  BigInt radicand;
  int p = 1;

  bool operator==(const Distance&) const = default;
  double approx() const;
  std::string to_string() const;  // "13" for p=1, "15^(1/2)" for p=2
};

Distance p_norm_distance(const Network& a, const Network& b, int p);

// Root above one leaf per taxon; the single-vertex network when |X| = 1.
Network gen_trivial_tree(const TaxonSet& taxa);

// One vertex per nonempty subset of X, arcs the covers of the subset lattice
// (each arc drops exactly one taxon). Exponential size, so capped at n = 14.
Network gen_powerset_network(const TaxonSet& taxa);

// Closed form for the distance between the powerset network and the trivial
// tree on n taxa, n >= 2.
BigInt reference_distance_formula(int n);

}  // namespace dcnet
