#pragma once

#include <span>
#include <string>
#include <vector>

#include "dcnet/network.hpp"

namespace dcnet {

// One cluster-preserving step. Vertices and arcs are named by cluster, which
// is unambiguous on distinct-cluster networks.
struct SimplificationStep {
  enum class Kind { DeleteVertex, DeleteRedundantArc };
  Kind kind = Kind::DeleteVertex;
  Cluster vertex;             // DeleteVertex
  Cluster arc_tail, arc_head; // DeleteRedundantArc

  static SimplificationStep del_vertex(Cluster v) {
    return SimplificationStep{Kind::DeleteVertex, v, {}, {}};
  }
  static SimplificationStep del_arc(Cluster a, Cluster b) {
    return SimplificationStep{Kind::DeleteRedundantArc, {}, a, b};
  }
  std::string to_string(const TaxonSet& taxa) const;
};

// Remove a non-root, non-leaf vertex and connect each of its parents to each
// of its children (duplicates collapse). Clusters of the survivors and their
// reachability order are unchanged; the result is again distinct-cluster.
Network delete_vertex(const Network& net, Cluster v);

// Remove one redundant arc. Reachability is unchanged.
Network delete_redundant_arc(const Network& net, Cluster a, Cluster b);

// Delete redundant arcs until none remain. The result does not depend on
// deletion order; lexicographic cluster-pair order keeps runs reproducible.
Network transitive_reduction(const Network& net);

// Fold a step list; a failing step reports its 0-based index.
Network apply_sequence(const Network& net, std::span<const SimplificationStep> steps);

// The unique fully reduced simplification keeping exactly the given clusters:
// reduce, delete the complement of keep in ascending cluster order, reduce.
Network canonical_cps(const Network& net, std::span<const Cluster> keep);

struct CpsCertificate {
  std::vector<SimplificationStep> steps;
};

enum class CpsVerdict {
  Yes,
  MissingCluster,            // candidate has a cluster the base lacks
  TreeBaseNonTreeCandidate,  // simplifications of a tree are trees
  ArcNotDerivable,           // candidate arc absent from the vertex-deletion image
  OrderNotPreserved,         // reachability differs from the vertex-deletion image
};

struct CpsResult {
  bool yes = false;
  CpsVerdict verdict = CpsVerdict::Yes;
  CpsCertificate certificate;  // witness step sequence when yes
  std::string reason;          // human-readable rejection otherwise
};

// Decide whether candidate is reachable from base by cluster-preserving
// steps. Deleting the missing vertices first is order-independent, and any
// step sequence can be rearranged into that shape, so it suffices to compare
// the candidate against the pure vertex-deletion image.
CpsResult is_cps(const Network& base, const Network& candidate);

// The interchange laws for adjacent steps, named by the shape of the
// instance they cover.
enum class CommutationCase {
  VertexVertex,      // two vertex deletions commute
  VertexArcApart,    // vertex deletion vs arc deletion not passing through it
  VertexInsideArc,   // deleting v with arcs (a,v),(v,b) absorbs deleting (a,b)
  ArcTailDeleted,    // deleting (a,b) then a = deleting a, then each (parent-of-a, b)
  ArcHeadDeleted,    // deleting (a,b) then b = deleting b, then each (a, child-of-b)
};

// Evaluate both sides of the chosen law on every admissible instance in net;
// true iff all agree. Throws NoAdmissibleInstance when nothing matches.
bool commutation_check(const Network& net, CommutationCase kase);

}  // namespace dcnet
