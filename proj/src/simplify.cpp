#include "dcnet/simplify.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace dcnet {

std::string SimplificationStep::to_string(const TaxonSet& taxa) const {
  if (kind == Kind::DeleteVertex) return "delete-vertex " + vertex.to_string(taxa);
  return "delete-arc " + arc_tail.to_string(taxa) + " -> " + arc_head.to_string(taxa);
}

namespace {

VertexId resolve_cluster(const Network& net, Cluster c, const char* what) {
  auto v = net.vertex_with_cluster(c);
  if (!v)
    fail(Errc::NoSuchCluster,
         std::string(what) + ": no vertex has cluster " + c.to_string(net.taxa()));
  return *v;
}

Network rebuild_without_vertex(const Network& net, VertexId vid) {
  const int m = net.vertex_count();
  std::vector<Vertex> vertices;
  vertices.reserve(static_cast<size_t>(m) - 1);
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
  for (VertexId q : net.parents(vid))
    for (VertexId c : net.children(vid)) {
      Arc na{remap[static_cast<size_t>(q)], remap[static_cast<size_t>(c)]};
      if (have.emplace(na.parent, na.child).second) arcs.push_back(na);
    }
  return Network::build(net.taxa(), std::move(vertices), std::move(arcs));
}

bool arc_is_redundant(const Network& net, VertexId a, VertexId b) {
  for (VertexId c : net.children(a))
    if (c != b && net.reaches(c, b)) return true;
  return false;
}

}  // namespace

Network delete_vertex(const Network& net, Cluster v) {
  require_dc(net, "delete_vertex");
  VertexId vid = resolve_cluster(net, v, "delete_vertex");
  if (vid == net.root())
    fail(Errc::VertexIsRoot, "cannot delete the root " + v.to_string(net.taxa()));
  if (net.is_leaf(vid))
    fail(Errc::VertexIsLeaf, "cannot delete the leaf " + v.to_string(net.taxa()));
  Network out = rebuild_without_vertex(net, vid);
  assert(out.is_dc());
  return out;
}

Network delete_redundant_arc(const Network& net, Cluster a, Cluster b) {
  require_dc(net, "delete_redundant_arc");
  VertexId av = resolve_cluster(net, a, "delete_redundant_arc");
  VertexId bv = resolve_cluster(net, b, "delete_redundant_arc");
  if (!net.has_arc(av, bv))
    fail(Errc::NoSuchArc, "no arc " + a.to_string(net.taxa()) + " -> " + b.to_string(net.taxa()));
  if (!arc_is_redundant(net, av, bv))
    fail(Errc::ArcNotRedundant,
         "arc " + a.to_string(net.taxa()) + " -> " + b.to_string(net.taxa()) +
             " is the only path between its endpoints");
  std::vector<Arc> arcs;
  arcs.reserve(net.arcs().size() - 1);
  for (const Arc& e : net.arcs())
    if (!(e.parent == av && e.child == bv)) arcs.push_back(e);
  Network out = Network::build(net.taxa(), net.vertices(), std::move(arcs));
  assert(out.is_dc());
  return out;
}

Network transitive_reduction(const Network& net) {
  require_dc(net, "transitive_reduction");
  Network cur = net;
  for (;;) {
    std::vector<Arc> red = redundant_arcs(cur);
    if (red.empty()) return cur;
    auto key = [&](const Arc& e) {
      return std::make_pair(cur.cluster_of(e.parent), cur.cluster_of(e.child));
    };
    const Arc* pick = &red.front();
    for (const Arc& e : red)
      if (key(e) < key(*pick)) pick = &e;
    cur = delete_redundant_arc(cur, cur.cluster_of(pick->parent), cur.cluster_of(pick->child));
  }
}

Network apply_sequence(const Network& net, std::span<const SimplificationStep> steps) {
  Network cur = net;
  for (size_t i = 0; i < steps.size(); ++i) {
    const SimplificationStep& s = steps[i];
    try {
      cur = s.kind == SimplificationStep::Kind::DeleteVertex
                ? delete_vertex(cur, s.vertex)
                : delete_redundant_arc(cur, s.arc_tail, s.arc_head);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + ": " + e.what(),
                  static_cast<int>(i));
    }
  }
  return cur;
}

Network canonical_cps(const Network& net, std::span<const Cluster> keep) {
  require_dc(net, "canonical_cps");
  std::set<Cluster> keep_set(keep.begin(), keep.end());
  for (Cluster t : trivial_clusters(net.taxa()))
    if (!keep_set.count(t))
      fail(Errc::KeepMissingTrivial,
           "keep set must contain the root cluster and every singleton; missing " +
               t.to_string(net.taxa()));
  std::set<Cluster> present(net.cluster_assignment().begin(), net.cluster_assignment().end());
  for (Cluster c : keep_set)
    if (!present.count(c))
      fail(Errc::KeepNotSubsetOfVertices,
           "keep cluster " + c.to_string(net.taxa()) + " is not a cluster of the network");

  Network cur = transitive_reduction(net);
  std::vector<Cluster> doomed;
  for (Cluster c : present)
    if (!keep_set.count(c)) doomed.push_back(c);
  std::sort(doomed.begin(), doomed.end());
  for (Cluster c : doomed) cur = delete_vertex(cur, c);
  return transitive_reduction(cur);
}

CpsResult is_cps(const Network& base, const Network& candidate) {
  require_same_taxa(base, candidate);
  require_dc(base, "is_cps");
  require_dc(candidate, "is_cps");

  std::set<Cluster> base_clusters(base.cluster_assignment().begin(),
                                  base.cluster_assignment().end());
  for (VertexId v = 0; v < candidate.vertex_count(); ++v) {
    Cluster c = candidate.cluster_of(v);
    if (!base_clusters.count(c))
      return {false, CpsVerdict::MissingCluster, {},
              "candidate cluster " + c.to_string(base.taxa()) + " does not occur in the base"};
  }

  if (classify(base).is_tree && !classify(candidate).is_tree)
    return {false, CpsVerdict::TreeBaseNonTreeCandidate, {},
            "the base is a tree, and every simplification of a tree is a tree"};

  // Image of the base under the vertex deletions alone.
  std::set<Cluster> cand_clusters(candidate.cluster_assignment().begin(),
                                  candidate.cluster_assignment().end());
  std::vector<Cluster> doomed;
  for (Cluster c : base_clusters)
    if (!cand_clusters.count(c)) doomed.push_back(c);
  std::sort(doomed.begin(), doomed.end());
  Network image = base;
  for (Cluster c : doomed) image = delete_vertex(image, c);

  for (const Arc& e : candidate.arcs()) {
    Cluster ca = candidate.cluster_of(e.parent);
    Cluster cb = candidate.cluster_of(e.child);
    VertexId ia = *image.vertex_with_cluster(ca);
    VertexId ib = *image.vertex_with_cluster(cb);
    if (!image.has_arc(ia, ib))
      return {false, CpsVerdict::ArcNotDerivable, {},
              "candidate arc " + ca.to_string(base.taxa()) + " -> " +
                  cb.to_string(base.taxa()) + " cannot arise from the base"};
  }

  // Arc deletions must not lose reachability, so the candidate's order must
  // match the image's order exactly.
  for (VertexId u = 0; u < candidate.vertex_count(); ++u)
    for (VertexId v = 0; v < candidate.vertex_count(); ++v) {
      Cluster cu = candidate.cluster_of(u);
      Cluster cv = candidate.cluster_of(v);
      VertexId iu = *image.vertex_with_cluster(cu);
      VertexId iv = *image.vertex_with_cluster(cv);
      if (candidate.reaches(u, v) != image.reaches(iu, iv))
        return {false, CpsVerdict::OrderNotPreserved, {},
                "reachability from " + cu.to_string(base.taxa()) + " to " +
                    cv.to_string(base.taxa()) + " differs from the base's"};
    }

  CpsResult res;
  res.yes = true;
  res.verdict = CpsVerdict::Yes;
  for (Cluster c : doomed) res.certificate.steps.push_back(SimplificationStep::del_vertex(c));
  std::vector<std::pair<Cluster, Cluster>> extra;
  for (const Arc& e : image.arcs()) {
    Cluster ca = image.cluster_of(e.parent);
    Cluster cb = image.cluster_of(e.child);
    VertexId ua = *candidate.vertex_with_cluster(ca);
    VertexId ub = *candidate.vertex_with_cluster(cb);
    if (!candidate.has_arc(ua, ub)) extra.emplace_back(ca, cb);
  }
  std::sort(extra.begin(), extra.end());
  for (const auto& [ca, cb] : extra)
    res.certificate.steps.push_back(SimplificationStep::del_arc(ca, cb));
  return res;
}

namespace {

std::vector<VertexId> deletable_vertices(const Network& net) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (v != net.root() && !net.is_leaf(v)) out.push_back(v);
  return out;
}

}  // namespace

bool commutation_check(const Network& net, CommutationCase kase) {
  require_dc(net, "commutation_check");
  auto cl = [&](VertexId v) { return net.cluster_of(v); };
  std::vector<VertexId> dels = deletable_vertices(net);
  std::vector<Arc> reds = redundant_arcs(net);
  int instances = 0;
  bool all_ok = true;

  // A side that cannot even be evaluated counts as a violation.
  auto record = [&](auto&& compute) {
    ++instances;
    bool ok = false;
    try {
      ok = compute();
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) all_ok = false;
  };

  switch (kase) {
    case CommutationCase::VertexVertex:
      for (size_t i = 0; i < dels.size(); ++i)
        for (size_t j = i + 1; j < dels.size(); ++j) {
          VertexId v = dels[i], w = dels[j];
          record([&] {
            Network vw = delete_vertex(delete_vertex(net, cl(w)), cl(v));
            Network wv = delete_vertex(delete_vertex(net, cl(v)), cl(w));
            return networks_equal(vw, wv);
          });
        }
      break;

    case CommutationCase::VertexArcApart:
      for (const Arc& e : reds)
        for (VertexId v : dels) {
          if (v == e.parent || v == e.child) continue;
          if (net.has_arc(e.parent, v) && net.has_arc(v, e.child)) continue;
          record([&] {
            Network lhs =
                delete_vertex(delete_redundant_arc(net, cl(e.parent), cl(e.child)), cl(v));
            Network rhs =
                delete_redundant_arc(delete_vertex(net, cl(v)), cl(e.parent), cl(e.child));
            return networks_equal(lhs, rhs);
          });
        }
      break;

    case CommutationCase::VertexInsideArc:
      for (const Arc& e : reds)
        for (VertexId v : dels) {
          if (v == e.parent || v == e.child) continue;
          if (!(net.has_arc(e.parent, v) && net.has_arc(v, e.child))) continue;
          record([&] {
            Network lhs =
                delete_vertex(delete_redundant_arc(net, cl(e.parent), cl(e.child)), cl(v));
            Network rhs = delete_vertex(net, cl(v));
            return networks_equal(lhs, rhs);
          });
        }
      break;

    case CommutationCase::ArcTailDeleted:
      for (const Arc& e : reds) {
        VertexId a = e.parent;
        if (a == net.root()) continue;
        // The law re-adds (parent-of-a, head) as fresh arcs, so instances
        // where such an arc already exists are out of scope.
        bool preexisting = false;
        for (VertexId q : net.parents(a))
          if (net.has_arc(q, e.child)) preexisting = true;
        if (preexisting) continue;
        record([&] {
          Network lhs = delete_vertex(delete_redundant_arc(net, cl(a), cl(e.child)), cl(a));
          Network rhs = delete_vertex(net, cl(a));
          for (VertexId q : net.parents(a))
            rhs = delete_redundant_arc(rhs, cl(q), cl(e.child));
          return networks_equal(lhs, rhs);
        });
      }
      break;

    case CommutationCase::ArcHeadDeleted:
      for (const Arc& e : reds) {
        VertexId b = e.child;
        if (net.is_leaf(b)) continue;
        bool preexisting = false;
        for (VertexId c : net.children(b))
          if (net.has_arc(e.parent, c)) preexisting = true;
        if (preexisting) continue;
        record([&] {
          Network lhs = delete_vertex(delete_redundant_arc(net, cl(e.parent), cl(b)), cl(b));
          Network rhs = delete_vertex(net, cl(b));
          for (VertexId c : net.children(b))
            rhs = delete_redundant_arc(rhs, cl(e.parent), cl(c));
          return networks_equal(lhs, rhs);
        });
      }
      break;
  }

  if (instances == 0)
    fail(Errc::NoAdmissibleInstance, "network has no instance of the requested law");
  return all_ok;
}

}  // namespace dcnet
