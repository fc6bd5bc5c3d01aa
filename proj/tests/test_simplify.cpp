#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dcnet/metric.hpp"
#include "dcnet/oracle.hpp"
#include "dcnet/simplify.hpp"
#include "helpers.hpp"

using namespace dcnet;
using namespace dcnet::testing;

namespace {

// canonical_cps with the trivial clusters added, keyed by the nontrivial part.
Network cps(const Network& n, std::vector<Cluster> w) {
  std::vector<Cluster> keep = trivial_clusters(n.taxa());
  keep.insert(keep.end(), w.begin(), w.end());
  return canonical_cps(n, keep);
}

std::set<Cluster> cluster_set(const Network& n) {
  return {n.cluster_assignment().begin(), n.cluster_assignment().end()};
}

std::vector<std::pair<std::string, std::string>> arc_labels(const Network& n) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Arc& a : n.arcs())
    out.emplace_back(n.vertex(a.parent).label, n.vertex(a.child).label);
  std::sort(out.begin(), out.end());
  return out;
}

// All clusters deletable right now: internal, non-root vertices.
std::vector<Cluster> deletable(const Network& n) {
  std::vector<Cluster> out;
  for (VertexId v = 0; v < n.vertex_count(); ++v)
    if (v != n.root() && !n.is_leaf(v)) out.push_back(n.cluster_of(v));
  return out;
}

}  // namespace

TEST_CASE("vertex deletion passes arcs through") {
  Network n = load("running.dcn");
  Network d6 = delete_vertex(n, c({2, 3}));
  CHECK(d6.vertex_count() == 8);
  CHECK(serialize_network(d6) ==
        "taxa 1 2 3 4\n"
        "arc 5 1\narc 5 2\narc 7 3\narc 7 4\n"
        "arc 8 2\narc 8 3\narc 8 5\narc 9 3\narc 9 7\narc 9 8\n");
  CHECK(d6.is_dc());
  CHECK(cluster_set(d6) == std::set<Cluster>{c({1}), c({2}), c({3}), c({4}), c({1, 2}),
                                             c({3, 4}), c({1, 2, 3}), c({1, 2, 3, 4})});

  CHECK(fails_with([&] { return delete_vertex(n, c({1, 4})); }) == Errc::NoSuchCluster);
  CHECK(fails_with([&] { return delete_vertex(n, c({1, 2, 3, 4})); }) ==
        Errc::VertexIsRoot);
  CHECK(fails_with([&] { return delete_vertex(n, c({3})); }) == Errc::VertexIsLeaf);

  Network bad = parse_network("taxa 1 2\narc r a\narc a 1\narc a 2\n");
  CHECK(fails_with([&] { return delete_vertex(bad, c({1, 2})); }) ==
        Errc::NotDistinctCluster);
}

TEST_CASE("vertex deletion collapses duplicate arcs") {
  // Deleting 7 sends (9,7)(7,3) onto the existing arc (9,3).
  Network n = load("running.dcn");
  Network d7 = delete_vertex(n, c({3, 4}));
  CHECK(d7.arc_count() == 9);  // loses three arcs at 7, gains only (9,4)
  auto arcs = arc_labels(d7);
  CHECK(std::count(arcs.begin(), arcs.end(), std::pair<std::string, std::string>{
                                                 "9", "3"}) == 1);
  CHECK(std::count(arcs.begin(), arcs.end(), std::pair<std::string, std::string>{
                                                 "9", "4"}) == 1);
}

TEST_CASE("redundant arc deletion") {
  Network n = load("running.dcn");
  Network r = delete_redundant_arc(n, c({1, 2, 3, 4}), c({3}));
  CHECK(r.arc_count() == 10);
  CHECK(redundant_arcs(r).empty());

  CHECK(fails_with([&] { return delete_redundant_arc(n, c({1, 2}), c({3})); }) ==
        Errc::NoSuchArc);
  CHECK(fails_with([&] { return delete_redundant_arc(n, c({1, 2, 3}), c({1, 2})); }) ==
        Errc::ArcNotRedundant);
}

TEST_CASE("transitive reduction removes exactly the redundant arcs") {
  Network n1 = transitive_reduction(load("running.dcn"));
  CHECK(serialize_network(n1) ==
        "taxa 1 2 3 4\n"
        "arc 5 1\narc 5 2\narc 6 2\narc 6 3\narc 7 3\narc 7 4\n"
        "arc 8 5\narc 8 6\narc 9 7\narc 9 8\n");
  CHECK(networks_equal(transitive_reduction(n1), n1));  // idempotent

  Network t1 = load("t1.dcn");
  CHECK(networks_equal(transitive_reduction(t1), t1));

  // Deleting vertex 6 of the taller example leaves three redundant arcs at once.
  Network d6 = delete_vertex(load("reducible.dcn"), c({2, 3}));
  auto red = redundant_arcs(d6);
  std::vector<std::pair<std::string, std::string>> labels;
  for (const Arc& a : red)
    labels.emplace_back(d6.vertex(a.parent).label, d6.vertex(a.child).label);
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::pair<std::string, std::string>>{
                      {"10", "4"}, {"8", "2"}, {"9", "3"}});
  CHECK(redundant_arcs(transitive_reduction(d6)).empty());
}

TEST_CASE("step sequences fold and report the failing step") {
  Network n = load("running.dcn");
  std::vector<SimplificationStep> walk = {
      SimplificationStep::del_arc(c({1, 2, 3, 4}), c({3})),
      SimplificationStep::del_vertex(c({2, 3})),
      SimplificationStep::del_arc(c({1, 2, 3}), c({2})),
      SimplificationStep::del_vertex(c({3, 4})),
      SimplificationStep::del_arc(c({1, 2, 3, 4}), c({3})),
  };
  Network out = apply_sequence(n, walk);
  CHECK(serialize_network(out) == slurp(data_path("t1.dcn")).substr(
                                      slurp(data_path("t1.dcn")).find("taxa")));
  CHECK(networks_equal(out, load("t1.dcn")));

  std::vector<SimplificationStep> broken = {
      SimplificationStep::del_arc(c({1, 2, 3, 4}), c({3})),
      SimplificationStep::del_arc(c({1, 2, 3, 4}), c({3})),
  };
  try {
    apply_sequence(n, broken);
    FAIL("expected the second deletion to fail");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSuchArc);
    CHECK(e.detail() == 1);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("step rendering") {
  TaxonSet t = TaxonSet::numbered(4);
  CHECK(SimplificationStep::del_vertex(c({2, 3})).to_string(t) == "delete-vertex {2,3}");
  CHECK(SimplificationStep::del_arc(c({1, 2, 3, 4}), c({3})).to_string(t) ==
        "delete-arc {1,2,3,4} -> {3}");
}

TEST_CASE("canonical simplification hits the expected networks") {
  Network n = load("running.dcn");

  Network all = cps(n, {c({1, 2}), c({2, 3}), c({3, 4}), c({1, 2, 3})});
  CHECK(networks_equal(all, transitive_reduction(n)));

  Network none = cps(n, {});
  CHECK(none.vertex_count() == 5);
  CHECK(networks_equal(none, gen_trivial_tree(n.taxa())));

  Network n58 = cps(n, {c({1, 2}), c({1, 2, 3})});
  CHECK(networks_equal(n58, load("t1.dcn")));
  CHECK(serialize_network(n58) ==
        "taxa 1 2 3 4\narc 5 1\narc 5 2\narc 8 3\narc 8 5\narc 9 4\narc 9 8\n");

  CHECK(inheritance_distance(n, cps(n, {c({2, 3}), c({1, 2, 3})})) == 13);
  CHECK(inheritance_distance(n, cps(n, {c({1, 2}), c({3, 4})})) == 15);

  CHECK(fails_with([&] {
          std::vector<Cluster> keep = {c({1, 2})};
          return canonical_cps(n, keep);
        }) == Errc::KeepMissingTrivial);
  CHECK(fails_with([&] { return cps(n, {c({1, 4})}); }) ==
        Errc::KeepNotSubsetOfVertices);
}

TEST_CASE("canonical simplification is deletion order independent") {
  std::mt19937_64 rng(7);
  for (const char* name : {"running.dcn", "reducible.dcn", "overlap.dcn"}) {
    Network n = load(name);
    std::vector<Cluster> nontrivial;
    for (VertexId v = 0; v < n.vertex_count(); ++v)
      if (v != n.root() && !n.is_leaf(v)) nontrivial.push_back(n.cluster_of(v));

    // Every keep subset, every time a few shuffled deletion orders.
    for (uint64_t mask = 0; mask < (uint64_t{1} << nontrivial.size()); ++mask) {
      std::vector<Cluster> keep, doomed;
      for (size_t i = 0; i < nontrivial.size(); ++i)
        ((mask >> i) & 1 ? keep : doomed).push_back(nontrivial[i]);
      Network canon = cps(n, keep);
      for (int round = 0; round < 3; ++round) {
        std::shuffle(doomed.begin(), doomed.end(), rng);
        Network cur = n;
        for (Cluster d : doomed) cur = delete_vertex(cur, d);
        CHECK(networks_equal(transitive_reduction(cur), canon));
      }
    }
  }
}

TEST_CASE("simplification check accepts with a replayable certificate") {
  Network n = load("running.dcn");
  for (const char* name : {"t1.dcn", "running.dcn"}) {
    CpsResult r = is_cps(n, load(name));
    REQUIRE(r.yes);
    CHECK(networks_equal(apply_sequence(n, r.certificate.steps), load(name)));
  }

  CpsResult reduced = is_cps(n, transitive_reduction(n));
  REQUIRE(reduced.yes);
  REQUIRE(reduced.certificate.steps.size() == 1);
  CHECK(reduced.certificate.steps[0].to_string(n.taxa()) ==
        "delete-arc {1,2,3,4} -> {3}");

  // Every canonical simplification is accepted and certificates replay.
  std::vector<Cluster> nontrivial = {c({1, 2}), c({2, 3}), c({3, 4}), c({1, 2, 3})};
  for (uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<Cluster> keep;
    for (size_t i = 0; i < 4; ++i)
      if ((mask >> i) & 1) keep.push_back(nontrivial[i]);
    Network cand = cps(n, keep);
    CpsResult r = is_cps(n, cand);
    REQUIRE(r.yes);
    CHECK(networks_equal(apply_sequence(n, r.certificate.steps), cand));
  }
}

TEST_CASE("simplification check rejections carry the right verdicts") {
  CpsResult missing = is_cps(load("overlap.dcn"), load("cherries.dcn"));
  CHECK(!missing.yes);
  CHECK(missing.verdict == CpsVerdict::MissingCluster);
  CHECK(missing.reason.find("{1,2}") != std::string::npos);

  CpsResult nontree = is_cps(load("caterpillar.dcn"), load("double_parent.dcn"));
  CHECK(!nontree.yes);
  CHECK(nontree.verdict == CpsVerdict::TreeBaseNonTreeCandidate);

  // The base is reduced, the candidate still carries the redundant arc: no
  // simplification step ever adds an arc.
  CpsResult extra = is_cps(transitive_reduction(load("running.dcn")), load("running.dcn"));
  CHECK(!extra.yes);
  CHECK(extra.verdict == CpsVerdict::ArcNotDerivable);

  // Same clusters, a subset of the arcs, but one deleted arc was essential:
  // the candidate no longer reaches v from u.
  Network m = parse_network(
      "taxa 1 2 3 4\n"
      "arc r u\narc r p\narc p v\narc p 4\n"
      "arc u v\narc u 1\narc u 2\narc u 3\narc v 1\narc v 2\n");
  Network cand = parse_network(
      "taxa 1 2 3 4\n"
      "arc r u\narc r p\narc p v\narc p 4\n"
      "arc u 1\narc u 2\narc u 3\narc v 1\narc v 2\n");
  CHECK(m.is_dc());
  CHECK(cand.is_dc());
  CpsResult order = is_cps(m, cand);
  CHECK(!order.yes);
  CHECK(order.verdict == CpsVerdict::OrderNotPreserved);

  CHECK(fails_with([&] {
          return is_cps(m, parse_network("taxa 1 2\narc r 1\narc r 2\n"));
        }) == Errc::TaxonSetMismatch);
}

TEST_CASE("membership is monotone in the kept clusters") {
  Network n = load("running.dcn");
  Cluster k5 = c({1, 2}), k6 = c({2, 3}), k7 = c({3, 4}), k8 = c({1, 2, 3});

  CHECK(is_cps(cps(n, {k6, k7}), cps(n, {k6})).yes);
  CHECK(!is_cps(cps(n, {k5, k7, k8}), cps(n, {k6})).yes);

  std::vector<Cluster> all = {k5, k6, k7, k8};
  for (uint64_t w = 0; w < 16; ++w) {
    for (uint64_t w2 = 0; w2 < 16; ++w2) {
      std::vector<Cluster> keep1, keep2;
      for (size_t i = 0; i < 4; ++i) {
        if ((w >> i) & 1) keep1.push_back(all[i]);
        if ((w2 >> i) & 1) keep2.push_back(all[i]);
      }
      bool subset = (w2 & w) == w2;
      CHECK(is_cps(cps(n, keep1), cps(n, keep2)).yes == subset);
    }
  }
}

TEST_CASE("clusters and order survive every valid step") {
  std::mt19937_64 rng(42);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Network cur = gen_random_dc({4, 4, 0.5, 5000 + seed});
    for (int step = 0; step < 6; ++step) {
      std::vector<Cluster> vs = deletable(cur);
      std::vector<Arc> red = redundant_arcs(cur);
      size_t options = vs.size() + red.size();
      if (options == 0) break;
      size_t pick = rng() % options;

      Network before = cur;
      Cluster gone;
      if (pick < vs.size()) {
        gone = vs[pick];
        cur = delete_vertex(cur, gone);
        std::set<Cluster> want = cluster_set(before);
        want.erase(gone);
        CHECK(cluster_set(cur) == want);
      } else {
        const Arc& a = red[pick - vs.size()];
        cur = delete_redundant_arc(cur, before.cluster_of(a.parent),
                                   before.cluster_of(a.child));
        CHECK(cluster_set(cur) == cluster_set(before));
      }

      // Reachability between surviving clusters is untouched.
      for (VertexId u = 0; u < cur.vertex_count(); ++u) {
        for (VertexId v = 0; v < cur.vertex_count(); ++v) {
          VertexId bu = *before.vertex_with_cluster(cur.cluster_of(u));
          VertexId bv = *before.vertex_with_cluster(cur.cluster_of(v));
          CHECK(cur.reaches(u, v) == before.reaches(bu, bv));
        }
      }
    }
  }
}

TEST_CASE("simplifications of trees are trees") {
  std::mt19937_64 rng(43);
  int steps_taken = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Network cur = random_tree(4 + static_cast<int>(seed % 3), rng);
    REQUIRE(classify(cur).is_tree);
    for (int step = 0; step < 5; ++step) {
      std::vector<Cluster> vs = deletable(cur);
      if (vs.empty()) break;
      cur = delete_vertex(cur, vs[rng() % vs.size()]);
      ++steps_taken;
      CHECK(classify(cur).is_tree);
      CHECK(redundant_arcs(cur).empty());  // trees never grow redundant arcs
    }
  }
  CHECK(steps_taken > 50);  // the walk must actually exercise deletions
}

TEST_CASE("interchange laws hold on the fixtures") {
  // The running example's redundant arc goes root-to-leaf, so only the laws that keep
  // both endpoints alive have instances there.
  Network n = load("running.dcn");
  CHECK(commutation_check(n, CommutationCase::VertexVertex));
  CHECK(commutation_check(n, CommutationCase::VertexArcApart));
  CHECK(commutation_check(n, CommutationCase::VertexInsideArc));
  CHECK(fails_with([&] {
          return commutation_check(n, CommutationCase::ArcTailDeleted);
        }) == Errc::NoAdmissibleInstance);
  CHECK(fails_with([&] {
          return commutation_check(n, CommutationCase::ArcHeadDeleted);
        }) == Errc::NoAdmissibleInstance);

  // Redundant arc between two internal vertices: both endpoint deletions
  // become admissible.
  Network ladder = parse_network(
      "taxa 1 2 3 4 5\n"
      "arc r a\narc r 5\narc a b\narc a c\narc a 4\n"
      "arc c b\narc c 3\narc b 1\narc b 2\n");
  CHECK(commutation_check(ladder, CommutationCase::VertexVertex));
  CHECK(commutation_check(ladder, CommutationCase::VertexInsideArc));
  CHECK(commutation_check(ladder, CommutationCase::ArcTailDeleted));
  CHECK(commutation_check(ladder, CommutationCase::ArcHeadDeleted));

  // A tree without redundant arcs admits no arc-deletion instances at all.
  Network t1 = load("t1.dcn");
  CHECK(commutation_check(t1, CommutationCase::VertexVertex));
  CHECK(fails_with([&] {
          return commutation_check(t1, CommutationCase::VertexInsideArc);
        }) == Errc::NoAdmissibleInstance);
  CHECK(fails_with([&] {
          return commutation_check(t1, CommutationCase::ArcTailDeleted);
        }) == Errc::NoAdmissibleInstance);
}

TEST_CASE("interchange laws hold on random networks") {
  int instances = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Network n = gen_random_dc({4, 4, 0.5, 7000 + seed});
    for (CommutationCase kase :
         {CommutationCase::VertexVertex, CommutationCase::VertexArcApart,
          CommutationCase::VertexInsideArc, CommutationCase::ArcTailDeleted,
          CommutationCase::ArcHeadDeleted}) {
      try {
        bool ok = commutation_check(n, kase);
        CHECK(ok);
        ++instances;
      } catch (const Error& e) {
        CHECK(e.code() == Errc::NoAdmissibleInstance);
      }
    }
  }
  CHECK(instances > 10);  // the generator reliably produces admissible shapes
}
