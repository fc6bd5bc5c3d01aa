#include <doctest.h>

#include <string>
#include <vector>

#include "dcnet/search.hpp"
#include "helpers.hpp"

using namespace dcnet;
using namespace dcnet::testing;

namespace {

const Cluster k5 = c({1, 2});
const Cluster k6 = c({2, 3});
const Cluster k7 = c({3, 4});
const Cluster k8 = c({1, 2, 3});

Network caterpillar(int taxa) {
  std::string text = "taxa";
  for (int i = 1; i <= taxa; ++i) text += " " + std::to_string(i);
  text += "\narc v1 1\narc v1 2\n";
  for (int k = 2; k < taxa; ++k) {
    text += "arc v" + std::to_string(k) + " v" + std::to_string(k - 1) + "\n";
    text += "arc v" + std::to_string(k) + " " + std::to_string(k + 1) + "\n";
  }
  return parse_network(text);
}

}  // namespace

TEST_CASE("label ordering is digit aware") {
  CHECK(natural_less("2", "10"));
  CHECK(!natural_less("10", "2"));
  CHECK(natural_less("a2", "a10"));
  CHECK(natural_less("a", "b"));
  CHECK(natural_less("a1", "a1b"));
  CHECK(!natural_less("a1b", "a1"));
  CHECK(!natural_less("7", "7"));
  CHECK(natural_less("v07", "v8"));
  CHECK(natural_less("v7", "v07x"));
}

TEST_CASE("candidate enumeration follows size then position") {
  Network n = load("running.dcn");
  std::vector<std::vector<Cluster>> seen;
  enumerate_cps_candidates(n, 2, [&](const std::vector<Cluster>& w, const Network& cand) {
    seen.push_back(w);
    CHECK(cand.is_dc());
  });
  std::vector<std::vector<Cluster>> expect = {
      {},       {k5},     {k6},     {k7},     {k8},     {k5, k6},
      {k5, k7}, {k5, k8}, {k6, k7}, {k6, k8}, {k7, k8},
  };
  CHECK(seen == expect);

  int total = 0;
  enumerate_cps_candidates(n, std::nullopt,
                           [&](const std::vector<Cluster>&, const Network&) { ++total; });
  CHECK(total == 16);
}

TEST_CASE("best fitting tree reproduces the survey table") {
  Network n = load("running.dcn");
  SearchReport r = best_fitting_cps_tree(n);
  REQUIRE(r.rows.size() == 11);

  const struct {
    std::vector<Cluster> keep;
    int distance;
    bool tree;
  } expect[11] = {
      {{}, 23, true},          {{k5}, 19, true},        {{k6}, 19, true},
      {{k7}, 19, true},        {{k8}, 18, true},        {{k5, k6}, 14, false},
      {{k5, k7}, 15, true},    {{k5, k8}, 13, true},    {{k6, k7}, 14, false},
      {{k6, k8}, 13, true},    {{k7, k8}, 13, false},
  };
  for (size_t i = 0; i < 11; ++i) {
    CHECK(r.rows[i].keep == expect[i].keep);
    CHECK(r.rows[i].distance == expect[i].distance);
    CHECK(r.rows[i].is_tree == expect[i].tree);
    CHECK(r.rows[i].eligible == expect[i].tree);
  }

  CHECK(r.min_distance == 13);
  REQUIRE(r.minimizer_keeps.size() == 2);
  CHECK(r.minimizer_keeps[0] == std::vector<Cluster>{k5, k8});
  CHECK(r.minimizer_keeps[1] == std::vector<Cluster>{k6, k8});
  REQUIRE(r.minimizers.size() == 2);
  CHECK(networks_equal(r.minimizers[0], load("t1.dcn")));
  for (const Network& m : r.minimizers) CHECK(classify(m).is_tree);
}

TEST_CASE("unrestricted search finds the reduction") {
  Network n = load("running.dcn");
  SearchReport r = best_fitting_in_class(n, NetworkClass::Any);
  CHECK(r.rows.size() == 16);
  CHECK(r.min_distance == 1);
  REQUIRE(r.minimizer_keeps.size() == 1);
  CHECK(r.minimizer_keeps[0] == std::vector<Cluster>{k5, k6, k7, k8});
  CHECK(networks_equal(r.minimizers[0], transitive_reduction(n)));
  for (const SearchRow& row : r.rows) CHECK(row.eligible);
}

TEST_CASE("class filters agree with direct classification") {
  Network n = load("running.dcn");
  for (NetworkClass cls : {NetworkClass::TreeChild, NetworkClass::Normal}) {
    SearchReport r = best_fitting_in_class(n, cls);
    REQUIRE(r.rows.size() == 16);
    BigInt best = -1;
    for (const SearchRow& row : r.rows) {
      std::vector<Cluster> keep = trivial_clusters(n.taxa());
      keep.insert(keep.end(), row.keep.begin(), row.keep.end());
      Network cand = canonical_cps(n, keep);
      ClassFlags f = classify(cand);
      bool want = cls == NetworkClass::TreeChild ? f.is_tree_child : f.is_normal;
      CHECK(row.eligible == want);
      CHECK(row.distance == inheritance_distance(n, cand));
      if (row.eligible && (best < 0 || row.distance < best)) best = row.distance;
    }
    CHECK(r.min_distance == best);
    for (size_t i = 0; i < r.minimizer_keeps.size(); ++i) {
      ClassFlags f = classify(r.minimizers[i]);
      CHECK((cls == NetworkClass::TreeChild ? f.is_tree_child : f.is_normal));
      CHECK(inheritance_distance(n, r.minimizers[i]) == best);
    }
    CHECK(!r.minimizers.empty());
  }
}

TEST_CASE("subset size cap narrows the pool") {
  Network n = load("running.dcn");
  SearchReport r = best_fitting_in_class(n, NetworkClass::Any, 1);
  REQUIRE(r.rows.size() == 5);
  CHECK(r.min_distance == 18);
  REQUIRE(r.minimizer_keeps.size() == 1);
  CHECK(r.minimizer_keeps[0] == std::vector<Cluster>{k8});

  // A cap of zero leaves only the trivial shape.
  SearchReport r0 = best_fitting_in_class(n, NetworkClass::Tree, 0);
  REQUIRE(r0.rows.size() == 1);
  CHECK(r0.min_distance == 23);
}

TEST_CASE("wide searches need an explicit override") {
  Network big = caterpillar(27);
  CHECK(big.is_dc());
  CHECK(fails_with([&] { return best_fitting_cps_tree(big); }) == Errc::TooLarge);
  CHECK(fails_with([&] {
          return best_fitting_in_class(big, NetworkClass::Any, 1);
        }) == Errc::TooLarge);

  SearchReport r = best_fitting_in_class(big, NetworkClass::Any, 1, true);
  CHECK(r.rows.size() == 26);
  CHECK(r.min_distance > 0);
}

TEST_CASE("searching a tree returns the tree itself") {
  Network t1 = load("t1.dcn");
  SearchReport r = best_fitting_cps_tree(t1);
  CHECK(r.min_distance == 0);
  REQUIRE(r.minimizer_keeps.size() == 1);
  CHECK(r.minimizer_keeps[0] == std::vector<Cluster>{k5, k8});
  CHECK(networks_equal(r.minimizers[0], t1));
}
