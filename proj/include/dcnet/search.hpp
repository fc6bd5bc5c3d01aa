#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dcnet/matrix.hpp"
#include "dcnet/metric.hpp"
#include "dcnet/simplify.hpp"

namespace dcnet {

enum class NetworkClass { Tree, TreeChild, Normal, Any };

struct SearchRow {
  std::vector<Cluster> keep;  // the retained nontrivial clusters W
  BigInt distance;
  bool is_tree = false;
  bool eligible = false;  // passes the class filter
};

struct SearchReport {
  std::vector<SearchRow> rows;  // ordered by (|W|, labels of W)
  BigInt min_distance;          // over eligible rows
  std::vector<std::vector<Cluster>> minimizer_keeps;
  std::vector<Network> minimizers;
};

// Visit canonical_cps(net, trivial + W) for every W drawn from the
// nontrivial clusters of net, |W| <= max_nontrivial when given.
void enumerate_cps_candidates(
    const Network& net, std::optional<int> max_nontrivial,
    const std::function<void(const std::vector<Cluster>&, const Network&)>& visit);

// Exhaustive search over candidates for the closest member of a class.
// Trees on n taxa have at most n - 2 nontrivial clusters, so the tree search
// caps |W| there by default. Ties are all reported. Refuses more than 24
// nontrivial clusters unless force is set.
SearchReport best_fitting_in_class(const Network& net, NetworkClass cls,
                                   std::optional<int> max_nontrivial = std::nullopt,
                                   bool force = false);

SearchReport best_fitting_cps_tree(const Network& net);

// Digit-aware label ordering used for stable report layout.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace dcnet
