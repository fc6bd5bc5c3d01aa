#include "dcnet/search.hpp"

#include <algorithm>
#include <cctype>

#include "dcnet/parallel.hpp"

namespace dcnet {

bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string_view na(a.data() + i, i2 - i), nb(b.data() + j, j2 - j);
      std::string_view ta = na.substr(na.find_first_not_of('0') == std::string_view::npos
                                          ? na.size() - 1
                                          : na.find_first_not_of('0'));
      std::string_view tb = nb.substr(nb.find_first_not_of('0') == std::string_view::npos
                                          ? nb.size() - 1
                                          : nb.find_first_not_of('0'));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

namespace {

// Nontrivial clusters sorted by the label of the vertex carrying them, so
// that enumeration order matches how candidates are displayed.
std::vector<Cluster> nontrivial_clusters(const Network& net) {
  Cluster full = Cluster::full(net.taxa().size());
  std::vector<std::pair<std::string, Cluster>> named;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    Cluster c = net.cluster_of(v);
    if (c.is_singleton() || c == full) continue;
    named.emplace_back(net.vertex(v).label, c);
  }
  std::sort(named.begin(), named.end(),
            [](const auto& x, const auto& y) { return natural_less(x.first, y.first); });
  std::vector<Cluster> out;
  out.reserve(named.size());
  for (auto& [label, c] : named) out.push_back(c);
  return out;
}

// All subsets of the pool in (size, lexicographic-by-position) order, which
// matches how candidate names read once the pool is label-sorted.
std::vector<std::vector<Cluster>> keep_sets(const Network& net,
                                            std::optional<int> max_nontrivial) {
  std::vector<Cluster> pool = nontrivial_clusters(net);
  const int k = static_cast<int>(pool.size());
  int cap = max_nontrivial ? std::min(*max_nontrivial, k) : k;
  std::vector<std::vector<Cluster>> sets;
  sets.emplace_back();
  std::vector<int> idx;
  for (int s = 1; s <= cap; ++s) {
    idx.resize(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
      std::vector<Cluster> w;
      w.reserve(static_cast<size_t>(s));
      for (int i : idx) w.push_back(pool[static_cast<size_t>(i)]);
      sets.push_back(std::move(w));
      int i = s - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == k - s + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return sets;
}

Network candidate_for(const Network& net, const std::vector<Cluster>& w) {
  std::vector<Cluster> keep = trivial_clusters(net.taxa());
  keep.insert(keep.end(), w.begin(), w.end());
  return canonical_cps(net, keep);
}

bool in_class(const ClassFlags& f, NetworkClass cls) {
  switch (cls) {
    case NetworkClass::Tree: return f.is_tree;
    case NetworkClass::TreeChild: return f.is_tree_child;
    case NetworkClass::Normal: return f.is_normal;
    case NetworkClass::Any: return true;
  }
  return false;
}

}  // namespace

void enumerate_cps_candidates(
    const Network& net, std::optional<int> max_nontrivial,
    const std::function<void(const std::vector<Cluster>&, const Network&)>& visit) {
  require_dc(net, "enumerate_cps_candidates");
  for (const auto& w : keep_sets(net, max_nontrivial)) visit(w, candidate_for(net, w));
}

SearchReport best_fitting_in_class(const Network& net, NetworkClass cls,
                                   std::optional<int> max_nontrivial, bool force) {
  require_dc(net, "best_fitting_in_class");
  if (!max_nontrivial && cls == NetworkClass::Tree)
    max_nontrivial = std::max(0, net.taxa().size() - 2);
  const size_t pool = nontrivial_clusters(net).size();
  if (pool > 24 && !force)
    fail(Errc::TooLarge, "search over " + std::to_string(pool) +
                             " nontrivial clusters needs force; the candidate set is 2^" +
                             std::to_string(pool));

  std::vector<std::vector<Cluster>> sets = keep_sets(net, max_nontrivial);
  SearchReport report;
  report.rows.resize(sets.size());
  parallel_for(sets.size(), [&](size_t i) {
    Network cand = candidate_for(net, sets[i]);
    ClassFlags f = classify(cand);
    SearchRow& row = report.rows[i];
    row.keep = sets[i];
    row.distance = inheritance_distance(net, cand);
    row.is_tree = f.is_tree;
    row.eligible = in_class(f, cls);
  });

  bool any = false;
  for (const SearchRow& row : report.rows) {
    if (!row.eligible) continue;
    if (!any || row.distance < report.min_distance) report.min_distance = row.distance;
    any = true;
  }
  if (any) {
    for (const SearchRow& row : report.rows)
      if (row.eligible && row.distance == report.min_distance) {
        report.minimizer_keeps.push_back(row.keep);
        report.minimizers.push_back(candidate_for(net, row.keep));
      }
  }
  return report;
}

SearchReport best_fitting_cps_tree(const Network& net) {
  return best_fitting_in_class(net, NetworkClass::Tree);
}

}  // namespace dcnet
