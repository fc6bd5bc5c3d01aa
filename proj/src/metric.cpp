#include "dcnet/metric.hpp"

#include <algorithm>
#include <cmath>

namespace dcnet {

std::optional<int> ClusterIndex::position(Cluster c) const {
  auto it = std::lower_bound(clusters.begin(), clusters.end(), c);
  if (it == clusters.end() || *it != c) return std::nullopt;
  return static_cast<int>(it - clusters.begin());
}

ClusterIndex make_cluster_index(std::vector<Cluster> clusters) {
  std::sort(clusters.begin(), clusters.end());
  clusters.erase(std::unique(clusters.begin(), clusters.end()), clusters.end());
  return ClusterIndex{std::move(clusters)};
}

ClusterIndex cluster_index(std::span<const Network* const> nets) {
  std::vector<Cluster> all;
  for (size_t i = 0; i < nets.size(); ++i) {
    const Network* net = nets[i];
    require_dc(*net, "cluster_index");
    if (i > 0) require_same_taxa(*nets[0], *net);
    const auto& cs = net->cluster_assignment();
    all.insert(all.end(), cs.begin(), cs.end());
  }
  return make_cluster_index(std::move(all));
}

EmbeddedMatrix embed(const Network& net, const ClusterIndex& index) {
  require_dc(net, "embed");
  const int k = index.size();
  std::vector<int> slot(static_cast<size_t>(net.vertex_count()));
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto p = index.position(net.cluster_of(v));
    if (!p)
      fail(Errc::IndexMissingCluster,
           "cluster " + net.cluster_of(v).to_string(net.taxa()) + " of vertex '" +
               net.vertex(v).label + "' is not in the index");
    slot[static_cast<size_t>(v)] = *p;
  }
  InheritanceMatrix h = inheritance_matrix(net);
  EmbeddedMatrix e{index, {}};
  e.entries.assign(static_cast<size_t>(k) * static_cast<size_t>(k), BigInt(0));
  for (VertexId u = 0; u < net.vertex_count(); ++u)
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      const BigInt& val = h.paths(u, v);
      if (val != 0)
        e.entries[static_cast<size_t>(slot[static_cast<size_t>(u)]) * static_cast<size_t>(k) +
                  static_cast<size_t>(slot[static_cast<size_t>(v)])] = val;
    }
  return e;
}

BigInt inheritance_distance_over(const Network& a, const Network& b,
                                 const ClusterIndex& index) {
  require_same_taxa(a, b);
  EmbeddedMatrix ea = embed(a, index);
  EmbeddedMatrix eb = embed(b, index);
  BigInt sum = 0;
  for (size_t i = 0; i < ea.entries.size(); ++i) {
    BigInt d = ea.entries[i] - eb.entries[i];
    if (d < 0) d = -d;
    sum += d;
  }
  return sum;
}

BigInt inheritance_distance(const Network& a, const Network& b) {
  const Network* nets[] = {&a, &b};
  return inheritance_distance_over(a, b, cluster_index(nets));
}

double Distance::approx() const {
  return std::pow(radicand.convert_to<double>(), 1.0 / p);
}

std::string Distance::to_string() const {
  if (p == 1) return radicand.str();
  return radicand.str() + "^(1/" + std::to_string(p) + ")";
}

Distance p_norm_distance(const Network& a, const Network& b, int p) {
  if (p < 1) fail(Errc::InvalidP, "p must be a positive integer, got " + std::to_string(p));
  require_same_taxa(a, b);
  const Network* nets[] = {&a, &b};
  ClusterIndex index = cluster_index(nets);
  EmbeddedMatrix ea = embed(a, index);
  EmbeddedMatrix eb = embed(b, index);
  BigInt sum = 0;
  for (size_t i = 0; i < ea.entries.size(); ++i) {
    BigInt d = ea.entries[i] - eb.entries[i];
    if (d < 0) d = -d;
    BigInt term = 1;
    for (int e = 0; e < p; ++e) term *= d;
    sum += term;
  }
  return Distance{std::move(sum), p};
}

namespace {

std::string joined_label(const TaxonSet& taxa, Cluster c) {
  if (c.is_singleton()) {
    for (int i = 0; i < taxa.size(); ++i)
      if (c.test(i)) return taxa.name(i);
  }
  std::string out;
  for (int i = 0; i < taxa.size(); ++i) {
    if (!c.test(i)) continue;
    if (!out.empty()) out += '+';
    out += taxa.name(i);
  }
  return out;
}

}  // namespace

Network gen_trivial_tree(const TaxonSet& taxa) {
  const int n = taxa.size();
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  for (int t = 0; t < n; ++t) vertices.push_back(Vertex{taxa.name(t), t});
  if (n > 1) {
    VertexId root = static_cast<VertexId>(vertices.size());
    vertices.push_back(Vertex{joined_label(taxa, Cluster::full(n)), std::nullopt});
    for (int t = 0; t < n; ++t) arcs.push_back(Arc{root, t});
  }
  return Network::build(taxa, std::move(vertices), std::move(arcs));
}

Network gen_powerset_network(const TaxonSet& taxa) {
  const int n = taxa.size();
  if (n > 14)
    fail(Errc::TooLarge, "powerset network is capped at 14 taxa, got " + std::to_string(n));
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<VertexId> id_of_mask(size_t{1} << n, -1);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    Cluster c = Cluster::from_bits(mask);
    VertexId v = static_cast<VertexId>(vertices.size());
    id_of_mask[mask] = v;
    std::optional<int> taxon;
    if (c.is_singleton()) taxon = std::countr_zero(mask);
    vertices.push_back(Vertex{joined_label(taxa, c), taxon});
  }
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1)
        arcs.push_back(Arc{id_of_mask[mask], id_of_mask[mask & ~(uint64_t{1} << i)]});
  }
  return Network::build(taxa, std::move(vertices), std::move(arcs));
}

BigInt reference_distance_formula(int n) {
  if (n < 2) fail(Errc::InvalidN, "reference distance needs n >= 2, got " + std::to_string(n));
  auto binom = [](int a, int b) {
    BigInt r = 1;
    for (int i = 0; i < b; ++i) {
      r *= a - i;
      r /= i + 1;
    }
    return r;
  };
  auto factorial = [](int a) {
    BigInt r = 1;
    for (int i = 2; i <= a; ++i) r *= i;
    return r;
  };
  BigInt sum = 0;
  for (int k = 1; k <= n; ++k) {
    BigInt inner = 0;
    for (int j = 1; j <= k; ++j) inner += binom(k, j) * factorial(k - j);
    sum += binom(n, k) * inner;
  }
  return sum - 2 * n - 1;
}

}  // namespace dcnet
