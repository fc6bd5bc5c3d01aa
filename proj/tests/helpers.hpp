#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcnet/dcn.hpp"
#include "dcnet/errors.hpp"
#include "dcnet/network.hpp"

namespace dcnet::testing {

inline std::string data_path(const std::string& name) {
  return std::string(DCNET_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Network load(const std::string& name) {
  return parse_network(slurp(data_path(name)));
}

// Cluster literal over numbered taxa: c({1,3}) is the set {taxon 1, taxon 3}.
inline Cluster c(std::initializer_list<int> members) {
  Cluster out;
  for (int m : members) out.add(m - 1);
  return out;
}

// Random tree on numbered taxa: repeatedly gather 2..4 parentless vertices
// under a fresh parent. Out-degrees stay >= 2, so the result is a DC tree.
inline Network random_tree(int n_taxa, std::mt19937_64& rng) {
  TaxonSet taxa = TaxonSet::numbered(n_taxa);
  std::vector<Vertex> vertices;
  std::vector<VertexId> roots;
  for (int t = 0; t < n_taxa; ++t) {
    vertices.push_back(Vertex{taxa.name(t), t});
    roots.push_back(t);
  }
  std::vector<Arc> arcs;
  int next = 1;
  while (roots.size() > 1) {
    std::shuffle(roots.begin(), roots.end(), rng);
    size_t take = 2 + rng() % std::min<size_t>(roots.size() - 1, 3);
    VertexId p = static_cast<VertexId>(vertices.size());
    vertices.push_back(Vertex{"i" + std::to_string(next++), std::nullopt});
    for (size_t i = 0; i < take; ++i)
      arcs.push_back(Arc{p, roots[roots.size() - 1 - i]});
    roots.resize(roots.size() - take);
    roots.push_back(p);
  }
  return Network::build(taxa, std::move(vertices), std::move(arcs));
}

// Runs f and reports the domain error code it throws, if any.
template <typename F>
std::optional<Errc> fails_with(F&& f) {
  try {
    (void)f();
    return std::nullopt;
  } catch (const Error& e) {
    return e.code();
  }
}

}  // namespace dcnet::testing
