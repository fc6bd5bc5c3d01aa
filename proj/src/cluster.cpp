#include "dcnet/cluster.hpp"

#include <cctype>
#include <unordered_set>

#include "dcnet/errors.hpp"

namespace dcnet {

namespace {

void check_taxon_name(const std::string& name) {
  if (name.empty())
    fail(Errc::SyntaxError, "taxon name must be non-empty");
  for (char c : name) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c)))
      fail(Errc::SyntaxError, "taxon name '" + name + "' contains '#' or whitespace");
  }
}

}  // namespace

TaxonSet::TaxonSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(Errc::SyntaxError, "taxon set must be non-empty");
  if (names_.size() > 64)
    fail(Errc::TooManyTaxa, "at most 64 taxa are supported, got " +
                                std::to_string(names_.size()));
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    check_taxon_name(n);
    if (!seen.insert(n).second) fail(Errc::DuplicateTaxon, "duplicate taxon '" + n + "'");
  }
}

TaxonSet TaxonSet::numbered(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return TaxonSet(std::move(names));
}

std::optional<int> TaxonSet::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::string Cluster::to_string(const TaxonSet& taxa) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < taxa.size(); ++i) {
    if (!test(i)) continue;
    if (!first) out += ',';
    out += taxa.name(i);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<Cluster> trivial_clusters(const TaxonSet& taxa) {
  std::vector<Cluster> out;
  out.reserve(static_cast<size_t>(taxa.size()) + 1);
  out.push_back(Cluster::full(taxa.size()));
  for (int i = 0; i < taxa.size(); ++i) out.push_back(Cluster::singleton(i));
  return out;
}

}  // namespace dcnet
