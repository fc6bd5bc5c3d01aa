#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcnet {

// Ordered list of taxon names. The position of a name is its bit index in
// Cluster, so taxon order is significant and capped at 64.
class TaxonSet {
public:
  TaxonSet() = default;
  explicit TaxonSet(std::vector<std::string> names);

  // Taxa named "1".."n".
  static TaxonSet numbered(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const TaxonSet& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

// Set of taxa as a 64-bit mask; bit i is the taxon at position i.
class Cluster {
public:
  constexpr Cluster() = default;

  static constexpr Cluster from_bits(uint64_t bits) { return Cluster(bits); }
  static constexpr Cluster singleton(int i) { return Cluster(uint64_t{1} << i); }
  static constexpr Cluster full(int n) {
    return Cluster(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool test(int i) const { return (bits_ >> i) & 1; }
  constexpr Cluster& add(int i) {
    bits_ |= uint64_t{1} << i;
    return *this;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  bool is_singleton() const { return std::has_single_bit(bits_); }

  constexpr bool subset_of(Cluster o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool strict_subset_of(Cluster o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  friend constexpr Cluster operator|(Cluster a, Cluster b) {
    return Cluster(a.bits_ | b.bits_);
  }
  friend constexpr Cluster operator&(Cluster a, Cluster b) {
    return Cluster(a.bits_ & b.bits_);
  }

  auto operator<=>(const Cluster&) const = default;

  // "{a,c}" with member names in taxon order.
  std::string to_string(const TaxonSet& taxa) const;

private:
  explicit constexpr Cluster(uint64_t bits) : bits_(bits) {}
  uint64_t bits_ = 0;
};

// The always-present clusters of an X-network: X itself and every singleton.
std::vector<Cluster> trivial_clusters(const TaxonSet& taxa);

}  // namespace dcnet
