#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "permdeg/perm_group.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

/// Sym(n)-conjugation invariants of a permutation group.
struct Fingerprint {
  std::uint64_t order = 1;
  int degree = 0;
  std::vector<int> orbit_sizes;  // ascending
  /// cycle_type_key -> number of elements with that cycle type
  std::map<std::uint64_t, std::uint64_t> cycle_types;
  std::map<std::uint64_t, std::uint64_t> element_orders;
  bool abelian = true;
  std::uint64_t center_order = 1;
  std::uint64_t derived_order = 1;

  /// Canonical text form, e.g. "o=6;n=3;orb=3;ct=...;eo=1:1,2:3,3:2;ab=0;z=1;dr=3".
  std::string to_string() const;
  static Fingerprint parse(std::string_view text);

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PermGroup& g);
Fingerprint fingerprint(const StabChain& chain);

/// The part of a fingerprint that is cheap to compute: order and orbit sizes.
struct BucketKey {
  std::uint64_t order = 1;
  std::vector<int> orbit_sizes;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

BucketKey bucket_key(const StabChain& chain);

}  // namespace permdeg
