#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "permdeg/errors.hpp"
#include "permdeg/fingerprint.hpp"
#include "permdeg/perm_group.hpp"

namespace permdeg {

/// One conjugacy class of subgroups of an ambient group.
struct SubgroupClass {
  std::size_t class_id = 0;  // discovery index
  PermGroup representative;
  std::uint64_t order = 1;
  std::uint64_t class_size = 1;  // [ambient : normalizer]
  std::uint64_t normalizer_order = 1;
  Fingerprint fingerprint;
};

enum class EnumerationStrategy {
  /// Extend each class H by one element g per orbit of the double cosets
  /// HgH under N(H)-conjugation, keeping orbits that contain an element of
  /// prime-power order.
  element_bfs,
  /// Seed with the perfect 2-generated subgroups, then extend H by the
  /// elements z of N(H) with z^p in H for a prime p.
  cyclic_extension,
};

struct EnumerationOptions {
  EnumerationStrategy strategy = EnumerationStrategy::element_bfs;
  std::size_t max_classes = 100000;
  double time_limit_seconds = 0;  // 0: no limit
  int threads = 1;
};

/// Representatives of the conjugacy classes of subgroups of `ambient`, in
/// discovery order. Classes are found round by round and merged in (parent
/// class, candidate) order, so the output does not depend on `threads`.
/// Throws ResourceLimitExceeded when the class or time budget runs out.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& ambient,
                                            const EnumerationOptions& options = {});

/// Every subgroup of `ambient` (not up to conjugacy), by closing each known
/// subgroup under one more element. Throws OrderCapExceeded above order 5040.
std::vector<PermGroup> brute_force_subgroups(const PermGroup& ambient);

/// A string identifying the subgroup exactly (not up to conjugacy): the
/// lexicographically least element of every coset of the full-base
/// stabilizer chain.
std::string exact_subgroup_key(const PermGroup& g);

}  // namespace permdeg
