#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "permdeg/errors.hpp"
#include "permdeg/perm_group.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

/// Largest group order the isomorphism routines accept.
inline constexpr std::uint64_t kIsoOrderCap = 500000;

/// Isomorphism invariants of an abstract group, plus a generating tuple used
/// as the root of the isomorphism search.
struct IsoProfile {
  std::uint64_t order = 1;
  std::map<std::uint64_t, std::uint64_t> element_orders;
  bool abelian = true;
  std::uint64_t center_order = 1;
  std::vector<std::uint64_t> derived_series;  // |G|, |G'|, ... down to the perfect core
  std::map<std::uint64_t, std::uint64_t> class_sizes;  // size -> number of classes
  std::vector<Permutation> generating_tuple;

  /// Compares every field except the generating tuple.
  bool same_invariants(const IsoProfile& other) const;
};

/// A group with its conjugacy classes computed, reusable across many
/// isomorphism tests.
class PreparedGroup {
 public:
  explicit PreparedGroup(const PermGroup& g);

  const PermGroup& group() const { return group_; }
  const StabChain& chain() const { return *chain_; }
  const IsoProfile& profile() const { return profile_; }

  /// Size of the conjugacy class of an element of the group.
  std::uint64_t class_size_of(const Permutation& x) const;
  const std::vector<Permutation>& class_representatives() const { return class_reps_; }

 private:
  friend class IsoSearch;
  PermGroup group_;
  std::shared_ptr<const StabChain> chain_;
  std::vector<std::uint32_t> class_of_;  // by rank
  std::vector<std::uint64_t> class_size_;
  std::vector<Permutation> class_reps_;
  IsoProfile profile_;
};

/// An isomorphism G -> H given on a generating tuple, with the data of the
/// graph-subgroup check: <(g_i, h_i)> inside G x H on deg(G) + deg(H) points.
struct IsoCertificate {
  std::vector<Permutation> source;  // generate G
  std::vector<Permutation> image;   // generate H
  std::uint64_t graph_order = 0;
  /// Order of the graph subgroup meet 1 x H.
  std::uint64_t kernel_order = 0;
  std::uint64_t image_order = 0;
};

IsoProfile invariant_profile(const PermGroup& g);

std::optional<IsoCertificate> find_isomorphism(const PreparedGroup& g, const PreparedGroup& h);
std::optional<IsoCertificate> find_isomorphism(const PermGroup& g, const PermGroup& h);
bool is_isomorphic(const PermGroup& g, const PermGroup& h);

/// Recomputes the graph-subgroup orders of a certificate from scratch and
/// checks them against |G| and |H|.
bool check_certificate(const PermGroup& g, const PermGroup& h, const IsoCertificate& cert);

}  // namespace permdeg
