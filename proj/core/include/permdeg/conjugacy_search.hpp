#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "permdeg/perm_group.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

/// Data about a group that a Sym(n)-conjugacy backtrack needs: the chain,
/// the elements checked during the search, and conjugation-invariant labels
/// of the points.
class ConjugacyProfile {
 public:
  explicit ConjugacyProfile(std::shared_ptr<const StabChain> chain);
  explicit ConjugacyProfile(const PermGroup& g);

  const StabChain& chain() const { return *chain_; }
  int degree() const { return chain_->degree(); }

  /// Strong generators, sorted by support size.
  const std::vector<Permutation>& test_elements() const { return tests_; }
  /// Label of each point: orbit length and orbit lengths of its stabilizer.
  const std::vector<std::uint64_t>& point_labels() const { return labels_; }
  const std::vector<int>& orbit_ids() const { return orbit_id_; }
  const std::vector<int>& moved_points() const { return moved_; }

 private:
  std::shared_ptr<const StabChain> chain_;
  std::vector<Permutation> tests_;
  std::vector<std::uint64_t> labels_;
  std::vector<int> orbit_id_;
  std::vector<int> moved_;
};

/// Some s in Sym(n) with source^s = target, by backtracking over images of
/// the moved points. A test element t is checked as soon as its support is
/// mapped: t^s must lie in target.
std::optional<Permutation> find_conjugator(const ConjugacyProfile& source,
                                           const ConjugacyProfile& target);

/// N_Sym(n)(H) by the same backtrack, exploring one image per orbit of the
/// normalizer found so far on the identity branch.
PermGroup normalizer_backtrack(const ConjugacyProfile& h);

}  // namespace permdeg
