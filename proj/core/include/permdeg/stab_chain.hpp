#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permdeg/perm_group.hpp"
#include "permdeg/permutation.hpp"

namespace permdeg {

struct ChainLevel {
  int base_point = 0;
  /// Strong generators fixing every earlier base point.
  std::vector<Permutation> generators;
  /// orbit[0] is the base point; orbit[i] = transversal[i](base_point).
  std::vector<int> orbit;
  std::array<std::int16_t, kMaxDegree> position{};
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;

  int orbit_position(int point) const { return position[point]; }
};

struct SiftResult {
  Permutation residue;
  /// Level at which sifting stopped; equals the number of levels when the
  /// element sifted through the whole chain.
  std::size_t level = 0;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// The base starts with `base_prefix` (levels are kept even when their orbit
/// is trivial) and is extended by the smallest point moved by the first
/// strong generator that fixes the whole base so far. With an empty prefix
/// the base is therefore increasing. Building twice from the same generator
/// sequence gives identical chains.
///
/// Elements are ranked in mixed radix with level 0 most significant; the
/// element with digits (d_0, ..., d_{k-1}) is u_{k-1} * ... * u_0, where u_l
/// is the d_l-th transversal element of level l and the rightmost factor is
/// applied last.
class StabChain {
 public:
  StabChain() = default;
  explicit StabChain(const PermGroup& group, std::span<const int> base_prefix = {});

  const PermGroup& group() const { return group_; }
  int degree() const { return group_.degree(); }
  std::uint64_t order() const { return order_; }
  std::vector<int> base() const;
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }

  SiftResult sift(const Permutation& p) const;
  bool contains(const Permutation& p) const;

  std::uint64_t rank(const Permutation& p) const;
  Permutation unrank(std::uint64_t rank) const;

  /// Re-checks every Schreier generator at every level.
  bool verify() const;

  /// Calls visit(element) in rank order until it returns false.
  template <class Visit>
  void for_each_element(Visit&& visit) const;

 private:
  void rebuild_level(std::size_t i);
  SiftResult sift_from(Permutation p, std::size_t level) const;

  PermGroup group_;
  std::vector<Permutation> strong_;
  std::vector<ChainLevel> levels_;
  std::uint64_t order_ = 1;
};

/// Lazy walk over the elements of a chain in rank order.
class ElementWalker {
 public:
  explicit ElementWalker(const StabChain& chain);
  std::optional<Permutation> next();

 private:
  void refresh_from(std::size_t level);

  const StabChain* chain_;
  std::vector<int> digits_;
  std::vector<Permutation> partial_;
  bool started_ = false;
  bool done_ = false;
};

/// Every element of exact order k, each once, in rank order. Stops early
/// when the caller stops pulling.
class ElementsOfOrder {
 public:
  ElementsOfOrder(const StabChain& chain, std::uint64_t k);
  std::optional<Permutation> next();

 private:
  ElementWalker walker_;
  std::uint64_t k_;
};

inline ElementsOfOrder elements_of_order(const StabChain& chain, std::uint64_t k) {
  return ElementsOfOrder(chain, k);
}

std::uint64_t group_order(const StabChain& chain);
std::uint64_t group_order(const PermGroup& g);

bool contains(const StabChain& chain, const Permutation& p);

/// Orbit of `point` under the generators, in discovery order.
std::vector<int> orbit_of(const PermGroup& g, int point);

PermGroup point_stabilizer(const StabChain& chain, int point);

template <class Visit>
void StabChain::for_each_element(Visit&& visit) const {
  const std::size_t k = levels_.size();
  if (k == 0) {
    visit(Permutation(degree()));
    return;
  }
  std::vector<Permutation> partial(k);
  bool stop = false;
  auto descend = [&](auto&& self, std::size_t l) -> void {
    const ChainLevel& level = levels_[l];
    for (std::size_t i = 0; i < level.transversal.size() && !stop; ++i) {
      partial[l] = l == 0 ? level.transversal[i] : compose(level.transversal[i], partial[l - 1]);
      if (l + 1 == k) {
        if (!visit(partial[l])) stop = true;
      } else {
        self(self, l + 1);
      }
    }
  };
  descend(descend, 0);
}

}  // namespace permdeg
