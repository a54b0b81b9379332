#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permdeg/permutation.hpp"

namespace permdeg {

/// A permutation group given by its degree and a generator list. An empty
/// list denotes the trivial group.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(int degree, std::vector<Permutation> generators = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// True when every generator is the identity (the group is trivial).
  bool has_trivial_generators() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
};

enum class NamedKind { symmetric, alternating, cyclic };

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
PermGroup make_named(NamedKind kind, int n);

/// The imprimitive reflection group G(p,p,q) on p*q points in q blocks of p
/// consecutive points. Generated by the q-1 position-wise block swaps and the
/// element translating block 1 by +1 and block 2 by -1 (mod p). Its order is
/// p^(q-1) * q!.
PermGroup make_gppq(int p, int q);

/// G x H acting on deg(G) + deg(H) points, H shifted past G's points.
PermGroup direct_product_disjoint(const PermGroup& g, const PermGroup& h);

/// Generators written one per entry in cycle notation.
std::vector<std::string> format_generators(const PermGroup& g);
PermGroup parse_group(int degree, const std::vector<std::string>& generators);

}  // namespace permdeg
