#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permdeg/perm_group.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

struct Orbit {
  std::vector<int> points;  // ascending
  int representative = 0;   // smallest point
  PermGroup stabilizer;     // stabilizer of the representative
  /// Orbits share a key iff the group acts equivalently on them.
  int type_key = 0;
};

struct OrbitDecomposition {
  int degree = 0;
  std::vector<Orbit> orbits;  // ordered by smallest element
};

OrbitDecomposition orbits(const PermGroup& g);

/// The G-equivariant map from orbit(a) to orbit(b) sending a to b, as an
/// image table indexed by point (-1 off orbit(a)). Empty when the
/// assignment a -> b does not extend to a G-set isomorphism.
std::optional<std::vector<int>> equivariant_map(const PermGroup& g, int a, int b);

/// A permutation commuting with G that sends a to b: the equivariant
/// self-map when b lies in a's orbit, otherwise the involution swapping the
/// two orbits along the equivariant map.
std::optional<Permutation> intertwiner(const PermGroup& g, int a, int b);

/// C_Sym(n)(G), built orbit type by orbit type.
PermGroup centralizer_in_sym(const PermGroup& g);

/// Product over orbit types of m^k * k!, where k counts the orbits of the
/// type and m the points b of a representative orbit with G_b = G_a.
std::uint64_t centralizer_order_formula(const PermGroup& g);

/// N_Sym(n)(H): full scan for n <= 7, backtrack search above.
PermGroup normalizer_in_sym(const PermGroup& h);
PermGroup normalizer_in_sym_scan(const PermGroup& h);
PermGroup normalizer_in_sym_backtrack(const PermGroup& h);

PermGroup join(const PermGroup& g, const PermGroup& h);

bool is_subgroup(const StabChain& big, const PermGroup& small);
bool is_normal(const StabChain& h, const PermGroup& g);

/// [big : small]; throws std::invalid_argument unless small <= big.
std::uint64_t index(const PermGroup& big, const PermGroup& small);

/// Kernel of the action of G on the right cosets of H.
PermGroup core(const PermGroup& g, const PermGroup& h);
std::vector<Permutation> core_elements(const StabChain& g, const StabChain& h);

/// Right coset representatives of H in G (H itself first).
std::vector<Permutation> right_coset_representatives(const StabChain& g, const StabChain& h);

/// Some g in Sym(n) with h1^g = h2, if one exists.
std::optional<Permutation> transporter_in_sym(const PermGroup& h1, const PermGroup& h2);

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elements);
PermGroup derived_subgroup(const PermGroup& g);

/// Drops generators already generated by the earlier ones (identity
/// included).
PermGroup reduce_generators(const PermGroup& g);

/// Subgroup generated by an explicit element list, with a reduced
/// generating set.
PermGroup group_from_elements(int degree, const std::vector<Permutation>& elements);

/// A point order visiting every point of the degree: chain base first.
std::vector<int> full_base(int degree);

}  // namespace permdeg
