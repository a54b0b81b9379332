#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "permdeg/errors.hpp"
#include "permdeg/iso.hpp"
#include "permdeg/perm_group.hpp"
#include "permdeg/subgroup_enum.hpp"

namespace permdeg {

/// Largest order accepted by mu().
inline constexpr std::uint64_t kMuOrderCap = 10000;

struct MuResult {
  std::uint64_t value = 0;
  /// Subgroups H_i of G whose cores meet trivially; the action on the
  /// union of their coset spaces is faithful of degree `value`.
  std::vector<SubgroupClass> witness;
  std::vector<std::uint64_t> degrees;  // [G : H_i]
};

struct MuOptions {
  EnumerationOptions enumeration;
};

/// Minimal faithful permutation degree, by branch and bound over
/// collections of subgroup classes with trivial core intersection.
MuResult mu(const PermGroup& g, const MuOptions& options = {});

enum class MinEmbMethod { iso_filter, direct_mu };

/// Decides minimal embedding of subgroups of Sym(m) by comparison with the
/// subgroup classes of Sym(m-1). Prepared isomorphism data is cached per
/// class, so one filter serves a whole survey.
class MinEmbFilter {
 public:
  MinEmbFilter(int degree, std::vector<SubgroupClass> smaller_classes);

  int degree() const { return degree_; }
  /// True iff g (on `degree` points) is isomorphic to no subgroup of
  /// Sym(degree - 1).
  bool minimally_embedded(const PermGroup& g);

 private:
  int degree_;
  std::vector<SubgroupClass> smaller_;
  std::map<std::size_t, std::shared_ptr<PreparedGroup>> prepared_;
};

/// iso_filter enumerates the subgroup classes of Sym(m-1) on every call;
/// use MinEmbFilter to amortize that over many groups.
bool is_minimally_embedded(const PermGroup& g, MinEmbMethod method);

}  // namespace permdeg
