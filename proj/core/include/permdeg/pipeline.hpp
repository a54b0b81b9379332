#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permdeg/mindeg.hpp"
#include "permdeg/subgroup_enum.hpp"

namespace permdeg {

struct SurveyOptions {
  /// Directory holding `sym<m>.jsonl` files; empty disables caching.
  std::string cache_dir;
  EnumerationOptions enumeration;
};

/// A minimally embedded class G of Sym(m) with C = C_Sym(m)(G).
struct SurveyEntry {
  SubgroupClass subgroup;
  std::uint64_t centralizer_order = 1;
  std::uint64_t ind = 1;  // [<G, C> : G]
  /// An element of C of prime order outside G, if one exists.
  std::optional<Permutation> comp_witness;
};

struct DegreeReport {
  int degree = 0;
  std::size_t total_classes = 0;
  std::vector<SurveyEntry> classes;  // minimally embedded classes, by class_id
  std::map<std::uint64_t, std::uint64_t> ind_multiset;
  bool comp_nonempty = false;
};

struct Verdict {
  std::vector<DegreeReport> reports;
  /// No minimally embedded class up to the largest degree has a comp witness.
  bool holds = true;
};

struct WitnessReport {
  PermGroup group;
  std::uint64_t group_order = 0;
  std::uint64_t mu_value = 0;
  MuResult mu_detail;
  PermGroup centralizer;
  std::uint64_t centralizer_order = 0;
  std::optional<Permutation> witness_element;
  std::uint64_t join_order = 0;
  std::uint64_t product_mu = 0;
  std::uint64_t mu_c2 = 0;
  /// Every expected property held.
  bool certified = false;
};

/// Subgroup classes of Sym(m), from the cache when present, otherwise
/// enumerated (and saved when a cache directory is set).
std::vector<SubgroupClass> symmetric_classes(int m, const SurveyOptions& options);

/// Minimally embedded classes of Sym(m) with their index [<G, C> : G] and a
/// search for a prime-order element of C outside G. 2 <= m <= 9.
DegreeReport survey_degree(int m, const SurveyOptions& options);

/// survey_degree for every m in 2..max_degree.
Verdict verify_up_to(int max_degree, const SurveyOptions& options);

/// The degree-10 certificate for G(2,2,5).
WitnessReport witness_degree_10(const MuOptions& options = {});

}  // namespace permdeg
