#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "oracle.hpp"
#include "permdeg/cache.hpp"
#include "permdeg/group_ops.hpp"
#include "permdeg/mindeg.hpp"
#include "permdeg/pipeline.hpp"
#include "permdeg/stab_chain.hpp"
#include "temp_dir.hpp"

using namespace permdeg;

namespace {

using Multiset = std::map<std::uint64_t, std::uint64_t>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// True iff some nontrivial subgroup of C meets G trivially, over every
// subgroup of C.
bool complement_exists(const PermGroup& g, const PermGroup& c) {
  const auto gs = oracle::closure(g);
  for (const auto& d : oracle::all_subgroups(oracle::closure(c))) {
    if (d.size() == 1) continue;
    bool meets = false;
    for (const auto& x : d)
      if (!x.is_identity() && gs.count(x)) meets = true;
    if (!meets) return true;
  }
  return false;
}

}  // namespace

TEST(PipelineTest, Degree4CountMatchesOracle) {
  const DegreeReport r = survey_degree(4, {});
  std::size_t expected = 0;
  for (const auto& c : subgroup_classes(symmetric_group(4)))
    if (c.order > 1 && oracle::mu(c.representative) == 4) ++expected;
  EXPECT_EQ(expected, r.classes.size());
  EXPECT_EQ(6u, r.classes.size()) << "C4, two Klein four classes, D8, A4, S4";
  EXPECT_EQ((Multiset{{1, 6}}), r.ind_multiset);
  EXPECT_FALSE(r.comp_nonempty);
}

TEST(PipelineTest, Degrees5And6) {
  const DegreeReport r5 = survey_degree(5, {});
  EXPECT_EQ(19u, r5.total_classes);
  EXPECT_EQ(7u, r5.classes.size());
  EXPECT_EQ((Multiset{{1, 7}}), r5.ind_multiset);
  EXPECT_FALSE(r5.comp_nonempty);

  const DegreeReport r6 = survey_degree(6, {});
  EXPECT_EQ(56u, r6.total_classes);
  EXPECT_EQ(18u, r6.classes.size());
  EXPECT_EQ((Multiset{{1, 18}}), r6.ind_multiset);
  EXPECT_FALSE(r6.comp_nonempty);
}

TEST(PipelineTest, MinimalEmbeddingMatchesDirectMu) {
  for (int m = 3; m <= 6; ++m) {
    const DegreeReport r = survey_degree(m, {});
    std::vector<std::size_t> ids;
    for (const auto& e : r.classes) ids.push_back(e.subgroup.class_id);
    std::vector<std::size_t> direct;
    for (const auto& c : subgroup_classes(symmetric_group(m)))
      if (c.order > 1 && mu(c.representative).value == static_cast<std::uint64_t>(m)) direct.push_back(c.class_id);
    EXPECT_EQ(direct, ids) << "m=" << m;
  }
}

TEST(PipelineTest, EntryInvariants) {
  for (int m = 2; m <= 7; ++m) {
    const DegreeReport r = survey_degree(m, {});
    Multiset counted;
    for (const auto& e : r.classes) {
      const PermGroup& g = e.subgroup.representative;
      const StabChain gc(g);
      const PermGroup c = centralizer_in_sym(g);
      EXPECT_EQ(group_order(c), e.centralizer_order);
      bool inside = true;
      for (const auto& s : c.generators()) inside = inside && gc.contains(s);
      EXPECT_EQ(inside, e.ind == 1) << "m=" << m << " class " << e.subgroup.class_id;
      EXPECT_TRUE(e.ind == 1 || e.ind % 2 == 0) << "ind " << e.ind;
      EXPECT_EQ(group_order(join(g, c)), e.ind * gc.order());
      if (e.comp_witness) {
        EXPECT_FALSE(gc.contains(*e.comp_witness));
        EXPECT_TRUE(StabChain(c).contains(*e.comp_witness));
        EXPECT_EQ(0u, e.ind % element_order(*e.comp_witness));
      }
      ++counted[e.ind];
    }
    EXPECT_EQ(counted, r.ind_multiset);
  }
}

TEST(PipelineTest, CompSearchMatchesExhaustiveSubgroupSearch) {
  for (int m = 2; m <= 6; ++m)
    for (const auto& e : survey_degree(m, {}).classes) {
      const PermGroup c = centralizer_in_sym(e.subgroup.representative);
      EXPECT_EQ(complement_exists(e.subgroup.representative, c), e.comp_witness.has_value())
          << "m=" << m << " class " << e.subgroup.class_id;
    }
  // outside the minimally embedded classes complements do occur
  const PermGroup g = parse_group(5, {"(1 2 3)"});
  EXPECT_TRUE(complement_exists(g, centralizer_in_sym(g)));
}

TEST(PipelineTest, VerifyUpTo5) {
  const Verdict v = verify_up_to(5, {});
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(4u, v.reports.size());
  for (int m = 2; m <= 5; ++m) EXPECT_EQ(m, v.reports[m - 2].degree);
  EXPECT_THROW(verify_up_to(10, {}), std::invalid_argument);
  EXPECT_THROW(survey_degree(1, {}), std::invalid_argument);
}

TEST(PipelineTest, CachedRunsAreIdentical) {
  TempDir dir;
  SurveyOptions options;
  options.cache_dir = dir.str();
  const DegreeReport first = survey_degree(6, options);
  const std::string bytes = slurp(cache_path(dir.str(), 6));
  const auto cached = load_cache(dir.str(), 6);
  ASSERT_TRUE(cached.has_value());
  for (const auto& rec : *cached) EXPECT_TRUE(rec.minemb.has_value()) << "survey results stored";
  EXPECT_TRUE(load_cache(dir.str(), 5).has_value()) << "comparison degree cached too";

  const DegreeReport second = survey_degree(6, options);
  EXPECT_EQ(bytes, slurp(cache_path(dir.str(), 6)));
  ASSERT_EQ(first.classes.size(), second.classes.size());
  for (std::size_t i = 0; i < first.classes.size(); ++i) {
    EXPECT_EQ(first.classes[i].subgroup.class_id, second.classes[i].subgroup.class_id);
    EXPECT_EQ(first.classes[i].subgroup.representative.generators(),
              second.classes[i].subgroup.representative.generators());
    EXPECT_EQ(first.classes[i].ind, second.classes[i].ind);
  }
  EXPECT_EQ(first.ind_multiset, second.ind_multiset);
}

TEST(PipelineTest, WitnessDegree10) {
  const WitnessReport w = witness_degree_10();
  EXPECT_EQ(1920u, w.group_order);
  EXPECT_EQ(10u, w.mu_value);
  EXPECT_EQ(2u, w.mu_c2);
  ASSERT_TRUE(w.witness_element.has_value());
  const Permutation& z = *w.witness_element;
  EXPECT_EQ(2u, element_order(z));
  for (const auto& s : w.group.generators()) EXPECT_EQ(compose(s, z), compose(z, s));
  EXPECT_FALSE(StabChain(w.group).contains(z));
  EXPECT_EQ(3840u, w.join_order);
  EXPECT_EQ(10u, w.product_mu);
  EXPECT_LT(w.product_mu, w.mu_value + w.mu_c2);
  EXPECT_TRUE(w.certified);
}
