#include <random>

#include "gmock/gmock.h"
#include "oracle.hpp"
#include "permdeg/perm_group.hpp"
#include "permdeg/permutation.hpp"
#include "permdeg/stab_chain.hpp"

using namespace permdeg;

TEST(PermutationTest, ParsesCycleNotation) {
  const Permutation p = parse_perm("(1 2 3)", 3);
  EXPECT_EQ(1, p(0));
  EXPECT_EQ(2, p(1));
  EXPECT_EQ(0, p(2));

  EXPECT_TRUE(parse_perm("()", 5).is_identity());
  EXPECT_TRUE(parse_perm("id", 5).is_identity());
  EXPECT_EQ(5, parse_perm("()", 5).degree());

  EXPECT_EQ(parse_perm("(1,2)(3, 4,5)", 5), parse_perm("(1 2)(3 4 5)", 5))
    << "comma and whitespace separators are interchangeable";
}

TEST(PermutationTest, RejectsBadNotation) {
  EXPECT_THROW(parse_perm("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_perm("(0 1)", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 2", 3), ParseError);
  EXPECT_THROW(parse_perm("1 2)", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 x)", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 1)", 3), ParseError);
}

TEST(PermutationTest, ComposesLeftFactorFirst) {
  const Permutation p = parse_perm("(1 2)", 3);
  const Permutation q = parse_perm("(2 3)", 3);
  const Permutation r = compose(p, q);
  EXPECT_EQ(parse_perm("(1 3 2)", 3), r);
  EXPECT_EQ(2, r(0));
  EXPECT_EQ(1, r(2));
  EXPECT_EQ(0, r(1));

  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(q, compose(Permutation(3), q));
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST(PermutationTest, ConjugationMovesCycles) {
  const Permutation k = parse_perm("(1 2 3)", 4);
  const Permutation s = parse_perm("(3 4)", 4);
  // s^-1 k s sends s(a) to s(k(a))
  EXPECT_EQ(parse_perm("(1 2 4)", 4), conjugate(k, s));
}

TEST(PermutationTest, ElementOrderIsLcmOfCycles) {
  EXPECT_EQ(6u, element_order(parse_perm("(1 2)(3 4 5)", 5)));
  EXPECT_EQ(1u, element_order(Permutation(4)));
  EXPECT_EQ(7u, element_order(parse_perm("(1 2 3 4 5 6 7)", 7)));
}

TEST(PermutationTest, CycleTypeKeyIsInjective) {
  std::map<std::uint64_t, std::vector<int>> seen;
  for (const auto& p : oracle::all_perms(7)) {
    auto [it, fresh] = seen.emplace(p.cycle_type_key(), p.cycle_type());
    EXPECT_EQ(it->second, p.cycle_type());
  }
  EXPECT_EQ(15u, seen.size()) << "S7 has 15 cycle types";
}

TEST(PermutationTest, FormatParseRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int i = 0; i < 1000; ++i) {
    const int n = deg(rng);
    const Permutation p = oracle::random_perm(rng, n);
    EXPECT_EQ(p, parse_perm(format_perm(p), n)) << format_perm(p);
  }
}

TEST(PermutationTest, GroupAxiomsOnSamples) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Permutation a = oracle::random_perm(rng, 9);
    const Permutation b = oracle::random_perm(rng, 9);
    const Permutation c = oracle::random_perm(rng, 9);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_TRUE(compose(a, a.inverse()).is_identity());
    EXPECT_TRUE(a.pow(static_cast<std::int64_t>(element_order(a))).is_identity());
  }
}

TEST(PermutationTest, ElementOrderMatchesCyclicGroupOrder) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = oracle::random_perm(rng, 8);
    EXPECT_EQ(element_order(p), group_order(PermGroup(8, {p})));
  }
}

TEST(PermGroupTest, NamedGroupOrders) {
  EXPECT_EQ(120u, group_order(make_named(NamedKind::symmetric, 5)));
  EXPECT_EQ(12u, group_order(make_named(NamedKind::alternating, 4)));
  const PermGroup c6 = make_named(NamedKind::cyclic, 6);
  EXPECT_EQ(6u, group_order(c6));
  EXPECT_EQ(1u, c6.generators().size());
  EXPECT_EQ(1u, group_order(make_named(NamedKind::symmetric, 1)));
  EXPECT_THROW(make_named(NamedKind::symmetric, 0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    EXPECT_EQ(f, group_order(symmetric_group(n)));
    EXPECT_EQ(n >= 2 ? f / 2 : 1, group_order(alternating_group(n)));
  }
}

TEST(PermGroupTest, GppqOrders) {
  const PermGroup g = make_gppq(2, 5);
  EXPECT_EQ(10, g.degree());
  EXPECT_EQ(1920u, group_order(g));
  EXPECT_EQ(24u, group_order(make_gppq(2, 3)));
  EXPECT_EQ(150u, group_order(make_gppq(5, 3)));
  EXPECT_EQ(96u, group_order(make_gppq(4, 3)));
  EXPECT_THROW(make_gppq(1, 3), std::invalid_argument);
  EXPECT_THROW(make_gppq(3, 1), std::invalid_argument);
}

TEST(PermGroupTest, GppqPreservesBlocks) {
  for (int p = 2; p <= 3; ++p)
    for (int q = 2; q <= 3; ++q) {
      const PermGroup g = make_gppq(p, q);
      for (const auto& s : g.generators())
        for (int a = 0; a < p * q; ++a)
          for (int b = 0; b < p * q; ++b)
            if (a / p == b / p) EXPECT_EQ(s(a) / p, s(b) / p);

      // elements fixing every block setwise
      std::uint64_t kernel = 0;
      for (const auto& x : oracle::closure(g)) {
        bool fixes = true;
        for (int a = 0; a < p * q; ++a)
          if (x(a) / p != a / p) fixes = false;
        if (fixes) ++kernel;
      }
      std::uint64_t expected = 1;
      for (int i = 1; i < q; ++i) expected *= p;
      EXPECT_EQ(expected, kernel) << "p=" << p << " q=" << q;
    }
}

TEST(PermGroupTest, DirectProductShiftsSecondFactor) {
  const PermGroup c2 = cyclic_group(2);
  const PermGroup c3 = cyclic_group(3);
  const PermGroup p = direct_product_disjoint(c2, c3);
  EXPECT_EQ(5, p.degree());
  EXPECT_EQ(6u, group_order(p));
  EXPECT_EQ(parse_perm("(3 4 5)", 5), p.generators()[1]);

  const PermGroup shifted = direct_product_disjoint(PermGroup(2), c3);
  EXPECT_EQ(3u, group_order(shifted));
  EXPECT_EQ(3840u, group_order(direct_product_disjoint(make_gppq(2, 5), c2)));
}

TEST(PermGroupTest, ParseGroupChecksGenerators) {
  const PermGroup g = parse_group(4, {"(1 2 3 4)", "(1 3)"});
  EXPECT_EQ(8u, group_order(g));
  EXPECT_THROW(parse_group(3, {"(1 4)"}), ParseError);
  EXPECT_EQ(1u, group_order(parse_group(3, {})));
}
