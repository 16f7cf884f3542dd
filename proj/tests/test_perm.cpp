#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "ybx/errors.hpp"
#include "ybx/perm.hpp"

using namespace ybx;
using ybx::testing::example16a;
using ybx::testing::example16b;
using ybx::testing::example24;

namespace {

const PointSet kSixteen("123456789abcdefg");

// Left regular representation of a group given by its multiplication on
// element indices 0..n-1 (0 is the identity).
FiniteGroup regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                    const std::vector<std::size_t>& gens) {
  std::vector<Perm> perms;
  for (std::size_t g : gens) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(mul(g, x));
    perms.emplace_back(std::move(img));
  }
  return FiniteGroup::closure(perms, n);
}

// Z/4 x| Z/4 with b a b^-1 = a^-1; element (i, j) is index 4j + i.
FiniteGroup z4_semidirect_z4() {
  auto mul = [](std::size_t p, std::size_t q) {
    const std::size_t i1 = p % 4, j1 = p / 4, i2 = q % 4, j2 = q / 4;
    const std::size_t i = (j1 % 2 == 0) ? (i1 + i2) % 4 : (i1 + 4 - i2) % 4;
    return 4 * ((j1 + j2) % 4) + i;
  };
  return regular(16, mul, {1, 4});
}

}  // namespace

TEST(PointSet, RejectsDuplicatesAndReservedCharacters) {
  EXPECT_THROW(PointSet("1231"), std::invalid_argument);
  EXPECT_THROW(PointSet("12(3"), std::invalid_argument);
  EXPECT_THROW(PointSet(""), std::invalid_argument);
  EXPECT_EQ(PointSet::standard(24).labels(), "123456789abcdefghijklmno");
  EXPECT_EQ(*kSixteen.find('g'), 15u);
  EXPECT_FALSE(kSixteen.find('z'));
}

TEST(ParseCycles, SixteenPointSigma2) {
  const Perm p = parse_cycles("(37)(48)(bf)(cg)", kSixteen);
  auto at = [&](char c) { return kSixteen.label(p(*kSixteen.find(c))); };
  EXPECT_EQ(at('3'), '7');
  EXPECT_EQ(at('7'), '3');
  EXPECT_EQ(at('4'), '8');
  EXPECT_EQ(at('b'), 'f');
  EXPECT_EQ(at('g'), 'c');
  EXPECT_EQ(at('1'), '1');
  EXPECT_EQ(p.order(), 2u);
  EXPECT_EQ(p.cycles().size(), 4u);
}

TEST(ParseCycles, EmptyAndUnitCycleAreIdentity) {
  EXPECT_TRUE(parse_cycles("", kSixteen).is_identity());
  EXPECT_TRUE(parse_cycles("()", kSixteen).is_identity());
  EXPECT_TRUE(parse_cycles("  ( ) ", kSixteen).is_identity());
}

TEST(ParseCycles, FourCycle) {
  const Perm p = parse_cycles("(9dea)", kSixteen);
  auto at = [&](char c) { return kSixteen.label(p(*kSixteen.find(c))); };
  EXPECT_EQ(at('9'), 'd');
  EXPECT_EQ(at('d'), 'e');
  EXPECT_EQ(at('e'), 'a');
  EXPECT_EQ(at('a'), '9');
  EXPECT_EQ(p.order(), 4u);
}

TEST(ParseCycles, WhitespaceAndCommas) {
  EXPECT_EQ(parse_cycles("(3 4)(5 6)", kSixteen), parse_cycles("(34)(56)", kSixteen));
  EXPECT_EQ(parse_cycles("(b,f)(c,g)", kSixteen), parse_cycles("(bf)(cg)", kSixteen));
}

TEST(ParseCycles, Errors) {
  using Kind = CycleParseError::Kind;
  auto kind_of = [](std::string_view text) {
    try {
      parse_cycles(text, kSixteen);
    } catch (const CycleParseError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for " << text;
    return Kind::Malformed;
  };
  EXPECT_EQ(kind_of("(3z)"), Kind::UnknownLabel);
  EXPECT_EQ(kind_of("(34)(45)"), Kind::RepeatedLabel);
  EXPECT_EQ(kind_of("(343)"), Kind::RepeatedLabel);
  EXPECT_EQ(kind_of("(34"), Kind::Malformed);
  EXPECT_EQ(kind_of("34)"), Kind::Malformed);
  EXPECT_EQ(kind_of("((34))"), Kind::Malformed);
  EXPECT_EQ(kind_of("(34),"), Kind::Malformed);
}

TEST(FormatCycles, CanonicalForm) {
  const Perm p = parse_cycles("(4ogc)(23)", PointSet::standard(24));
  EXPECT_EQ(format_cycles(p, PointSet::standard(24)), "(23)(4ogc)");
  EXPECT_EQ(format_cycles(parse_cycles("(ea9d)", kSixteen), kSixteen), "(9dea)");
  EXPECT_EQ(format_cycles(Perm::identity(16), kSixteen), "");
}

TEST(Perm, ComposeInverseAct) {
  const Perm p = parse_cycles("(37)", kSixteen);
  EXPECT_EQ(act(p, 2), 6u);  // '3' -> '7'
  const Perm q = parse_cycles("(25)(3b4f)(7c8g)(9dea)", kSixteen);
  EXPECT_TRUE(compose(q, inverse(q)).is_identity());
  EXPECT_TRUE(compose(inverse(q), q).is_identity());
  EXPECT_EQ(q.order(), 4u);
  EXPECT_EQ(compose(q, q).order(), 2u);
  EXPECT_THROW(compose(p, Perm::identity(3)), std::invalid_argument);
  EXPECT_THROW(Perm({0, 0, 1}), std::invalid_argument);
}

TEST(PermProperty, ComposeActsRightToLeft) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Perm p = ybx::testing::random_perm(n, rng);
    const Perm q = ybx::testing::random_perm(n, rng);
    const Perm pq = compose(p, q);
    for (Point i = 0; i < n; ++i) {
      EXPECT_EQ(act(pq, i), act(p, act(q, i)));
      EXPECT_EQ(act(inverse(p), act(p, i)), i);
    }
  }
}

TEST(Closure, TrivialAndReference) {
  const FiniteGroup trivial = FiniteGroup::closure({}, 5);
  EXPECT_EQ(trivial.order(), 1u);
  EXPECT_TRUE(trivial.element(0).is_identity());

  const Solution s = example16a();
  const FiniteGroup g = FiniteGroup::closure(s.sigmas(), 16);
  EXPECT_EQ(g.order(), 16u);
  const std::set<Perm> sigma_set(s.sigmas().begin(), s.sigmas().end());
  const std::set<Perm> elements(g.elements().begin(), g.elements().end());
  EXPECT_EQ(sigma_set, elements);

  EXPECT_EQ(FiniteGroup::closure(example16b().sigmas(), 16).order(), 16u);
}

TEST(Closure, BoundAndWords) {
  const FiniteGroup s5 = named_group(GroupSpec::symmetric(5));
  EXPECT_EQ(s5.order(), 120u);
  EXPECT_THROW(FiniteGroup::closure(s5.generators(), 5, 100), GroupTooLarge);
  for (std::size_t i = 0; i < s5.order(); ++i) {
    Perm p = Perm::identity(5);
    for (std::size_t gi : s5.word(i)) p = compose(p, s5.generators()[gi]);
    EXPECT_EQ(p, s5.element(i));
  }
}

TEST(ClosureProperty, OrderDividesFactorialAndContainsGenerators) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<Perm> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(ybx::testing::random_perm(n, rng));
    const FiniteGroup g = FiniteGroup::closure(gens, n);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(fact % g.order(), 0u);
    for (const Perm& p : gens) EXPECT_TRUE(g.contains(p));
    for (const Perm& a : g.elements()) {
      EXPECT_TRUE(g.contains(a.inverse()));
      for (const Perm& b : g.generators()) EXPECT_TRUE(g.contains(compose(a, b)));
    }
  }
}

TEST(FromElements, AcceptsSubgroupsRejectsOthers) {
  const FiniteGroup s4 = named_group(GroupSpec::symmetric(4));
  std::vector<Perm> even;
  for (const Perm& p : s4.elements()) {
    std::size_t transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += c.size() - 1;
    if (transpositions % 2 == 0) even.push_back(p);
  }
  EXPECT_EQ(FiniteGroup::from_elements(even, 4).order(), 12u);
  std::vector<Perm> broken(even.begin(), even.end() - 1);
  EXPECT_THROW(FiniteGroup::from_elements(broken, 4), std::invalid_argument);
}

TEST(Orbits, Basic) {
  EXPECT_EQ(orbits({}, 3), (Partition{{0}, {1}, {2}}));
  const std::vector<Perm> cyc{Perm({1, 2, 3, 4, 0})};
  EXPECT_EQ(orbits(cyc, 5), (Partition{{0, 1, 2, 3, 4}}));
}

TEST(Orbits, SixteenPointExample) {
  const Solution s = example16a();
  const Partition orb = orbits(s.sigmas(), 16);
  std::vector<std::string> labels;
  for (const auto& o : orb) {
    std::string l;
    for (Point p : o) l += s.points().label(p);
    labels.push_back(l);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "25", "3478bcfg", "6", "9ade"}));
}

TEST(OrbitsProperty, AgreeWithClosure) {
  std::mt19937_64 rng(3);
  std::vector<std::vector<Perm>> cases{example24().sigmas(), example16b().sigmas()};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 6;
    // Products of short random cycles, so that orbits are usually nontrivial.
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      const Perm p = ybx::testing::random_perm(n, rng);
      std::vector<Point> img(n);
      for (Point i = 0; i < n; ++i) img[i] = i;
      img[p(0)] = p(1);
      img[p(1)] = p(0);
      gens.emplace_back(std::move(img));
    }
    cases.push_back(std::move(gens));
  }
  for (const auto& gens : cases) {
    const std::size_t n = gens[0].degree();
    const FiniteGroup g = FiniteGroup::closure(gens, n);
    const Partition orb = orbits(gens, n);
    std::vector<std::size_t> block(n);
    for (std::size_t b = 0; b < orb.size(); ++b)
      for (Point p : orb[b]) block[p] = b;
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        bool reach = false;
        for (const Perm& e : g.elements()) reach = reach || e(x) == y;
        EXPECT_EQ(reach, block[x] == block[y]);
      }
    }
  }
}

TEST(Normality, TrivialSubgroupAndErrors) {
  const FiniteGroup z6 = named_group(GroupSpec::cyclic(6));
  const FiniteGroup one = FiniteGroup::closure({}, 6);
  EXPECT_TRUE(is_normal(one, z6));
  const FiniteGroup s3 = named_group(GroupSpec::symmetric(3));
  const std::vector<Perm> transposition{Perm({1, 0, 2})};
  EXPECT_FALSE(is_normal(FiniteGroup::closure(transposition, 3), s3));
  EXPECT_THROW(is_normal(s3, FiniteGroup::closure(transposition, 3)),
               std::invalid_argument);
}

TEST(IndexTwo, Counts) {
  const auto s4 = index2_subgroups(named_group(GroupSpec::symmetric(4)));
  ASSERT_EQ(s4.size(), 1u);
  EXPECT_EQ(s4[0].order(), 12u);
  EXPECT_TRUE(index2_subgroups(named_group(GroupSpec::cyclic(15))).empty());
  EXPECT_EQ(index2_subgroups(named_group(GroupSpec::dihedral(8))).size(), 3u);
  EXPECT_EQ(index2_subgroups(named_group(parse_group_spec("Z/2 x Z/2 x Z/2"))).size(), 7u);

  const auto ex = index2_subgroups(FiniteGroup::closure(example24().sigmas(), 24));
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].order(), 12u);
  EXPECT_TRUE(is_normal(ex[0], FiniteGroup::closure(example24().sigmas(), 24)));
}

TEST(Subgroups, KnownCounts) {
  EXPECT_EQ(enumerate_subgroups(named_group(GroupSpec::symmetric(4))).size(), 30u);
  EXPECT_EQ(enumerate_subgroups(named_group(GroupSpec::dihedral(8))).size(), 10u);
  EXPECT_EQ(enumerate_subgroups(named_group(parse_group_spec("Z/2 x Z/2"))).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(named_group(GroupSpec::cyclic(12))).size(), 6u);
  EXPECT_THROW(enumerate_subgroups(named_group(GroupSpec::symmetric(5)), 100),
               GroupTooLarge);
}

TEST(NamedGroups, Orders) {
  EXPECT_EQ(named_group(GroupSpec::cyclic(1)).order(), 1u);
  const FiniteGroup d8 = named_group(GroupSpec::dihedral(8));
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_FALSE(d8.is_abelian());
  EXPECT_EQ(named_group(parse_group_spec("Z/2 x D8")).order(), 16u);
  EXPECT_EQ(named_group(GroupSpec::dihedral(4)).order(), 4u);
  EXPECT_EQ(named_group(GroupSpec::dihedral(2)).order(), 2u);
  EXPECT_THROW(named_group(GroupSpec::dihedral(7)), std::invalid_argument);
  EXPECT_THROW(named_group(GroupSpec::symmetric(8), 5000), GroupTooLarge);
  EXPECT_THROW(parse_group_spec("Q8"), std::invalid_argument);
  for (const char* name : {"Z/2 x D8", "Sym4", "Z/3", "D10 x Z/2 x Z/2"})
    EXPECT_EQ(parse_group_spec(name).name(), name);
}

TEST(Isomorphism, Reference) {
  const FiniteGroup g16 = FiniteGroup::closure(example16b().sigmas(), 16);
  EXPECT_TRUE(is_isomorphic(g16, named_group(parse_group_spec("Z/2 x D8"))));
  EXPECT_FALSE(is_isomorphic(g16, named_group(GroupSpec::dihedral(16))));
  const FiniteGroup g24 = FiniteGroup::closure(example24().sigmas(), 24);
  EXPECT_TRUE(is_isomorphic(g24, named_group(GroupSpec::symmetric(4))));
  EXPECT_FALSE(is_isomorphic(g24, named_group(GroupSpec::dihedral(24))));
}

TEST(Isomorphism, SameOrderProfileButDifferent) {
  const FiniteGroup a = named_group(parse_group_spec("Z/4 x Z/4"));
  const FiniteGroup b = z4_semidirect_z4();
  ASSERT_EQ(a.order_profile(), b.order_profile());
  EXPECT_FALSE(is_isomorphic(a, b));
  EXPECT_FALSE(is_isomorphic(b, a));
  EXPECT_TRUE(is_isomorphic(b, b));
}

TEST(IsomorphismProperty, ReflexiveSymmetricAndInvariantUnderRelabeling) {
  std::vector<FiniteGroup> groups;
  for (const char* name : {"Z/8", "Z/2 x Z/4", "Z/2 x Z/2 x Z/2", "D8", "Z/2 x D8",
                           "Z/4 x Z/4", "Sym4", "D24", "Z/2 x Z/12", "D6 x Z/4"})
    groups.push_back(named_group(parse_group_spec(name)));
  groups.push_back(z4_semidirect_z4());
  groups.push_back(FiniteGroup::closure(example16a().sigmas(), 16));

  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const FiniteGroup& g = groups[i];
    EXPECT_TRUE(is_isomorphic(g, g));
    const Perm c = ybx::testing::random_perm(g.degree(), rng);
    std::vector<Perm> conj;
    for (const Perm& p : g.generators()) conj.push_back(compose(c, compose(p, c.inverse())));
    EXPECT_TRUE(is_isomorphic(g, FiniteGroup::closure(conj, g.degree())));
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (i == j) continue;
      const bool ij = is_isomorphic(groups[i], groups[j]);
      EXPECT_EQ(ij, is_isomorphic(groups[j], groups[i]));
      if (groups[i].order() != groups[j].order() ||
          groups[i].order_profile() != groups[j].order_profile())
        EXPECT_FALSE(ij);
    }
  }
}

TEST(Isomorphism, Bound) {
  EXPECT_THROW(is_isomorphic(named_group(GroupSpec::symmetric(5)),
                             named_group(GroupSpec::symmetric(5))),
               GroupTooLarge);
}

TEST(Identify, Catalogue) {
  EXPECT_EQ(identify_group(FiniteGroup::closure(example16b().sigmas(), 16))->name(),
            "Z/2 x D8");
  EXPECT_EQ(identify_group(FiniteGroup::closure(example24().sigmas(), 24))->name(), "Sym4");
  EXPECT_EQ(identify_group(named_group(GroupSpec::cyclic(6)))->name(), "Z/6");
  EXPECT_EQ(identify_group(named_group(GroupSpec::symmetric(3)))->name(), "D6");
  EXPECT_EQ(identify_group(FiniteGroup::closure({}, 2))->name(), "Z/1");
  EXPECT_FALSE(identify_group(z4_semidirect_z4()).has_value());
}
