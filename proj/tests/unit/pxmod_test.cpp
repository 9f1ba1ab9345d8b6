#include <gtest/gtest.h>

#include "corpus.hpp"
#include "omega/closure.hpp"
#include "omega/commutator.hpp"
#include "omega/pxmod.hpp"
#include "oracles.hpp"

namespace omega {
namespace {

std::vector<Submodule> normal_submodules(PrecrossedModule const& x) {
  TableAlgebra const a = to_pxm(x);
  std::vector<Submodule> out;
  for (auto const& i : enumerate_ideals(a, ElementSet::range(a.size()), corpus::wide())) {
    out.push_back(ideal_submodule(x, i));
  }
  return out;
}

TEST(ToPxm, EncodingAndOperations) {
  PrecrossedModule const x = inversion_module(4);
  TableAlgebra const     a = to_pxm(x);
  ASSERT_EQ(a.size(), 8u);
  OpId const d = *a.signature().find("d");
  OpId const c = *a.signature().find("c");
  // (g,c) has code g*4 + c; (1,1) * (0,1) = (1, 1 + ^1 1) = (1,0).
  EXPECT_EQ(a.fast_mul(5, 1), 4u);
  EXPECT_EQ(a.apply(d, std::vector<Code>{7}), 4u);
  EXPECT_EQ(a.apply(c, std::vector<Code>{1}), 4u);
  EXPECT_EQ(a.apply(c, std::vector<Code>{2}), 0u);
}

TEST(ToPxm, CorpusModulesAreValid) {
  for (auto const& m : corpus::modules()) {
    EXPECT_NO_THROW(validate(m.x)) << m.name;
    EXPECT_NO_THROW(validate_pxm(to_pxm(m.x))) << m.name;
  }
}

TEST(ToPxm, RoundTripPreservesTheModule) {
  for (auto const& m : corpus::modules()) {
    PrecrossedModule const y = to_precrossed(to_pxm(m.x));
    ASSERT_EQ(y.c.size(), m.x.c.size()) << m.name;
    ASSERT_EQ(y.g.size(), m.x.g.size()) << m.name;
    // K[d] = {(e,c)} has codes 0..|C|-1 and d(A) = {(g,e)} has codes g*|C|,
    // so the re-indexing is the identity.
    EXPECT_EQ(y.c.table(0), m.x.c.table(0)) << m.name;
    EXPECT_EQ(y.g.table(0), m.x.g.table(0)) << m.name;
    EXPECT_EQ(y.boundary, m.x.boundary) << m.name;
    EXPECT_EQ(y.action, m.x.action) << m.name;
  }
}

TEST(ToPxm, KernelOfDIsTheSetOfDifferences) {
  for (auto const& e : corpus::entries()) {
    if (e.family != corpus::Family::pxm) {
      continue;
    }
    TableAlgebra const& a = e.algebra;
    OpId const          d = *a.signature().find("d");
    OpId const          inv = *a.signature().find("inv");
    std::set<Code>      kernel, differences;
    for (Code x = 0; x < a.size(); ++x) {
      if (a.apply(d, std::vector<Code>{x}) == 0) {
        kernel.insert(x);
      }
      differences.insert(
          a.fast_mul(a.apply(inv, std::vector<Code>{x}), a.apply(d, std::vector<Code>{x})));
    }
    EXPECT_EQ(kernel, differences) << e.name;
  }
}

TEST(ValidatePxm, RejectsAGroupWithoutOperators) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_THROW(validate_pxm(s3), Error);
}

TEST(Validate, RejectsABadBoundary) {
  PrecrossedModule x = inversion_module(4);
  x.boundary         = {0, 1, 1, 1};
  EXPECT_THROW(validate(x), Error);
}

TEST(Validate, RejectsANonEquivariantBoundary) {
  TableAlgebra const s3 = build_group("symmetric 3");
  PrecrossedModule   x  = conjugation_module(s3, ElementSet::range(6));
  for (auto& row : x.action) {
    for (Code c = 0; c < row.size(); ++c) {
      row[c] = c;
    }
  }
  EXPECT_THROW(validate(x), Error);
}

TEST(Peiffer, InversionOnC4) {
  PrecrossedModule const x = inversion_module(4);
  EXPECT_EQ(peiffer_commutator(x, whole(x), whole(x)), (ElementSet{0, 2}));
  EXPECT_FALSE(is_crossed(x));
}

TEST(Peiffer, ConjugationModulesAreCrossed) {
  TableAlgebra const s3 = build_group("symmetric 3");
  for (auto const& x : {conjugation_module(s3, ElementSet::range(6)),
                        conjugation_module(s3, ElementSet{0, 3, 4})}) {
    EXPECT_TRUE(is_crossed(x));
    EXPECT_TRUE(peiffer_commutator(x, whole(x), whole(x)).is_trivial());
  }
}

TEST(Peiffer, TrivialModuleGivesTheCommutatorSubgroup) {
  PrecrossedModule const x = trivial_module(build_group("symmetric 3"), build_group("cyclic 2"));
  EXPECT_EQ(peiffer_commutator(x, whole(x), whole(x)), (ElementSet{0, 3, 4}));
}

TEST(Peiffer, ElementFormula) {
  PrecrossedModule const x = inversion_module(4);
  // <k,l> = k l k^-1 ^{boundary k} l^-1 with boundary(1) = 1 inverting.
  EXPECT_EQ(peiffer_element(x, 1, 1), 2u);
  EXPECT_EQ(peiffer_element(x, 2, 1), 0u);
}

TEST(Peiffer, MatchesTheBruteForceClosure) {
  for (auto const& m : corpus::modules()) {
    auto const subs = normal_submodules(m.x);
    for (auto const& k : subs) {
      for (auto const& l : subs) {
        EXPECT_EQ(oracle::to_set(peiffer_commutator(m.x, k, l)),
                  oracle::peiffer(m.x, oracle::to_set(k.k), oracle::to_set(l.k)))
            << m.name;
      }
    }
  }
}

TEST(Peiffer, CrossedIffSatisfiesTheBasis) {
  for (auto const& m : corpus::modules()) {
    EXPECT_EQ(is_crossed(m.x), satisfies(to_pxm(m.x), xm_basis())) << m.name;
  }
}

TEST(Peiffer, AgreesWithTheRelativeCommutatorOnNamedModules) {
  for (auto const& m : corpus::modules()) {
    auto const subs = normal_submodules(m.x);
    for (auto const& k : subs) {
      for (auto const& l : subs) {
        PeifferCheck const r = peiffer_crosscheck(m.x, k, l);
        EXPECT_TRUE(r.agrees) << m.name;
      }
    }
  }
}

TEST(Peiffer, AgreesWithTheRelativeCommutatorOnRandomModules) {
  auto rng = corpus::rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    PrecrossedModule const x = corpus::random_module(rng);
    ASSERT_NO_THROW(validate(x));
    PeifferCheck const whole_check = peiffer_crosscheck(x, whole(x), whole(x));
    EXPECT_TRUE(whole_check.agrees);
    auto const subs = normal_submodules(x);
    Submodule const& k = subs[rng() % subs.size()];
    Submodule const& l = subs[rng() % subs.size()];
    EXPECT_TRUE(peiffer_crosscheck(x, k, l).agrees);
  }
}

TEST(Submodules, CorrespondToIdeals) {
  for (auto const& m : corpus::modules()) {
    TableAlgebra const a     = to_pxm(m.x);
    auto const         ideals = enumerate_ideals(a, ElementSet::range(a.size()), corpus::wide());
    std::set<std::pair<ElementSet, ElementSet>> from_ideals;
    for (auto const& i : ideals) {
      Submodule const s = ideal_submodule(m.x, i);
      EXPECT_TRUE(is_normal_submodule(m.x, s)) << m.name;
      EXPECT_EQ(submodule_ideal(m.x, s), i) << m.name;
      EXPECT_EQ(pxm_ideal_submodule(a, i), s) << m.name;
      from_ideals.insert({s.k, s.s});
    }
    // Every normal submodule is reached: brute force over subgroup pairs
    // closed from single generators.
    for (Code k = 0; k < m.x.c.size(); ++k) {
      for (Code s = 0; s < m.x.g.size(); ++s) {
        Submodule const sub = close_submodule(m.x, {k}, {s});
        EXPECT_TRUE(is_normal_submodule(m.x, sub)) << m.name;
        EXPECT_TRUE(from_ideals.count({sub.k, sub.s})) << m.name;
      }
    }
  }
}

TEST(Submodules, RejectsNonNormalPairs) {
  PrecrossedModule const x = conjugation_module(build_group("symmetric 3"), ElementSet::range(6));
  EXPECT_FALSE(is_normal_submodule(x, Submodule{ElementSet{0, 1}, ElementSet{0, 1}}));
  EXPECT_FALSE(is_normal_submodule(x, Submodule{ElementSet{0, 3, 4}, ElementSet{0}}));
  EXPECT_TRUE(is_normal_submodule(x, Submodule{ElementSet{0, 3, 4}, ElementSet{0, 3, 4}}));
}

TEST(XmBasis, Shape) {
  IdentityBasis const b = xm_basis();
  ASSERT_EQ(b.identities.size(), 1u);
  EXPECT_EQ(b.identities[0].arity(), 2u);
}

}  // namespace
}  // namespace omega
