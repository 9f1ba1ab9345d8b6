#include <gtest/gtest.h>

#include "corpus.hpp"
#include "omega/commutator.hpp"
#include "omega/constructions.hpp"
#include "oracles.hpp"

namespace omega {
namespace {

std::vector<ElementSet> ideals_of(TableAlgebra const& a) {
  return enumerate_ideals(a, ElementSet::range(a.size()), corpus::wide());
}

ElementSet whole(TableAlgebra const& a) { return ElementSet::range(a.size()); }

// Runs body(entry, basis, ideals) over the corpus entries of size <= limit.
template <typename F>
void over_corpus(std::uint64_t limit, F&& body) {
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() > limit) {
      continue;
    }
    auto const ideals = ideals_of(e.algebra);
    for (auto const& name : e.bases) {
      body(e, preset_basis(name, e.algebra.signature()), ideals);
    }
  }
}

TEST(BuildTriple, C2Triple) {
  TableAlgebra const  c2 = build_group("cyclic 2");
  TripleAlgebra const t  = build_triple(c2, whole(c2), whole(c2));
  std::set<std::vector<Code>> triples;
  for (Code x : t.t.elements) {
    std::vector<Code> coords(3);
    t.cube.decode(x, coords);
    std::vector<Code> mapped;
    for (Code c : coords) {
      mapped.push_back(t.embedding[c]);
    }
    triples.insert(mapped);
  }
  EXPECT_EQ(triples, (std::set<std::vector<Code>>{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(BuildTriple, TrivialLeftIdealGivesACopyOfN) {
  TableAlgebra const  s3 = build_group("symmetric 3");
  TripleAlgebra const t  = build_triple(s3, ElementSet::unit(), whole(s3));
  EXPECT_EQ(t.t.elements.size(), 6u);
  for (Code x : t.t.elements) {
    EXPECT_EQ(t.cube.coordinate(x, 1), 0u);
    EXPECT_EQ(t.cube.coordinate(x, 0), t.cube.coordinate(x, 2));
  }
}

TEST(BuildTriple, CoordinatesLieInTheIdeals) {
  over_corpus(24, [](corpus::Entry const& e, IdentityBasis const&,
                     std::vector<ElementSet> const& ideals) {
    for (auto const& m : ideals) {
      for (auto const& n : ideals) {
        TripleAlgebra const t = build_triple(e.algebra, m, n);
        for (Code x : t.t.elements) {
          EXPECT_TRUE(m.contains(t.embedding[t.cube.coordinate(x, 1)])) << e.name;
          EXPECT_TRUE(n.contains(t.embedding[t.cube.coordinate(x, 2)])) << e.name;
        }
        for (Code x : m) {
          std::vector<Code> seed = {*t.embedding.position(x), *t.embedding.position(x), 0};
          EXPECT_TRUE(t.t.elements.contains(t.cube.encode(seed))) << e.name;
        }
        for (Code x : n) {
          std::vector<Code> seed = {*t.embedding.position(x), 0, *t.embedding.position(x)};
          EXPECT_TRUE(t.t.elements.contains(t.cube.encode(seed))) << e.name;
        }
      }
    }
  });
}

TEST(CValues, GroupCommutatorsOfS3) {
  TableAlgebra const s3 = build_group("symmetric 3");
  auto const r = c_values(s3, whole(s3), whole(s3), abelianization_basis(s3.signature()));
  EXPECT_EQ(r.result, (ElementSet{0, 3, 4}));
  for (auto const& w : r.witnesses) {
    ASSERT_TRUE(w.index.has_value());
    EXPECT_TRUE(r.result.contains(*w.index));
  }
}

TEST(CValues, HostInTheVarietyGivesTheUnit) {
  TableAlgebra const c6 = build_group("cyclic 6");
  EXPECT_TRUE(c_values(c6, whole(c6), whole(c6), abelianization_basis(c6.signature()))
                  .result.is_trivial());
}

TEST(CValues, CubicNilRingSquares) {
  ZpRing const        r     = cubic_nil_ring();
  IdentityBasis const basis = preset_basis("exp2", r.signature());
  Subspace const      full  = Subspace::full(2, 3);
  auto const          cv    = c_values(r, full, full, basis);
  EXPECT_EQ(cv.result, named_ideal(r, {"a^3"}));
  EXPECT_FALSE(cv.result.contains(r.parse("a^2")));
}

TEST(RelativeCommutator, WholeAlgebraGivesTheReflectionKernel) {
  over_corpus(64, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const&) {
    EXPECT_EQ(relative_commutator(e.algebra, whole(e.algebra), whole(e.algebra), b).result,
              reflection(e.algebra, b).projection.kernel())
        << e.name << " " << b.name;
  });
}

TEST(RelativeCommutator, DerivedSubgroupOfS3) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_EQ(relative_commutator(s3, whole(s3), whole(s3), abelianization_basis(s3.signature()))
                .result,
            (ElementSet{0, 3, 4}));
}

TEST(RelativeCommutator, CubicNilRingSquaresStrictlyAboveCValues) {
  ZpRing const        r     = cubic_nil_ring();
  IdentityBasis const basis = preset_basis("exp2", r.signature());
  Subspace const      full  = Subspace::full(2, 3);
  auto const          rc    = relative_commutator(r, full, full, basis);
  EXPECT_EQ(rc.result, named_ideal(r, {"a^2"}));
  EXPECT_TRUE(rc.result.contains(r.parse("a^2")));
  EXPECT_NE(rc.result, c_values(r, full, full, basis).result);
}

TEST(RelativeCommutator, WitnessesBelongToTheResult) {
  over_corpus(36, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const& ideals) {
    for (auto const& m : ideals) {
      auto const r = relative_commutator(e.algebra, m, whole(e.algebra), b);
      for (auto const& w : r.witnesses) {
        EXPECT_TRUE(r.result.contains(*w.index)) << e.name;
      }
    }
  });
}

TEST(RelativeCommutator, TrivialIffSatisfies) {
  over_corpus(64, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const&) {
    EXPECT_EQ(relative_commutator(e.algebra, whole(e.algebra), whole(e.algebra), b)
                  .result.is_trivial(),
              satisfies(e.algebra, b))
        << e.name << " " << b.name;
  });
}

TEST(RelativeCommutator, SymmetricContainedInMeetAndMonotone) {
  over_corpus(16, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const& ideals) {
    std::size_t const                    k = ideals.size();
    std::vector<std::vector<ElementSet>> res(k, std::vector<ElementSet>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        res[i][j] = relative_commutator(e.algebra, ideals[i], ideals[j], b).result;
        EXPECT_TRUE(c_values(e.algebra, ideals[i], ideals[j], b).result.is_subset_of(res[i][j]))
            << e.name;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_EQ(res[i][j], res[j][i]) << e.name;
        EXPECT_TRUE(res[i][j].is_subset_of(set_intersection(ideals[i], ideals[j]))) << e.name;
        for (std::size_t l = 0; l < k; ++l) {
          if (ideals[j].is_subset_of(ideals[l])) {
            EXPECT_TRUE(res[i][j].is_subset_of(res[i][l])) << e.name;
          }
        }
      }
    }
  });
}

TEST(RelativeCommutator, TrivialFastPathAgrees) {
  over_corpus(36, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const& ideals) {
    for (auto const& m : ideals) {
      EXPECT_EQ(commutator_is_trivial(e.algebra, m, whole(e.algebra), b),
                relative_commutator(e.algebra, m, whole(e.algebra), b).result.is_trivial())
          << e.name;
    }
  });
}

TEST(RelativeCommutator, RejectsNonIdeals) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_THROW(relative_commutator(s3, ElementSet{0, 1}, whole(s3),
                                   abelianization_basis(s3.signature())),
               Error);
}

TEST(RelativeCommutator, JoinIsNotPreserved) {
  ZpRing const        r     = three_generator_ring();
  IdentityBasis const basis = preset_basis("cube", r.signature());
  Subspace const      s     = named_ideal(r, {"b"});
  Subspace const      r1    = named_ideal(r, {"a1", "b"});
  Subspace const      r2    = named_ideal(r, {"a2", "b"});
  auto const          left  = relative_commutator(r, s, r1, basis);
  auto const          right = relative_commutator(r, s, r2, basis);
  auto const          joint = relative_commutator(r, s, sum(r1, r2), basis);
  EXPECT_EQ(left.result.dimension(), 0u);
  EXPECT_EQ(right.result.dimension(), 0u);
  EXPECT_TRUE(joint.result.contains(r.parse("a1*a2*b")));
  EXPECT_NE(sum(left.result, right.result), joint.result);
}

TEST(Higgins, AbelianGroupIsTrivial) {
  TableAlgebra const g = build_group("cyclic 2 x cyclic 4");
  EXPECT_TRUE(higgins_commutator(g, whole(g), whole(g)).result.is_trivial());
}

TEST(Higgins, A3AgainstS3) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_EQ(higgins_commutator(s3, ElementSet{0, 3, 4}, whole(s3)).result,
            (ElementSet{0, 3, 4}));
}

TEST(Higgins, CubicNilRingIdealOfA) {
  ZpRing const   r    = cubic_nil_ring();
  Subspace const full = named_ideal(r, {"a"});
  EXPECT_EQ(higgins_commutator(r, full, full).result, named_ideal(r, {"a^2"}));
}

TEST(Higgins, GroupsMatchCommutatorSubgroups) {
  for (auto const& e : corpus::entries()) {
    if (e.family != corpus::Family::group) {
      continue;
    }
    auto const ideals = ideals_of(e.algebra);
    for (auto const& m : ideals) {
      for (auto const& n : ideals) {
        EXPECT_EQ(oracle::to_set(higgins_commutator(e.algebra, m, n).result),
                  oracle::group_commutator(e.algebra, oracle::to_set(m), oracle::to_set(n)))
            << e.name;
      }
    }
  }
}

TEST(Higgins, RingsMatchProductIdeals) {
  for (auto const& e : corpus::entries()) {
    if (e.family != corpus::Family::ring) {
      continue;
    }
    auto const ideals = ideals_of(e.algebra);
    for (auto const& m : ideals) {
      for (auto const& n : ideals) {
        EXPECT_EQ(oracle::to_set(higgins_commutator(e.algebra, m, n).result),
                  oracle::ring_commutator(e.algebra, oracle::to_set(m), oracle::to_set(n)))
            << e.name;
      }
    }
  }
}

TEST(Higgins, PreservedBySurjections) {
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() > 12) {
      continue;
    }
    auto const ideals = ideals_of(e.algebra);
    for (auto const& i : ideals) {
      Quotient const q = quotient(e.algebra, i);
      for (auto const& m : ideals) {
        for (auto const& n : ideals) {
          EXPECT_EQ(q.projection.image(higgins_commutator(e.algebra, m, n).result),
                    higgins_commutator(q.algebra, q.projection.image(m),
                                       q.projection.image(n))
                        .result)
              << e.name;
        }
      }
    }
  }
}

TEST(Central, UnitIsCentral) {
  over_corpus(64, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const&) {
    EXPECT_TRUE(is_central(e.algebra, ElementSet::unit(), b)) << e.name;
    EXPECT_TRUE(is_central_direct(e.algebra, ElementSet::unit(), b)) << e.name;
  });
}

TEST(Central, A3InS3IsNotCentral) {
  TableAlgebra const  s3 = build_group("symmetric 3");
  IdentityBasis const b  = abelianization_basis(s3.signature());
  EXPECT_FALSE(is_central(s3, ElementSet{0, 3, 4}, b));
  EXPECT_FALSE(is_central_direct(s3, ElementSet{0, 3, 4}, b));
}

TEST(Central, SquaresInC4AreCentral) {
  TableAlgebra const  c4 = build_group("cyclic 4");
  IdentityBasis const b  = abelianization_basis(c4.signature());
  EXPECT_TRUE(is_central(c4, ElementSet{0, 2}, b));
  EXPECT_TRUE(is_central_direct(c4, ElementSet{0, 2}, b));
}

TEST(Central, BothChecksAgreeAndMatchTheCentreForGroups) {
  over_corpus(64, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const& ideals) {
    for (auto const& n : ideals) {
      bool const c = is_central(e.algebra, n, b);
      EXPECT_EQ(c, is_central_direct(e.algebra, n, b)) << e.name << " " << b.name;
      if (e.family == corpus::Family::group && b.name == "abelian") {
        EXPECT_EQ(c, oracle::central_in_group(e.algebra, oracle::to_set(n))) << e.name;
      }
    }
  });
}

TEST(Central, RingBackendsAgree) {
  ZpRing const       r = build_ring({3, {"a", "b"}, true, 2});
  TableAlgebra const t = to_table_algebra(r);
  for (auto const& name : {"abelian", "exp2", "cube"}) {
    IdentityBasis const b = preset_basis(name, r.signature());
    for (auto const& gens : std::vector<std::vector<std::string>>{
             {}, {"a*b"}, {"a^2"}, {"b"}, {"a", "b"}}) {
      Subspace const n = named_ideal(r, gens);
      std::vector<Code> codes;
      for (auto const& v : n.elements()) {
        codes.push_back(r.index(v));
      }
      bool const c = is_central(r, n, b);
      EXPECT_EQ(c, is_central_direct(r, n, b)) << name;
      EXPECT_EQ(c, is_central(t, ElementSet(codes), b)) << name;
    }
  }
}

TEST(UniversalOracle, S3AgreesWithTheEngine) {
  TableAlgebra const  s3 = build_group("symmetric 3");
  IdentityBasis const b  = abelianization_basis(s3.signature());
  EXPECT_EQ(universal_oracle(s3, whole(s3), whole(s3), b), (ElementSet{0, 3, 4}));
}

TEST(UniversalOracle, OneElementAlgebra) {
  TableAlgebra const c1 = build_group("cyclic 1");
  EXPECT_EQ(universal_oracle(c1, whole(c1), whole(c1), abelianization_basis(c1.signature())),
            ElementSet::unit());
}

TEST(UniversalOracle, CubicNilRing) {
  ZpRing const        r = cubic_nil_ring();
  TableAlgebra const  t = to_table_algebra(r);
  IdentityBasis const b = preset_basis("exp2", r.signature());
  EXPECT_EQ(universal_oracle(t, whole(t), whole(t), b),
            relative_commutator(t, whole(t), whole(t), b).result);
  EXPECT_EQ(universal_oracle(t, whole(t), whole(t), b).size(), 4u);
}

TEST(UniversalOracle, AgreesWithTheEngineOnSmallHosts) {
  over_corpus(12, [](corpus::Entry const& e, IdentityBasis const& b,
                     std::vector<ElementSet> const& ideals) {
    for (auto const& m : ideals) {
      for (auto const& n : ideals) {
        EXPECT_EQ(universal_oracle(e.algebra, m, n, b),
                  relative_commutator(e.algebra, m, n, b).result)
            << e.name << " " << b.name;
      }
    }
  });
}

TEST(UniversalOracle, GuardOnHostSize) {
  TableAlgebra const s4 = build_group("symmetric 4");
  EXPECT_THROW(universal_oracle(s4, whole(s4), whole(s4), abelianization_basis(s4.signature())),
               Error);
}

TEST(ImageCondition, AbelianBasisOnS3) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_TRUE(image_condition(s3, abelianization_basis(s3.signature())));
}

TEST(ImageCondition, SquaresFailOnTheCubicNilRing) {
  ZpRing const        r = cubic_nil_ring();
  IdentityBasis const b = preset_basis("exp2", r.signature());
  EXPECT_FALSE(image_condition(r, b));
  EXPECT_FALSE(image_condition(to_table_algebra(r), b));
}

TEST(ImageCondition, EmptyBasisHolds) {
  over_corpus(64, [](corpus::Entry const& e, IdentityBasis const&,
                     std::vector<ElementSet> const&) {
    EXPECT_TRUE(image_condition(e.algebra, IdentityBasis{"empty", {}})) << e.name;
  });
}

TEST(ImageCondition, AbelianBasisHoldsOnTheCorpus) {
  for (auto const& e : corpus::entries()) {
    EXPECT_TRUE(image_condition(e.algebra, abelianization_basis(e.algebra.signature())))
        << e.name;
  }
}

TEST(Backends, RingCommutatorsAgree) {
  auto rng = corpus::rng(31);
  std::vector<ZpRing> rings = {cubic_nil_ring(), build_ring({2, {"a", "b"}, true, 2}),
                               build_ring({3, {"a"}, false, 2}),
                               build_ring({2, {"a"}, false, 4})};
  for (auto const& r : rings) {
    TableAlgebra const t    = to_table_algebra(r);
    Subspace const     full = Subspace::full(r.p(), r.dimension());
    auto codes = [&](Subspace const& s) {
      std::vector<Code> out;
      for (auto const& v : s.elements()) {
        out.push_back(r.index(v));
      }
      return ElementSet(std::move(out));
    };
    for (auto const& name : {"abelian", "exp2", "cube"}) {
      IdentityBasis const b = preset_basis(name, r.signature());
      for (int trial = 0; trial < 4; ++trial) {
        Subspace const m = generate_ideal(r, full, std::vector<Vec>{r.element(rng() % t.size())});
        Subspace const n = generate_ideal(r, full, std::vector<Vec>{r.element(rng() % t.size())});
        EXPECT_EQ(codes(relative_commutator(r, m, n, b).result),
                  relative_commutator(t, codes(m), codes(n), b).result)
            << name;
        EXPECT_EQ(codes(c_values(r, m, n, b).result),
                  c_values(t, codes(m), codes(n), b).result)
            << name;
      }
      EXPECT_EQ(image_condition(r, b), image_condition(t, b)) << name;
    }
  }
}

}  // namespace
}  // namespace omega
