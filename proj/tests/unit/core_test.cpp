#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "omega/closure.hpp"
#include "omega/constructions.hpp"
#include "oracles.hpp"

namespace omega {
namespace {

using oracle::Set;

TableAlgebra c3_with(std::vector<std::uint32_t> inv) {
  return TableAlgebra("C3", Signature{}, 3,
                      {{0, 1, 2, 1, 2, 0, 2, 0, 1}, std::move(inv)});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::invariant;
}

TEST(Validate, CyclicGroupOfOrderThree) {
  TableAlgebra const a = c3_with({0, 2, 1});
  EXPECT_NO_THROW(validate(a));
  EXPECT_EQ(a.size(), 3u);
}

TEST(Validate, WrongInverseIsAGroupAxiomViolation) {
  EXPECT_EQ(kind_of([] { validate(c3_with({0, 1, 1})); }), ErrorKind::group_axiom);
}

TEST(Validate, ExtraOperationMovingTheUnitIsAConstantViolation) {
  TableAlgebra const a("C2 with w", Signature({{"w", 1}}), 2,
                       {{0, 1, 1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(kind_of([&] { validate(a); }), ErrorKind::constant);
}

TEST(Validate, NonAssociativeTableIsRejected) {
  // A loop of order 5 that is not a group.
  TableAlgebra const a("loop", Signature{}, 5,
                       {{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                         3, 2, 4, 0, 1, 4, 3, 1, 2, 0},
                        {0, 1, 2, 3, 4}});
  EXPECT_EQ(kind_of([&] { validate(a); }), ErrorKind::group_axiom);
}

TEST(EvalTerm, VariableReturnsItsArgument) {
  TableAlgebra const s3 = build_group("symmetric 3");
  for (Code x = 0; x < 6; ++x) {
    std::vector<Code> args{x};
    EXPECT_EQ(eval_term(s3, parse_term("x0"), args), x);
  }
}

TEST(EvalTerm, ProductWithInverseIsTheUnit) {
  TableAlgebra const s3 = build_group("symmetric 3");
  for (Code x = 0; x < 6; ++x) {
    std::vector<Code> args{x};
    EXPECT_EQ(eval_term(s3, parse_term("(mul x0 (inv x0))"), args), 0u);
  }
}

TEST(EvalTerm, RingSquareOfA) {
  ZpRing const       r = cubic_nil_ring();
  TableAlgebra const t = to_table_algebra(r);
  std::vector<Code>  args{r.index(r.parse("a"))};
  Code const         v = eval_term(t, parse_term("(r* x0 x0)"), args);
  EXPECT_EQ(r.format(r.element(v)), "a^2");
}

TEST(EvalTerm, UnknownOperationAndArityMismatch) {
  TableAlgebra const s3 = build_group("symmetric 3");
  std::vector<Code>  args{1, 2};
  EXPECT_EQ(kind_of([&] { eval_term(s3, parse_term("(r* x0 x1)"), args); }),
            ErrorKind::unknown_operation);
  EXPECT_EQ(kind_of([&] { eval_term(s3, parse_term("(mul x0)"), args); }),
            ErrorKind::arity_mismatch);
}

TEST(EvalTerm, SubstitutionProperty) {
  auto rng = corpus::rng(1);
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() > 36) {
      continue;
    }
    auto const& sig = e.algebra.signature();
    for (int trial = 0; trial < 20; ++trial) {
      Term const  t = corpus::random_term(sig, 3, 4, rng);
      Term const  s = corpus::random_term(sig, 3, 3, rng);
      std::size_t i = rng() % 3;
      std::vector<Term> repl{Term::var(0), Term::var(1), Term::var(2)};
      repl[i] = s;
      Term const        ts = t.substitute(repl);
      std::vector<Code> a(3);
      for (auto& x : a) {
        x = rng() % e.algebra.size();
      }
      std::vector<Code> b = a;
      b[i]                = eval_term(e.algebra, s, a);
      EXPECT_EQ(eval_term(e.algebra, ts, a), eval_term(e.algebra, t, b))
          << e.name << ": " << to_string(t) << " with x" << i << " := " << to_string(s);
    }
  }
}

TEST(GenerateSubalgebra, TranspositionInS3) {
  TableAlgebra const s3   = build_group("symmetric 3");
  std::vector<Code>  seed = {1};
  EXPECT_EQ(generate_subalgebra(s3, std::span<Code const>(seed)).elements, (ElementSet{0, 1}));
}

TEST(GenerateSubalgebra, EmptySeedGivesTheUnit) {
  for (auto const& e : corpus::entries()) {
    EXPECT_EQ(generate_subalgebra(e.algebra, std::span<Code const>()).elements,
              ElementSet::unit())
        << e.name;
  }
}

TEST(GenerateSubalgebra, AGeneratesTheCubicNilRing) {
  ZpRing const       r    = cubic_nil_ring();
  TableAlgebra const t    = to_table_algebra(r);
  std::vector<Code>  seed = {r.index(r.parse("a"))};
  EXPECT_EQ(generate_subalgebra(t, std::span<Code const>(seed)).elements.size(), 8u);
  std::vector<Vec> vs = {r.parse("a")};
  EXPECT_EQ(generate_subalgebra(r, vs).size(), 8u);
}

TEST(GenerateSubalgebra, AgreesWithBruteForce) {
  auto rng = corpus::rng(2);
  for (auto const& e : corpus::entries()) {
    for (int trial = 0; trial < 5; ++trial) {
      ElementSet const seed = corpus::random_subset(e.algebra.size(), rng);
      EXPECT_EQ(oracle::to_set(generate_subalgebra(e.algebra, seed).elements),
                oracle::subalgebra(e.algebra, oracle::to_set(seed)))
          << e.name;
    }
  }
}

TEST(GenerateSubalgebra, GuardIsEnforced) {
  TableAlgebra const s4 = build_group("symmetric 4");
  PowerView const    cube(s4, 3);
  EngineConfig       cfg;
  cfg.guards.closure = 100;
  std::vector<Code> seed;
  for (Code x = 0; x < 50; ++x) {
    seed.push_back(x * 271);
  }
  EXPECT_EQ(kind_of([&] { generate_subalgebra(cube, std::span<Code const>(seed), cfg); }),
            ErrorKind::size_guard);
}

TEST(GenerateIdeal, ThreeCycleInS3GivesA3) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_EQ(generate_ideal(s3, ElementSet::range(6), ElementSet{3}), (ElementSet{0, 3, 4}));
}

TEST(GenerateIdeal, CubeInC6) {
  TableAlgebra const c6 = build_group("cyclic 6");
  EXPECT_EQ(generate_ideal(c6, ElementSet::range(6), ElementSet{3}), (ElementSet{0, 3}));
}

TEST(GenerateIdeal, ASquaredInTheCubicNilRing) {
  ZpRing const       r = cubic_nil_ring();
  TableAlgebra const t = to_table_algebra(r);
  ElementSet const   i =
      generate_ideal(t, ElementSet::range(8), ElementSet{r.index(r.parse("a^2"))});
  std::set<std::string> names;
  for (Code x : i) {
    names.insert(r.format(r.element(x)));
  }
  EXPECT_EQ(names, (std::set<std::string>{"0", "a^2", "a^3", "a^2 + a^3"}));
}

TEST(GenerateIdeal, AgreesWithBruteForceCongruence) {
  auto rng = corpus::rng(3);
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() > 36) {
      continue;
    }
    Set const all = oracle::all(e.algebra);
    for (int trial = 0; trial < 4; ++trial) {
      ElementSet const gens = corpus::random_subset(e.algebra.size(), rng);
      EXPECT_EQ(oracle::to_set(generate_ideal(e.algebra, ElementSet::range(e.algebra.size()), gens)),
                oracle::ideal(e.algebra, all, oracle::to_set(gens)))
          << e.name;
    }
  }
}

TEST(GenerateIdeal, ClosureProperties) {
  auto rng = corpus::rng(4);
  for (auto const& e : corpus::entries()) {
    ElementSet const whole = ElementSet::range(e.algebra.size());
    for (int trial = 0; trial < 4; ++trial) {
      ElementSet const a  = corpus::random_subset(e.algebra.size(), rng);
      ElementSet const b  = set_union(a, corpus::random_subset(e.algebra.size(), rng));
      ElementSet const ia = generate_ideal(e.algebra, whole, a);
      ElementSet const ib = generate_ideal(e.algebra, whole, b);
      EXPECT_TRUE(a.is_subset_of(ia)) << e.name;
      EXPECT_TRUE(ia.is_subset_of(ib)) << e.name;
      EXPECT_EQ(generate_ideal(e.algebra, whole, ia), ia) << e.name;
      EXPECT_TRUE(is_ideal(e.algebra, whole, ia)) << e.name;
    }
  }
}

TEST(Quotient, S3ByA3HasTwoElements) {
  TableAlgebra const s3 = build_group("symmetric 3");
  Quotient const     q  = quotient(s3, ElementSet{0, 3, 4});
  EXPECT_EQ(q.algebra.size(), 2u);
  EXPECT_NO_THROW(validate(q.algebra));
}

TEST(Quotient, ByTheUnitIsAnIsomorphicCopy) {
  TableAlgebra const s3 = build_group("symmetric 3");
  Quotient const     q  = quotient(s3, ElementSet::unit());
  EXPECT_EQ(q.algebra.size(), 6u);
  EXPECT_TRUE(is_homomorphism(s3, q.algebra, q.projection));
  std::vector<Code> images = q.projection.images;
  std::sort(images.begin(), images.end());
  EXPECT_EQ(images, (std::vector<Code>{0, 1, 2, 3, 4, 5}));
}

TEST(Quotient, ByEverythingHasOneElement) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_EQ(quotient(s3, ElementSet::range(6)).algebra.size(), 1u);
}

TEST(Quotient, KernelOfTheProjectionIsTheIdeal) {
  auto rng = corpus::rng(5);
  for (auto const& e : corpus::entries()) {
    ElementSet const whole = ElementSet::range(e.algebra.size());
    for (int trial = 0; trial < 3; ++trial) {
      ElementSet const i = generate_ideal(e.algebra, whole, corpus::random_subset(e.algebra.size(), rng));
      Quotient const   q = quotient(e.algebra, i);
      EXPECT_EQ(q.projection.kernel(), i) << e.name;
      EXPECT_TRUE(oracle::is_homomorphism(e.algebra, q.algebra, q.projection.images))
          << e.name;
      EXPECT_EQ(q.algebra.size() * i.size(), e.algebra.size()) << e.name;
    }
  }
}

TEST(DirectPower, CardinalityAndProjections) {
  TableAlgebra const s3   = build_group("symmetric 3");
  TableAlgebra const cube = direct_power(s3, 3);
  EXPECT_EQ(cube.size(), 216u);
  std::vector<std::uint64_t> radices = {6, 6, 6};
  for (std::size_t i = 0; i < 3; ++i) {
    Homomorphism const p = projection(radices, i);
    EXPECT_TRUE(is_homomorphism(cube, s3, p));
    EXPECT_TRUE(oracle::is_homomorphism(cube, s3, p.images));
  }
}

TEST(DirectPower, GuardOnExponent) {
  TableAlgebra const c2 = build_group("cyclic 2");
  EXPECT_EQ(kind_of([&] { direct_power(c2, 4); }), ErrorKind::size_guard);
}

TEST(DirectProduct, C2TimesC3IsCyclicOfOrderSix) {
  TableAlgebra const              c2 = build_group("cyclic 2");
  TableAlgebra const              c3 = build_group("cyclic 3");
  std::vector<TableAlgebra const*> f = {&c2, &c3};
  TableAlgebra const              p  = direct_product(f);
  TableAlgebra const              c6 = build_group("cyclic 6");
  // Search for an isomorphism by trying every bijection fixing the unit.
  std::vector<Code> perm = {1, 2, 3, 4, 5};
  bool              found = false;
  do {
    std::vector<Code> map = {0};
    map.insert(map.end(), perm.begin(), perm.end());
    found = oracle::is_homomorphism(p, c6, map);
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  EXPECT_TRUE(found);
}

TEST(MeetJoin, EqualIdeals) {
  TableAlgebra const s3 = build_group("symmetric 3");
  ElementSet const   a3{0, 3, 4};
  MeetJoin const     mj = meet_join_ideals(s3, a3, a3);
  EXPECT_EQ(mj.meet, a3);
  EXPECT_EQ(mj.join, a3);
}

TEST(MeetJoin, CoprimeSubgroupsOfC6) {
  TableAlgebra const c6 = build_group("cyclic 6");
  MeetJoin const     mj = meet_join_ideals(c6, ElementSet{0, 3}, ElementSet{0, 2, 4});
  EXPECT_EQ(mj.meet, ElementSet::unit());
  EXPECT_EQ(mj.join, ElementSet::range(6));
}

TEST(MeetJoin, RingIdeals) {
  ZpRing const   r  = cubic_nil_ring();
  Subspace const a2 = named_ideal(r, {"a^2"});
  Subspace const a3 = named_ideal(r, {"a^3"});
  EXPECT_EQ(sum(a2, a3), a2);
  EXPECT_EQ(a2.size(), 4u);
  TableAlgebra const t = to_table_algebra(r);
  MeetJoin const     mj =
      meet_join_ideals(t, ElementSet{0, r.index(r.parse("a^3"))},
                       generate_ideal(t, ElementSet::range(8),
                                      ElementSet{r.index(r.parse("a^2"))}));
  EXPECT_EQ(mj.join.size(), 4u);
}

TEST(MToTheN, TranspositionAndThreeCycle) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_EQ(m_to_the_n(s3, ElementSet{0, 1}, ElementSet{0, 3, 4}), ElementSet::range(6));
}

TEST(MToTheN, IdealIsFixedAndUnitIsTrivial) {
  TableAlgebra const s3 = build_group("symmetric 3");
  EXPECT_EQ(m_to_the_n(s3, ElementSet{0, 3, 4}, ElementSet::range(6)), (ElementSet{0, 3, 4}));
  EXPECT_EQ(m_to_the_n(s3, ElementSet::unit(), ElementSet{0, 1}), ElementSet::unit());
}

TEST(MToTheN, CommutesWithSurjections) {
  auto rng = corpus::rng(6);
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() > 12) {
      continue;
    }
    auto const ideals = enumerate_ideals(e.algebra, ElementSet::range(e.algebra.size()));
    for (auto const& i : ideals) {
      Quotient const q = quotient(e.algebra, i);
      for (int trial = 0; trial < 3; ++trial) {
        ElementSet const m = corpus::random_subset(e.algebra.size(), rng);
        ElementSet const n = corpus::random_subset(e.algebra.size(), rng);
        EXPECT_EQ(q.projection.image(m_to_the_n(e.algebra, m, n)),
                  m_to_the_n(q.algebra, q.projection.image(m), q.projection.image(n)))
            << e.name;
      }
    }
  }
}

TEST(EnumerateIdeals, S3C6AndTrivial) {
  auto s3 = enumerate_ideals(build_group("symmetric 3"), ElementSet::range(6));
  EXPECT_EQ(s3, (std::vector<ElementSet>{ElementSet{0}, ElementSet{0, 3, 4}, ElementSet::range(6)}));
  EXPECT_EQ(enumerate_ideals(build_group("cyclic 6"), ElementSet::range(6)).size(), 4u);
  EXPECT_EQ(enumerate_ideals(build_group("cyclic 1"), ElementSet::range(1)),
            std::vector<ElementSet>{ElementSet::unit()});
}

TEST(EnumerateIdeals, EveryListedSetIsABruteForceIdeal) {
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() > 36) {
      continue;
    }
    Set const all = oracle::all(e.algebra);
    for (auto const& i : enumerate_ideals(e.algebra, ElementSet::range(e.algebra.size()),
                                          corpus::wide())) {
      EXPECT_TRUE(oracle::is_ideal(e.algebra, all, oracle::to_set(i))) << e.name;
    }
  }
}

TEST(EnumerateIdeals, FindsEveryIdealOfSmallAlgebras) {
  // Every ideal is generated by its own elements, so every principal-ideal
  // join appears; compare with all subsets of algebras of size <= 8.
  for (auto const& e : corpus::entries()) {
    std::uint64_t const n = e.algebra.size();
    if (n > 8) {
      continue;
    }
    Set const               all = oracle::all(e.algebra);
    std::vector<ElementSet> brute;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      Set s{0};
      for (Code x = 1; x < n; ++x) {
        if (mask >> (x - 1) & 1) {
          s.insert(x);
        }
      }
      if (oracle::is_ideal(e.algebra, all, s)) {
        brute.push_back(ElementSet(std::vector<Code>(s.begin(), s.end())));
      }
    }
    auto listed = enumerate_ideals(e.algebra, ElementSet::range(n));
    std::sort(brute.begin(), brute.end());
    std::sort(listed.begin(), listed.end());
    EXPECT_EQ(listed, brute) << e.name;
  }
}

TEST(EnumerateIdeals, GuardOnHostSize) {
  TableAlgebra const s4 = build_group("symmetric 4");
  EXPECT_EQ(kind_of([&] { enumerate_ideals(s4, ElementSet::range(24)); }),
            ErrorKind::size_guard);
}

// Cubes are large enough for the generator-only evaluation of additive
// operations; the materialized cube takes the brute-force path.
TEST(GenerateSubalgebra, CubesAgreeWithTheMaterializedPower) {
  auto                      rng = corpus::rng(11);
  std::vector<TableAlgebra> bases = {
      to_table_algebra(build_ring({2, {"a"}, false, 2})),
      to_table_algebra(build_ring({3, {"a"}, false, 1})),
      // f(1)f(1) = 2 but f(2) = 1: not additive.
      TableAlgebra("C3 with f", Signature({{"f", 1}}), 3,
                   {{0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 2, 1}, {0, 1, 1}}),
  };
  for (auto const& e : corpus::entries()) {
    if (e.algebra.size() <= 4 && e.algebra.signature().number_of_ops() > 2) {
      bases.push_back(e.algebra);
    }
  }
  for (auto const& base : bases) {
    PowerView const    cube(base, 3);
    TableAlgebra const table = direct_power(base, 3);
    Set const          all   = oracle::all(table);
    auto pick = [&](std::size_t k) {
      std::vector<Code> out;
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back(rng() % cube.size());
      }
      return ElementSet(std::move(out));
    };
    for (int trial = 0; trial < 3; ++trial) {
      ElementSet const seed = pick(3);
      Subalgebra const sub  = generate_subalgebra(cube, seed);
      EXPECT_EQ(oracle::to_set(sub.elements), oracle::subalgebra(table, oracle::to_set(seed)))
          << base.name();
      ElementSet const gens = pick(2);
      EXPECT_EQ(oracle::to_set(generate_ideal(cube, ElementSet::range(cube.size()), gens)),
                oracle::ideal(table, all, oracle::to_set(gens)))
          << base.name();
    }
  }
}

TEST(Backends, RingClosuresAgree) {
  auto rng = corpus::rng(7);
  std::vector<ZpRing> rings = {
      cubic_nil_ring(),
      build_ring({2, {"a"}, false, 4}),
      build_ring({2, {"a", "b"}, true, 2}),
      build_ring({2, {"a", "b"}, false, 2}),
      build_ring({3, {"a", "b"}, true, 2}),
      build_ring({3, {"a"}, false, 3}),
      build_ring({5, {"a"}, false, 3}),
      build_ring({2, {"a", "b", "c"}, true, 2}),
  };
  for (auto const& r : rings) {
    ASSERT_LE(r.size(), 256u);
    TableAlgebra const t     = to_table_algebra(r);
    Subspace const     full  = Subspace::full(r.p(), r.dimension());
    ElementSet const   whole = ElementSet::range(t.size());
    auto codes = [&](Subspace const& s) {
      std::vector<Code> out;
      for (auto const& v : s.elements()) {
        out.push_back(r.index(v));
      }
      return ElementSet(std::move(out));
    };
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Vec>  vs;
      std::vector<Code> cs;
      for (int k = 0; k < 2; ++k) {
        Code x = rng() % t.size();
        cs.push_back(x);
        vs.push_back(r.element(x));
      }
      Subspace const   sub = generate_subalgebra(r, vs);
      ElementSet const tsub =
          generate_subalgebra(t, std::span<Code const>(cs)).elements;
      EXPECT_EQ(codes(sub), tsub);
      Subspace const   id  = generate_ideal(r, full, vs);
      ElementSet const tid = generate_ideal(t, whole, std::span<Code const>(cs));
      EXPECT_EQ(codes(id), tid);
      EXPECT_EQ(generate_ideal(r, sub, vs).size(),
                generate_ideal(t, tsub, std::span<Code const>(cs)).size());
      RingQuotient const rq = quotient(r, id);
      Quotient const     tq = quotient(t, tid);
      EXPECT_EQ(rq.ring.size(), tq.algebra.size());
      for (Code x = 0; x < t.size(); ++x) {
        EXPECT_EQ(rq.project(r.element(x)) == rq.ring.zero(), tid.contains(x));
      }
      Subspace const other = generate_ideal(r, full, std::vector<Vec>{r.element(rng() % t.size())});
      MeetJoin const mj    = meet_join_ideals(t, tid, codes(other));
      EXPECT_EQ(codes(intersect(id, other)), mj.meet);
      EXPECT_EQ(codes(sum(id, other)), mj.join);
    }
  }
}

}  // namespace
}  // namespace omega
