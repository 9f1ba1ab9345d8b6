#include "omega/commutator.hpp"

#include <algorithm>

#include "omega/error.hpp"
#include "omega/tuples.hpp"

namespace omega {

namespace {
  struct Options {
    bool verbal_part  = true;   // include v(p), p in the meet
    bool trivial_only = false;  // stop at the first nontrivial generator
  };

  void check_subset(Structure const& a, ElementSet const& s, char const* what) {
    if (s.empty() || s[0] != 0) {
      fail(ErrorKind::validation, std::string(what) + " must contain the unit");
    }
    if (s.codes().back() >= a.size()) {
      fail(ErrorKind::validation, std::string(what) + " leaves the carrier");
    }
  }

  ElementSet positions(ElementSet const& embedding, ElementSet const& codes) {
    std::vector<Code> out;
    for (Code x : codes) {
      out.push_back(*embedding.position(x));
    }
    return ElementSet(std::move(out));
  }

  ElementSet codes_of(ElementSet const& embedding, ElementSet const& pos) {
    std::vector<Code> out;
    for (Code i : pos) {
      out.push_back(embedding[i]);
    }
    return ElementSet(std::move(out));
  }

  Witness table_witness(std::string kind, std::vector<Code> const& inputs,
                        std::size_t identity, Code element) {
    Witness w{std::move(kind), {}, identity, std::to_string(element), element};
    for (Code x : inputs) {
      w.inputs.push_back(std::to_string(x));
    }
    return w;
  }

  Witness ring_witness(ZpRing const& r, std::string kind,
                       std::vector<Vec> const& inputs, std::size_t identity,
                       Vec const& element) {
    Witness w{std::move(kind), {}, identity, r.format(element), std::nullopt};
    if (r.size() != UINT64_MAX) {
      w.index = r.index(element);
    }
    for (auto const& v : inputs) {
      w.inputs.push_back(r.format(v));
    }
    return w;
  }

  bool host_check_fits(TableAlgebra const& h, IdentityBasis const& basis,
                       EngineConfig const& cfg) {
    for (auto const& t : basis.identities) {
      if (tuple_count(h.size(), t.arity()) > cfg.guards.tuples) {
        return false;
      }
    }
    return true;
  }

  // Returns nullopt when trivial_only is set and a nontrivial generator
  // turns up.
  std::optional<CommutatorReport> compute(Structure const& a, ElementSet const& m,
                                          ElementSet const& n,
                                          IdentityBasis const& basis,
                                          EngineConfig const& cfg, Options opt) {
    check_basis(basis, a.signature());
    TripleAlgebra     tr = build_triple(a, m, n, cfg);
    TableAlgebra const& h = *tr.host;

    CommutatorReport report;
    report.stats.host          = h.size();
    report.stats.triple        = tr.t.elements.size();
    // M v N in the variety: T lies in its cube, so every generator is trivial.
    if (host_check_fits(h, basis, cfg) && satisfies(h, basis, cfg)) {
      report.stats.triple_values = 1;
      report.result              = ElementSet::unit();
      return report;
    }
    auto v = verbal_values(tr.cube, tr.t, basis, cfg);
    report.stats.triple_values = v.values.size();
    report.stats.evaluations   = v.stats.evaluations;

    Congruence  cong(h, ElementSet::range(h.size()), cfg);
    Code        coords[3];
    std::size_t generators = 0;
    for (Code x : v.values) {
      tr.cube.decode(x, coords);
      Code g = h.fast_mul(h.fast_mul(coords[0], h.fast_inv(coords[2])),
                          h.fast_inv(coords[1]));
      if (opt.trivial_only && g != 0) {
        return std::nullopt;
      }
      ++generators;
      if (cong.add_to_unit_class(g)) {
        report.witnesses.push_back(table_witness(
            "c",
            {tr.embedding[coords[0]], tr.embedding[coords[1]],
             tr.embedding[coords[2]]},
            0, tr.embedding[g]));
      }
    }
    if (opt.verbal_part) {
      ElementSet meet =
          set_intersection(positions(tr.embedding, m), positions(tr.embedding, n));
      auto w = verbal_values(h, meet, basis, cfg);
      report.stats.meet = meet.size();
      report.stats.evaluations += w.stats.evaluations;
      for (auto const& inst : w.witnesses) {
        if (opt.trivial_only && inst.value != 0) {
          return std::nullopt;
        }
        ++generators;
        if (cong.add_to_unit_class(inst.value)) {
          std::vector<Code> args;
          for (Code x : inst.args) {
            args.push_back(tr.embedding[x]);
          }
          report.witnesses.push_back(table_witness("w", args, inst.identity,
                                                   tr.embedding[inst.value]));
        }
      }
    }
    report.stats.generators = generators;
    report.result           = codes_of(tr.embedding, cong.unit_class());
    return report;
  }

  std::optional<LinearCommutatorReport> compute(ZpRing const& r,
                                                Subspace const& m,
                                                Subspace const& n,
                                                IdentityBasis const& basis,
                                                EngineConfig const& cfg,
                                                Options opt) {
    check_basis(basis, r.signature());
    check_guard(r.dimension() <= cfg.guards.dimension,
                "ring dimension " + std::to_string(r.dimension())
                    + " exceeds the cap " + std::to_string(cfg.guards.dimension));
    check_guard(cfg.guards.power >= 3, "the triple construction needs power 3");
    std::size_t const dim = r.dimension();
    if (m.ambient() != dim || n.ambient() != dim) {
      fail(ErrorKind::validation, "subspace does not live in this ring");
    }
    std::vector<Vec> seed(m.basis());
    seed.insert(seed.end(), n.basis().begin(), n.basis().end());
    Subspace host = generate_subalgebra(r, seed, cfg);
    if (!is_ideal(r, host, m) || !is_ideal(r, host, n)) {
      fail(ErrorKind::validation, "M and N must be ideals of M v N");
    }

    ZpRing const     cube = r.power(3);
    std::vector<Vec> triples;
    for (auto const& x : m.basis()) {
      Vec t(3 * dim, 0);
      std::copy(x.begin(), x.end(), t.begin());
      std::copy(x.begin(), x.end(), t.begin() + static_cast<std::ptrdiff_t>(dim));
      triples.push_back(std::move(t));
    }
    for (auto const& x : n.basis()) {
      Vec t(3 * dim, 0);
      std::copy(x.begin(), x.end(), t.begin());
      std::copy(x.begin(), x.end(), t.begin() + static_cast<std::ptrdiff_t>(2 * dim));
      triples.push_back(std::move(t));
    }
    Subspace t = generate_subalgebra(cube, triples, cfg);
    auto     v = verbal_values(cube, t, basis, cfg);

    LinearCommutatorReport report;
    report.stats.linear        = true;
    report.stats.host          = host.dimension();
    report.stats.triple        = t.dimension();
    report.stats.triple_values = v.values.dimension();
    report.stats.evaluations   = v.stats.evaluations;

    // (a,b,c) -> a - b - c is linear, so the basis of V suffices.
    Subspace gens(r.p(), dim);
    for (auto const& x : v.values.basis()) {
      Vec a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dim));
      Vec b(x.begin() + static_cast<std::ptrdiff_t>(dim),
            x.begin() + static_cast<std::ptrdiff_t>(2 * dim));
      Vec c(x.begin() + static_cast<std::ptrdiff_t>(2 * dim), x.end());
      Vec g = r.sub(r.sub(a, b), c);
      if (opt.trivial_only && g != r.zero()) {
        return std::nullopt;
      }
      if (gens.add(g)) {
        report.witnesses.push_back(ring_witness(r, "c", {a, b, c}, 0, g));
      }
    }
    if (opt.verbal_part) {
      Subspace meet = intersect(m, n);
      auto     w    = verbal_values(r, meet, basis, cfg);
      report.stats.meet = meet.dimension();
      report.stats.evaluations += w.stats.evaluations;
      for (auto const& inst : w.witnesses) {
        if (opt.trivial_only && inst.value != r.zero()) {
          return std::nullopt;
        }
        if (gens.add(inst.value)) {
          report.witnesses.push_back(
              ring_witness(r, "w", inst.args, inst.identity, inst.value));
        }
      }
    }
    report.stats.generators = gens.dimension();
    report.result           = generate_ideal(r, host, gens, cfg);
    return report;
  }
}  // namespace

TripleAlgebra build_triple(Structure const& a, ElementSet const& m,
                           ElementSet const& n, EngineConfig const& cfg) {
  check_subset(a, m, "M");
  check_subset(a, n, "N");
  check_guard(cfg.guards.power >= 3, "the triple construction needs power 3");
  ElementSet h = generate_subalgebra(a, set_union(m, n), cfg).elements;
  if (generate_ideal(a, h, m, cfg) != m || generate_ideal(a, h, n, cfg) != n) {
    fail(ErrorKind::validation, "M and N must be ideals of M v N");
  }
  auto       host = std::make_shared<TableAlgebra const>(restrict_to(a, h, cfg));
  PowerView  cube(*host, 3);
  ElementSet mp = positions(h, m);
  ElementSet np = positions(h, n);

  std::vector<Code> seeds;
  for (Code g : group_generators(*host, mp)) {
    Code c[3] = {g, g, 0};
    seeds.push_back(cube.encode(c));
  }
  for (Code g : group_generators(*host, np)) {
    Code c[3] = {g, 0, g};
    seeds.push_back(cube.encode(c));
  }
  Subalgebra t = generate_subalgebra(cube, seeds, cfg);
  return {host, h, cube, std::move(t)};
}

CommutatorReport c_values(Structure const& a, ElementSet const& m,
                          ElementSet const& n, IdentityBasis const& basis,
                          EngineConfig const& cfg) {
  return *compute(a, m, n, basis, cfg, {false, false});
}

CommutatorReport relative_commutator(Structure const& a, ElementSet const& m,
                                     ElementSet const& n,
                                     IdentityBasis const& basis,
                                     EngineConfig const& cfg) {
  return *compute(a, m, n, basis, cfg, {true, false});
}

CommutatorReport higgins_commutator(Structure const& a, ElementSet const& m,
                                    ElementSet const& n, EngineConfig const& cfg) {
  return relative_commutator(a, m, n, abelianization_basis(a.signature()), cfg);
}

bool commutator_is_trivial(Structure const& a, ElementSet const& m,
                           ElementSet const& n, IdentityBasis const& basis,
                           EngineConfig const& cfg) {
  return compute(a, m, n, basis, cfg, {true, true}).has_value();
}

bool is_central(Structure const& a, ElementSet const& n,
                IdentityBasis const& basis, EngineConfig const& cfg) {
  return commutator_is_trivial(a, n, ElementSet::range(a.size()), basis, cfg);
}

bool is_central_direct(Structure const& a, ElementSet const& n,
                       IdentityBasis const& basis, EngineConfig const& cfg) {
  check_subset(a, n, "N");
  check_basis(basis, a.signature());
  ElementSet whole = ElementSet::range(a.size());
  if (generate_ideal(a, whole, n, cfg) != n) {
    fail(ErrorKind::validation, "N must be an ideal of the algebra");
  }
  TableAlgebra const table = restrict_to(a, whole, cfg);
  PowerView          square(table, 2);
  std::vector<Code>  seeds;
  for (Code g : group_generators(table, n)) {
    Code c[2] = {g, 0};
    seeds.push_back(square.encode(c));
  }
  for (Code g : group_generators(table, whole)) {
    Code c[2] = {g, g};
    seeds.push_back(square.encode(c));
  }
  Subalgebra p = generate_subalgebra(square, seeds, cfg);
  auto       v = verbal_values(square, p, basis, cfg);
  return std::all_of(v.values.begin(), v.values.end(), [&](Code x) {
    return square.coordinate(x, 0) == square.coordinate(x, 1);
  });
}

ElementSet universal_oracle(Structure const& a, ElementSet const& m,
                            ElementSet const& n, IdentityBasis const& basis,
                            EngineConfig const& cfg) {
  check_subset(a, m, "M");
  check_subset(a, n, "N");
  ElementSet   h = generate_subalgebra(a, set_union(m, n), cfg).elements;
  TableAlgebra table = restrict_to(a, h, cfg);
  ElementSet   mp = positions(h, m);
  ElementSet   np = positions(h, n);
  std::vector<ElementSet> kept;
  for (auto const& ideal : enumerate_ideals(table, ElementSet::range(table.size()), cfg)) {
    Quotient q = quotient(table, ideal, cfg);
    if (commutator_is_trivial(q.algebra, q.projection.image(mp),
                              q.projection.image(np), basis, cfg)) {
      kept.push_back(ideal);
    }
  }
  if (kept.empty()) {
    fail(ErrorKind::invariant, "no ideal trivializes the commutator");
  }
  ElementSet least = kept.front();
  for (auto const& k : kept) {
    least = set_intersection(least, k);
  }
  if (std::find(kept.begin(), kept.end(), least) == kept.end()) {
    fail(ErrorKind::invariant,
         "ideals trivializing the commutator have no least element");
  }
  return codes_of(h, least);
}

bool image_condition(Structure const& a, IdentityBasis const& basis,
                     EngineConfig const& cfg) {
  ElementSet whole = ElementSet::range(a.size());
  return c_values(a, whole, whole, basis, cfg).result
         == verbal_values(a, whole, basis, cfg).values;
}

LinearCommutatorReport c_values(ZpRing const& r, Subspace const& m,
                                Subspace const& n, IdentityBasis const& basis,
                                EngineConfig const& cfg) {
  return *compute(r, m, n, basis, cfg, {false, false});
}

LinearCommutatorReport relative_commutator(ZpRing const& r, Subspace const& m,
                                           Subspace const& n,
                                           IdentityBasis const& basis,
                                           EngineConfig const& cfg) {
  return *compute(r, m, n, basis, cfg, {true, false});
}

LinearCommutatorReport higgins_commutator(ZpRing const& r, Subspace const& m,
                                          Subspace const& n,
                                          EngineConfig const& cfg) {
  return relative_commutator(r, m, n, abelianization_basis(r.signature()), cfg);
}

bool is_central(ZpRing const& r, Subspace const& n, IdentityBasis const& basis,
                EngineConfig const& cfg) {
  return compute(r, n, Subspace::full(r.p(), r.dimension()), basis, cfg,
                 {true, true})
      .has_value();
}

bool is_central_direct(ZpRing const& r, Subspace const& n,
                       IdentityBasis const& basis, EngineConfig const& cfg) {
  check_basis(basis, r.signature());
  std::size_t const dim   = r.dimension();
  Subspace const    whole = Subspace::full(r.p(), dim);
  if (!is_ideal(r, whole, n)) {
    fail(ErrorKind::validation, "N must be an ideal of the ring");
  }
  ZpRing const     square = r.power(2);
  std::vector<Vec> seeds;
  for (auto const& x : n.basis()) {
    Vec s(2 * dim, 0);
    std::copy(x.begin(), x.end(), s.begin());
    seeds.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Vec s(2 * dim, 0);
    s[i] = s[dim + i] = 1;
    seeds.push_back(std::move(s));
  }
  Subspace p = generate_subalgebra(square, seeds, cfg);
  auto     v = verbal_values(square, p, basis, cfg);
  return std::all_of(v.values.basis().begin(), v.values.basis().end(),
                     [&](Vec const& x) {
                       return std::equal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dim),
                                         x.begin() + static_cast<std::ptrdiff_t>(dim));
                     });
}

bool image_condition(ZpRing const& r, IdentityBasis const& basis,
                     EngineConfig const& cfg) {
  Subspace whole = Subspace::full(r.p(), r.dimension());
  return c_values(r, whole, whole, basis, cfg).result
         == verbal_values(r, whole, basis, cfg).values;
}

}  // namespace omega
