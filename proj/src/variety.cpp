#include "omega/variety.hpp"

#include <algorithm>
#include <optional>

#include "omega/error.hpp"
#include "omega/parallel.hpp"
#include "omega/tuples.hpp"

namespace omega {

namespace {
  constexpr std::size_t chunk_size = 4096;
  // Generator tuples are only a seed; skip seeding when there are too many.
  constexpr std::uint64_t seed_limit = std::uint64_t{1} << 16;

  std::vector<CompiledTerm> compile(IdentityBasis const& basis,
                                    Signature const& sig) {
    std::vector<CompiledTerm> out;
    for (auto const& t : basis.identities) {
      out.emplace_back(t, sig);
    }
    return out;
  }

  void guard_tuples(std::uint64_t count, EngineConfig const& cfg,
                    std::string const& what) {
    check_guard(count <= cfg.guards.tuples,
                what + " needs " + (count == UINT64_MAX ? std::string("more than 2^64")
                                                        : std::to_string(count))
                    + " evaluations, above the cap "
                    + std::to_string(cfg.guards.tuples));
  }

  Term power_term(Signature const& sig, std::size_t k) {
    bool              ring = sig.has_extra("r*");
    std::vector<Term> factors(k, Term::var(0));
    Term              acc = factors[0];
    for (std::size_t i = 1; i < k; ++i) {
      acc = ring ? Term::apply("r*", {acc, Term::var(0)}) : mul(acc, Term::var(0));
    }
    return acc;
  }

  // Arity of w when t is w(x.y) w(y)^-1 w(x)^-1 for an extra operation w.
  std::optional<std::size_t> homomorphism_shape(Term const& t, Signature const& sig) {
    for (auto const& op : sig.extra_ops()) {
      std::size_t const k = op.arity;
      std::vector<Term> xs, ys, prods;
      for (std::size_t i = 0; i < k; ++i) {
        xs.push_back(Term::var(i));
        ys.push_back(Term::var(k + i));
        prods.push_back(mul(Term::var(i), Term::var(k + i)));
      }
      if (k > 0 && t == product({Term::apply(op.name, prods), inv(Term::apply(op.name, ys)),
                                 inv(Term::apply(op.name, xs))})) {
        return k;
      }
    }
    return std::nullopt;
  }

  // Second halves (e,..,g,..,e) for g a group generator. An identity of
  // homomorphism shape holding for these holds for every y: w(x.y.s) =
  // w(x.y) w(s) = w(x) w(y) w(s) by induction on the length of y.
  std::vector<std::vector<Code>> single_generator_tuples(std::size_t k,
                                                         std::vector<Code> const& gens) {
    std::vector<std::vector<Code>> out;
    for (std::size_t i = 0; i < k; ++i) {
      for (Code g : gens) {
        if (g != 0) {
          std::vector<Code> y(k, 0);
          y[i] = g;
          out.push_back(std::move(y));
        }
      }
    }
    return out;
  }

  // Basis terms on a power view are evaluated coordinatewise through a table
  // of the term on the base, when that table is small; otherwise directly.
  class InstanceEvaluator {
   public:
    static constexpr std::uint64_t table_limit = std::uint64_t{1} << 22;

    InstanceEvaluator(Structure const& s, CompiledTerm const& term)
        : _s(&s), _term(&term), _power(dynamic_cast<PowerView const*>(&s)) {
      if (_power == nullptr) {
        return;
      }
      TableAlgebra const& base = _power->base();
      std::size_t const   k    = term.arity();
      if (tuple_count(base.size(), k) > table_limit) {
        _power = nullptr;
        return;
      }
      _table.resize(tuple_count(base.size(), k));
      std::vector<Code> args(k);
      std::size_t       at = 0;
      for (Odometer it(k, base.size()); !it.done(); it.next()) {
        for (std::size_t i = 0; i < k; ++i) {
          args[i] = it[i];
        }
        _table[at++] = static_cast<std::uint32_t>(
            term.evaluate<Structure, Code>(base, std::span<Code const>(args)));
      }
    }

    Code operator()(std::span<Code const> args) const {
      if (_power == nullptr) {
        return _term->evaluate<Structure, Code>(*_s, args);
      }
      std::size_t const   k     = _term->arity();
      std::size_t const   width = _power->power();
      std::uint64_t const n     = _power->base().size();
      Code                coords[8 * 8];
      std::vector<Code>   heap;
      Code*               c = coords;
      if (k * width > 64) {
        heap.resize(k * width);
        c = heap.data();
      }
      for (std::size_t a = 0; a < k; ++a) {
        _power->decode(args[a], std::span<Code>(c + a * width, width));
      }
      Code result = 0;
      for (std::size_t i = 0; i < width; ++i) {
        std::uint64_t index = 0;
        for (std::size_t a = 0; a < k; ++a) {
          index = index * n + c[a * width + i];
        }
        result = result * n + _table[index];
      }
      return result;
    }

   private:
    Structure const*           _s;
    CompiledTerm const*        _term;
    PowerView const*           _power;
    std::vector<std::uint32_t> _table;
  };

  // Evaluates candidate tuples in parallel and feeds the values, in order, to
  // `merge`.
  template <typename Value, typename Eval, typename Merge>
  void evaluate_chunk(Eval const& eval, std::vector<std::vector<Value>> const& tuples,
                      unsigned threads, Merge&& merge) {
    std::vector<Value> values(tuples.size());
    parallel_ranges(tuples.size(), threads,
                    [&](std::size_t begin, std::size_t end, unsigned) {
                      for (std::size_t i = begin; i < end; ++i) {
                        values[i] = eval(std::span<Value const>(tuples[i]));
                      }
                    });
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      merge(tuples[i], values[i]);
    }
  }
}  // namespace

Term parse_identity(std::string_view text) {
  int         depth = 0;
  std::size_t eq    = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    } else if (text[i] == '=' && depth == 0) {
      if (eq != std::string_view::npos) {
        fail(ErrorKind::parse, "identity '" + std::string(text)
                                   + "' has more than one '='");
      }
      eq = i;
    }
  }
  if (eq == std::string_view::npos) {
    return parse_term(text);
  }
  return mul(parse_term(text.substr(0, eq)), inv(parse_term(text.substr(eq + 1))));
}

IdentityBasis make_basis(std::string name, std::vector<std::string> const& texts) {
  IdentityBasis b{std::move(name), {}};
  for (auto const& t : texts) {
    b.identities.push_back(parse_identity(t));
  }
  return b;
}

void check_basis(IdentityBasis const& basis, Signature const& sig) {
  for (auto const& t : basis.identities) {
    check_term(t, sig);
  }
}

IdentityBasis abelianization_basis(Signature const& sig) {
  IdentityBasis b{"abelian", {}};
  Term          x = Term::var(0), y = Term::var(1);
  b.identities.push_back(product({x, y, inv(x), inv(y)}));
  for (auto const& op : sig.extra_ops()) {
    std::size_t const k = op.arity;
    std::vector<Term> xs, ys, prods;
    for (std::size_t i = 0; i < k; ++i) {
      xs.push_back(Term::var(i));
      ys.push_back(Term::var(k + i));
      prods.push_back(mul(Term::var(i), Term::var(k + i)));
    }
    b.identities.push_back(product({Term::apply(op.name, prods),
                                    inv(Term::apply(op.name, ys)),
                                    inv(Term::apply(op.name, xs))}));
  }
  return b;
}

IdentityBasis power_basis(Signature const& sig, std::size_t k) {
  if (k == 0) {
    fail(ErrorKind::validation, "power identity needs a positive exponent");
  }
  return {"x^" + std::to_string(k), {power_term(sig, k)}};
}

IdentityBasis crossed_basis() {
  Term x = Term::var(0), y = Term::var(1);
  auto d = [](Term t) { return Term::apply("d", {std::move(t)}); };
  auto c = [](Term t) { return Term::apply("c", {std::move(t)}); };
  return {"xm",
          {product({inv(x), d(x), inv(y), c(y), inv(d(x)), x, inv(c(y)), y})}};
}

std::vector<std::string> preset_names() { return {"abelian", "exp2", "cube", "xm"}; }

IdentityBasis preset_basis(std::string_view name, Signature const& sig) {
  IdentityBasis b;
  if (name == "abelian") {
    b = abelianization_basis(sig);
  } else if (name == "exp2") {
    b      = power_basis(sig, 2);
    b.name = "exp2";
  } else if (name == "cube") {
    b      = power_basis(sig, 3);
    b.name = "cube";
  } else if (name == "xm") {
    b = crossed_basis();
  } else {
    fail(ErrorKind::validation, "unknown basis preset '" + std::string(name) + "'");
  }
  check_basis(b, sig);
  return b;
}

std::optional<Instance<Code>> find_violation(Structure const& s,
                                             ElementSet const& host,
                                             IdentityBasis const& basis,
                                             EngineConfig const& cfg) {
  check_basis(basis, s.signature());
  auto              terms = compile(basis, s.signature());
  std::vector<Code> args;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::size_t const arity = terms[j].arity();
    guard_tuples(tuple_count(host.size(), arity), cfg, "identity check");
    args.resize(arity);
    for (Odometer it(arity, host.size()); !it.done(); it.next()) {
      for (std::size_t i = 0; i < arity; ++i) {
        args[i] = host[it[i]];
      }
      Code v = terms[j].evaluate<Structure, Code>(s, args);
      if (v != 0) {
        return Instance<Code>{j, args, v};
      }
    }
  }
  return std::nullopt;
}

bool satisfies(Structure const& s, IdentityBasis const& basis,
               EngineConfig const& cfg) {
  check_basis(basis, s.signature());
  ElementSet const whole = ElementSet::range(s.size());
  std::vector<Code> const gens = group_generators(s, whole);
  auto const        terms = compile(basis, s.signature());
  std::vector<Code> args;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::size_t const arity = terms[j].arity();
    auto const        shape = homomorphism_shape(basis.identities[j], s.signature());
    std::size_t const free  = shape ? *shape : arity;
    auto const        tails = shape ? single_generator_tuples(*shape, gens)
                                    : std::vector<std::vector<Code>>{{}};
    guard_tuples(tuple_count(s.size(), free), cfg, "identity check");
    args.resize(arity);
    for (Odometer it(free, s.size()); !it.done(); it.next()) {
      for (std::size_t i = 0; i < free; ++i) {
        args[i] = it[i];
      }
      for (auto const& tail : tails) {
        std::copy(tail.begin(), tail.end(), args.begin() + free);
        if (terms[j].evaluate<Structure, Code>(s, args) != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

bool satisfies(ZpRing const& r, IdentityBasis const& basis,
               EngineConfig const& cfg) {
  return verbal_values(r, Subspace::full(r.p(), r.dimension()), basis, cfg)
             .values.dimension()
         == 0;
}

VerbalValues verbal_values(Structure const& s, ElementSet const& host,
                           IdentityBasis const& basis, EngineConfig const& cfg,
                           VerbalMode mode) {
  return verbal_values(s, Subalgebra{host, group_generators(s, host)}, basis,
                       cfg, mode);
}

VerbalValues verbal_values(Structure const& s, Subalgebra const& host,
                           IdentityBasis const& basis, EngineConfig const& cfg,
                           VerbalMode mode) {
  check_basis(basis, s.signature());
  if (mode == VerbalMode::sampling) {
    fail(ErrorKind::polarization_unsupported,
         "degree-bounded sampling needs the linear ring backend");
  }
  auto const   terms = compile(basis, s.signature());
  std::vector<InstanceEvaluator> evaluators;
  for (auto const& t : terms) {
    evaluators.emplace_back(s, t);
  }
  Congruence   cong(s, host.elements, host.generators, cfg);
  VerbalValues out;
  unsigned const threads = std::max(1u, cfg.threads);

  auto merge_for = [&](std::size_t j) {
    return [&, j](std::vector<Code> const& args, Code value) {
      if (cong.add_to_unit_class(value)) {
        out.witnesses.push_back({j, args, value});
      }
    };
  };

  std::vector<std::vector<Code>> chunk;
  auto flush = [&](std::size_t j) {
    out.stats.evaluations += chunk.size();
    evaluate_chunk<Code>(evaluators[j], chunk, threads, merge_for(j));
    chunk.clear();
  };

  if (mode == VerbalMode::exhaustive) {
    out.stats.passes = 1;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      std::size_t const arity = terms[j].arity();
      guard_tuples(tuple_count(host.elements.size(), arity), cfg,
                   "exhaustive verbal enumeration");
      for (Odometer it(arity, host.elements.size()); !it.done(); it.next()) {
        std::vector<Code> args(arity);
        for (std::size_t i = 0; i < arity; ++i) {
          args[i] = host.elements[it[i]];
        }
        chunk.push_back(std::move(args));
        if (chunk.size() == chunk_size) {
          flush(j);
        }
      }
      flush(j);
    }
    return {cong.unit_class(), std::move(out.witnesses), out.stats};
  }

  // Seed with tuples of generators.
  std::vector<Code> seeds(host.generators);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::size_t const arity = terms[j].arity();
    if (tuple_count(seeds.size(), arity) > seed_limit) {
      continue;
    }
    for (Odometer it(arity, seeds.size()); !it.done(); it.next()) {
      std::vector<Code> args(arity);
      for (std::size_t i = 0; i < arity; ++i) {
        args[i] = seeds[it[i]];
      }
      chunk.push_back(std::move(args));
    }
    flush(j);
  }

  // One pass over tuples of class representatives suffices: a tuple whose
  // entries are still representatives at the end was evaluated when reached,
  // and every other tuple is congruent to such a tuple.
  out.stats.passes = 1;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::size_t const arity = terms[j].arity();
    auto const        shape = homomorphism_shape(basis.identities[j], s.signature());
    std::size_t const free  = shape ? *shape : arity;
    auto const        tails = shape ? single_generator_tuples(*shape, host.generators)
                                    : std::vector<std::vector<Code>>{{}};
    std::vector<Code> reps  = cong.representatives();
    guard_tuples(tuple_count(reps.size(), free), cfg,
                 "verbal enumeration over class representatives");
    for (Odometer it(free, reps.size()); !it.done();) {
      std::size_t stale = free;
      for (std::size_t i = 0; i < free; ++i) {
        if (cong.representative(reps[it[i]]) != reps[it[i]]) {
          stale = i;
          break;
        }
      }
      if (stale < free) {
        it.skip_from(stale + 1);
        continue;
      }
      for (auto const& tail : tails) {
        std::vector<Code> args(arity);
        for (std::size_t i = 0; i < free; ++i) {
          args[i] = reps[it[i]];
        }
        std::copy(tail.begin(), tail.end(), args.begin() + free);
        chunk.push_back(std::move(args));
      }
      if (chunk.size() >= chunk_size) {
        flush(j);
      }
      it.next();
    }
    flush(j);
  }
  return {cong.unit_class(), std::move(out.witnesses), out.stats};
}

namespace {
  struct LinearTerm {
    CompiledTerm term;
    std::size_t  arity;
    std::size_t  degree;
  };

  std::vector<Vec> assemble(ZpRing const& r, std::size_t arity,
                            std::vector<Vec> const& rows,
                            std::span<std::size_t const> positions,
                            std::span<Coeff const> coeffs) {
    std::vector<Vec> args(arity, r.zero());
    std::size_t const m = rows.size();
    for (std::size_t t = 0; t < positions.size(); ++t) {
      std::size_t slot = positions[t] / m;
      std::size_t row  = positions[t] % m;
      args[slot]       = r.add(args[slot], r.scale(coeffs[t], rows[row]));
    }
    return args;
  }

  // Subsets of {0..n-1} of size 1..k in lexicographic order.
  std::vector<std::vector<std::size_t>> small_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (!cur.empty()) {
        out.push_back(cur);
      }
      if (cur.size() == k) {
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  // Basis vectors of host completing `ideal` to host.
  std::vector<Vec> complement(Subspace const& host, Subspace const& ideal) {
    Subspace         grown = ideal;
    std::vector<Vec> out;
    for (auto const& v : host.basis()) {
      if (grown.add(v)) {
        out.push_back(v);
      }
    }
    return out;
  }
}  // namespace

LinearVerbalValues verbal_values(ZpRing const& r, Subspace const& host,
                                 IdentityBasis const& basis,
                                 EngineConfig const& cfg, VerbalMode mode) {
  check_basis(basis, r.signature());
  check_guard(r.dimension() <= cfg.guards.dimension * cfg.guards.power,
              "ring dimension above the cap");
  std::vector<LinearTerm> terms;
  bool                    polarizable = true;
  for (auto const& t : basis.identities) {
    CompiledTerm c(t, r.signature());
    std::size_t  d = polynomial_degree(t);
    polarizable    = polarizable && d < r.p();
    terms.push_back({c, c.arity(), d});
  }
  if (mode == VerbalMode::sampling && !polarizable) {
    fail(ErrorKind::polarization_unsupported,
         "degree-bounded sampling needs p above the identity degree (p = "
             + std::to_string(r.p()) + ")");
  }
  unsigned const     threads = std::max(1u, cfg.threads);
  LinearVerbalValues out;
  Subspace           span(r.p(), r.dimension());
  auto const&        rows = host.basis();
  std::size_t const  m    = rows.size();

  auto consider = [&](std::size_t j, std::vector<Vec> args, Vec value) {
    if (span.add(value)) {
      out.witnesses.push_back({j, std::move(args), std::move(value)});
    }
  };

  if (mode == VerbalMode::exhaustive) {
    out.stats.passes = 1;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      std::size_t const n = terms[j].arity * m;
      guard_tuples(tuple_count(r.p(), n), cfg, "exhaustive verbal enumeration");
      std::vector<std::size_t> positions(n);
      for (std::size_t i = 0; i < n; ++i) {
        positions[i] = i;
      }
      for (Odometer it(n, r.p()); !it.done(); it.next()) {
        Vec  coeffs(it.digits().begin(), it.digits().end());
        auto args = assemble(r, terms[j].arity, rows, positions, coeffs);
        ++out.stats.evaluations;
        Vec value = terms[j].term.evaluate<ZpRing, Vec>(r, args);
        consider(j, std::move(args), std::move(value));
      }
    }
    out.values = generate_ideal(r, host, span, cfg);
    return out;
  }

  if (mode == VerbalMode::representatives) {
    // Seed with tuples of basis vectors.
    for (std::size_t j = 0; j < terms.size(); ++j) {
      std::size_t const arity = terms[j].arity;
      if (tuple_count(m, arity) > seed_limit) {
        continue;
      }
      for (Odometer it(arity, m); !it.done(); it.next()) {
        std::vector<Vec> args(arity);
        for (std::size_t i = 0; i < arity; ++i) {
          args[i] = rows[it[i]];
        }
        ++out.stats.evaluations;
        Vec value = terms[j].term.evaluate<ZpRing, Vec>(r, args);
        consider(j, std::move(args), std::move(value));
      }
    }
  } else {
    // Degree-bounded sampling. For a polynomial map of degree d the (d+1)-th
    // finite differences vanish, so its values span the same space as its
    // values at points supported on at most d coordinates.
    for (std::size_t j = 0; j < terms.size(); ++j) {
      std::size_t const n       = terms[j].arity * m;
      auto const        subsets = small_subsets(n, std::min(terms[j].degree, n));
      std::uint64_t     total   = 0;
      for (auto const& sub : subsets) {
        total += tuple_count(r.p() - 1, sub.size());
      }
      guard_tuples(total, cfg, "degree-bounded sampling");
      out.stats.evaluations += total;
      // Each worker keeps only the values independent of its own earlier
      // values; re-adding those in subset order reproduces the sequential
      // greedy choice.
      struct Kept {
        std::vector<Vec> args;
        Vec              value;
      };
      std::vector<std::vector<Kept>> kept(subsets.size());
      parallel_ranges(
          subsets.size(), threads,
          [&](std::size_t begin, std::size_t end, unsigned) {
            Subspace local(r.p(), r.dimension());
            for (std::size_t s = begin; s < end; ++s) {
              auto const& sub = subsets[s];
              for (Odometer it(sub.size(), r.p() - 1); !it.done(); it.next()) {
                Vec coeffs(sub.size());
                for (std::size_t t = 0; t < sub.size(); ++t) {
                  coeffs[t] = static_cast<Coeff>(it[t] + 1);
                }
                auto args  = assemble(r, terms[j].arity, rows, sub, coeffs);
                Vec  value = terms[j].term.evaluate<ZpRing, Vec>(r, args);
                if (local.add(value)) {
                  kept[s].push_back({std::move(args), std::move(value)});
                }
              }
            }
          });
      for (auto& list : kept) {
        for (auto& k : list) {
          consider(j, std::move(k.args), std::move(k.value));
        }
      }
    }
    out.stats.passes = 1;
    if (polarizable || mode == VerbalMode::sampling) {
      out.values = generate_ideal(r, host, span, cfg);
      return out;
    }
  }

  // Verification over tuples of coset representatives: once every tuple of
  // a complement of the ideal I satisfies w(q) in I, so does every tuple,
  // because I is a congruence class.
  Subspace ideal = generate_ideal(r, host, span, cfg);
  while (true) {
    ++out.stats.passes;
    bool             grew = false;
    std::vector<Vec> comp = complement(host, ideal);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      std::size_t const n = terms[j].arity * comp.size();
      guard_tuples(tuple_count(r.p(), n), cfg,
                   "verbal enumeration over coset representatives");
      std::vector<std::size_t> positions(n);
      for (std::size_t i = 0; i < n; ++i) {
        positions[i] = i;
      }
      for (Odometer it(n, r.p()); !it.done(); it.next()) {
        Vec  coeffs(it.digits().begin(), it.digits().end());
        auto args = assemble(r, terms[j].arity, comp, positions, coeffs);
        ++out.stats.evaluations;
        Vec value = terms[j].term.evaluate<ZpRing, Vec>(r, args);
        if (!ideal.contains(value)) {
          consider(j, std::move(args), value);
          ideal = generate_ideal(r, host, span, cfg);
          grew  = true;
        }
      }
    }
    if (!grew) {
      break;
    }
  }
  out.values = ideal;
  return out;
}

Quotient reflection(TableAlgebra const& a, IdentityBasis const& basis,
                    EngineConfig const& cfg) {
  auto v = verbal_values(a, ElementSet::range(a.size()), basis, cfg);
  return quotient(a, v.values, cfg);
}

RingQuotient reflection(ZpRing const& r, IdentityBasis const& basis,
                        EngineConfig const& cfg) {
  auto v = verbal_values(r, Subspace::full(r.p(), r.dimension()), basis, cfg);
  return quotient(r, v.values);
}

}  // namespace omega
