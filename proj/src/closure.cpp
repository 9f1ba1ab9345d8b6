#include "omega/closure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "omega/error.hpp"
#include "omega/tuples.hpp"

namespace omega {

Code eval_term(Structure const& s, Term const& t, std::span<Code const> args) {
  CompiledTerm compiled(t, s.signature());
  return compiled.evaluate<Structure, Code>(s, args);
}

namespace {

// Whether op is a homomorphism of the group in each argument on the base
// table (a power is checked on its factor). Such an op maps the group
// generated by a set into the group generated by its values on the set.
bool additive_in_each_slot(Structure const& s, OpId op) {
  TableAlgebra const* base = dynamic_cast<TableAlgebra const*>(&s);
  if (auto const* power = dynamic_cast<PowerView const*>(&s)) {
    base = &power->base();
  }
  std::size_t const arity = s.signature().arity(op);
  if (base == nullptr || arity == 0) {
    return false;
  }
  std::vector<Code> args(arity), left(arity), right(arity);
  for (Odometer it(arity + 1, base->size()); !it.done(); it.next()) {
    for (std::size_t i = 0; i < arity; ++i) {
      args[i] = it[i];
    }
    Code const y = it[arity];
    for (std::size_t slot = 0; slot < arity; ++slot) {
      left = args;
      right = args;
      left[slot] = base->mul(args[slot], y);
      right[slot] = y;
      if (base->apply(op, left) != base->mul(base->apply(op, args), base->apply(op, right))) {
        return false;
      }
    }
  }
  return true;
}

// Runs the additivity check when it costs less than `pool`^arity tuples.
int generator_op(Structure const& s, OpId op, std::uint64_t pool) {
  auto const*         power = dynamic_cast<PowerView const*>(&s);
  std::uint64_t const n     = power != nullptr ? power->base().size() : s.size();
  std::size_t const   arity = s.signature().arity(op);
  std::uint64_t const check = tuple_count(n, arity + 1);
  if (check > (std::uint64_t{1} << 24) || check >= tuple_count(pool, arity)) {
    return -1;
  }
  return additive_in_each_slot(s, op) ? 1 : 0;
}

}  // namespace

Subalgebra generate_subalgebra(Structure const& s, std::span<Code const> seed,
                               EngineConfig const& cfg) {
  CodeIndex         index(s.size());
  std::vector<Code> elems{0};
  std::vector<Code> gens;
  index.insert(0, 0);

  auto visit = [&](Code y, std::vector<Code>& fresh) {
    if (index.contains(y)) {
      return;
    }
    check_guard(elems.size() < cfg.guards.closure,
                "subalgebra closure exceeds "
                    + std::to_string(cfg.guards.closure) + " elements");
    index.insert(y, static_cast<std::uint32_t>(elems.size()));
    elems.push_back(y);
    fresh.push_back(y);
  };
  // Closes the group generated by gens after appending g.
  auto add_generator = [&](Code g) {
    if (index.contains(g)) {
      return;
    }
    gens.push_back(g);
    std::vector<Code> fresh;
    for (std::size_t i = 0, n = elems.size(); i < n; ++i) {
      visit(s.mul(elems[i], g), fresh);
    }
    while (!fresh.empty()) {
      Code x = fresh.back();
      fresh.pop_back();
      for (Code h : gens) {
        visit(s.mul(x, h), fresh);
      }
    }
  };

  for (Code x : seed) {
    if (x >= s.size()) {
      fail(ErrorKind::validation,
           "seed element " + std::to_string(x) + " outside the carrier");
    }
    add_generator(x);
  }

  // Semi-naive rounds: a tuple is evaluated once, in the first round where
  // all of its coordinates are known. Ops additive in each slot only need
  // tuples of generators; the check runs once it is cheaper than a round.
  auto const&       sig  = s.signature();
  std::vector<int>  additive(sig.number_of_ops(), -1);
  std::size_t       done = 0;
  std::size_t       gens_done = 0;
  std::vector<Code> args;
  while (done < elems.size() || gens_done < gens.size()) {
    std::size_t const m  = elems.size();
    std::size_t const gm = gens.size();
    for (OpId op = 2; op < sig.number_of_ops(); ++op) {
      std::size_t const arity = sig.arity(op);
      if (additive[op] < 0) {
        additive[op] = generator_op(s, op, m);
      }
      bool const              on_gens = additive[op] == 1;
      std::vector<Code> const& pool   = on_gens ? gens : elems;
      std::size_t const       size    = on_gens ? gm : m;
      std::size_t const       old     = on_gens ? gens_done : done;
      args.resize(arity);
      for (Odometer it(arity, size); !it.done(); it.next()) {
        bool has_new = false;
        for (std::size_t i = 0; i < arity; ++i) {
          args[i] = pool[it[i]];
          has_new = has_new || it[i] >= old;
        }
        if (has_new) {
          add_generator(s.apply(op, args));
        }
      }
    }
    done      = m;
    gens_done = gm;
  }
  return {ElementSet(std::move(elems)), std::move(gens)};
}

std::vector<Code> group_generators(Structure const& s, ElementSet const& group) {
  CodeIndex         index(s.size());
  std::vector<Code> members{0};
  std::vector<Code> gens;
  index.insert(0, 0);
  for (Code g : group) {
    if (index.contains(g)) {
      continue;
    }
    gens.push_back(g);
    std::vector<Code> fresh;
    auto visit = [&](Code y) {
      if (!index.contains(y)) {
        index.insert(y, static_cast<std::uint32_t>(members.size()));
        members.push_back(y);
        fresh.push_back(y);
      }
    };
    for (std::size_t i = 0, n = members.size(); i < n; ++i) {
      visit(s.mul(members[i], g));
    }
    while (!fresh.empty()) {
      Code x = fresh.back();
      fresh.pop_back();
      for (Code h : gens) {
        visit(s.mul(x, h));
      }
    }
  }
  return gens;
}

Congruence::Congruence(Structure const& s, ElementSet host,
                       EngineConfig const& cfg)
    : Congruence(s, host, group_generators(s, host), cfg) {}

Congruence::Congruence(Structure const& s, ElementSet host,
                       std::vector<Code> host_generators,
                       EngineConfig const& cfg)
    : _s(&s),
      _host(std::move(host)),
      _index(s.size()),
      _gens(std::move(host_generators)),
      _classes(_host.size()) {
  check_guard(_host.size() <= cfg.guards.closure,
              "congruence host exceeds " + std::to_string(cfg.guards.closure)
                  + " elements");
  if (_host.empty() || _host[0] != 0) {
    fail(ErrorKind::validation, "congruence host must contain the unit");
  }
  for (std::size_t i = 0; i < _host.size(); ++i) {
    _index.insert(_host[i], static_cast<std::uint32_t>(i));
  }
  _parent.resize(_host.size());
  std::iota(_parent.begin(), _parent.end(), std::uint32_t{0});
  _weight.assign(_host.size(), 1);
  _least = _parent;
  // Ops additive in each slot are compatible once the other slots range
  // over the host generators.
  _on_generators.assign(s.signature().number_of_ops(), false);
  for (OpId op = 2; op < s.signature().number_of_ops(); ++op) {
    _on_generators[op] = generator_op(s, op, _host.size()) == 1;
  }
}

std::uint32_t Congruence::local(Code x) const {
  std::uint32_t pos = x < _s->size() ? _index.find(x) : CodeIndex::npos;
  if (pos == CodeIndex::npos) {
    fail(ErrorKind::invariant, "element " + std::to_string(x)
                                   + " escapes the congruence host; the host "
                                     "is not a subalgebra");
  }
  return pos;
}

std::uint32_t Congruence::find(std::uint32_t x) const {
  std::uint32_t root = x;
  while (_parent[root] != root) {
    root = _parent[root];
  }
  while (_parent[x] != root) {
    std::uint32_t next = _parent[x];
    _parent[x]         = root;
    x                  = next;
  }
  return root;
}

bool Congruence::unite(std::uint32_t a, std::uint32_t b) {
  std::uint32_t ra = find(a);
  std::uint32_t rb = find(b);
  if (ra == rb) {
    return false;
  }
  if (_weight[ra] < _weight[rb]) {
    std::swap(ra, rb);
  }
  _parent[rb] = ra;
  _weight[ra] += _weight[rb];
  _least[ra] = std::min(_least[ra], _least[rb]);
  --_classes;
  _pending.emplace_back(a, b);
  return true;
}

void Congruence::propagate() {
  auto const&       sig   = _s->signature();
  auto const&       codes = _host.codes();
  std::vector<Code> args;
  while (!_pending.empty()) {
    auto [pa, pb] = _pending.back();
    _pending.pop_back();
    Code const a = codes[pa];
    Code const b = codes[pb];
    for (Code g : _gens) {
      unite(local(_s->mul(g, a)), local(_s->mul(g, b)));
      unite(local(_s->mul(a, g)), local(_s->mul(b, g)));
    }
    unite(local(_s->inv(a)), local(_s->inv(b)));
    for (OpId op = 2; op < sig.number_of_ops(); ++op) {
      std::size_t const arity = sig.arity(op);
      std::vector<Code> const& pool = _on_generators[op] ? _gens : codes;
      args.resize(arity);
      for (std::size_t pos = 0; pos < arity; ++pos) {
        for (Odometer it(arity - 1, pool.size()); !it.done(); it.next()) {
          for (std::size_t i = 0, j = 0; i < arity; ++i) {
            if (i != pos) {
              args[i] = pool[it[j++]];
            }
          }
          args[pos]   = a;
          Code left   = _s->apply(op, args);
          args[pos]   = b;
          Code right  = _s->apply(op, args);
          unite(local(left), local(right));
        }
      }
    }
  }
}

bool Congruence::add_pair(Code a, Code b) {
  if (!unite(local(a), local(b))) {
    return false;
  }
  propagate();
  return true;
}

bool Congruence::related(Code a, Code b) const {
  return find(local(a)) == find(local(b));
}

Code Congruence::representative(Code x) const {
  return _host[_least[find(local(x))]];
}

ElementSet Congruence::unit_class() const {
  std::vector<Code>   out;
  std::uint32_t const root = find(0);
  for (std::uint32_t i = 0; i < _host.size(); ++i) {
    if (find(i) == root) {
      out.push_back(_host[i]);
    }
  }
  return ElementSet(std::move(out));
}

std::vector<std::uint32_t> Congruence::class_ids() const {
  constexpr std::uint32_t    unset = CodeIndex::npos;
  std::vector<std::uint32_t> by_root(_host.size(), unset);
  std::vector<std::uint32_t> ids(_host.size());
  std::uint32_t              next = 0;
  for (std::uint32_t i = 0; i < _host.size(); ++i) {
    std::uint32_t r = find(i);
    if (by_root[r] == unset) {
      by_root[r] = next++;
    }
    ids[i] = by_root[r];
  }
  return ids;
}

std::vector<Code> Congruence::representatives() const {
  std::vector<Code> reps;
  auto              ids = class_ids();
  for (std::uint32_t i = 0; i < _host.size(); ++i) {
    if (ids[i] == reps.size()) {
      reps.push_back(_host[i]);
    }
  }
  return reps;
}

ElementSet generate_ideal(Structure const& s, ElementSet const& host,
                          std::span<Code const> gens, EngineConfig const& cfg) {
  Congruence c(s, host, cfg);
  for (Code g : gens) {
    if (!host.contains(g)) {
      fail(ErrorKind::validation, "ideal generator " + std::to_string(g)
                                      + " is not in the host");
    }
    c.add_to_unit_class(g);
  }
  return c.unit_class();
}

bool is_subalgebra(Structure const& s, ElementSet const& set) {
  if (!set.contains(0)) {
    return false;
  }
  auto const&       sig = s.signature();
  std::vector<Code> args;
  for (OpId op = 0; op < sig.number_of_ops(); ++op) {
    std::size_t const arity = sig.arity(op);
    args.resize(arity);
    for (Odometer it(arity, set.size()); !it.done(); it.next()) {
      for (std::size_t i = 0; i < arity; ++i) {
        args[i] = set[it[i]];
      }
      if (!set.contains(s.apply(op, args))) {
        return false;
      }
    }
  }
  return true;
}

bool is_ideal(Structure const& s, ElementSet const& host, ElementSet const& set) {
  return set.is_subset_of(host) && is_subalgebra(s, set)
         && generate_ideal(s, host, set) == set;
}

Code Homomorphism::operator()(Code x) const {
  auto pos = domain.position(x);
  if (!pos) {
    fail(ErrorKind::validation,
         "element " + std::to_string(x) + " outside the homomorphism domain");
  }
  return images[*pos];
}

ElementSet Homomorphism::image(ElementSet const& s) const {
  std::vector<Code> out;
  out.reserve(s.size());
  for (Code x : s) {
    out.push_back((*this)(x));
  }
  return ElementSet(std::move(out));
}

ElementSet Homomorphism::preimage(ElementSet const& t) const {
  std::vector<Code> out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (t.contains(images[i])) {
      out.push_back(domain[i]);
    }
  }
  return ElementSet(std::move(out));
}

bool is_homomorphism(Structure const& source, Structure const& target,
                     Homomorphism const& h) {
  if (!(source.signature() == target.signature())
      || h.images.size() != h.domain.size()) {
    return false;
  }
  for (Code y : h.images) {
    if (y >= target.size()) {
      return false;
    }
  }
  auto const&       sig = source.signature();
  std::vector<Code> args;
  std::vector<Code> mapped;
  for (OpId op = 0; op < sig.number_of_ops(); ++op) {
    std::size_t const arity = sig.arity(op);
    args.resize(arity);
    mapped.resize(arity);
    for (Odometer it(arity, h.domain.size()); !it.done(); it.next()) {
      for (std::size_t i = 0; i < arity; ++i) {
        args[i]   = h.domain[it[i]];
        mapped[i] = h.images[it[i]];
      }
      auto pos = h.domain.position(source.apply(op, args));
      if (!pos || h.images[*pos] != target.apply(op, mapped)) {
        return false;
      }
    }
  }
  return h.domain.contains(0) && h(0) == 0;
}

Quotient quotient(Structure const& s, ElementSet const& host,
                  ElementSet const& ideal, EngineConfig const& cfg) {
  if (!ideal.contains(0) || !ideal.is_subset_of(host)) {
    fail(ErrorKind::validation, "quotient by a subset that is not in the host");
  }
  constexpr std::uint32_t    unset = CodeIndex::npos;
  std::vector<std::uint32_t> class_of(host.size(), unset);
  std::vector<Code>          reps;
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (class_of[i] != unset) {
      continue;
    }
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(host[i]);
    for (Code k : ideal) {
      auto pos = host.position(s.mul(host[i], k));
      if (!pos || (class_of[*pos] != unset && class_of[*pos] != id)) {
        fail(ErrorKind::validation, "quotient by a subset that is not an ideal");
      }
      class_of[*pos] = id;
    }
  }
  check_guard(reps.size() <= cfg.guards.carrier,
              "quotient has more than " + std::to_string(cfg.guards.carrier)
                  + " classes");
  std::vector<Code> lifted;
  TableAlgebra      algebra = tabulate(
      "quotient", s.signature(), reps.size(),
      [&](OpId op, std::span<Code const> args) {
        lifted.resize(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) {
          lifted[i] = reps[args[i]];
        }
        auto pos = host.position(s.apply(op, lifted));
        if (!pos) {
          fail(ErrorKind::validation, "quotient host is not a subalgebra");
        }
        return Code{class_of[*pos]};
      });
  Homomorphism projection{host, std::vector<Code>(class_of.begin(), class_of.end())};
  return {std::move(algebra), std::move(projection)};
}

TableAlgebra restrict_to(Structure const& s, ElementSet const& subalgebra,
                         EngineConfig const& cfg) {
  check_guard(subalgebra.size() <= cfg.guards.carrier,
              "subalgebra has more than " + std::to_string(cfg.guards.carrier)
                  + " elements");
  std::vector<Code> lifted;
  return tabulate("subalgebra", s.signature(), subalgebra.size(),
                  [&](OpId op, std::span<Code const> args) {
                    lifted.resize(args.size());
                    for (std::size_t i = 0; i < args.size(); ++i) {
                      lifted[i] = subalgebra[args[i]];
                    }
                    auto pos = subalgebra.position(s.apply(op, lifted));
                    if (!pos) {
                      fail(ErrorKind::validation, "subset is not a subalgebra");
                    }
                    return Code{*pos};
                  });
}

TableAlgebra direct_power(TableAlgebra const& a, std::size_t k,
                          EngineConfig const& cfg) {
  check_guard(k <= cfg.guards.power, "direct power exponent "
                                         + std::to_string(k) + " exceeds "
                                         + std::to_string(cfg.guards.power));
  check_guard(tuple_count(a.size(), k) <= cfg.guards.carrier,
              "direct power has more than "
                  + std::to_string(cfg.guards.carrier) + " elements");
  PowerView view(a, k);
  auto      out = tabulate(a.name() + "^" + std::to_string(k), a.signature(),
                           view.size(),
                           [&](OpId op, std::span<Code const> args) {
                        return view.apply(op, args);
                      });
  return out;
}

Homomorphism projection(std::span<std::uint64_t const> radices, std::size_t i) {
  std::uint64_t total = 1;
  std::uint64_t below = 1;
  for (std::size_t j = 0; j < radices.size(); ++j) {
    total *= radices[j];
    if (j > i) {
      below *= radices[j];
    }
  }
  std::vector<Code> images(total);
  for (Code x = 0; x < total; ++x) {
    images[x] = (x / below) % radices[i];
  }
  return {ElementSet::range(total), std::move(images)};
}

TableAlgebra direct_product(std::span<TableAlgebra const* const> factors,
                            EngineConfig const& cfg) {
  if (factors.empty()) {
    fail(ErrorKind::validation, "direct product of no factors");
  }
  std::uint64_t total = 1;
  std::string   name;
  for (auto const* f : factors) {
    if (!(f->signature() == factors[0]->signature())) {
      fail(ErrorKind::validation, "direct product factors differ in signature");
    }
    total = total > cfg.guards.carrier ? total : total * f->size();
    name += (name.empty() ? "" : "x") + f->name();
  }
  check_guard(total <= cfg.guards.carrier,
              "direct product has more than "
                  + std::to_string(cfg.guards.carrier) + " elements");
  std::size_t const k = factors.size();
  std::vector<Code> coords;
  std::vector<Code> point;
  return tabulate(name, factors[0]->signature(), total,
                  [&](OpId op, std::span<Code const> args) {
                    std::size_t const arity = args.size();
                    coords.resize(arity * k);
                    point.resize(arity);
                    for (std::size_t a = 0; a < arity; ++a) {
                      Code x = args[a];
                      for (std::size_t i = k; i-- > 0;) {
                        coords[a * k + i] = x % factors[i]->size();
                        x /= factors[i]->size();
                      }
                    }
                    Code result = 0;
                    for (std::size_t i = 0; i < k; ++i) {
                      for (std::size_t a = 0; a < arity; ++a) {
                        point[a] = coords[a * k + i];
                      }
                      result = result * factors[i]->size()
                               + factors[i]->apply(op, point);
                    }
                    return result;
                  });
}

MeetJoin meet_join_ideals(Structure const& s, ElementSet const& a,
                          ElementSet const& b, EngineConfig const& cfg) {
  ElementSet both = set_union(a, b);
  ElementSet host = generate_subalgebra(s, both, cfg).elements;
  return {set_intersection(a, b), generate_ideal(s, host, both, cfg)};
}

ElementSet m_to_the_n(Structure const& s, ElementSet const& m,
                      ElementSet const& n, EngineConfig const& cfg) {
  ElementSet host = generate_subalgebra(s, set_union(m, n), cfg).elements;
  return generate_ideal(s, host, m, cfg);
}

std::vector<ElementSet> enumerate_ideals(Structure const& s,
                                         ElementSet const& host,
                                         EngineConfig const& cfg) {
  check_guard(host.size() <= cfg.guards.oracle,
              "ideal enumeration needs a host of at most "
                  + std::to_string(cfg.guards.oracle) + " elements, got "
                  + std::to_string(host.size()));
  std::vector<Code> host_gens = group_generators(s, host);
  auto              principal = [&](std::span<Code const> gens) {
    Congruence c(s, host, host_gens, cfg);
    for (Code g : gens) {
      c.add_to_unit_class(g);
    }
    return c.unit_class();
  };
  std::set<ElementSet>    found{ElementSet::unit()};
  std::vector<ElementSet> work;
  for (Code h : host) {
    ElementSet p = principal(std::span<Code const>(&h, 1));
    if (found.insert(p).second) {
      work.push_back(p);
    }
  }
  std::vector<ElementSet> principals(work);
  // Every ideal is the join of the principal ideals below it.
  while (!work.empty()) {
    ElementSet current = std::move(work.back());
    work.pop_back();
    for (auto const& p : principals) {
      if (p.is_subset_of(current)) {
        continue;
      }
      ElementSet joined = principal(set_union(current, p).codes());
      if (found.insert(joined).second) {
        work.push_back(std::move(joined));
      }
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](ElementSet const& a, ElementSet const& b) {
                     return a.size() < b.size();
                   });
  return out;
}

}  // namespace omega
