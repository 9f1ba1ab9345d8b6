#include "omega/pxmod.hpp"

#include "omega/commutator.hpp"
#include "omega/constructions.hpp"
#include "omega/error.hpp"

namespace omega {

namespace {
  [[noreturn]] void invalid(std::string const& what) {
    fail(ErrorKind::validation, "precrossed module: " + what);
  }

  std::string pair(Code a, Code b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }

  ElementSet normal_closure(TableAlgebra const& group, std::vector<Code> const& gens) {
    return generate_ideal(group, ElementSet::range(group.size()),
                          std::span<Code const>(gens));
  }
}  // namespace

void validate(PrecrossedModule const& x) {
  if (x.c.signature().number_of_ops() != 2 || x.g.signature().number_of_ops() != 2) {
    invalid("C and G must be plain groups");
  }
  validate(x.c);
  validate(x.g);
  std::uint64_t const nc = x.c.size(), ng = x.g.size();
  if (x.boundary.size() != nc) {
    invalid("boundary has " + std::to_string(x.boundary.size())
            + " entries, expected " + std::to_string(nc));
  }
  for (Code b : x.boundary) {
    if (b >= ng) {
      invalid("boundary value " + std::to_string(b) + " outside G");
    }
  }
  if (x.action.size() != ng) {
    invalid("action needs one row per element of G");
  }
  for (auto const& row : x.action) {
    if (row.size() != nc) {
      invalid("action row length differs from |C|");
    }
    for (Code v : row) {
      if (v >= nc) {
        invalid("action value " + std::to_string(v) + " outside C");
      }
    }
  }
  for (Code a = 0; a < nc; ++a) {
    for (Code b = 0; b < nc; ++b) {
      if (x.boundary[x.c.fast_mul(a, b)]
          != x.g.fast_mul(x.boundary[a], x.boundary[b])) {
        invalid("boundary is not a homomorphism at " + pair(a, b));
      }
    }
  }
  for (Code c = 0; c < nc; ++c) {
    if (x.action[0][c] != c) {
      invalid("the unit of G does not act trivially on " + std::to_string(c));
    }
  }
  for (Code g = 0; g < ng; ++g) {
    for (Code h = 0; h < ng; ++h) {
      for (Code c = 0; c < nc; ++c) {
        if (x.action[x.g.fast_mul(g, h)][c] != x.action[g][x.action[h][c]]) {
          invalid("action is not compatible with the product of G at "
                  + pair(g, h));
        }
      }
    }
    for (Code a = 0; a < nc; ++a) {
      for (Code b = 0; b < nc; ++b) {
        if (x.action[g][x.c.fast_mul(a, b)]
            != x.c.fast_mul(x.action[g][a], x.action[g][b])) {
          invalid("element " + std::to_string(g)
                  + " of G does not act by an automorphism");
        }
      }
    }
    for (Code c = 0; c < nc; ++c) {
      Code lhs = x.boundary[x.action[g][c]];
      Code rhs = x.g.fast_mul(x.g.fast_mul(g, x.boundary[c]), x.g.fast_inv(g));
      if (lhs != rhs) {
        invalid("boundary is not equivariant at " + pair(g, c));
      }
    }
  }
}

void validate_pxm(Structure const& a) {
  auto const& sig = a.signature();
  auto        d   = sig.find("d");
  auto        c   = sig.find("c");
  if (sig.number_of_ops() != 4 || !d || !c || sig.arity(*d) != 1 || sig.arity(*c) != 1) {
    fail(ErrorKind::validation, "expected the signature {d/1, c/1}");
  }
  auto apply = [&](OpId op, Code x) { return a.apply(op, std::span<Code const>(&x, 1)); };
  for (Code x = 0; x < a.size(); ++x) {
    Code dx = apply(*d, x), cx = apply(*c, x);
    if (apply(*d, dx) != dx || apply(*c, dx) != dx || apply(*d, cx) != cx
        || apply(*c, cx) != cx) {
      fail(ErrorKind::validation,
           "d and c are not compatible idempotents at " + std::to_string(x));
    }
    for (Code y = 0; y < a.size(); ++y) {
      Code xy = a.mul(x, y);
      if (apply(*d, xy) != a.mul(dx, apply(*d, y))
          || apply(*c, xy) != a.mul(cx, apply(*c, y))) {
        fail(ErrorKind::validation,
             "d or c is not multiplicative at " + pair(x, y));
      }
    }
  }
}

TableAlgebra to_pxm(PrecrossedModule const& x, EngineConfig const& cfg) {
  validate(x);
  std::uint64_t const nc = x.c.size(), ng = x.g.size();
  check_guard(nc * ng <= cfg.guards.carrier,
              "G x C has " + std::to_string(nc * ng) + " elements, above the cap "
                  + std::to_string(cfg.guards.carrier));
  Signature const sig = pxm_signature();
  OpId const      d   = *sig.find("d");
  return tabulate("pxm", sig, nc * ng, [&](OpId op, std::span<Code const> a) {
    Code g = a[0] / nc, c = a[0] % nc;
    if (op == op_mul) {
      Code h = a[1] / nc, e = a[1] % nc;
      return x.g.fast_mul(g, h) * nc + x.c.fast_mul(c, x.action[g][e]);
    }
    if (op == op_inv) {
      Code gi = x.g.fast_inv(g);
      return gi * nc + x.action[gi][x.c.fast_inv(c)];
    }
    if (op == d) {
      return g * nc;
    }
    // With this product, (g boundary(c), 1) is not multiplicative for
    // nonabelian G.
    return x.g.fast_mul(x.boundary[c], g) * nc;
  });
}

PrecrossedModule to_precrossed(TableAlgebra const& a) {
  validate(a);
  validate_pxm(a);
  auto const& sig = a.signature();
  OpId const  d   = *sig.find("d");
  OpId const  c   = *sig.find("c");
  auto apply = [&](OpId op, Code x) { return a.apply(op, std::span<Code const>(&x, 1)); };
  std::vector<Code> kernel, image;
  for (Code x = 0; x < a.size(); ++x) {
    if (apply(d, x) == 0) {
      kernel.push_back(x);
    }
    image.push_back(apply(d, x));
  }
  ElementSet const k(kernel);
  ElementSet const i(image);
  Signature const  plain;
  auto             group_on = [&](ElementSet const& set, char const* name) {
    return tabulate(name, plain, set.size(), [&](OpId op, std::span<Code const> x) {
      Code v = op == op_mul ? a.mul(set[x[0]], set[x[1]]) : a.inv(set[x[0]]);
      return Code{*set.position(v)};
    });
  };
  PrecrossedModule out{group_on(k, "C"), group_on(i, "G"), {}, {}};
  for (Code x : k) {
    out.boundary.push_back(*i.position(apply(c, x)));
  }
  out.action.assign(i.size(), std::vector<Code>(k.size()));
  for (std::size_t g = 0; g < i.size(); ++g) {
    for (std::size_t x = 0; x < k.size(); ++x) {
      Code conj = a.mul(a.mul(i[g], k[x]), a.inv(i[g]));
      out.action[g][x] = *k.position(conj);
    }
  }
  return out;
}

Submodule pxm_ideal_submodule(TableAlgebra const& a, ElementSet const& ideal) {
  OpId const d     = *a.signature().find("d");
  auto       apply = [&](Code x) { return a.apply(d, std::span<Code const>(&x, 1)); };
  std::vector<Code> kernel, image;
  for (Code x = 0; x < a.size(); ++x) {
    if (apply(x) == 0) {
      kernel.push_back(x);
    }
    image.push_back(apply(x));
  }
  ElementSet const  k(kernel);
  ElementSet const  i(image);
  std::vector<Code> kpart, spart;
  for (Code x : ideal) {
    if (auto pos = k.position(x)) {
      kpart.push_back(*pos);
    }
    spart.push_back(*i.position(apply(x)));
  }
  return {ElementSet(std::move(kpart)), ElementSet(std::move(spart))};
}

Submodule whole(PrecrossedModule const& x) {
  return {ElementSet::range(x.c.size()), ElementSet::range(x.g.size())};
}

Submodule close_submodule(PrecrossedModule const& x, std::vector<Code> const& k,
                          std::vector<Code> const& s) {
  for (Code v : k) {
    if (v >= x.c.size()) {
      invalid("submodule element " + std::to_string(v) + " outside C");
    }
  }
  for (Code v : s) {
    if (v >= x.g.size()) {
      invalid("submodule element " + std::to_string(v) + " outside G");
    }
  }
  Submodule cur{normal_closure(x.c, k), normal_closure(x.g, s)};
  while (true) {
    std::vector<Code> sgens(cur.s.begin(), cur.s.end());
    for (Code v : cur.k) {
      sgens.push_back(x.boundary[v]);
    }
    std::vector<Code> kgens(cur.k.begin(), cur.k.end());
    for (Code g = 0; g < x.g.size(); ++g) {
      for (Code v : cur.k) {
        kgens.push_back(x.action[g][v]);
      }
    }
    for (Code g : cur.s) {
      for (Code c = 0; c < x.c.size(); ++c) {
        kgens.push_back(x.c.fast_mul(x.action[g][c], x.c.fast_inv(c)));
      }
    }
    Submodule next{normal_closure(x.c, kgens), normal_closure(x.g, sgens)};
    if (next == cur) {
      return cur;
    }
    cur = std::move(next);
  }
}

bool is_normal_submodule(PrecrossedModule const& x, Submodule const& sub) {
  if (sub.k.empty() || sub.s.empty() || sub.k.codes().back() >= x.c.size()
      || sub.s.codes().back() >= x.g.size()) {
    return false;
  }
  if (!is_ideal(x.c, ElementSet::range(x.c.size()), sub.k)
      || !is_ideal(x.g, ElementSet::range(x.g.size()), sub.s)) {
    return false;
  }
  for (Code v : sub.k) {
    if (!sub.s.contains(x.boundary[v])) {
      return false;
    }
    for (Code g = 0; g < x.g.size(); ++g) {
      if (!sub.k.contains(x.action[g][v])) {
        return false;
      }
    }
  }
  for (Code g : sub.s) {
    for (Code c = 0; c < x.c.size(); ++c) {
      if (!sub.k.contains(x.c.fast_mul(x.action[g][c], x.c.fast_inv(c)))) {
        return false;
      }
    }
  }
  return true;
}

ElementSet submodule_ideal(PrecrossedModule const& x, Submodule const& sub) {
  std::vector<Code> out;
  for (Code g : sub.s) {
    for (Code k : sub.k) {
      out.push_back(g * x.c.size() + k);
    }
  }
  return ElementSet(std::move(out));
}

Submodule ideal_submodule(PrecrossedModule const& x, ElementSet const& ideal) {
  std::vector<Code> k, s;
  for (Code v : ideal) {
    if (v < x.c.size()) {
      k.push_back(v);
    }
    if (v % x.c.size() == 0) {
      s.push_back(v / x.c.size());
    }
  }
  return {ElementSet(std::move(k)), ElementSet(std::move(s))};
}

Code peiffer_element(PrecrossedModule const& x, Code k, Code l) {
  auto const& c     = x.c;
  Code        klk   = c.fast_mul(c.fast_mul(k, l), c.fast_inv(k));
  Code        moved = x.action[x.boundary[k]][l];
  return c.fast_mul(klk, c.fast_inv(moved));
}

ElementSet peiffer_commutator(PrecrossedModule const& x, Submodule const& k,
                              Submodule const& l) {
  if (!is_normal_submodule(x, k) || !is_normal_submodule(x, l)) {
    invalid("Peiffer commutator needs normal submodules");
  }
  ElementSet        join = generate_subalgebra(x.c, set_union(k.k, l.k)).elements;
  std::vector<Code> gens;
  for (Code a : k.k) {
    for (Code b : l.k) {
      gens.push_back(peiffer_element(x, a, b));
      gens.push_back(peiffer_element(x, b, a));
    }
  }
  return generate_ideal(x.c, join, std::span<Code const>(gens));
}

bool is_crossed(PrecrossedModule const& x) {
  for (Code a = 0; a < x.c.size(); ++a) {
    for (Code b = 0; b < x.c.size(); ++b) {
      if (peiffer_element(x, a, b) != 0) {
        return false;
      }
    }
  }
  return true;
}

IdentityBasis xm_basis() { return crossed_basis(); }

PrecrossedModule conjugation_module(TableAlgebra const& g, ElementSet const& n) {
  if (!is_ideal(g, ElementSet::range(g.size()), n)) {
    invalid("conjugation module needs a normal subgroup");
  }
  PrecrossedModule x{restrict_to(g, n), g, {n.begin(), n.end()}, {}};
  x.action.assign(g.size(), std::vector<Code>(n.size()));
  for (Code h = 0; h < g.size(); ++h) {
    for (std::size_t i = 0; i < n.size(); ++i) {
      Code conj = g.fast_mul(g.fast_mul(h, n[i]), g.fast_inv(h));
      x.action[h][i] = *n.position(conj);
    }
  }
  return x;
}

PrecrossedModule trivial_module(TableAlgebra const& c, TableAlgebra const& g) {
  PrecrossedModule x{c, g, std::vector<Code>(c.size(), 0), {}};
  std::vector<Code> identity(c.size());
  for (Code v = 0; v < c.size(); ++v) {
    identity[v] = v;
  }
  x.action.assign(g.size(), identity);
  return x;
}

PrecrossedModule inversion_module(std::size_t n) {
  PrecrossedModule x = trivial_module(build_group(GroupSpec{GroupSpec::Kind::cyclic, n, {}}),
                                      build_group(GroupSpec{GroupSpec::Kind::cyclic, 2, {}}));
  for (Code k = 0; k < n; ++k) {
    x.action[1][k] = (n - k) % n;
    x.boundary[k]  = n % 2 == 0 ? k % 2 : 0;
  }
  return x;
}

PeifferCheck peiffer_crosscheck(PrecrossedModule const& x, Submodule const& k,
                                Submodule const& l, EngineConfig const& cfg) {
  PeifferCheck out;
  out.peiffer        = peiffer_commutator(x, k, l);
  TableAlgebra const a = to_pxm(x, cfg);
  out.commutator = relative_commutator(a, submodule_ideal(x, k),
                                       submodule_ideal(x, l), xm_basis(), cfg)
                       .result;
  // (1,c) has code c.
  out.agrees = out.commutator == out.peiffer;
  return out;
}

}  // namespace omega
