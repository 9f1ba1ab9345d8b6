#include "omega/demos.hpp"

#include "omega/commutator.hpp"
#include "omega/constructions.hpp"
#include "omega/error.hpp"
#include "omega/pxmod.hpp"

namespace omega {

namespace {
  void require(bool ok, std::string const& what) {
    if (!ok) {
      fail(ErrorKind::invariant, "demo check failed: " + what);
    }
  }

  std::vector<std::string> listing(ZpRing const& r, Subspace const& s,
                                   EngineConfig const& cfg) {
    std::vector<std::string> out;
    for (auto const& v : s.elements(cfg)) {
      out.push_back(r.format(v));
    }
    return out;
  }

  std::vector<std::string> spanning(ZpRing const& r, Subspace const& s) {
    std::vector<std::string> out;
    for (auto const& v : s.basis()) {
      out.push_back(r.format(v));
    }
    return out;
  }

  std::string braces(std::vector<std::string> const& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += (i ? ", " : "") + items[i];
    }
    return out + "}";
  }

  std::string braces(ElementSet const& s) {
    std::vector<std::string> items;
    for (Code x : s) {
      items.push_back(std::to_string(x));
    }
    return braces(items);
  }

  Subspace span_of(ZpRing const& r, std::vector<std::string> const& polys) {
    std::vector<Vec> rows;
    for (auto const& p : polys) {
      rows.push_back(r.parse(p));
    }
    return Subspace::span(r.p(), r.dimension(), rows);
  }

  Vec cube(ZpRing const& r, Vec const& x) { return r.mul(r.mul(x, x), x); }

  ElementSet commutator_closure(TableAlgebra const& g, ElementSet const& m,
                                ElementSet const& n) {
    std::vector<Code> gens;
    for (Code a : m) {
      for (Code b : n) {
        gens.push_back(g.fast_mul(g.fast_mul(a, b),
                                  g.fast_mul(g.fast_inv(a), g.fast_inv(b))));
      }
    }
    ElementSet host = generate_subalgebra(g, set_union(m, n)).elements;
    return generate_ideal(g, host, std::span<Code const>(gens));
  }
}  // namespace

DemoReport demo_cex1(EngineConfig const& cfg) {
  ZpRing const        r     = three_generator_ring();
  IdentityBasis const basis = preset_basis("cube", r.signature());
  Subspace const      s     = named_ideal(r, {"b"}, cfg);
  Subspace const      r1    = named_ideal(r, {"a1", "b"}, cfg);
  Subspace const      r2    = named_ideal(r, {"a2", "b"}, cfg);
  Subspace const      r12   = sum(r1, r2);

  auto const left  = relative_commutator(r, s, r1, basis, cfg);
  auto const right = relative_commutator(r, s, r2, basis, cfg);
  auto const joint = relative_commutator(r, s, r12, basis, cfg);

  Vec const a1a2 = r.parse("a1 + a2");
  Vec const b    = r.parse("b");
  Vec const witness =
      r.sub(r.sub(cube(r, r.add(b, a1a2)), cube(r, a1a2)), cube(r, b));
  Vec const target = r.parse("a1*a2*b");

  require(left.result.dimension() == 0, "[S,R1] is not zero");
  require(right.result.dimension() == 0, "[S,R2] is not zero");
  require(witness == target, "the witness is not a1*a2*b");
  require(joint.result.contains(witness), "a1*a2*b is not in [S,R1 v R2]");
  bool const additive = sum(left.result, right.result) == joint.result;
  require(!additive, "the commutator preserved the join");

  DemoReport out{"cex1", {}, {}};
  out.lines = {
      "ring: Z/5 on a1, a2, b, nil squares, degree <= 3 (dimension 7); basis x^3",
      "S = (b) = span" + braces(spanning(r, s)),
      "[S,R1]_B = {0}",
      "[S,R2]_B = {0}",
      "[S,R1 v R2]_B = span" + braces(spanning(r, joint.result)),
      "v0(b + a1 + a2) - v0(a1 + a2) - v0(b) = " + r.format(witness),
      "[S,R1]_B v [S,R2]_B = [S,R1 v R2]_B: false",
  };
  out.data = {{"S", spanning(r, s)},
              {"R1", spanning(r, r1)},
              {"R2", spanning(r, r2)},
              {"S_R1", spanning(r, left.result)},
              {"S_R2", spanning(r, right.result)},
              {"S_R1_join_R2", spanning(r, joint.result)},
              {"witness", r.format(witness)},
              {"join_additive", additive}};
  return out;
}

DemoReport demo_cex2(EngineConfig const& cfg) {
  ZpRing const        r     = cubic_nil_ring();
  IdentityBasis const basis = preset_basis("exp2", r.signature());
  Subspace const      whole = Subspace::full(r.p(), r.dimension());

  auto const cv = c_values(r, whole, whole, basis, cfg);
  auto const rc = relative_commutator(r, whole, whole, basis, cfg);
  Vec const  a2 = r.parse("a^2");
  bool const in_rc = rc.result.contains(a2);
  bool const in_cv = cv.result.contains(a2);
  bool const image = image_condition(r, basis, cfg);

  require(in_rc, "a^2 is not in [R,R]");
  require(!in_cv, "a^2 is in C(R,R)");
  require(cv.result == span_of(r, {"a^3"}), "C(R,R) differs from {0, a^3}");
  require(rc.result == span_of(r, {"a^2", "a^3"}),
          "[R,R] differs from {0, a^2, a^3, a^2 + a^3}");
  require(!image, "the image condition holds");

  auto const cv_list = listing(r, cv.result, cfg);
  auto const rc_list = listing(r, rc.result, cfg);
  DemoReport out{"cex2", {}, {}};
  out.lines = {
      "ring: Z/2[a]/(a^4); basis x^2",
      std::string("a^2 ∈ [R,R]_B: ") + (in_rc ? "true" : "false")
          + "; a^2 ∈ C_B(R,R): " + (in_cv ? "true" : "false"),
      "C_B(R,R) = " + braces(cv_list),
      "[R,R]_B = " + braces(rc_list),
      std::string("image condition: ") + (image ? "true" : "false"),
  };
  out.data = {{"a2_in_commutator", in_rc},
              {"a2_in_c_values", in_cv},
              {"c_values", cv_list},
              {"commutator", rc_list},
              {"image_condition", image}};
  return out;
}

DemoReport demo_higgins(EngineConfig const& cfg) {
  TableAlgebra const s3    = build_group("symmetric 3", cfg);
  ElementSet const   whole = ElementSet::range(s3.size());
  ElementSet const   a3    = named_ideal(s3, {"3"}, cfg);
  auto const         group = higgins_commutator(s3, a3, whole, cfg);
  ElementSet const   expected_group = commutator_closure(s3, a3, whole);
  require(group.result == expected_group, "S3: engine differs from [A3,S3]");
  require(group.result == a3, "S3: [A3,S3] differs from A3");

  ZpRing const   r    = cubic_nil_ring();
  Subspace const full = Subspace::full(r.p(), r.dimension());
  auto const     ring = higgins_commutator(r, full, full, cfg);
  std::vector<Vec> products;
  for (auto const& x : full.elements(cfg)) {
    for (auto const& y : full.elements(cfg)) {
      products.push_back(r.mul(x, y));
    }
  }
  Subspace const expected_ring = generate_ideal(r, full, products, cfg);
  require(ring.result == expected_ring, "ring: engine differs from (MN + NM)");

  DemoReport out{"higgins", {}, {}};
  out.lines = {
      "S3 with A3 = " + braces(a3) + ": [A3,S3] = " + braces(group.result),
      "Z/2[a]/(a^4) with M = N = (a): [M,N] = " + braces(listing(r, ring.result, cfg)),
  };
  out.data = {{"s3", group.result.codes()}, {"ring", listing(r, ring.result, cfg)}};
  return out;
}

DemoReport demo_peiffer(EngineConfig const& cfg) {
  struct Case {
    std::string      name;
    PrecrossedModule x;
    ElementSet       expected;
  };
  TableAlgebra const s3 = build_group("symmetric 3", cfg);
  std::vector<Case>  cases;
  cases.push_back({"C4 with C2 acting by inversion", inversion_module(4), ElementSet{0, 2}});
  cases.push_back({"S3 acting on itself by conjugation",
                   conjugation_module(s3, ElementSet::range(6)), ElementSet{0}});
  cases.push_back({"S3 over the trivial group",
                   trivial_module(s3, build_group("cyclic 1", cfg)), ElementSet{0, 3, 4}});

  DemoReport out{"peiffer", {}, Json::array()};
  for (auto const& c : cases) {
    Submodule const all   = whole(c.x);
    auto const      check = peiffer_crosscheck(c.x, all, all, cfg);
    require(check.agrees, c.name + ": commutator differs from the Peiffer commutator");
    require(check.peiffer == c.expected, c.name + ": unexpected Peiffer commutator");
    out.lines.push_back(c.name + ": Peiffer " + braces(check.peiffer) + ", [K,L]_XM "
                        + braces(check.commutator));
    out.data.push_back({{"case", c.name},
                        {"peiffer", check.peiffer.codes()},
                        {"commutator", check.commutator.codes()},
                        {"agrees", check.agrees}});
  }
  return out;
}

std::vector<std::string> demo_names() { return {"cex1", "cex2", "higgins", "peiffer"}; }

DemoReport run_demo(std::string_view name, EngineConfig const& cfg) {
  if (name == "cex1") {
    return demo_cex1(cfg);
  }
  if (name == "cex2") {
    return demo_cex2(cfg);
  }
  if (name == "higgins") {
    return demo_higgins(cfg);
  }
  if (name == "peiffer") {
    return demo_peiffer(cfg);
  }
  fail(ErrorKind::validation, "unknown demo '" + std::string(name) + "'");
}

}  // namespace omega
