#include "omega/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "omega/closure.hpp"
#include "omega/error.hpp"
#include "omega/tuples.hpp"

namespace omega {

namespace {
  using Exponents = std::vector<std::size_t>;

  void monomials_of_degree(std::size_t k, std::size_t degree, bool nil_squares,
                           Exponents& current, std::size_t at,
                           std::vector<Exponents>& out) {
    if (at == k) {
      if (degree == 0) {
        out.push_back(current);
      }
      return;
    }
    std::size_t top = nil_squares ? std::min<std::size_t>(degree, 1) : degree;
    for (std::size_t e = top + 1; e-- > 0;) {
      current[at] = e;
      monomials_of_degree(k, degree - e, nil_squares, current, at + 1, out);
    }
    current[at] = 0;
  }

  std::string monomial_label(std::vector<std::string> const& names,
                             Exponents const& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      out += (out.empty() ? "" : "*") + names[i];
      if (e[i] > 1) {
        out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

  bool valid_name(std::string const& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }
}  // namespace

ZpRing build_ring(TruncatedRingSpec const& spec, EngineConfig const& cfg) {
  if (!is_prime(spec.p)) {
    fail(ErrorKind::validation, std::to_string(spec.p) + " is not prime");
  }
  if (spec.generators.empty()) {
    fail(ErrorKind::validation, "a ring needs at least one generator");
  }
  if (spec.max_degree == 0) {
    fail(ErrorKind::validation, "max_degree must be positive");
  }
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (!valid_name(spec.generators[i])) {
      fail(ErrorKind::validation,
           "generator name '" + spec.generators[i] + "' is not an identifier");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.generators[i] == spec.generators[j]) {
        fail(ErrorKind::validation,
             "duplicate generator '" + spec.generators[i] + "'");
      }
    }
  }
  std::size_t const      k = spec.generators.size();
  std::vector<Exponents> basis;
  Exponents              current(k, 0);
  for (std::size_t d = 1; d <= spec.max_degree; ++d) {
    monomials_of_degree(k, d, spec.nil_squares, current, 0, basis);
    check_guard(basis.size() <= cfg.guards.dimension,
                "ring dimension exceeds " + std::to_string(cfg.guards.dimension));
  }
  std::map<Exponents, std::uint32_t> position;
  std::vector<std::string>           labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    position[basis[i]] = static_cast<std::uint32_t>(i);
    labels.push_back(monomial_label(spec.generators, basis[i]));
  }
  std::vector<std::vector<BasisProduct>> products(
      basis.size(), std::vector<BasisProduct>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Exponents sum(k);
      for (std::size_t g = 0; g < k; ++g) {
        sum[g] = basis[i][g] + basis[j][g];
      }
      auto it = position.find(sum);
      if (it != position.end()) {
        products[i][j].emplace_back(it->second, 1);
      }
    }
  }
  return ZpRing(spec.p, std::move(labels), std::move(products));
}

ZpRing cubic_nil_ring() { return build_ring({2, {"a"}, false, 3}); }

ZpRing three_generator_ring() {
  return build_ring({5, {"a1", "a2", "b"}, true, 3});
}

GroupSpec parse_group_spec(std::string_view text) {
  std::vector<std::string> words;
  std::string              word;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ':') {
      if (!word.empty()) {
        words.push_back(word);
        word.clear();
      }
    } else {
      word += ch;
    }
  }
  if (!word.empty()) {
    words.push_back(word);
  }
  std::vector<GroupSpec> factors;
  std::size_t            i = 0;
  auto                   bad = [&](std::string const& why) {
    fail(ErrorKind::parse, "group spec '" + std::string(text) + "': " + why);
  };
  while (i < words.size()) {
    GroupSpec   g;
    std::string kind = words[i++];
    if (kind == "quaternion") {
      g.kind = GroupSpec::Kind::quaternion;
      g.n    = 8;
    } else {
      if (kind == "cyclic") {
        g.kind = GroupSpec::Kind::cyclic;
      } else if (kind == "symmetric") {
        g.kind = GroupSpec::Kind::symmetric;
      } else if (kind == "dihedral") {
        g.kind = GroupSpec::Kind::dihedral;
      } else {
        bad("unknown group kind '" + kind + "'");
      }
      if (i >= words.size()) {
        bad("missing order after '" + kind + "'");
      }
      std::string const& num = words[i++];
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }) || num.size() > 6) {
        bad("'" + num + "' is not a size");
      }
      g.n = std::stoul(num);
      if (g.n == 0) {
        bad("size must be positive");
      }
    }
    factors.push_back(std::move(g));
    if (i < words.size()) {
      if (words[i] != "x") {
        bad("expected 'x' between factors");
      }
      ++i;
      if (i == words.size()) {
        bad("dangling 'x'");
      }
    }
  }
  if (factors.empty()) {
    bad("empty");
  }
  if (factors.size() == 1) {
    return factors[0];
  }
  GroupSpec product;
  product.kind    = GroupSpec::Kind::product;
  product.factors = std::move(factors);
  return product;
}

TableAlgebra build_group(GroupSpec const& spec, EngineConfig const& cfg) {
  Signature const sig;
  auto const      guard = [&](std::uint64_t size) {
    check_guard(size <= cfg.guards.carrier,
                "group of order " + std::to_string(size) + " exceeds the carrier cap "
                    + std::to_string(cfg.guards.carrier));
  };
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: {
      std::uint64_t n = spec.n;
      guard(n);
      return tabulate("C" + std::to_string(n), sig, n,
                      [&](OpId op, std::span<Code const> x) {
                        return op == op_mul ? (x[0] + x[1]) % n : (n - x[0]) % n;
                      });
    }
    case GroupSpec::Kind::symmetric: {
      std::uint64_t order = 1;
      for (std::size_t i = 2; i <= spec.n; ++i) {
        order *= i;
        guard(order);
      }
      std::vector<std::vector<std::size_t>> perms;
      std::vector<std::size_t>              p(spec.n);
      std::iota(p.begin(), p.end(), std::size_t{0});
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::map<std::vector<std::size_t>, Code> index;
      for (std::size_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = i;
      }
      return tabulate("S" + std::to_string(spec.n), sig, perms.size(),
                      [&](OpId op, std::span<Code const> x) {
                        auto const&              a = perms[x[0]];
                        std::vector<std::size_t> out(spec.n);
                        for (std::size_t i = 0; i < spec.n; ++i) {
                          if (op == op_mul) {
                            out[i] = a[perms[x[1]][i]];
                          } else {
                            out[a[i]] = i;
                          }
                        }
                        return index.at(out);
                      });
    }
    case GroupSpec::Kind::dihedral: {
      std::uint64_t n = spec.n;
      guard(2 * n);
      return tabulate("D" + std::to_string(n), sig, 2 * n,
                      [&](OpId op, std::span<Code const> x) {
                        Code i = x[0] % n, a = x[0] / n;
                        if (op == op_inv) {
                          // (r^i)^-1 = r^-i; reflections are involutions.
                          return a == 0 ? (n - i) % n : x[0];
                        }
                        Code k = x[1] % n, b = x[1] / n;
                        Code rot = a == 0 ? (i + k) % n : (i + n - k) % n;
                        return rot + n * ((a + b) % 2);
                      });
    }
    case GroupSpec::Kind::quaternion: {
      // Units 1, i, j, k; product sign and unit.
      static int const sign[4][4] = {
          {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      static int const unit[4][4] = {
          {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      return tabulate("Q8", sig, 8, [&](OpId op, std::span<Code const> x) {
        Code u = x[0] / 2, s = x[0] % 2;
        if (op == op_inv) {
          return u == 0 ? x[0] : 2 * u + (1 - s);
        }
        Code v = x[1] / 2, t = x[1] % 2;
        return Code(2 * unit[u][v] + ((s + t + sign[u][v]) % 2));
      });
    }
    case GroupSpec::Kind::product: {
      std::vector<TableAlgebra> built;
      for (auto const& f : spec.factors) {
        built.push_back(build_group(f, cfg));
      }
      std::vector<TableAlgebra const*> ptrs;
      for (auto const& b : built) {
        ptrs.push_back(&b);
      }
      return direct_product(ptrs, cfg);
    }
  }
  fail(ErrorKind::validation, "unknown group kind");
}

TableAlgebra build_group(std::string_view spec, EngineConfig const& cfg) {
  return build_group(parse_group_spec(spec), cfg);
}

Code evaluate_word(TableAlgebra const& a, std::string_view word) {
  auto bad = [&](std::string const& why) {
    fail(ErrorKind::parse, "word '" + std::string(word) + "': " + why);
  };
  std::string compact;
  for (char ch : word) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact += ch;
    }
  }
  if (compact.empty()) {
    bad("empty");
  }
  if (compact == "e") {
    return 0;
  }
  Code        acc = 0;
  std::size_t pos = 0;
  auto        read_int = [&](bool allow_sign) -> long long {
    bool negative = false;
    if (allow_sign && pos < compact.size() && compact[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::size_t start = pos;
    long long   v     = 0;
    while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
      v = v * 10 + (compact[pos] - '0');
      if (v > 1'000'000'000) {
        bad("number too large");
      }
      ++pos;
    }
    if (start == pos) {
      bad("expected a number at position " + std::to_string(pos));
    }
    return negative ? -v : v;
  };
  while (true) {
    long long base = compact[pos] == 'e' ? (++pos, 0) : read_int(false);
    if (static_cast<std::uint64_t>(base) >= a.size()) {
      bad("element " + std::to_string(base) + " outside the carrier");
    }
    long long exponent = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      exponent = read_int(true);
    }
    Code factor = static_cast<Code>(base);
    if (exponent < 0) {
      factor   = a.fast_inv(factor);
      exponent = -exponent;
    }
    Code power = 0;
    for (long long i = 0; i < exponent; ++i) {
      power = a.fast_mul(power, factor);
    }
    acc = a.fast_mul(acc, power);
    if (pos == compact.size()) {
      return acc;
    }
    if (compact[pos] != '*') {
      bad("unexpected '" + std::string(1, compact[pos]) + "'");
    }
    ++pos;
    if (pos == compact.size()) {
      bad("dangling '*'");
    }
  }
}

ElementSet named_ideal(TableAlgebra const& a, std::vector<std::string> const& words,
                       EngineConfig const& cfg) {
  std::vector<Code> gens;
  for (auto const& w : words) {
    gens.push_back(evaluate_word(a, w));
  }
  return generate_ideal(a, ElementSet::range(a.size()), std::span<Code const>(gens), cfg);
}

Subspace named_ideal(ZpRing const& r, std::vector<std::string> const& polys,
                     EngineConfig const& cfg) {
  std::vector<Vec> gens;
  for (auto const& poly : polys) {
    gens.push_back(r.parse(poly));
  }
  return generate_ideal(r, Subspace::full(r.p(), r.dimension()),
                        std::span<Vec const>(gens), cfg);
}

}  // namespace omega
