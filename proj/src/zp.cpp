#include "omega/zp.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "omega/error.hpp"
#include "omega/tuples.hpp"

namespace omega {

namespace {
  Coeff mod_mul(Coeff a, Coeff b, std::uint32_t p) {
    return static_cast<Coeff>(std::uint64_t{a} * b % p);
  }

  Coeff mod_pow(Coeff a, std::uint64_t e, std::uint32_t p) {
    Coeff r = 1 % p;
    while (e > 0) {
      if (e & 1) {
        r = mod_mul(r, a, p);
      }
      a = mod_mul(a, a, p);
      e >>= 1;
    }
    return r;
  }

  Coeff mod_inverse(Coeff a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

  // a += c * b
  void axpy(Vec& a, Coeff c, Vec const& b, std::uint32_t p) {
    if (c == 0) {
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] != 0) {
        a[i] = static_cast<Coeff>((a[i] + std::uint64_t{c} * b[i]) % p);
      }
    }
  }

  bool is_zero(Vec const& v) {
    return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
  }
}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

ZpRing::ZpRing(std::uint32_t p, std::vector<std::string> labels,
               std::vector<std::vector<BasisProduct>> products)
    : _p(p), _labels(std::move(labels)), _products(std::move(products)) {
  if (!is_prime(p) || p > 65521) {
    fail(ErrorKind::schema, "coefficient modulus " + std::to_string(p)
                                + " is not a prime below 65536");
  }
  std::size_t const n = _labels.size();
  if (_products.size() != n) {
    fail(ErrorKind::schema, "structure constants do not match the basis");
  }
  for (auto& row : _products) {
    if (row.size() != n) {
      fail(ErrorKind::schema, "structure constants do not match the basis");
    }
    for (auto& entry : row) {
      for (auto& [k, c] : entry) {
        if (k >= n) {
          fail(ErrorKind::schema, "structure constant refers to basis index "
                                      + std::to_string(k));
        }
        c %= _p;
      }
      std::erase_if(entry, [](auto const& kc) { return kc.second == 0; });
    }
  }
}

std::uint64_t ZpRing::size() const { return tuple_count(_p, dimension()); }

Vec ZpRing::basis_vector(std::size_t i) const {
  Vec v = zero();
  v.at(i) = 1;
  return v;
}

Vec ZpRing::add(Vec const& a, Vec const& b) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = (a[i] + b[i]) % _p;
  }
  return out;
}

Vec ZpRing::neg(Vec const& a) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = (_p - a[i]) % _p;
  }
  return out;
}

Vec ZpRing::sub(Vec const& a, Vec const& b) const { return add(a, neg(b)); }

Vec ZpRing::scale(Coeff c, Vec const& a) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = mod_mul(c % _p, a[i], _p);
  }
  return out;
}

Vec ZpRing::mul(Vec const& a, Vec const& b) const {
  std::vector<std::uint64_t> acc(dimension(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) {
        continue;
      }
      std::uint64_t ab = std::uint64_t{a[i]} * b[j] % _p;
      for (auto [k, c] : _products[i][j]) {
        acc[k] = (acc[k] + ab * c) % _p;
      }
    }
  }
  return Vec(acc.begin(), acc.end());
}

Signature const& ZpRing::signature() const {
  static Signature const sig = ring_signature();
  return sig;
}

Vec ZpRing::apply(OpId op, std::span<Vec const> args) const {
  switch (op) {
    case op_mul: return add(args[0], args[1]);
    case op_inv: return neg(args[0]);
    case 2: return mul(args[0], args[1]);
    default: fail(ErrorKind::unknown_operation, "ring has no operation id "
                                                    + std::to_string(op));
  }
}

std::uint64_t ZpRing::index(Vec const& v) const {
  std::uint64_t x = 0;
  for (Coeff c : v) {
    x = x * _p + c;
  }
  return x;
}

Vec ZpRing::element(std::uint64_t index) const {
  Vec v(dimension());
  for (std::size_t i = v.size(); i-- > 0;) {
    v[i] = static_cast<Coeff>(index % _p);
    index /= _p;
  }
  return v;
}

bool ZpRing::is_associative() const {
  std::size_t const n = dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool ZpRing::is_commutative() const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = i + 1; j < dimension(); ++j) {
      if (mul(basis_vector(i), basis_vector(j))
          != mul(basis_vector(j), basis_vector(i))) {
        return false;
      }
    }
  }
  return true;
}

ZpRing ZpRing::power(std::size_t k) const {
  std::size_t const              n = dimension();
  std::vector<std::string>       labels;
  std::vector<std::vector<BasisProduct>> products(
      n * k, std::vector<BasisProduct>(n * k));
  for (std::size_t copy = 0; copy < k; ++copy) {
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(_labels[i] + "#" + std::to_string(copy));
      for (std::size_t j = 0; j < n; ++j) {
        auto& entry = products[copy * n + i][copy * n + j];
        for (auto [b, c] : _products[i][j]) {
          entry.emplace_back(static_cast<std::uint32_t>(copy * n + b), c);
        }
      }
    }
  }
  return ZpRing(_p, std::move(labels), std::move(products));
}

std::string ZpRing::format(Vec const& v) const {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      continue;
    }
    terms.push_back(v[i] == 1 ? _labels[i]
                              : std::to_string(v[i]) + "*" + _labels[i]);
  }
  if (terms.empty()) {
    return "0";
  }
  // Sort by monomial, ignoring the coefficient prefix.
  std::vector<std::size_t> order(terms.size());
  std::vector<std::string> monomials;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      monomials.push_back(_labels[i]);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return monomials[a] < monomials[b];
  });
  std::string out;
  for (std::size_t i : order) {
    out += (out.empty() ? "" : " + ") + terms[i];
  }
  return out;
}

namespace {
  // Recursive descent over "+ - * ^ ( )", integers and labels. Integers are
  // scalars; the ring has no unit, so a bare nonzero scalar is an error.
  class PolyParser {
   public:
    PolyParser(ZpRing const& r, std::string_view text) : _r(r), _text(text) {}

    Vec run() {
      Value v = expr();
      skip_space();
      if (_pos != _text.size()) {
        error("unexpected '" + std::string(1, _text[_pos]) + "'");
      }
      if (v.scalar) {
        if (v.c != 0) {
          error("nonzero constant in a ring without unit");
        }
        return _r.zero();
      }
      return v.v;
    }

   private:
    struct Value {
      bool  scalar = true;
      Coeff c      = 0;
      Vec   v;
    };

    [[noreturn]] void error(std::string const& what) const {
      fail(ErrorKind::parse, "polynomial '" + std::string(_text)
                                 + "': " + what);
    }

    void skip_space() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    bool eat(char ch) {
      skip_space();
      if (_pos < _text.size() && _text[_pos] == ch) {
        ++_pos;
        return true;
      }
      return false;
    }

    Value add(Value a, Value b, bool negate) {
      if (negate) {
        b = scale(b, _r.p() - 1);
      }
      if (a.scalar && b.scalar) {
        return {true, static_cast<Coeff>((a.c + b.c) % _r.p()), {}};
      }
      if (a.scalar || b.scalar) {
        Value const& s = a.scalar ? a : b;
        if (s.c != 0) {
          error("cannot add a nonzero constant to a ring element");
        }
        return a.scalar ? b : a;
      }
      return {false, 0, _r.add(a.v, b.v)};
    }

    Value scale(Value a, Coeff c) {
      if (a.scalar) {
        return {true, mod_mul(a.c, c, _r.p()), {}};
      }
      return {false, 0, _r.scale(c, a.v)};
    }

    Value multiply(Value a, Value b) {
      if (a.scalar) {
        return scale(b, a.c);
      }
      if (b.scalar) {
        return scale(a, b.c);
      }
      return {false, 0, _r.mul(a.v, b.v)};
    }

    Value expr() {
      bool  negate = eat('-');
      Value acc    = term();
      if (negate) {
        acc = scale(acc, _r.p() - 1);
      }
      while (true) {
        if (eat('+')) {
          acc = add(acc, term(), false);
        } else if (eat('-')) {
          acc = add(acc, term(), true);
        } else {
          return acc;
        }
      }
    }

    Value term() {
      Value acc = factor();
      while (eat('*')) {
        acc = multiply(acc, factor());
      }
      return acc;
    }

    std::uint64_t number() {
      skip_space();
      std::size_t   start = _pos;
      std::uint64_t n     = 0;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        if (n > std::numeric_limits<std::uint64_t>::max() / 10 - 10) {
          error("number too large");
        }
        n = n * 10 + static_cast<std::uint64_t>(_text[_pos] - '0');
        ++_pos;
      }
      if (start == _pos) {
        error("expected a number");
      }
      return n;
    }

    Value factor() {
      skip_space();
      if (_pos >= _text.size()) {
        error("unexpected end of input");
      }
      Value base;
      char  ch = _text[_pos];
      if (eat('(')) {
        base = expr();
        if (!eat(')')) {
          error("missing ')'");
        }
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        base = {true, static_cast<Coeff>(number() % _r.p()), {}};
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = _pos;
        while (_pos < _text.size()
               && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                   || _text[_pos] == '_')) {
          ++_pos;
        }
        std::string name(_text.substr(start, _pos - start));
        auto const& labels = _r.labels();
        auto        it     = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
          error("unknown generator '" + name + "'");
        }
        base = {false, 0,
                _r.basis_vector(static_cast<std::size_t>(it - labels.begin()))};
      } else {
        error("unexpected '" + std::string(1, ch) + "'");
      }
      if (eat('^')) {
        std::uint64_t e = number();
        if (e == 0) {
          error("zero exponent");
        }
        Value out = base;
        for (std::uint64_t i = 1; i < e; ++i) {
          out = multiply(out, base);
        }
        return out;
      }
      return base;
    }

    ZpRing const&    _r;
    std::string_view _text;
    std::size_t      _pos = 0;
  };
}  // namespace

Vec ZpRing::parse(std::string_view text) const {
  return PolyParser(*this, text).run();
}

TableAlgebra to_table_algebra(ZpRing const& r, EngineConfig const& cfg) {
  check_guard(r.size() <= cfg.guards.carrier,
              "ring has " + std::to_string(r.size())
                  + " elements, above the table carrier cap "
                  + std::to_string(cfg.guards.carrier));
  std::vector<Vec> elems(r.size());
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    elems[i] = r.element(i);
  }
  std::vector<Vec> args;
  return tabulate("ring", r.signature(), r.size(),
                  [&](OpId op, std::span<Code const> xs) {
                    args.resize(xs.size());
                    for (std::size_t i = 0; i < xs.size(); ++i) {
                      args[i] = elems[xs[i]];
                    }
                    return r.index(r.apply(op, args));
                  });
}

Subspace Subspace::full(std::uint32_t p, std::size_t n) {
  Subspace s(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    s.add(v);
  }
  return s;
}

Subspace Subspace::span(std::uint32_t p, std::size_t n,
                        std::span<Vec const> vectors) {
  Subspace s(p, n);
  for (auto const& v : vectors) {
    s.add(v);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < _rows.size(); ++r) {
    Coeff c = v[_pivots[r]];
    if (c != 0) {
      axpy(v, _p - c, _rows[r], _p);
    }
  }
  return v;
}

bool Subspace::contains(Vec const& v) const {
  if (v.size() != _n) {
    fail(ErrorKind::validation, "vector length does not match the subspace");
  }
  return is_zero(reduce(v));
}

bool Subspace::add(Vec const& v) {
  if (v.size() != _n) {
    fail(ErrorKind::validation, "vector length does not match the subspace");
  }
  Vec w = reduce(v);
  auto lead = std::find_if(w.begin(), w.end(), [](Coeff c) { return c != 0; });
  if (lead == w.end()) {
    return false;
  }
  std::size_t const pivot = static_cast<std::size_t>(lead - w.begin());
  w                       = [&] {
    Vec scaled(w.size());
    Coeff inv = mod_inverse(*lead, _p);
    for (std::size_t i = 0; i < w.size(); ++i) {
      scaled[i] = mod_mul(w[i], inv, _p);
    }
    return scaled;
  }();
  for (auto& row : _rows) {
    Coeff c = row[pivot];
    if (c != 0) {
      axpy(row, _p - c, w, _p);
    }
  }
  auto at = std::lower_bound(_pivots.begin(), _pivots.end(), pivot);
  auto offset = at - _pivots.begin();
  _pivots.insert(at, pivot);
  _rows.insert(_rows.begin() + offset, std::move(w));
  return true;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0, r = 0; i < _n; ++i) {
    if (r < _pivots.size() && _pivots[r] == i) {
      ++r;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::uint64_t Subspace::size() const { return tuple_count(_p, dimension()); }

Vec Subspace::coordinates(Vec const& v) const {
  Vec c(_rows.size());
  for (std::size_t r = 0; r < _rows.size(); ++r) {
    c[r] = v[_pivots[r]];
  }
  return c;
}

std::vector<Vec> Subspace::elements(EngineConfig const& cfg) const {
  check_guard(size() <= cfg.guards.carrier,
              "subspace has " + std::to_string(size())
                  + " elements, above the enumeration cap "
                  + std::to_string(cfg.guards.carrier));
  std::vector<Vec> out;
  out.reserve(size());
  for (Odometer it(dimension(), _p); !it.done(); it.next()) {
    Vec v(_n, 0);
    for (std::size_t r = 0; r < _rows.size(); ++r) {
      axpy(v, static_cast<Coeff>(it[r]), _rows[r], _p);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subspace::is_subspace_of(Subspace const& that) const {
  return std::all_of(_rows.begin(), _rows.end(),
                     [&](Vec const& v) { return that.contains(v); });
}

Subspace sum(Subspace const& a, Subspace const& b) {
  Subspace s = a;
  for (auto const& v : b.basis()) {
    s.add(v);
  }
  return s;
}

Subspace intersect(Subspace const& a, Subspace const& b) {
  // Zassenhaus: echelonize rows (u, u) for u in a and (w, 0) for w in b; the
  // rows whose first half vanishes carry the intersection in the second half.
  std::size_t const n = a.ambient();
  std::uint32_t const p = a.p();
  Subspace          big(p, 2 * n);
  for (auto const& u : a.basis()) {
    Vec row(2 * n);
    std::copy(u.begin(), u.end(), row.begin());
    std::copy(u.begin(), u.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    big.add(row);
  }
  for (auto const& w : b.basis()) {
    Vec row(2 * n, 0);
    std::copy(w.begin(), w.end(), row.begin());
    big.add(row);
  }
  Subspace out(p, n);
  for (std::size_t r = 0; r < big.dimension(); ++r) {
    if (big.pivots()[r] >= n) {
      auto const& row = big.basis()[r];
      out.add(Vec(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
    }
  }
  return out;
}

Subspace combine_blocks(Subspace const& s, std::size_t k,
                        std::span<Coeff const> c) {
  std::size_t const n = s.ambient() / k;
  Subspace          out(s.p(), n);
  for (auto const& v : s.basis()) {
    Vec w(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Vec block(v.begin() + static_cast<std::ptrdiff_t>(i * n),
                v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      axpy(w, c[i] % s.p(), block, s.p());
    }
    out.add(w);
  }
  return out;
}

Subspace generate_subalgebra(ZpRing const& r, std::span<Vec const> seed,
                             EngineConfig const& cfg) {
  check_guard(r.dimension() <= cfg.guards.dimension * cfg.guards.power,
              "ring dimension above the cap");
  Subspace         s(r.p(), r.dimension());
  std::vector<Vec> raw;
  for (auto const& v : seed) {
    if (s.add(v)) {
      raw.push_back(v);
    }
  }
  // Products of spanning vectors span all products; visit each pair once.
  for (std::size_t j = 0; j < raw.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      for (Vec prod : {r.mul(raw[i], raw[j]), r.mul(raw[j], raw[i])}) {
        if (s.add(prod)) {
          raw.push_back(std::move(prod));
        }
      }
    }
  }
  return s;
}

Subspace generate_ideal(ZpRing const& r, Subspace const& host,
                        std::span<Vec const> gens, EngineConfig const& cfg) {
  check_guard(r.dimension() <= cfg.guards.dimension * cfg.guards.power,
              "ring dimension above the cap");
  Subspace         s(r.p(), r.dimension());
  std::vector<Vec> raw;
  for (auto const& v : gens) {
    if (!host.contains(v)) {
      fail(ErrorKind::validation, "ideal generator is not in the host");
    }
    if (s.add(v)) {
      raw.push_back(v);
    }
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (auto const& h : host.basis()) {
      for (Vec prod : {r.mul(raw[i], h), r.mul(h, raw[i])}) {
        if (s.add(prod)) {
          raw.push_back(std::move(prod));
        }
      }
    }
  }
  return s;
}

bool is_subalgebra(ZpRing const& r, Subspace const& s) {
  for (auto const& a : s.basis()) {
    for (auto const& b : s.basis()) {
      if (!s.contains(r.mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_ideal(ZpRing const& r, Subspace const& host, Subspace const& s) {
  if (!s.is_subspace_of(host)) {
    return false;
  }
  for (auto const& a : s.basis()) {
    for (auto const& h : host.basis()) {
      if (!s.contains(r.mul(a, h)) || !s.contains(r.mul(h, a))) {
        return false;
      }
    }
  }
  return true;
}

Restriction restrict_to(ZpRing const& r, Subspace const& subalgebra) {
  auto const&                            rows = subalgebra.basis();
  std::size_t const                      m    = rows.size();
  std::vector<std::string>               labels;
  std::vector<std::vector<BasisProduct>> products(m,
                                                  std::vector<BasisProduct>(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(r.format(rows[i]));
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = r.mul(rows[i], rows[j]);
      if (!subalgebra.contains(prod)) {
        fail(ErrorKind::validation, "subspace is not a subalgebra");
      }
      Vec c = subalgebra.coordinates(prod);
      for (std::size_t k = 0; k < m; ++k) {
        if (c[k] != 0) {
          products[i][j].emplace_back(static_cast<std::uint32_t>(k), c[k]);
        }
      }
    }
  }
  return {ZpRing(r.p(), std::move(labels), std::move(products)), rows};
}

Vec RingQuotient::project(Vec const& v) const {
  Vec  reduced = ideal.reduce(v);
  auto free    = ideal.free_columns();
  Vec  out(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    out[i] = reduced[free[i]];
  }
  return out;
}

Subspace RingQuotient::preimage(Subspace const& t) const {
  auto     free = ideal.free_columns();
  Subspace out  = ideal;
  for (auto const& v : t.basis()) {
    Vec lift(ideal.ambient(), 0);
    for (std::size_t i = 0; i < free.size(); ++i) {
      lift[free[i]] = v[i];
    }
    out.add(lift);
  }
  return out;
}

RingQuotient quotient(ZpRing const& r, Subspace const& ideal) {
  if (!is_ideal(r, Subspace::full(r.p(), r.dimension()), ideal)) {
    fail(ErrorKind::validation, "quotient by a subspace that is not an ideal");
  }
  auto const                             free = ideal.free_columns();
  std::size_t const                      m    = free.size();
  std::vector<std::string>               labels;
  std::vector<std::vector<BasisProduct>> products(m,
                                                  std::vector<BasisProduct>(m));
  RingQuotient                           q{ZpRing(), ideal};
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(r.labels()[free[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      Vec c = q.project(r.mul(r.basis_vector(free[i]), r.basis_vector(free[j])));
      for (std::size_t k = 0; k < m; ++k) {
        if (c[k] != 0) {
          products[i][j].emplace_back(static_cast<std::uint32_t>(k), c[k]);
        }
      }
    }
  }
  q.ring = ZpRing(r.p(), std::move(labels), std::move(products));
  return q;
}

Subspace linear_image(std::span<Vec const> rows, Subspace const& s,
                      std::uint32_t p, std::size_t target_dimension) {
  Subspace out(p, target_dimension);
  for (auto const& v : s.basis()) {
    Vec w(target_dimension, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      axpy(w, v[i], rows[i], p);
    }
    out.add(w);
  }
  return out;
}

std::size_t polynomial_degree(Term const& t) {
  static Signature const sig = ring_signature();
  switch (t.kind()) {
    case Term::Kind::var: return 1;
    case Term::Kind::unit: return 0;
    case Term::Kind::apply: break;
  }
  auto op = sig.find(t.op());
  if (!op) {
    fail(ErrorKind::unknown_operation,
         "operation '" + t.op() + "' is not a ring operation");
  }
  std::size_t d = 0;
  for (auto const& child : t.children()) {
    std::size_t c = polynomial_degree(child);
    d             = *op == 2 ? d + c : std::max(d, c);
  }
  return d;
}

}  // namespace omega
