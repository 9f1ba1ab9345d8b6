#include "omega/structure.hpp"

#include <algorithm>
#include <limits>

#include "omega/config.hpp"
#include "omega/error.hpp"

namespace omega {

namespace {
  constexpr std::uint64_t max_table_entries = std::uint64_t{1} << 26;

  std::string triple(Code a, Code b, Code c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ","
           + std::to_string(c) + ")";
  }
}  // namespace

TableAlgebra::TableAlgebra(std::string name, Signature sig, std::uint64_t size,
                           std::vector<std::vector<std::uint32_t>> tables)
    : _name(std::move(name)),
      _sig(std::move(sig)),
      _size(size),
      _tables(std::move(tables)) {
  if (_size == 0) {
    fail(ErrorKind::schema, "algebra size must be positive");
  }
  if (_size > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorKind::size_guard, "carrier too large for table storage");
  }
  if (_tables.size() != _sig.number_of_ops()) {
    fail(ErrorKind::schema, "expected " + std::to_string(_sig.number_of_ops())
                                + " operation tables, got "
                                + std::to_string(_tables.size()));
  }
  for (OpId op = 0; op < _tables.size(); ++op) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < _sig.arity(op); ++i) {
      count *= _size;
      check_guard(count <= max_table_entries,
                  "table of '" + _sig.name(op) + "' exceeds "
                      + std::to_string(max_table_entries) + " entries");
    }
    if (_tables[op].size() != count) {
      fail(ErrorKind::schema, "table of '" + _sig.name(op) + "' has "
                                  + std::to_string(_tables[op].size())
                                  + " entries, expected "
                                  + std::to_string(count));
    }
    for (auto v : _tables[op]) {
      if (v >= _size) {
        fail(ErrorKind::schema, "table of '" + _sig.name(op)
                                    + "' has out-of-range entry "
                                    + std::to_string(v));
      }
    }
  }
}

Code TableAlgebra::apply(OpId op, std::span<Code const> args) const {
  std::uint64_t idx = 0;
  for (auto a : args) {
    idx = idx * _size + a;
  }
  return _tables[op][idx];
}

void validate(TableAlgebra const& a) {
  std::uint64_t const n = a.size();
  for (Code x = 0; x < n; ++x) {
    if (a.fast_mul(0, x) != x || a.fast_mul(x, 0) != x) {
      fail(ErrorKind::group_axiom,
           "unit: e*x or x*e differs from x for x=" + std::to_string(x));
    }
  }
  for (Code x = 0; x < n; ++x) {
    Code y = a.fast_inv(x);
    if (a.fast_mul(x, y) != 0) {
      fail(ErrorKind::group_axiom, "inverse: x*inv(x) != e at (x,inv(x),x*inv(x))="
                                       + triple(x, y, a.fast_mul(x, y)));
    }
    if (a.fast_mul(y, x) != 0) {
      fail(ErrorKind::group_axiom, "inverse: inv(x)*x != e at (inv(x),x,inv(x)*x)="
                                       + triple(y, x, a.fast_mul(y, x)));
    }
  }
  auto check_assoc = [&](Code x, Code g, Code y) {
    if (a.fast_mul(a.fast_mul(x, g), y) != a.fast_mul(x, a.fast_mul(g, y))) {
      fail(ErrorKind::group_axiom, "associativity fails at " + triple(x, g, y));
    }
  };
  if (n <= 256) {
    for (Code x = 0; x < n; ++x) {
      for (Code g = 0; g < n; ++g) {
        for (Code y = 0; y < n; ++y) {
          check_assoc(x, g, y);
        }
      }
    }
  } else {
    // Light's test: elements g with (xg)y = x(gy) for all x, y form a
    // submagma, so checking a generating set suffices.
    std::vector<char> reached(n, 0);
    std::vector<Code> gens;
    std::vector<Code> members;
    for (Code start = 0; start < n; ++start) {
      if (reached[start]) {
        continue;
      }
      gens.push_back(start);
      reached[start] = 1;
      members.push_back(start);
      // Every member needs its products with the new generator.
      std::vector<Code> frontier = members;
      while (!frontier.empty()) {
        Code x = frontier.back();
        frontier.pop_back();
        for (Code g : gens) {
          for (Code y : {a.fast_mul(x, g), a.fast_mul(g, x)}) {
            if (!reached[y]) {
              reached[y] = 1;
              members.push_back(y);
              frontier.push_back(y);
            }
          }
        }
      }
    }
    for (Code g : gens) {
      for (Code x = 0; x < n; ++x) {
        for (Code y = 0; y < n; ++y) {
          check_assoc(x, g, y);
        }
      }
    }
  }
  auto const& sig = a.signature();
  for (OpId op = 2; op < sig.number_of_ops(); ++op) {
    std::vector<Code> units(sig.arity(op), 0);
    Code              v = a.apply(op, units);
    if (v != 0) {
      fail(ErrorKind::constant, "extra operation '" + sig.name(op)
                                    + "' maps the unit tuple to "
                                    + std::to_string(v) + " instead of e");
    }
  }
}

bool is_abelian_group(Structure const& s) {
  for (Code x = 0; x < s.size(); ++x) {
    for (Code y = x + 1; y < s.size(); ++y) {
      if (s.mul(x, y) != s.mul(y, x)) {
        return false;
      }
    }
  }
  return true;
}

PowerView::PowerView(TableAlgebra const& base, std::size_t k)
    : _base(&base), _k(k), _size(1) {
  if (k == 0) {
    fail(ErrorKind::schema, "direct power exponent must be positive");
  }
  for (std::size_t i = 0; i < k; ++i) {
    check_guard(_size <= std::numeric_limits<std::uint64_t>::max() / base.size(),
                "direct power does not fit 64-bit codes");
    _size *= base.size();
  }
}

Code PowerView::encode(std::span<Code const> coords) const {
  Code x = 0;
  for (auto c : coords) {
    x = x * _base->size() + c;
  }
  return x;
}

void PowerView::decode(Code x, std::span<Code> coords) const {
  for (std::size_t i = _k; i-- > 0;) {
    coords[i] = x % _base->size();
    x /= _base->size();
  }
}

Code PowerView::coordinate(Code x, std::size_t i) const {
  for (std::size_t j = _k - 1; j > i; --j) {
    x /= _base->size();
  }
  return x % _base->size();
}

Code PowerView::apply(OpId op, std::span<Code const> args) const {
  std::size_t const arity = args.size();
  // Small fixed buffers; arities beyond 8 fall back to the heap.
  Code              stack_coords[8 * 4];
  std::vector<Code> heap;
  Code*             coords = stack_coords;
  if (arity * _k > 32) {
    heap.resize(arity * _k);
    coords = heap.data();
  }
  for (std::size_t a = 0; a < arity; ++a) {
    decode(args[a], std::span<Code>(coords + a * _k, _k));
  }
  Code result = 0;
  Code local[8];
  std::vector<Code> local_heap;
  Code* point = local;
  if (arity > 8) {
    local_heap.resize(arity);
    point = local_heap.data();
  }
  for (std::size_t i = 0; i < _k; ++i) {
    for (std::size_t a = 0; a < arity; ++a) {
      point[a] = coords[a * _k + i];
    }
    result = result * _base->size()
             + _base->apply(op, std::span<Code const>(point, arity));
  }
  return result;
}

}  // namespace omega
