#include "omega/term.hpp"

#include <algorithm>
#include <cctype>

namespace omega {

Term Term::var(std::size_t index) {
  Term t;
  t._kind  = Kind::var;
  t._index = index;
  return t;
}

Term Term::unit() {
  return Term();
}

Term Term::apply(std::string op, std::vector<Term> children) {
  Term t;
  t._kind     = Kind::apply;
  t._op       = std::move(op);
  t._children = std::move(children);
  return t;
}

std::size_t Term::arity() const {
  switch (_kind) {
    case Kind::var: return _index + 1;
    case Kind::unit: return 0;
    case Kind::apply: break;
  }
  std::size_t result = 0;
  for (auto const& c : _children) {
    result = std::max(result, c.arity());
  }
  return result;
}

Term Term::substitute(std::span<Term const> replacement) const {
  switch (_kind) {
    case Kind::var:
      return _index < replacement.size() ? replacement[_index] : *this;
    case Kind::unit: return *this;
    case Kind::apply: break;
  }
  std::vector<Term> children;
  children.reserve(_children.size());
  for (auto const& c : _children) {
    children.push_back(c.substitute(replacement));
  }
  return apply(_op, std::move(children));
}

Term mul(Term a, Term b) {
  return Term::apply("mul", {std::move(a), std::move(b)});
}

Term inv(Term a) {
  return Term::apply("inv", {std::move(a)});
}

Term product(std::vector<Term> factors) {
  if (factors.empty()) {
    return Term::unit();
  }
  Term result = std::move(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = mul(std::move(result), std::move(factors[i]));
  }
  return result;
}

namespace {

  class TermParser {
   public:
    explicit TermParser(std::string_view text) : _text(text) {}

    Term parse_all() {
      Term t = parse();
      skip_space();
      if (_pos != _text.size()) {
        error("trailing input");
      }
      return t;
    }

   private:
    [[noreturn]] void error(std::string const& why) const {
      fail(ErrorKind::parse,
           why + " at offset " + std::to_string(_pos) + " in term '"
               + std::string(_text) + "'");
    }

    void skip_space() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    std::string atom() {
      std::size_t start = _pos;
      while (_pos < _text.size()
             && !std::isspace(static_cast<unsigned char>(_text[_pos]))
             && _text[_pos] != '(' && _text[_pos] != ')') {
        ++_pos;
      }
      if (start == _pos) {
        error("expected an atom");
      }
      return std::string(_text.substr(start, _pos - start));
    }

    Term parse() {
      skip_space();
      if (_pos >= _text.size()) {
        error("unexpected end of input");
      }
      if (_text[_pos] == ')') {
        error("unexpected ')'");
      }
      if (_text[_pos] != '(') {
        std::string a = atom();
        if (a == "e") {
          return Term::unit();
        }
        if (a.size() > 1 && a[0] == 'x'
            && std::all_of(a.begin() + 1, a.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          return Term::var(std::stoul(a.substr(1)));
        }
        error("unknown atom '" + a + "' (variables are x0, x1, ...; unit is e)");
      }
      ++_pos;
      skip_space();
      std::string       op = atom();
      std::vector<Term> children;
      while (true) {
        skip_space();
        if (_pos >= _text.size()) {
          error("missing ')'");
        }
        if (_text[_pos] == ')') {
          ++_pos;
          break;
        }
        children.push_back(parse());
      }
      return Term::apply(std::move(op), std::move(children));
    }

    std::string_view _text;
    std::size_t      _pos = 0;
  };

}  // namespace

Term parse_term(std::string_view text) {
  return TermParser(text).parse_all();
}

std::string to_string(Term const& t) {
  switch (t.kind()) {
    case Term::Kind::var: return "x" + std::to_string(t.index());
    case Term::Kind::unit: return "e";
    case Term::Kind::apply: break;
  }
  std::string s = "(" + t.op();
  for (auto const& c : t.children()) {
    s += " " + to_string(c);
  }
  return s + ")";
}

void check_term(Term const& t, Signature const& sig) {
  if (t.kind() != Term::Kind::apply) {
    return;
  }
  auto op = sig.find(t.op());
  if (!op) {
    fail(ErrorKind::unknown_operation, "'" + t.op() + "' in " + to_string(t));
  }
  if (sig.arity(*op) != t.children().size()) {
    fail(ErrorKind::arity_mismatch,
         "'" + t.op() + "' takes " + std::to_string(sig.arity(*op))
             + " arguments in " + to_string(t));
  }
  for (auto const& c : t.children()) {
    check_term(c, sig);
  }
}

CompiledTerm::CompiledTerm(Term const& t, Signature const& sig)
    : _arity(t.arity()) {
  check_term(t, sig);
  std::size_t depth = 0;
  auto        emit  = [&](auto& self, Term const& u) -> void {
    switch (u.kind()) {
      case Term::Kind::var:
        _steps.push_back({Step::Kind::var, u.index(), 0});
        ++depth;
        break;
      case Term::Kind::unit:
        _steps.push_back({Step::Kind::unit, 0, 0});
        ++depth;
        break;
      case Term::Kind::apply:
        for (auto const& c : u.children()) {
          self(self, c);
        }
        _steps.push_back(
            {Step::Kind::op, *sig.find(u.op()), u.children().size()});
        depth -= u.children().size();
        ++depth;
        break;
    }
    _depth = std::max(_depth, depth);
  };
  emit(emit, t);
}

}  // namespace omega
