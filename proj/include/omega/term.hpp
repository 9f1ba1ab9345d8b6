// Terms over a signature: syntax trees, s-expression I/O and a compiled
// postfix form used by the evaluation hot loops.

#ifndef OMEGA_TERM_HPP_
#define OMEGA_TERM_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omega/error.hpp"
#include "omega/signature.hpp"

namespace omega {

class Term {
 public:
  enum class Kind { var, unit, apply };

  static Term var(std::size_t index);
  static Term unit();
  static Term apply(std::string op, std::vector<Term> children);

  Kind                     kind() const noexcept { return _kind; }
  std::size_t              index() const noexcept { return _index; }
  std::string const&       op() const noexcept { return _op; }
  std::vector<Term> const& children() const noexcept { return _children; }

  // 1 + the largest variable index, 0 for closed terms.
  std::size_t arity() const;

  // Replaces every variable x_i by replacement[i]; variables beyond the
  // replacement list are left alone.
  Term substitute(std::span<Term const> replacement) const;

  bool operator==(Term const&) const = default;

 private:
  Kind              _kind = Kind::unit;
  std::size_t       _index = 0;
  std::string       _op;
  std::vector<Term> _children;
};

// Convenience builders for the group part.
Term mul(Term a, Term b);
Term inv(Term a);
// Left-nested product of a nonempty list.
Term product(std::vector<Term> factors);

// Parses "x3", "e", "(op t1 ... tk)". Throws ErrorKind::parse.
Term parse_term(std::string_view text);

std::string to_string(Term const& t);

// Checks every operation resolves in `sig` with the right number of
// children. Throws UnknownOperation / ArityMismatch.
void check_term(Term const& t, Signature const& sig);

class CompiledTerm {
 public:
  struct Step {
    enum class Kind { var, unit, op } kind;
    std::size_t value;  // variable index or op id
    std::size_t arity;  // number of stack operands for ops
  };

  CompiledTerm() = default;
  CompiledTerm(Term const& t, Signature const& sig);

  std::size_t              arity() const noexcept { return _arity; }
  std::vector<Step> const& steps() const noexcept { return _steps; }

  // Evaluates in any model providing `unit()` and
  // `apply(OpId, std::span<Value const>)`.
  template <typename Model, typename Value>
  Value evaluate(Model const& model, std::span<Value const> args) const;

 private:
  std::vector<Step> _steps;
  std::size_t       _arity = 0;
  std::size_t       _depth = 0;
};

template <typename Model, typename Value>
Value CompiledTerm::evaluate(Model const& model,
                             std::span<Value const> args) const {
  if (args.size() < _arity) {
    fail(ErrorKind::arity_mismatch,
         "term needs " + std::to_string(_arity) + " arguments, got "
             + std::to_string(args.size()));
  }
  std::vector<Value> stack;
  stack.reserve(_depth);
  for (auto const& step : _steps) {
    switch (step.kind) {
      case Step::Kind::var: stack.push_back(args[step.value]); break;
      case Step::Kind::unit: stack.push_back(model.unit()); break;
      case Step::Kind::op: {
        auto  first = stack.end() - static_cast<std::ptrdiff_t>(step.arity);
        Value v     = model.apply(
            step.value,
            std::span<Value const>(&*first, step.arity));
        stack.erase(first, stack.end());
        stack.push_back(std::move(v));
        break;
      }
    }
  }
  return std::move(stack.back());
}

}  // namespace omega

#endif  // OMEGA_TERM_HPP_
