#include "omega/signature.hpp"

#include <cstdlib>
#include <set>

#include "omega/config.hpp"
#include "omega/error.hpp"

namespace omega {

namespace {
  std::string const mul_name = "mul";
  std::string const inv_name = "inv";
}  // namespace

bool is_reserved_name(std::string_view name) {
  return name == "mul" || name == "inv" || name == "e" || name == "+"
         || name == "-" || name == "neg";
}

Signature::Signature(std::vector<Operation> extra_ops)
    : _extra(std::move(extra_ops)) {
  std::set<std::string> seen;
  for (auto const& op : _extra) {
    if (is_reserved_name(op.name)) {
      fail(ErrorKind::schema, "operation name '" + op.name + "' is reserved");
    }
    if (op.name.empty()) {
      fail(ErrorKind::schema, "empty operation name");
    }
    if (op.arity == 0) {
      fail(ErrorKind::schema,
           "extra operation '" + op.name
               + "' has arity 0; the unit is the only constant");
    }
    if (!seen.insert(op.name).second) {
      fail(ErrorKind::schema, "duplicate operation name '" + op.name + "'");
    }
  }
}

std::size_t Signature::arity(OpId op) const {
  if (op == op_mul) {
    return 2;
  }
  if (op == op_inv) {
    return 1;
  }
  return _extra.at(op - 2).arity;
}

std::string const& Signature::name(OpId op) const {
  if (op == op_mul) {
    return mul_name;
  }
  if (op == op_inv) {
    return inv_name;
  }
  return _extra.at(op - 2).name;
}

std::optional<OpId> Signature::find(std::string_view name) const {
  if (name == "mul" || name == "+") {
    return op_mul;
  }
  if (name == "inv" || name == "-" || name == "neg") {
    return op_inv;
  }
  for (std::size_t i = 0; i < _extra.size(); ++i) {
    if (_extra[i].name == name) {
      return 2 + i;
    }
  }
  return std::nullopt;
}

bool Signature::has_extra(std::string_view name) const {
  for (auto const& op : _extra) {
    if (op.name == name) {
      return true;
    }
  }
  return false;
}

Signature ring_signature() {
  return Signature({{"r*", 2}});
}

Signature pxm_signature() {
  return Signature({{"d", 1}, {"c", 1}});
}

unsigned threads_from_env(unsigned fallback) {
  char const* raw = std::getenv("OMEGA_THREADS");
  if (raw == nullptr) {
    return fallback;
  }
  char* end = nullptr;
  long  v   = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0 || v > 1024) {
    return fallback;
  }
  return static_cast<unsigned>(v);
}

void check_guard(bool ok, std::string const& what) {
  if (!ok) {
    fail(ErrorKind::size_guard, what);
  }
}

}  // namespace omega
