#pragma once

// ASCII printer.  Output always re-parses to the same tree.

#include <ostream>
#include <sstream>
#include <string>

#include "fltl/formula.hpp"

namespace fltl {

namespace detail {

inline int precedence(Kind k) {
  switch (k) {
    case Kind::Or:
      return 1;
    case Kind::And:
      return 2;
    case Kind::Until:
    case Kind::Release:
      return 3;
    case Kind::Not:
    case Kind::Next:
    case Kind::WeakNext:
      return 4;
    default:
      return 5;
  }
}

// Operands printed without parentheses after a prefix operator.
inline bool is_bare(const Formula& f) {
  return f.is_atom() || f.is_constant() ||
         (f.kind() == Kind::Not && f.operand().is_atom());
}

inline void print_to(std::ostream& os, const Formula& f);

inline void print_wrapped(std::ostream& os, const Formula& f, bool parens) {
  if (parens) os << '(';
  print_to(os, f);
  if (parens) os << ')';
}

inline bool needs_parens(const Formula& parent, const Formula& child,
                         bool left_side) {
  const Kind pk = parent.kind();
  const Kind ck = child.kind();
  if (pk == Kind::Until || pk == Kind::Release) {
    // The left operand of U/R is restricted to atoms, constants and
    // parenthesized expressions so the output is unambiguous under either
    // reading of prefix-operator precedence.
    if (left_side) return !(child.is_atom() || child.is_constant());
    if (child.is_unary() || child.is_atom() || child.is_constant())
      return false;
    return ck != pk;
  }
  int pp = precedence(pk);
  int cp = precedence(ck);
  if (cp > pp) return false;
  if (cp < pp) return true;
  // Same level: & and | associate to the left.
  return !(ck == pk && left_side);
}

inline void print_to(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
      os << "true";
      return;
    case Kind::False:
      os << "false";
      return;
    case Kind::Atom:
      os << f.name();
      return;
    case Kind::Not:
      os << '!';
      print_wrapped(os, f.operand(), !is_bare(f.operand()));
      return;
    case Kind::Next:
    case Kind::WeakNext:
      os << (f.kind() == Kind::Next ? "X " : "W ");
      print_wrapped(os, f.operand(), !is_bare(f.operand()));
      return;
    default:
      break;
  }
  const char* op = "";
  switch (f.kind()) {
    case Kind::And:
      op = " & ";
      break;
    case Kind::Or:
      op = " | ";
      break;
    case Kind::Until:
      op = " U ";
      break;
    case Kind::Release:
      op = " R ";
      break;
    default:
      break;
  }
  print_wrapped(os, f.lhs(), needs_parens(f, f.lhs(), true));
  os << op;
  print_wrapped(os, f.rhs(), needs_parens(f, f.rhs(), false));
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::ostringstream os;
  detail::print_to(os, f);
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) {
  detail::print_to(os, f);
  return os;
}

}  // namespace fltl
