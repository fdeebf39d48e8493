#pragma once

#include "fltl/formula.hpp"

namespace fltl {

namespace detail {

inline Formula pnf_of(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Kind::True:
      return negated ? ff() : f;
    case Kind::False:
      return negated ? tt() : f;
    case Kind::Atom:
      return negated ? neg(f) : f;
    case Kind::Not:
      return pnf_of(f.operand(), !negated);
    case Kind::And:
    case Kind::Or: {
      Formula l = pnf_of(f.lhs(), negated);
      Formula r = pnf_of(f.rhs(), negated);
      bool as_and = (f.kind() == Kind::And) != negated;
      return as_and ? conj(l, r) : disj(l, r);
    }
    case Kind::Next:
    case Kind::WeakNext: {
      Formula body = pnf_of(f.operand(), negated);
      bool strong = (f.kind() == Kind::Next) != negated;
      return strong ? next(body) : wnext(body);
    }
    case Kind::Until:
    case Kind::Release: {
      Formula l = pnf_of(f.lhs(), negated);
      Formula r = pnf_of(f.rhs(), negated);
      bool as_until = (f.kind() == Kind::Until) != negated;
      return as_until ? until(l, r) : release(l, r);
    }
  }
  return f;
}

}  // namespace detail

/// Positive normal form: negations are driven down to atoms through the
/// dualities (&,|), (X,W), (U,R), (true,false) and double negation.
/// Subtrees already in PNF are returned unchanged.
inline Formula to_pnf(const Formula& f) {
  if (f.is_pnf()) return f;
  return detail::pnf_of(f, false);
}

}  // namespace fltl
