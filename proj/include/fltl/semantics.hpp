#pragma once

// Reference evaluators.  These are deliberately naive structural
// recursions over suffix positions; every other module is tested against
// them.

#include <cstddef>
#include <stdexcept>

#include "fltl/formula.hpp"
#include "fltl/trace.hpp"

namespace fltl {

namespace detail {

// pi(i) |=_e f, for 0 <= i <= |pi|.
inline bool sat_at(const Trace& pi, std::size_t i, const Formula& f) {
  const std::size_t n = pi.size();
  switch (f.kind()) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom:
      return i < n && pi[i].contains(f.name());
    case Kind::Not:
      return !sat_at(pi, i, f.operand());
    case Kind::And:
      return sat_at(pi, i, f.lhs()) && sat_at(pi, i, f.rhs());
    case Kind::Or:
      return sat_at(pi, i, f.lhs()) || sat_at(pi, i, f.rhs());
    case Kind::Next:
      return i < n && sat_at(pi, i + 1, f.operand());
    case Kind::WeakNext:
      return i == n || sat_at(pi, i + 1, f.operand());
    case Kind::Until:
      for (std::size_t j = i; j <= n; ++j) {
        if (sat_at(pi, j, f.rhs())) return true;
        if (!sat_at(pi, j, f.lhs())) return false;
      }
      return false;
    case Kind::Release:
      // f1 R f2 == !((!f1) U (!f2))
      for (std::size_t j = i; j <= n; ++j) {
        if (!sat_at(pi, j, f.rhs())) return false;
        if (sat_at(pi, j, f.lhs())) return true;
      }
      return true;
  }
  return false;
}

// (pi, i) |=_f f for i an instant of pi.
inline bool sat_ltlf_at(const Trace& pi, std::size_t i, const Formula& f) {
  const std::size_t last = pi.size() - 1;
  switch (f.kind()) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom:
      return pi[i].contains(f.name());
    case Kind::Not:
      return !sat_ltlf_at(pi, i, f.operand());
    case Kind::And:
      return sat_ltlf_at(pi, i, f.lhs()) && sat_ltlf_at(pi, i, f.rhs());
    case Kind::Or:
      return sat_ltlf_at(pi, i, f.lhs()) || sat_ltlf_at(pi, i, f.rhs());
    case Kind::Next:
      return i < last && sat_ltlf_at(pi, i + 1, f.operand());
    case Kind::WeakNext:
      return !(i < last && !sat_ltlf_at(pi, i + 1, f.operand()));
    case Kind::Until:
      for (std::size_t j = i; j <= last; ++j) {
        if (sat_ltlf_at(pi, j, f.rhs())) return true;
        if (!sat_ltlf_at(pi, j, f.lhs())) return false;
      }
      return false;
    case Kind::Release:
      for (std::size_t j = i; j <= last; ++j) {
        if (!sat_ltlf_at(pi, j, f.rhs())) return false;
        if (sat_ltlf_at(pi, j, f.lhs())) return true;
      }
      return true;
  }
  return false;
}

}  // namespace detail

/// pi |=_e f over finite, possibly empty traces.  Release is evaluated
/// through its duality with until.
inline bool sat(const Trace& pi, const Formula& f) {
  return detail::sat_at(pi, 0, f);
}

/// Propositional satisfaction A |=_p g.  Throws std::invalid_argument if
/// g contains a temporal operator.
inline bool sat_prop(const AlphabetSymbol& symbol, const Formula& g) {
  switch (g.kind()) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom:
      return symbol.contains(g.name());
    case Kind::Not:
      return !sat_prop(symbol, g.operand());
    case Kind::And:
      return sat_prop(symbol, g.lhs()) && sat_prop(symbol, g.rhs());
    case Kind::Or:
      return sat_prop(symbol, g.lhs()) || sat_prop(symbol, g.rhs());
    default:
      throw std::invalid_argument("sat_prop: formula is not propositional");
  }
}

/// (pi, 0) |=_f f under the LTL_f reading.  No interpretation exists for
/// the empty trace, so it satisfies nothing.
inline bool sat_ltlf(const Trace& pi, const Formula& f) {
  if (pi.empty()) return false;
  return detail::sat_ltlf_at(pi, 0, f);
}

/// Maps an LTL_f formula to a Finite LTL formula with the same models:
///   T(a) = a,  T(!f) = !T(f) & X true,  T(f & g) = T(f) & T(g),
///   T(X f) = X T(f),  T(f U g) = T(f) U T(g).
/// Or, W and R are first rewritten through their core-operator duals;
/// `false` maps to itself and `true` to X true.
inline Formula translate_ltlf(const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
      return next(tt());
    case Kind::False:
    case Kind::Atom:
      return f;
    case Kind::Not:
      return conj(neg(translate_ltlf(f.operand())), next(tt()));
    case Kind::And:
      return conj(translate_ltlf(f.lhs()), translate_ltlf(f.rhs()));
    case Kind::Next:
      return next(translate_ltlf(f.operand()));
    case Kind::Until:
      return until(translate_ltlf(f.lhs()), translate_ltlf(f.rhs()));
    case Kind::Or:
      return translate_ltlf(neg(conj(neg(f.lhs()), neg(f.rhs()))));
    case Kind::WeakNext:
      return translate_ltlf(neg(next(neg(f.operand()))));
    case Kind::Release:
      return translate_ltlf(neg(until(neg(f.lhs()), neg(f.rhs()))));
  }
  return f;
}

namespace detail {
inline bool epsilon_sat_pnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
      return true;
    case Kind::False:
    case Kind::Atom:
    case Kind::Next:
      return false;
    case Kind::Not:
    case Kind::WeakNext:
      return true;
    case Kind::And:
      return epsilon_sat_pnf(f.lhs()) && epsilon_sat_pnf(f.rhs());
    case Kind::Or:
      return epsilon_sat_pnf(f.lhs()) || epsilon_sat_pnf(f.rhs());
    case Kind::Until:
    case Kind::Release:
      return epsilon_sat_pnf(f.rhs());
  }
  return false;
}
}  // namespace detail

/// Syntactic check of eps |=_e f.  Throws std::invalid_argument unless f is
/// in PNF.
inline bool epsilon_sat(const Formula& f) {
  if (!f.is_pnf())
    throw std::invalid_argument("epsilon_sat: formula is not in PNF");
  return detail::epsilon_sat_pnf(f);
}

}  // namespace fltl
