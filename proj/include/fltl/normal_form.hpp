#pragma once

// Automaton normal form.
//
// A clause is (conjunction of literals) & N(conjunction of formulas) with
// N one of X (strong next) or W (weak next); an ANF formula is a
// disjunction of clauses.  The strict conversion runs
//
//   anf = an . pa . gt
//
// gt unrolls every U and R until each one sits under a next operator, pa
// distributes & over | treating X/W subformulas as opaque literals, and ct
// (mapped by an) merges the next operators of a clause into one.  The
// relaxed conversion skips the literal-level DNF and keeps an arbitrary
// propositional guard per clause.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fltl/boolean.hpp"
#include "fltl/formula.hpp"

namespace fltl {

enum class NextOp : std::uint8_t { Strong, Weak };

inline Formula apply_next(NextOp op, Formula body) {
  return op == NextOp::Strong ? next(std::move(body)) : wnext(std::move(body));
}

/// a, !a, true or false.
struct Literal {
  enum class Type : std::uint8_t { True, False, Positive, Negative };

  std::string atom;
  Type type = Type::True;

  static Literal positive(std::string a) { return {std::move(a), Type::Positive}; }
  static Literal negative(std::string a) { return {std::move(a), Type::Negative}; }
  static Literal truth() { return {{}, Type::True}; }
  static Literal falsity() { return {{}, Type::False}; }

  static Literal from_formula(const Formula& f) {
    switch (f.kind()) {
      case Kind::True:
        return truth();
      case Kind::False:
        return falsity();
      case Kind::Atom:
        return positive(f.name());
      case Kind::Not:
        if (f.operand().is_atom()) return negative(f.operand().name());
        break;
      default:
        break;
    }
    throw std::invalid_argument("not a literal");
  }

  Formula to_formula() const {
    switch (type) {
      case Type::True:
        return tt();
      case Type::False:
        return ff();
      case Type::Positive:
        return fltl::atom(atom);
      case Type::Negative:
        return neg(fltl::atom(atom));
    }
    return tt();
  }

  auto operator<=>(const Literal&) const = default;
};

/// N f, with N in {X, W}.
struct NextLiteral {
  NextOp op = NextOp::Strong;
  Formula body;

  Formula to_formula() const { return apply_next(op, body); }
  auto operator<=>(const NextLiteral&) const = default;
};

using PseudoLiteral = std::variant<Literal, NextLiteral>;

inline Formula to_formula(const PseudoLiteral& p) {
  return std::visit([](const auto& x) { return x.to_formula(); }, p);
}

/// Conjunction of pseudo-literals; sorted and duplicate-free.
using PseudoClause = std::vector<PseudoLiteral>;

inline Formula to_formula(const PseudoClause& c) {
  std::vector<Formula> parts;
  for (const auto& p : c) parts.push_back(to_formula(p));
  if (parts.empty()) return tt();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

struct AnfClause {
  std::vector<Literal> lits;  // sorted, duplicate-free
  NextOp next_op = NextOp::Weak;
  FormulaSet nf;

  Formula guard() const {
    std::vector<Formula> parts;
    for (const auto& l : lits) parts.push_back(l.to_formula());
    if (parts.empty()) return tt();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
    return acc;
  }
  /// (/\ lits) & N(/\ nf)
  Formula to_formula() const {
    return conj(guard(), apply_next(next_op, conjunction_of(nf)));
  }
  auto operator<=>(const AnfClause&) const = default;
};

struct AnfFormula {
  std::vector<AnfClause> clauses;  // sorted, duplicate-free

  /// \/ clauses; `false` when there are none.
  Formula to_formula() const {
    if (clauses.empty()) return ff();
    Formula acc = clauses.front().to_formula();
    for (std::size_t i = 1; i < clauses.size(); ++i)
      acc = disj(acc, clauses[i].to_formula());
    return acc;
  }
  bool operator==(const AnfFormula&) const = default;
};

/// guard & N(/\ nf), guard any propositional formula.
struct RelaxedClause {
  Formula guard;
  NextOp next_op = NextOp::Weak;
  FormulaSet nf;

  Formula to_formula() const {
    return conj(guard, apply_next(next_op, conjunction_of(nf)));
  }
  auto operator<=>(const RelaxedClause&) const = default;
};

inline Formula to_formula(const std::vector<RelaxedClause>& clauses) {
  if (clauses.empty()) return ff();
  Formula acc = clauses.front().to_formula();
  for (std::size_t i = 1; i < clauses.size(); ++i)
    acc = disj(acc, clauses[i].to_formula());
  return acc;
}

namespace detail {

inline void require_pnf(const Formula& f, const char* who) {
  if (!f.is_pnf())
    throw std::invalid_argument(std::string(who) + ": formula is not in PNF");
}

inline bool guarded_below(const Formula& f, bool under_next) {
  switch (f.kind()) {
    case Kind::Next:
    case Kind::WeakNext:
      return guarded_below(f.operand(), true);
    case Kind::Until:
    case Kind::Release:
      if (!under_next) return false;
      [[fallthrough]];
    case Kind::And:
    case Kind::Or:
      return guarded_below(f.lhs(), under_next) &&
             guarded_below(f.rhs(), under_next);
    case Kind::Not:
      return guarded_below(f.operand(), under_next);
    default:
      return true;
  }
}

class Guarder {
 public:
  Formula run(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    Formula out = f;
    switch (f.kind()) {
      case Kind::And:
        out = conj(run(f.lhs()), run(f.rhs()));
        break;
      case Kind::Or:
        out = disj(run(f.lhs()), run(f.rhs()));
        break;
      case Kind::Until:
        out = disj(run(f.rhs()), conj(run(f.lhs()), next(f)));
        break;
      case Kind::Release:
        out = conj(run(f.rhs()), disj(run(f.lhs()), wnext(f)));
        break;
      case Kind::Not:
        out = neg(run(f.operand()));
        break;
      default:  // literals, constants, X, W
        break;
    }
    memo_.emplace(f, out);
    return out;
  }

 private:
  std::map<Formula, Formula> memo_;
};

inline PseudoClause merge_clauses(const PseudoClause& a, const PseudoClause& b) {
  PseudoClause out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline Literal complement(const Literal& l) {
  switch (l.type) {
    case Literal::Type::True:
      return Literal::falsity();
    case Literal::Type::False:
      return Literal::truth();
    case Literal::Type::Positive:
      return Literal::negative(l.atom);
    case Literal::Type::Negative:
      return Literal::positive(l.atom);
  }
  return l;
}

// A false literal or a complementary pair: the clause has no model, so
// the product can drop it straight away.
inline bool contradictory(const PseudoClause& c) {
  for (const auto& p : c) {
    const auto* l = std::get_if<Literal>(&p);
    if (!l) continue;
    if (l->type == Literal::Type::False) return true;
    if (l->type == Literal::Type::Positive &&
        std::binary_search(c.begin(), c.end(), PseudoLiteral{complement(*l)}))
      return true;
  }
  return false;
}

inline std::vector<PseudoClause> pseudo_dnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::Next:
      return {{NextLiteral{NextOp::Strong, f.operand()}}};
    case Kind::WeakNext:
      return {{NextLiteral{NextOp::Weak, f.operand()}}};
    case Kind::Or: {
      auto l = pseudo_dnf(f.lhs());
      auto r = pseudo_dnf(f.rhs());
      l.insert(l.end(), r.begin(), r.end());
      return sorted_unique(std::move(l));
    }
    case Kind::And: {
      auto l = pseudo_dnf(f.lhs());
      auto r = pseudo_dnf(f.rhs());
      std::vector<PseudoClause> out;
      out.reserve(l.size() * r.size());
      for (const auto& x : l)
        for (const auto& y : r) {
          auto merged = merge_clauses(x, y);
          if (!contradictory(merged)) out.push_back(std::move(merged));
        }
      return sorted_unique(std::move(out));
    }
    default:
      return {{Literal::from_formula(f)}};
  }
}

// Semantics-preserving cleanup of a strict clause.  Returns false when the
// clause is contradictory and must be dropped.
inline bool tidy(AnfClause& c) {
  std::erase_if(c.lits, [](const Literal& l) { return l.type == Literal::Type::True; });
  for (const auto& l : c.lits) {
    if (l.type == Literal::Type::False) return false;
    if (std::binary_search(c.lits.begin(), c.lits.end(), complement(l)))
      return false;
  }
  std::erase_if(c.nf, [](const Formula& f) { return f.kind() == Kind::True; });
  return true;
}

inline std::vector<RelaxedClause> relaxed_product(
    const std::vector<RelaxedClause>& a, const std::vector<RelaxedClause>& b) {
  std::vector<RelaxedClause> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      RelaxedClause c;
      if (x.guard.kind() == Kind::True)
        c.guard = y.guard;
      else if (y.guard.kind() == Kind::True)
        c.guard = x.guard;
      else
        c.guard = conj(x.guard, y.guard);
      c.next_op = (x.next_op == NextOp::Strong || y.next_op == NextOp::Strong)
                      ? NextOp::Strong
                      : NextOp::Weak;
      c.nf = set_union(x.nf, y.nf);
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Clauses sharing (N, nf) are merged by disjoining their guards; merged
// guards are minimized and dropped when they simplify to false.
inline std::vector<RelaxedClause> compact(std::vector<RelaxedClause> clauses) {
  std::map<std::pair<NextOp, FormulaSet>, std::vector<Formula>> grouped;
  for (auto& c : clauses) {
    if (c.guard.kind() == Kind::False) continue;
    std::erase_if(c.nf, [](const Formula& g) { return g.kind() == Kind::True; });
    grouped[{c.next_op, std::move(c.nf)}].push_back(std::move(c.guard));
  }
  std::vector<RelaxedClause> out;
  out.reserve(grouped.size());
  for (auto& [key, guards] : grouped) {
    guards = make_set(std::move(guards));
    Formula g = guard::simplify(disjunction_of(guards));
    if (g.kind() == Kind::False) continue;
    out.push_back(RelaxedClause{std::move(g), key.first, key.second});
  }
  return out;
}

inline std::vector<RelaxedClause> relaxed(const Formula& f) {
  if (f.is_propositional()) return compact({RelaxedClause{f, NextOp::Weak, {}}});
  switch (f.kind()) {
    case Kind::Next:
      return {RelaxedClause{tt(), NextOp::Strong, {f.operand()}}};
    case Kind::WeakNext:
      return {RelaxedClause{tt(), NextOp::Weak, {f.operand()}}};
    case Kind::Or: {
      auto l = relaxed(f.lhs());
      auto r = relaxed(f.rhs());
      l.insert(l.end(), r.begin(), r.end());
      return compact(std::move(l));
    }
    case Kind::And:
      return compact(relaxed_product(relaxed(f.lhs()), relaxed(f.rhs())));
    case Kind::Until: {
      auto out = relaxed(f.rhs());
      auto step = relaxed_product(
          relaxed(f.lhs()), {RelaxedClause{tt(), NextOp::Strong, {f}}});
      out.insert(out.end(), step.begin(), step.end());
      return compact(std::move(out));
    }
    case Kind::Release: {
      auto alt = relaxed(f.lhs());
      alt.push_back(RelaxedClause{tt(), NextOp::Weak, {f}});
      return compact(relaxed_product(relaxed(f.rhs()), alt));
    }
    default:
      throw std::invalid_argument("anf_relaxed: formula is not in PNF");
  }
}

}  // namespace detail

/// Every U/R occurrence lies inside the operand of some X or W.
inline bool is_guarded(const Formula& f) {
  return detail::guarded_below(f, false);
}

/// Guardedness transformation:
///   gt(f U g) = gt(g) | (gt(f) & X(f U g))
///   gt(f R g) = gt(g) & (gt(f) | W(f R g))
/// X/W subformulas and literals are left as they are.
inline Formula gt(const Formula& f) {
  detail::require_pnf(f, "gt");
  return detail::Guarder{}.run(f);
}

/// DNF of a guarded PNF formula with X/W subformulas as opaque literals.
inline std::vector<PseudoClause> pa(const Formula& f) {
  detail::require_pnf(f, "pa");
  if (!is_guarded(f)) throw std::invalid_argument("pa: formula is not guarded");
  return detail::pseudo_dnf(f);
}

/// Pseudo-clause to ANF clause.  The next operator is X if any
/// pseudo-literal used X, and W otherwise (W true when there are none).
inline AnfClause ct(const PseudoClause& clause) {
  AnfClause out;
  bool strong = false;
  std::vector<Formula> bodies;
  for (const auto& p : clause) {
    if (const auto* l = std::get_if<Literal>(&p)) {
      out.lits.push_back(*l);
    } else {
      const auto& n = std::get<NextLiteral>(p);
      strong = strong || n.op == NextOp::Strong;
      bodies.push_back(n.body);
    }
  }
  out.lits = detail::sorted_unique(std::move(out.lits));
  out.next_op = strong ? NextOp::Strong : NextOp::Weak;
  out.nf = make_set(std::move(bodies));
  return out;
}

/// ct over every pseudo-clause, with no further cleanup.
inline AnfFormula an(const std::vector<PseudoClause>& clauses) {
  AnfFormula out;
  for (const auto& c : clauses) out.clauses.push_back(ct(c));
  out.clauses = detail::sorted_unique(std::move(out.clauses));
  return out;
}

/// anf = an . pa . gt, then: clauses holding `false` or a complementary
/// literal pair are dropped, `true` is dropped from literal and next-formula
/// sets, and duplicates are merged.
inline AnfFormula anf(const Formula& f) {
  detail::require_pnf(f, "anf");
  AnfFormula raw = an(pa(gt(f)));
  AnfFormula out;
  for (auto& c : raw.clauses)
    if (detail::tidy(c)) out.clauses.push_back(std::move(c));
  out.clauses = detail::sorted_unique(std::move(out.clauses));
  return out;
}

/// Clauses of the form guard & N(/\ nf) without expanding the propositional
/// part into DNF.  Clauses sharing (N, nf) are merged by disjoining their
/// guards, guards are minimized, and unsatisfiable ones are dropped.
inline std::vector<RelaxedClause> anf_relaxed(const Formula& f) {
  detail::require_pnf(f, "anf_relaxed");
  auto out = detail::relaxed(f);
  // Guards over more atoms than the exact minimizer handles may still be
  // contradictions.
  std::erase_if(out, [](const RelaxedClause& c) { return !guard::satisfiable(c.guard); });
  return out;
}

}  // namespace fltl
