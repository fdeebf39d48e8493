#pragma once

// Immutable AST for Finite LTL formulas, extended with the dual operators
// (or, weak next, release).  Nodes are shared and never mutated, so a
// Formula is cheap to copy and safe to hand to other threads.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fltl {

enum class Kind : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,
  WeakNext,
  Until,
  Release,
};

namespace detail {
struct Node;
}

class Formula {
 public:
  /// Default-constructed formulas are the constant `true`.
  Formula();

  Kind kind() const noexcept;

  /// Atom name; empty for every other kind.
  const std::string& name() const noexcept;

  /// Sole operand of a unary node, left operand of a binary node.
  Formula lhs() const;
  /// Right operand of a binary node.
  Formula rhs() const;
  Formula operand() const { return lhs(); }

  std::size_t hash() const noexcept;

  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_constant() const noexcept {
    return kind() == Kind::True || kind() == Kind::False;
  }
  bool is_unary() const noexcept {
    auto k = kind();
    return k == Kind::Not || k == Kind::Next || k == Kind::WeakNext;
  }
  bool is_binary() const noexcept {
    auto k = kind();
    return k == Kind::And || k == Kind::Or || k == Kind::Until ||
           k == Kind::Release;
  }
  /// a, !a, true or false.
  bool is_literal() const noexcept;
  /// No X, W, U or R anywhere below.
  bool is_propositional() const noexcept;
  /// Every negation sits directly on an atom.
  bool is_pnf() const noexcept;

  /// Number of AST nodes, counting repeated subtrees once per occurrence.
  std::size_t node_count() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  /// Total structural order: kind first, then atom name, then operands.
  friend std::strong_ordering operator<=>(const Formula& a,
                                          const Formula& b) noexcept;

  static Formula make(Kind kind, std::string name, Formula lhs, Formula rhs);
  static Formula make_leaf(Kind kind, std::string name);
  static Formula make_unary(Kind kind, Formula operand);
  static Formula make_binary(Kind kind, Formula lhs, Formula rhs);

 private:
  explicit Formula(std::shared_ptr<const detail::Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::Node> node_;
};

namespace detail {

struct Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t hash = 0;
  std::size_t nodes = 1;
  bool propositional = true;
  bool pnf = true;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::strong_ordering compare_nodes(const Node* a,
                                          const Node* b) noexcept {
  if (a == b) return std::strong_ordering::equal;
  if (a == nullptr) return std::strong_ordering::less;
  if (b == nullptr) return std::strong_ordering::greater;
  if (auto c = a->kind <=> b->kind; c != 0) return c;
  if (auto c = a->name.compare(b->name); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = compare_nodes(a->lhs.get(), b->lhs.get()); c != 0) return c;
  return compare_nodes(a->rhs.get(), b->rhs.get());
}

inline bool equal_nodes(const Node* a, const Node* b) noexcept {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->hash != b->hash || a->nodes != b->nodes) return false;
  return compare_nodes(a, b) == 0;
}

inline const std::shared_ptr<const Node>& true_node() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::True;
    n->hash = hash_combine(0, static_cast<std::size_t>(Kind::True));
    return n;
  }();
  return node;
}

}  // namespace detail

inline Formula::Formula() : node_(detail::true_node()) {}

inline Kind Formula::kind() const noexcept { return node_->kind; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }
inline std::size_t Formula::node_count() const noexcept { return node_->nodes; }
inline bool Formula::is_propositional() const noexcept {
  return node_->propositional;
}
inline bool Formula::is_pnf() const noexcept { return node_->pnf; }

inline Formula Formula::lhs() const {
  if (!node_->lhs) throw std::logic_error("formula has no operand");
  return Formula(node_->lhs);
}

inline Formula Formula::rhs() const {
  if (!node_->rhs) throw std::logic_error("formula has no right operand");
  return Formula(node_->rhs);
}

inline bool Formula::is_literal() const noexcept {
  switch (kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return true;
    case Kind::Not:
      return node_->lhs->kind == Kind::Atom;
    default:
      return false;
  }
}

inline bool operator==(const Formula& a, const Formula& b) noexcept {
  return detail::equal_nodes(a.node_.get(), b.node_.get());
}

inline std::strong_ordering operator<=>(const Formula& a,
                                        const Formula& b) noexcept {
  return detail::compare_nodes(a.node_.get(), b.node_.get());
}

inline Formula Formula::make(Kind kind, std::string name, Formula lhs,
                             Formula rhs) {
  auto n = std::make_shared<detail::Node>();
  n->kind = kind;
  n->name = std::move(name);
  std::size_t h = detail::hash_combine(0, static_cast<std::size_t>(kind));
  h = detail::hash_combine(h, std::hash<std::string>{}(n->name));
  switch (kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      break;
    case Kind::Not:
    case Kind::Next:
    case Kind::WeakNext:
      n->lhs = lhs.node_;
      break;
    default:
      n->lhs = lhs.node_;
      n->rhs = rhs.node_;
      break;
  }
  bool temporal = kind == Kind::Next || kind == Kind::WeakNext ||
                  kind == Kind::Until || kind == Kind::Release;
  n->propositional = !temporal;
  n->pnf = true;
  for (const auto* child : {n->lhs.get(), n->rhs.get()}) {
    if (!child) continue;
    h = detail::hash_combine(h, child->hash);
    n->nodes += child->nodes;
    n->propositional = n->propositional && child->propositional;
    n->pnf = n->pnf && child->pnf;
  }
  if (kind == Kind::Not && n->lhs->kind != Kind::Atom) n->pnf = false;
  n->hash = h;
  return Formula(std::move(n));
}

inline Formula Formula::make_leaf(Kind kind, std::string name) {
  if (kind == Kind::True) return Formula();
  return make(kind, std::move(name), Formula(), Formula());
}

inline Formula Formula::make_unary(Kind kind, Formula operand) {
  return make(kind, {}, std::move(operand), Formula());
}

inline Formula Formula::make_binary(Kind kind, Formula lhs, Formula rhs) {
  return make(kind, {}, std::move(lhs), std::move(rhs));
}

// Constructors.  None of them simplify: the tree built is exactly the tree
// requested.

inline Formula tt() { return Formula(); }
inline Formula ff() { return Formula::make_leaf(Kind::False, {}); }

/// Atomic proposition.  Names start with a letter and continue with
/// letters, digits or underscores; operator keywords are reserved.
inline Formula atom(std::string name) {
  auto valid_start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto valid_rest = [&](char c) {
    return valid_start(c) || (c >= '0' && c <= '9') || c == '_';
  };
  if (name.empty() || !valid_start(name.front()) ||
      !std::all_of(name.begin(), name.end(), valid_rest) || name == "true" ||
      name == "false" || (name.size() == 1 && std::string_view("XWUFGR").find(name[0]) !=
                                                  std::string_view::npos))
    throw std::invalid_argument("invalid proposition name '" + name + "'");
  return Formula::make_leaf(Kind::Atom, std::move(name));
}

inline Formula neg(Formula f) {
  return Formula::make_unary(Kind::Not, std::move(f));
}
inline Formula conj(Formula a, Formula b) {
  return Formula::make_binary(Kind::And, std::move(a), std::move(b));
}
inline Formula disj(Formula a, Formula b) {
  return Formula::make_binary(Kind::Or, std::move(a), std::move(b));
}
inline Formula next(Formula f) {
  return Formula::make_unary(Kind::Next, std::move(f));
}
inline Formula wnext(Formula f) {
  return Formula::make_unary(Kind::WeakNext, std::move(f));
}
inline Formula until(Formula a, Formula b) {
  return Formula::make_binary(Kind::Until, std::move(a), std::move(b));
}
inline Formula release(Formula a, Formula b) {
  return Formula::make_binary(Kind::Release, std::move(a), std::move(b));
}

// Derived notation.
inline Formula eventually(Formula f) { return until(tt(), std::move(f)); }
inline Formula always(Formula f) {
  return neg(eventually(neg(std::move(f))));
}
inline Formula implies(Formula a, Formula b) {
  return disj(neg(std::move(a)), std::move(b));
}
inline Formula iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

/// Sorted, duplicate-free vector of formulas.
using FormulaSet = std::vector<Formula>;

inline FormulaSet make_set(std::vector<Formula> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

inline bool set_contains(const FormulaSet& set, const Formula& f) {
  return std::binary_search(set.begin(), set.end(), f);
}

inline FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline bool set_includes(const FormulaSet& super, const FormulaSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

/// Left-nested conjunction of the set; `true` when empty.
inline Formula conjunction_of(const FormulaSet& set) {
  if (set.empty()) return tt();
  Formula acc = set.front();
  for (std::size_t i = 1; i < set.size(); ++i) acc = conj(acc, set[i]);
  return acc;
}

/// Left-nested disjunction of the set; `false` when empty.
inline Formula disjunction_of(const FormulaSet& set) {
  if (set.empty()) return ff();
  Formula acc = set.front();
  for (std::size_t i = 1; i < set.size(); ++i) acc = disj(acc, set[i]);
  return acc;
}

namespace detail {
inline void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.is_unary()) {
    collect_subformulas(f.operand(), out);
  } else if (f.is_binary()) {
    collect_subformulas(f.lhs(), out);
    collect_subformulas(f.rhs(), out);
  }
}
}  // namespace detail

/// S(f): f and all of its subformulas, deduplicated structurally.
inline FormulaSet subformulas(const Formula& f) {
  std::vector<Formula> all;
  all.reserve(f.node_count());
  detail::collect_subformulas(f, all);
  return make_set(std::move(all));
}

/// |f|, the number of distinct subformulas.
inline std::size_t size(const Formula& f) { return subformulas(f).size(); }

/// Names of all atoms occurring in f, sorted.
inline std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> names;
  for (const auto& sub : subformulas(f))
    if (sub.is_atom()) names.push_back(sub.name());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace fltl

template <>
struct std::hash<fltl::Formula> {
  std::size_t operator()(const fltl::Formula& f) const noexcept {
    return f.hash();
  }
};
