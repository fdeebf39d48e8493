#pragma once

// Tableau construction of an NFA whose language is exactly the set of
// finite traces satisfying a formula.
//
// A state is a set q of PNF subformulas of the root, standing for /\ q.
// Each clause of anf(/\ q) yields an edge labelled by the clause's
// propositional part into the state nf(clause).  A state accepts the
// empty trace iff eps |= /\ q, which is decided syntactically.  States are
// discovered on the fly from the initial state {root}.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fltl/boolean.hpp"
#include "fltl/formula.hpp"
#include "fltl/normal_form.hpp"
#include "fltl/pnf.hpp"
#include "fltl/semantics.hpp"

namespace fltl {

struct StateId {
  std::uint32_t value = 0;
  auto operator<=>(const StateId&) const = default;
};

struct NfaState {
  StateId id;
  FormulaSet formulas;
  bool accepting = false;
  bool operator==(const NfaState&) const = default;
};

/// Symbolic edge: stands for every concrete step on a symbol A with
/// A |=_p guard.
struct Edge {
  StateId from;
  StateId to;
  Formula guard;
  bool operator==(const Edge&) const = default;
};

struct Nfa {
  std::vector<std::string> alphabet;  // sorted
  std::vector<NfaState> states;       // indexed by StateId
  StateId initial;
  std::vector<Edge> edges;

  const NfaState& state(StateId id) const { return states.at(id.value); }
  std::size_t state_count() const { return states.size(); }
  std::size_t edge_count() const { return edges.size(); }
  bool operator==(const Nfa&) const = default;
};

enum class AnfMode { Relaxed, Strict };

struct BuildOptions {
  AnfMode mode = AnfMode::Relaxed;
  /// Declared propositions.  Empty means the formula's own atoms.
  std::vector<std::string> alphabet;
  /// Construction gives up with build_timeout once this passes.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class build_timeout : public std::runtime_error {
 public:
  build_timeout() : std::runtime_error("automaton construction timed out") {}
};

/// eps |=_e /\ q, from the syntax of the members alone.
inline bool mark_accepting(const FormulaSet& q) {
  return std::all_of(q.begin(), q.end(),
                     [](const Formula& f) { return epsilon_sat(f); });
}

namespace detail {

struct Transition {
  Formula guard;
  FormulaSet target;
};

inline std::vector<Transition> transitions_of(const FormulaSet& q, AnfMode mode) {
  const Formula conjunction = conjunction_of(q);
  std::vector<Transition> out;
  auto keep = [](const FormulaSet& nf) {
    // N(false & ...) cannot be met by any non-empty trace.
    return std::none_of(nf.begin(), nf.end(),
                        [](const Formula& f) { return f.kind() == Kind::False; });
  };
  if (mode == AnfMode::Strict) {
    for (const auto& c : anf(conjunction).clauses)
      if (keep(c.nf)) out.push_back({c.guard(), c.nf});
  } else {
    for (const auto& c : anf_relaxed(conjunction))
      if (keep(c.nf)) out.push_back({c.guard, c.nf});
  }
  return out;
}

}  // namespace detail

inline Nfa build(const Formula& formula, const BuildOptions& options = {}) {
  const Formula root = to_pnf(formula);
  Nfa nfa;
  auto atoms = atoms_of(formula);
  if (options.alphabet.empty()) {
    nfa.alphabet = atoms;
  } else {
    nfa.alphabet = options.alphabet;
    std::sort(nfa.alphabet.begin(), nfa.alphabet.end());
    nfa.alphabet.erase(std::unique(nfa.alphabet.begin(), nfa.alphabet.end()),
                       nfa.alphabet.end());
    for (const auto& a : atoms)
      if (!std::binary_search(nfa.alphabet.begin(), nfa.alphabet.end(), a))
        throw std::invalid_argument("atom '" + a +
                                    "' is not in the declared alphabet");
  }

  std::map<FormulaSet, StateId> index;
  std::deque<StateId> work;
  auto intern = [&](const FormulaSet& q) {
    auto [it, inserted] = index.try_emplace(
        q, StateId{static_cast<std::uint32_t>(nfa.states.size())});
    if (inserted) {
      nfa.states.push_back(NfaState{it->second, q, mark_accepting(q)});
      work.push_back(it->second);
    }
    return it->second;
  };

  nfa.initial = intern(FormulaSet{root});
  while (!work.empty()) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
      throw build_timeout();
    StateId from = work.front();
    work.pop_front();
    const FormulaSet q = nfa.states[from.value].formulas;
    for (auto& t : detail::transitions_of(q, options.mode)) {
      StateId to = intern(t.target);
      nfa.edges.push_back(Edge{from, to, std::move(t.guard)});
    }
  }
  return nfa;
}

/// One edge per ordered state pair, labelled by the simplified disjunction
/// of the merged guards.  Edges whose guard is unsatisfiable disappear.
inline Nfa merge_edges(const Nfa& nfa) {
  std::map<std::pair<StateId, StateId>, std::vector<Formula>> grouped;
  for (const auto& e : nfa.edges) grouped[{e.from, e.to}].push_back(e.guard);
  Nfa out = nfa;
  out.edges.clear();
  for (auto& [key, guards] : grouped) {
    Formula g = guard::simplify(disjunction_of(make_set(std::move(guards))));
    if (g.kind() == Kind::False || !guard::satisfiable(g)) continue;
    out.edges.push_back(Edge{key.first, key.second, g});
  }
  return out;
}

/// Drops states from which no accepting state is reachable.  The initial
/// state always stays; survivors are renumbered in their original order.
inline Nfa prune_dead(const Nfa& nfa) {
  std::vector<bool> live(nfa.states.size(), false);
  for (const auto& s : nfa.states) live[s.id.value] = s.accepting;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : nfa.edges) {
      if (!live[e.from.value] && live[e.to.value]) {
        live[e.from.value] = true;
        changed = true;
      }
    }
  }
  live[nfa.initial.value] = true;
  std::vector<std::optional<StateId>> remap(nfa.states.size());
  Nfa out;
  out.alphabet = nfa.alphabet;
  for (const auto& s : nfa.states) {
    if (!live[s.id.value]) continue;
    StateId id{static_cast<std::uint32_t>(out.states.size())};
    remap[s.id.value] = id;
    out.states.push_back(NfaState{id, s.formulas, s.accepting});
  }
  out.initial = *remap[nfa.initial.value];
  for (const auto& e : nfa.edges)
    if (remap[e.from.value] && remap[e.to.value])
      out.edges.push_back(Edge{*remap[e.from.value], *remap[e.to.value], e.guard});
  return out;
}

/// Number of concrete triples (q, A, q') with A a subset of the alphabet
/// satisfying some guard on an edge from q to q'.
inline std::size_t concrete_transition_count(const Nfa& nfa) {
  std::map<std::pair<StateId, StateId>, std::vector<Formula>> grouped;
  for (const auto& e : nfa.edges) grouped[{e.from, e.to}].push_back(e.guard);
  std::size_t total = 0;
  for (const auto& [key, guards] : grouped) {
    auto table = guard::truth_table(disjunction_of(make_set(guards)), nfa.alphabet);
    total += static_cast<std::size_t>(
        std::count(table.rows.begin(), table.rows.end(), true));
  }
  return total;
}

}  // namespace fltl
