#pragma once

// Consumers of built automata: trace acceptance, satisfiability with a
// shortest witness, and bounded equivalence against the semantic oracle.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fltl/formula.hpp"
#include "fltl/semantics.hpp"
#include "fltl/tableau.hpp"
#include "fltl/trace.hpp"

namespace fltl {

class alphabet_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Witness {
  Trace trace;
  std::vector<StateId> states_visited;  // size() == trace.size() + 1
};

namespace detail {

inline void check_alphabet(const Nfa& nfa, const Trace& pi) {
  for (const auto& s : pi.symbols)
    for (const auto& p : s.props)
      if (!std::binary_search(nfa.alphabet.begin(), nfa.alphabet.end(), p))
        throw alphabet_error("proposition '" + p +
                             "' is not in the automaton's alphabet");
}

// Fewest atoms first, then lexicographically smallest atom list.
inline AlphabetSymbol smallest_model(const Formula& g) {
  const auto vars = atoms_of(g);
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= vars.size(); ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      AlphabetSymbol s;
      for (auto i : pick) s.props.insert(vars[i]);
      if (sat_prop(s, g)) return s;
      // next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == vars.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("guard has no model");
}

}  // namespace detail

/// Acceptance of pi starting from `start`, by forward subset propagation.
inline bool run_from(const Nfa& nfa, StateId start, const Trace& pi) {
  detail::check_alphabet(nfa, pi);
  std::vector<bool> current(nfa.states.size(), false);
  current[start.value] = true;
  for (const auto& symbol : pi.symbols) {
    std::vector<bool> next_set(nfa.states.size(), false);
    bool any = false;
    for (const auto& e : nfa.edges) {
      if (current[e.from.value] && !next_set[e.to.value] &&
          sat_prop(symbol, e.guard)) {
        next_set[e.to.value] = true;
        any = true;
      }
    }
    if (!any) return false;
    current = std::move(next_set);
  }
  for (std::size_t i = 0; i < current.size(); ++i)
    if (current[i] && nfa.states[i].accepting) return true;
  return false;
}

/// Throws alphabet_error if pi mentions a proposition outside the
/// automaton's alphabet.
inline bool run(const Nfa& nfa, const Trace& pi) {
  return run_from(nfa, nfa.initial, pi);
}

/// Shortest path to an accepting state.  Each step's symbol is the model
/// of the edge guard with the fewest propositions.
inline std::optional<Witness> find_witness(const Nfa& nfa) {
  const std::size_t n = nfa.states.size();
  std::vector<std::optional<std::size_t>> via(n);  // edge index
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue{nfa.initial};
  seen[nfa.initial.value] = true;
  std::optional<StateId> goal;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (nfa.state(s).accepting) {
      goal = s;
      break;
    }
    for (std::size_t ei = 0; ei < nfa.edges.size(); ++ei) {
      const auto& e = nfa.edges[ei];
      if (e.from != s || seen[e.to.value]) continue;
      if (!guard::satisfiable(e.guard)) continue;
      seen[e.to.value] = true;
      via[e.to.value] = ei;
      queue.push_back(e.to);
    }
  }
  if (!goal) return std::nullopt;
  Witness w;
  std::vector<std::size_t> path;
  for (StateId s = *goal; s != nfa.initial; s = nfa.edges[*via[s.value]].from)
    path.push_back(*via[s.value]);
  std::reverse(path.begin(), path.end());
  w.states_visited.push_back(nfa.initial);
  for (auto ei : path) {
    w.trace.symbols.push_back(detail::smallest_model(nfa.edges[ei].guard));
    w.states_visited.push_back(nfa.edges[ei].to);
  }
  return w;
}

/// A shortest model of f, or nothing when f is unsatisfiable.
inline std::optional<Witness> is_satisfiable(const Formula& f) {
  return find_witness(merge_edges(build(f)));
}

/// Agreement of the semantic oracle on every trace over the combined
/// alphabet of length at most max_len.  At most four propositions.
inline bool equivalent(const Formula& f1, const Formula& f2,
                       std::size_t max_len) {
  auto ap = atoms_of(f1);
  auto more = atoms_of(f2);
  ap.insert(ap.end(), more.begin(), more.end());
  std::sort(ap.begin(), ap.end());
  ap.erase(std::unique(ap.begin(), ap.end()), ap.end());
  if (ap.size() > 4)
    throw alphabet_error("equivalent: more than 4 propositions");
  for (const auto& pi : all_traces(ap, max_len))
    if (sat(pi, f1) != sat(pi, f2)) return false;
  return true;
}

}  // namespace fltl
