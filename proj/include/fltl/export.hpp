#pragma once

// Graphviz DOT and JSON serialization of automata.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fltl/formula.hpp"
#include "fltl/parse.hpp"
#include "fltl/print.hpp"
#include "fltl/tableau.hpp"

namespace fltl {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string set_label(const FormulaSet& q) {
  std::string out = "{";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ", ";
    out += to_string(q[i]);
  }
  return out + "}";
}

}  // namespace detail

/// States in id order, then edges in stored order.  Accepting states are
/// drawn as double circles.
inline void write_dot(std::ostream& os, const Nfa& nfa) {
  os << "digraph nfa {\n  rankdir=LR;\n  init [shape=point];\n";
  for (const auto& s : nfa.states) {
    os << "  q" << s.id.value << " [shape="
       << (s.accepting ? "doublecircle" : "circle") << ", label=\"q"
       << s.id.value << "\", tooltip=\""
       << detail::dot_escape(detail::set_label(s.formulas)) << "\"];\n";
  }
  os << "  init -> q" << nfa.initial.value << ";\n";
  for (const auto& e : nfa.edges) {
    os << "  q" << e.from.value << " -> q" << e.to.value << " [label=\""
       << detail::dot_escape(to_string(e.guard)) << "\"];\n";
  }
  os << "}\n";
}

inline std::string to_dot(const Nfa& nfa) {
  std::ostringstream os;
  write_dot(os, nfa);
  return os.str();
}

inline nlohmann::json to_json(const Nfa& nfa) {
  nlohmann::json j;
  j["alphabet"] = nfa.alphabet;
  j["initial"] = nfa.initial.value;
  j["states"] = nlohmann::json::array();
  for (const auto& s : nfa.states) {
    nlohmann::json formulas = nlohmann::json::array();
    for (const auto& f : s.formulas) formulas.push_back(to_string(f));
    j["states"].push_back(
        {{"id", s.id.value}, {"formulas", formulas}, {"accepting", s.accepting}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : nfa.edges)
    j["edges"].push_back(
        {{"from", e.from.value}, {"to", e.to.value}, {"guard", to_string(e.guard)}});
  return j;
}

/// Inverse of to_json.  Throws std::invalid_argument on malformed input.
inline Nfa from_json(const nlohmann::json& j) {
  try {
    Nfa nfa;
    nfa.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    nfa.initial = StateId{j.at("initial").get<std::uint32_t>()};
    for (const auto& s : j.at("states")) {
      NfaState state;
      state.id = StateId{s.at("id").get<std::uint32_t>()};
      if (state.id.value != nfa.states.size())
        throw std::invalid_argument("state ids must be 0..n-1 in order");
      std::vector<Formula> fs;
      for (const auto& f : s.at("formulas")) fs.push_back(parse(f.get<std::string>()));
      state.formulas = make_set(std::move(fs));
      state.accepting = s.at("accepting").get<bool>();
      nfa.states.push_back(std::move(state));
    }
    if (nfa.initial.value >= nfa.states.size())
      throw std::invalid_argument("initial state out of range");
    for (const auto& e : j.at("edges")) {
      Edge edge{StateId{e.at("from").get<std::uint32_t>()},
                StateId{e.at("to").get<std::uint32_t>()},
                parse(e.at("guard").get<std::string>())};
      if (edge.from.value >= nfa.states.size() || edge.to.value >= nfa.states.size())
        throw std::invalid_argument("edge endpoint out of range");
      nfa.edges.push_back(std::move(edge));
    }
    return nfa;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed automaton JSON: ") + ex.what());
  }
}

}  // namespace fltl
