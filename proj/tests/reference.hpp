#pragma once

// Test-only oracles, written independently of the library evaluators.
// Satisfaction is computed bottom-up: every subformula gets a truth
// vector over suffix positions 0..|pi|, filled right to left.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fltl/formula.hpp"
#include "fltl/trace.hpp"

namespace ref {

using fltl::Formula;
using fltl::Kind;
using fltl::Trace;

using Column = std::vector<bool>;

// Column for pi(j) |= f at j = 0..n, where n = |pi|.
inline Column column(const Trace& pi, const Formula& f) {
  const std::size_t n = pi.size();
  Column v(n + 1, false);
  switch (f.kind()) {
    case Kind::True:
      v.assign(n + 1, true);
      break;
    case Kind::False:
      break;
    case Kind::Atom:
      for (std::size_t j = 0; j < n; ++j) v[j] = pi.symbols[j].props.count(f.name()) > 0;
      break;
    case Kind::Not: {
      Column c = column(pi, f.operand());
      for (std::size_t j = 0; j <= n; ++j) v[j] = !c[j];
      break;
    }
    case Kind::And:
    case Kind::Or: {
      Column l = column(pi, f.lhs()), r = column(pi, f.rhs());
      for (std::size_t j = 0; j <= n; ++j)
        v[j] = f.kind() == Kind::And ? (l[j] && r[j]) : (l[j] || r[j]);
      break;
    }
    case Kind::Next:
    case Kind::WeakNext: {
      Column c = column(pi, f.operand());
      for (std::size_t j = 0; j <= n; ++j)
        v[j] = j < n ? c[j + 1] : f.kind() == Kind::WeakNext;
      break;
    }
    case Kind::Until: {
      Column l = column(pi, f.lhs()), r = column(pi, f.rhs());
      v[n] = r[n];
      for (std::size_t j = n; j-- > 0;) v[j] = r[j] || (l[j] && v[j + 1]);
      break;
    }
    case Kind::Release: {
      // phi1 R phi2: phi2 holds up to and including the first phi1, or forever.
      Column l = column(pi, f.lhs()), r = column(pi, f.rhs());
      v[n] = r[n];
      for (std::size_t j = n; j-- > 0;) v[j] = r[j] && (l[j] || v[j + 1]);
      break;
    }
  }
  return v;
}

inline bool holds(const Trace& pi, const Formula& f) { return column(pi, f)[0]; }

// LTL_f over instants 0..last; core operators only.
inline Column column_ltlf(const Trace& pi, const Formula& f) {
  const std::size_t n = pi.size();
  Column v(n, false);
  switch (f.kind()) {
    case Kind::True:
      v.assign(n, true);
      break;
    case Kind::Atom:
      for (std::size_t j = 0; j < n; ++j) v[j] = pi.symbols[j].props.count(f.name()) > 0;
      break;
    case Kind::Not: {
      Column c = column_ltlf(pi, f.operand());
      for (std::size_t j = 0; j < n; ++j) v[j] = !c[j];
      break;
    }
    case Kind::And: {
      Column l = column_ltlf(pi, f.lhs()), r = column_ltlf(pi, f.rhs());
      for (std::size_t j = 0; j < n; ++j) v[j] = l[j] && r[j];
      break;
    }
    case Kind::Next: {
      Column c = column_ltlf(pi, f.operand());
      for (std::size_t j = 0; j + 1 < n; ++j) v[j] = c[j + 1];
      break;
    }
    case Kind::Until: {
      Column l = column_ltlf(pi, f.lhs()), r = column_ltlf(pi, f.rhs());
      bool later = false;
      for (std::size_t j = n; j-- > 0;) {
        v[j] = r[j] || (l[j] && later);
        later = v[j];
      }
      break;
    }
    default:
      throw std::invalid_argument("column_ltlf: not a core LTL_f formula");
  }
  return v;
}

inline bool holds_ltlf(const Trace& pi, const Formula& f) {
  return !pi.empty() && column_ltlf(pi, f)[0];
}

// All traces over `alphabet` of length <= max_len, shortest first.
inline std::vector<Trace> traces(const std::vector<std::string>& alphabet,
                                 std::size_t max_len) {
  std::vector<fltl::AlphabetSymbol> symbols;
  for (std::size_t mask = 0; mask < (std::size_t{1} << alphabet.size()); ++mask) {
    fltl::AlphabetSymbol s;
    for (std::size_t b = 0; b < alphabet.size(); ++b)
      if (mask >> b & 1) s.props.insert(alphabet[b]);
    symbols.push_back(s);
  }
  std::vector<Trace> out{Trace{}};
  std::vector<Trace> layer{Trace{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Trace> grown;
    for (const auto& t : layer)
      for (const auto& s : symbols) {
        Trace u = t;
        u.symbols.push_back(s);
        grown.push_back(u);
      }
    out.insert(out.end(), grown.begin(), grown.end());
    layer = std::move(grown);
  }
  return out;
}

inline Trace trace(std::vector<std::vector<std::string>> states) {
  Trace t;
  for (auto& s : states) t.symbols.push_back({{s.begin(), s.end()}});
  return t;
}

}  // namespace ref
