#pragma once

// Finite traces and their line-oriented text encoding.
//
// One trace per line.  States are separated by ';', each state is a
// whitespace-separated list of atom names, and the empty trace is written
// "<eps>".  "a b; ; a" is the three-state trace [{a,b}, {}, {a}].  An empty
// line is the one-state trace [{}].

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fltl/formula.hpp"

namespace fltl {

/// One element of 2^AP: the set of propositions that hold.
struct AlphabetSymbol {
  std::set<std::string> props;

  bool contains(const std::string& name) const {
    return props.count(name) != 0;
  }
  auto operator<=>(const AlphabetSymbol&) const = default;
};

struct Trace {
  std::vector<AlphabetSymbol> symbols;

  std::size_t size() const noexcept { return symbols.size(); }
  bool empty() const noexcept { return symbols.empty(); }
  const AlphabetSymbol& operator[](std::size_t i) const { return symbols[i]; }

  /// pi(i): the suffix starting at i, defined for 0 <= i <= size().
  Trace suffix(std::size_t i) const {
    if (i > symbols.size()) throw std::out_of_range("suffix past end of trace");
    return Trace{{symbols.begin() + static_cast<std::ptrdiff_t>(i),
                  symbols.end()}};
  }

  /// Instants {i | i < size()}.
  std::vector<std::size_t> instants() const {
    std::vector<std::size_t> out(symbols.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  /// Last position; only defined on non-empty traces.
  std::size_t last() const {
    if (symbols.empty()) throw std::logic_error("last() of the empty trace");
    return symbols.size() - 1;
  }

  auto operator<=>(const Trace&) const = default;
};

inline constexpr std::string_view kEmptyTraceToken = "<eps>";

inline std::string format_trace(const Trace& trace) {
  if (trace.empty()) return std::string(kEmptyTraceToken);
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out += "; ";
    bool first = true;
    for (const auto& p : trace[i].props) {
      if (!first) out += ' ';
      out += p;
      first = false;
    }
  }
  return out;
}

inline Trace parse_trace(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto trimmed = line;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed == kEmptyTraceToken) return Trace{};

  Trace trace;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(';', start);
    std::string_view field = line.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    AlphabetSymbol sym;
    std::istringstream words{std::string(field)};
    std::string word;
    while (words >> word) {
      atom(word);  // validates the name
      sym.props.insert(word);
    }
    trace.symbols.push_back(std::move(sym));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return trace;
}

/// Reads every line of the stream as one trace.
inline std::vector<Trace> read_traces(std::istream& in) {
  std::vector<Trace> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(parse_trace(line));
  return out;
}

/// All atoms mentioned anywhere in the traces, sorted.
inline std::vector<std::string> atoms_of(const std::vector<Trace>& traces) {
  std::set<std::string> names;
  for (const auto& t : traces)
    for (const auto& s : t.symbols) names.insert(s.props.begin(), s.props.end());
  return {names.begin(), names.end()};
}

/// Every subset of `alphabet`, ordered by bitmask over the sorted names.
inline std::vector<AlphabetSymbol> all_symbols(
    const std::vector<std::string>& alphabet) {
  if (alphabet.size() > 20) throw std::invalid_argument("alphabet too large");
  std::vector<AlphabetSymbol> out;
  std::size_t n = std::size_t{1} << alphabet.size();
  out.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    AlphabetSymbol s;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.props.insert(alphabet[i]);
    out.push_back(std::move(s));
  }
  return out;
}

/// Every trace over 2^alphabet of length at most max_len, shortest first.
inline std::vector<Trace> all_traces(const std::vector<std::string>& alphabet,
                                     std::size_t max_len) {
  const auto symbols = all_symbols(alphabet);
  std::vector<Trace> out{Trace{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : symbols) {
        Trace t = out[i];
        t.symbols.push_back(s);
        out.push_back(std::move(t));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace fltl
