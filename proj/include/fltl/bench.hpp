#pragma once

// Benchmark harness: per-formula size, state count, edge count and wall
// time, written as CSV.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fltl/formula.hpp"
#include "fltl/parse.hpp"
#include "fltl/print.hpp"
#include "fltl/tableau.hpp"

namespace fltl {

struct BenchRecord {
  std::size_t formula_id = 0;
  std::string formula;
  std::size_t size = 0;
  std::size_t states = 0;
  std::size_t edges = 0;
  double time_s = 0.0;
  bool timed_out = false;
};

enum class EdgeCount {
  Merged,    // one symbolic edge per state pair
  Clauses,   // one edge per ANF clause, before merging
  Concrete,  // (q, A, q') triples over 2^AP
};

struct BenchOptions {
  AnfMode mode = AnfMode::Relaxed;
  EdgeCount edge_count = EdgeCount::Merged;
  double timeout_s = 60.0;
  unsigned jobs = 1;
};

inline BenchRecord bench_one(std::size_t id, const Formula& f,
                             const BenchOptions& options) {
  using clock = std::chrono::steady_clock;
  BenchRecord r;
  r.formula_id = id;
  r.formula = to_string(f);
  r.size = size(f);
  BuildOptions build_options;
  build_options.mode = options.mode;
  const auto start = clock::now();
  build_options.deadline =
      start + std::chrono::duration_cast<clock::duration>(
                  std::chrono::duration<double>(options.timeout_s));
  try {
    Nfa raw = build(f, build_options);
    Nfa merged = merge_edges(raw);
    r.states = merged.state_count();
    switch (options.edge_count) {
      case EdgeCount::Merged:
        r.edges = merged.edge_count();
        break;
      case EdgeCount::Clauses:
        r.edges = raw.edge_count();
        break;
      case EdgeCount::Concrete:
        r.edges = concrete_transition_count(merged);
        break;
    }
  } catch (const build_timeout&) {
    r.timed_out = true;
  }
  r.time_s = std::chrono::duration<double>(clock::now() - start).count();
  if (r.time_s <= 0.0) r.time_s = 1e-9;
  return r;
}

/// One record per formula, in input order.  With jobs > 1 formulas are
/// built concurrently; each record still times only its own build.
inline std::vector<BenchRecord> bench(const std::vector<Formula>& formulas,
                                      const BenchOptions& options = {}) {
  std::vector<BenchRecord> records(formulas.size());
  unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1 || formulas.size() < 2) {
    for (std::size_t i = 0; i < formulas.size(); ++i)
      records[i] = bench_one(i, formulas[i], options);
    return records;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = cursor++; i < formulas.size(); i = cursor++)
        records[i] = bench_one(i, formulas[i], options);
    });
  }
  for (auto& t : workers) t.join();
  return records;
}

inline std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Header "id,formula,size,states,edges,time_s".  Timed-out rows leave
/// states and edges empty.
inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "id,formula,size,states,edges,time_s\n";
  for (const auto& r : records) {
    os << r.formula_id << ',' << csv_quote(r.formula) << ',' << r.size << ',';
    if (r.timed_out)
      os << ",,";
    else
      os << r.states << ',' << r.edges << ',';
    std::ostringstream t;
    t << std::fixed << std::setprecision(6) << r.time_s;
    os << t.str() << '\n';
  }
}

/// One formula per line; blank lines and lines starting with '#' are
/// skipped.
inline std::vector<Formula> read_corpus(std::istream& in) {
  std::vector<Formula> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse(line));
  }
  return out;
}

}  // namespace fltl
