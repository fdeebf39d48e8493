// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fltl/fltl.hpp"
#include "reference.hpp"

using namespace fltl;

namespace {

constexpr std::uint64_t kCorpusSeed = 2024;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (" << detail
            << ")" << std::endl;
  if (!ok) ++failures;
}

std::vector<Formula> criterion1_formulas() {
  auto fs = enumerate_formulas({"a", "b"}, 7, 20000);
  RandomFormulaGenerator gen(1, {"a", "b"});
  for (int added = 0; added < 500;) {
    Formula f = gen.generate(1 + gen.uniform(14));
    if (size(f) > 14) continue;
    fs.push_back(f);
    ++added;
  }
  return fs;
}

const std::vector<std::string> kAB{"a", "b"};

}  // namespace

int main() {
  const auto traces = ref::traces(kAB, 3);
  const auto formulas = criterion1_formulas();
  const Trace eps{};

  // Criteria 1, 2, 5 (epsilon part) and 8 share one pass over the formulas.
  std::size_t lang_mismatch = 0, state_violations = 0, concrete_violations = 0,
              eps_mismatch = 0, mode_mismatch = 0, max_states = 0;
  std::string lang_example, bound_example, eps_example, mode_example;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& f : formulas) {
    BuildOptions relaxed_opts{AnfMode::Relaxed, kAB, {}};
    BuildOptions strict_opts{AnfMode::Strict, kAB, {}};
    Nfa relaxed = merge_edges(build(f, relaxed_opts));
    Nfa strict = merge_edges(build(f, strict_opts));
    const std::size_t n = size(f);
    max_states = std::max(max_states, relaxed.state_count());
    for (const Nfa* nfa : {&relaxed, &strict}) {
      if (nfa->state_count() > (std::size_t{1} << n)) {
        ++state_violations;
        bound_example = to_string(f);
      }
      double concrete_bound = std::pow(4.0, double(n)) * std::pow(2.0, double(kAB.size()));
      if (double(concrete_transition_count(*nfa)) > concrete_bound) {
        ++concrete_violations;
        bound_example = to_string(f);
      }
    }
    for (const auto& pi : traces) {
      bool expected = ref::holds(pi, f);
      bool r = run(relaxed, pi), s = run(strict, pi);
      if (r != expected || sat(pi, f) != expected) {
        ++lang_mismatch;
        lang_example = to_string(f) + " on " + format_trace(pi);
      }
      if (r != s) {
        ++mode_mismatch;
        mode_example = to_string(f) + " on " + format_trace(pi);
      }
    }
    if (epsilon_sat(to_pnf(f)) != sat(eps, f)) {
      ++eps_mismatch;
      eps_example = to_string(f);
    }
  }
  double pass_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  {
    std::ostringstream d;
    d << formulas.size() << " formulas x " << traces.size() << " traces, " << lang_mismatch
      << " mismatches, " << std::fixed << std::setprecision(1) << pass_seconds << " s";
    if (lang_mismatch) d << "; e.g. " << lang_example;
    report(1, lang_mismatch == 0, "automaton language equals oracle", d.str());
  }
  {
    std::ostringstream d;
    d << state_violations << " state-bound and " << concrete_violations
      << " concrete-transition violations over " << 2 * formulas.size()
      << " automata; largest relaxed automaton " << max_states << " states";
    if (!bound_example.empty()) d << "; e.g. " << bound_example;
    report(2, state_violations == 0 && concrete_violations == 0, "size bounds", d.str());
  }

  // Criterion 3.
  {
    auto lit = [](const char* a) { return Literal::positive(a); };
    AnfFormula expected;
    expected.clauses = {
        AnfClause{{lit("b"), lit("c")}, NextOp::Weak, {}},
        AnfClause{{lit("c")}, NextOp::Weak, {parse("b R c")}},
        AnfClause{{lit("a")}, NextOp::Strong, {parse("a U (b R c)")}},
    };
    std::sort(expected.clauses.begin(), expected.clauses.end());
    AnfFormula got = anf(parse("a U (b R c)"));
    report(3, got == expected, "ANF golden example", to_string(got.to_formula()));
  }

  // Criterion 4: each identity on 200 seeded instantiations x 85 traces.
  {
    using Identity = std::function<bool(const Formula&, const Formula&, const Trace&)>;
    auto eq = [](std::function<Formula(Formula, Formula)> lhs,
                 std::function<Formula(Formula, Formula)> rhs) -> Identity {
      return [=](const Formula& p, const Formula& q, const Trace& pi) {
        Formula l = lhs(p, q), r = rhs(p, q);
        return sat(pi, l) == sat(pi, r) && ref::holds(pi, l) == ref::holds(pi, r);
      };
    };
    const Formula t = tt(), f = ff();
    std::vector<std::pair<std::string, Identity>> identities = {
        {"or duality", eq([](Formula p, Formula q) { return disj(p, q); },
                          [](Formula p, Formula q) { return neg(conj(neg(p), neg(q))); })},
        {"W duality", eq([](Formula p, Formula) { return wnext(p); },
                         [](Formula p, Formula) { return neg(next(neg(p))); })},
        {"R duality", eq([](Formula p, Formula q) { return release(p, q); },
                         [](Formula p, Formula q) { return neg(until(neg(p), neg(q))); })},
        {"X over and", eq([](Formula p, Formula q) { return conj(next(p), next(q)); },
                          [](Formula p, Formula q) { return next(conj(p, q)); })},
        {"W over and", eq([](Formula p, Formula q) { return conj(wnext(p), wnext(q)); },
                          [](Formula p, Formula q) { return wnext(conj(p, q)); })},
        {"X over or", eq([](Formula p, Formula q) { return disj(next(p), next(q)); },
                         [](Formula p, Formula q) { return next(disj(p, q)); })},
        {"W over or", eq([](Formula p, Formula q) { return disj(wnext(p), wnext(q)); },
                         [](Formula p, Formula q) { return wnext(disj(p, q)); })},
        {"X dominates W", eq([](Formula p, Formula q) { return conj(next(p), wnext(q)); },
                             [](Formula p, Formula q) { return next(conj(p, q)); })},
        {"U unrolling", eq([](Formula p, Formula q) { return until(p, q); },
                           [](Formula p, Formula q) { return disj(q, conj(p, next(until(p, q)))); })},
        {"R unrolling", eq([](Formula p, Formula q) { return release(p, q); },
                           [](Formula p, Formula q) { return conj(q, disj(p, wnext(release(p, q)))); })},
        {"strengthen", [t](const Formula& p, const Formula&, const Trace& pi) {
           return sat(pi, conj(p, next(t))) == (sat(pi, p) && !pi.empty());
         }},
        {"weaken", [f](const Formula& p, const Formula&, const Trace& pi) {
           return sat(pi, disj(p, wnext(f))) == (sat(pi, p) || pi.empty());
         }},
    };
    RandomFormulaGenerator gen(4, kAB);
    std::vector<std::pair<Formula, Formula>> instances;
    for (int i = 0; i < 200; ++i) {
      Formula p = gen.generate(1 + gen.uniform(7));
      Formula q = gen.generate(1 + gen.uniform(7));
      instances.emplace_back(p, q);
    }
    std::size_t failed = 0, checks = 0;
    std::string example;
    for (const auto& [name, identity] : identities)
      for (const auto& [p, q] : instances)
        for (const auto& pi : traces) {
          ++checks;
          if (!identity(p, q, pi)) {
            ++failed;
            example = name + " with " + to_string(p) + ", " + to_string(q);
          }
        }
    std::ostringstream d;
    d << identities.size() << " identities x 200 instantiations x " << traces.size()
      << " traces = " << checks << " checks, " << failed << " failures";
    if (failed) d << "; e.g. " << example;
    report(4, failed == 0, "semantic identities", d.str());
  }

  // Criterion 5.
  {
    std::vector<std::string> problems;
    if (!sat(eps, parse("!a"))) problems.push_back("sat(eps, !a)");
    if (sat(eps, parse("a"))) problems.push_back("sat(eps, a)");
    for (const auto& pi : traces)
      if (sat(pi, parse("X true")) == pi.empty()) problems.push_back("X true on " + format_trace(pi));
    if (is_satisfiable(parse("G a"))) problems.push_back("G a satisfiable");
    Nfa fna = merge_edges(build(parse("F !a"), {AnfMode::Relaxed, kAB, {}}));
    for (const auto& pi : traces)
      if (!run(fna, pi)) problems.push_back("F !a rejects " + format_trace(pi));
    if (eps_mismatch) problems.push_back("epsilon_sat differs on " + eps_example);
    std::ostringstream d;
    d << "fixed cases plus epsilon_sat on " << formulas.size() << " formulas, "
      << eps_mismatch << " epsilon_sat mismatches";
    if (!problems.empty()) d << "; " << problems.size() << " problems, e.g. " << problems.front();
    report(5, problems.empty(), "empty-trace semantics", d.str());
  }

  // Criterion 6.
  {
    RandomFormulaGenerator gen(6, kAB, GeneratorProfile::ltlf_core());
    std::size_t failed = 0;
    std::string example;
    for (int i = 0; i < 500; ++i) {
      Formula f = gen.generate(1 + gen.uniform(12));
      Formula t = translate_ltlf(f);
      if (sat(eps, t)) {
        ++failed;
        example = "eps |= T(" + to_string(f) + ")";
      }
      for (const auto& pi : traces) {
        bool expected = ref::holds_ltlf(pi, f);
        if (sat(pi, t) != expected || sat_ltlf(pi, f) != expected) {
          ++failed;
          example = to_string(f) + " on " + format_trace(pi);
        }
      }
    }
    Nfa nx = merge_edges(build(parse("!(X true)"), {AnfMode::Relaxed, kAB, {}}));
    std::size_t accepted = 0;
    bool only_eps = true;
    for (const auto& pi : traces)
      if (run(nx, pi)) {
        ++accepted;
        only_eps = only_eps && pi.empty();
      }
    std::ostringstream d;
    d << "500 LTL_f formulas, " << failed << " failures; !(X true) accepts " << accepted
      << " of " << traces.size() << " traces";
    if (failed) d << "; e.g. " << example;
    report(6, failed == 0 && accepted == 1 && only_eps, "LTL_f encoding", d.str());
  }

  // Criterion 7.
  {
    std::vector<Formula> corpus;
    std::string source = "generated";
    std::ifstream shipped(FLTL_CORPUS_FILE);
    if (shipped) {
      corpus = read_corpus(shipped);
      source = "shipped";
    }
    bool corpus_ok = corpus == generate_corpus(kCorpusSeed);
    std::size_t lo = 1000, hi = 0;
    for (const auto& f : corpus) {
      lo = std::min(lo, size(f));
      hi = std::max(hi, size(f));
    }
    BenchOptions options;
    options.timeout_s = 60.0;
    auto first = bench(corpus, options);
    auto second = bench(corpus, options);
    std::size_t timed_out = 0, under5 = 0, bound_violations = 0, differing = 0;
    double worst = 0.0, total = 0.0;
    for (std::size_t i = 0; i < first.size(); ++i) {
      const auto& r = first[i];
      if (r.timed_out) ++timed_out;
      if (!r.timed_out && r.time_s < 5.0) ++under5;
      if (!r.timed_out && r.size < 63 && r.states > (std::size_t{1} << r.size)) ++bound_violations;
      if (r.states != second[i].states || r.edges != second[i].edges ||
          r.timed_out != second[i].timed_out)
        ++differing;
      worst = std::max(worst, r.time_s);
      total += r.time_s;
    }
    std::ostringstream a, b;
    write_csv(a, first);
    write_csv(b, second);
    auto counts_only = [](const std::string& csv) {
      std::istringstream in(csv);
      std::string out, line;
      while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
      return out;
    };
    bool reproducible = differing == 0 && counts_only(a.str()) == counts_only(b.str());
    bool ok = corpus_ok && corpus.size() == 184 && timed_out == 0 &&
              under5 * 10 >= corpus.size() * 9 && bound_violations == 0 && reproducible;
    std::ostringstream d;
    d << source << " corpus of " << corpus.size() << " (sizes " << lo << "-" << hi
      << (corpus_ok ? "" : ", differs from seed") << "), " << timed_out << " timeouts, "
      << under5 << " under 5 s, worst " << std::fixed << std::setprecision(3) << worst
      << " s, total " << total << " s, " << (reproducible ? "reproducible" : "NOT reproducible");
    report(7, ok, "benchmark performance", d.str());
  }

  {
    std::ostringstream d;
    d << formulas.size() << " formulas x " << traces.size() << " traces, " << mode_mismatch
      << " mismatches";
    if (mode_mismatch) d << "; e.g. " << mode_example;
    report(8, mode_mismatch == 0, "strict and relaxed builds agree", d.str());
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
