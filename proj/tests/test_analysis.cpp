#include <gtest/gtest.h>

#include "fltl/fltl.hpp"
#include "reference.hpp"

using namespace fltl;

TEST(Run, Examples) {
  EXPECT_TRUE(run(build(parse("a U b")), parse_trace("a; a; b")));
  Nfa nx = build(parse("!(X true)"), {AnfMode::Relaxed, {"a"}, {}});
  EXPECT_TRUE(run(nx, Trace{}));
  EXPECT_FALSE(run(nx, parse_trace("a")));
  Nfa ga = build(parse("G a"));
  for (const auto& pi : ref::traces({"a"}, 4)) EXPECT_FALSE(run(ga, pi));
}

TEST(Run, RejectsForeignPropositions) {
  Nfa nfa = build(parse("a U b"));
  EXPECT_THROW(run(nfa, parse_trace("c")), alphabet_error);
}

TEST(Witness, Examples) {
  auto fa = is_satisfiable(parse("F a"));
  ASSERT_TRUE(fa);
  EXPECT_EQ(format_trace(fa->trace), "a");
  auto fna = is_satisfiable(parse("F !a"));
  ASSERT_TRUE(fna);
  EXPECT_TRUE(fna->trace.empty());
  EXPECT_FALSE(is_satisfiable(parse("G a")));
}

TEST(Witness, ShortestLengthMatchesOracle) {
  auto traces = ref::traces({"a", "b"}, 3);
  for (const auto& f : enumerate_formulas({"a", "b"}, 5, 20000)) {
    auto w = is_satisfiable(f);
    std::optional<std::size_t> shortest;
    for (const auto& pi : traces)
      if (ref::holds(pi, f)) {
        shortest = pi.size();
        break;
      }
    if (w) {
      ASSERT_TRUE(ref::holds(w->trace, f)) << to_string(f);
      ASSERT_EQ(w->states_visited.size(), w->trace.size() + 1);
      if (shortest) {
        ASSERT_EQ(w->trace.size(), *shortest) << to_string(f);
      }
    } else {
      ASSERT_FALSE(shortest) << to_string(f);
    }
  }
}

TEST(Witness, PathIsAcceptingRun) {
  RandomFormulaGenerator gen(23, {"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.generate(1 + gen.uniform(14));
    Nfa nfa = merge_edges(build(f));
    auto w = find_witness(nfa);
    if (!w) {
      for (const auto& pi : ref::traces(atoms_of(f), std::min<std::size_t>(size(f) + 1, 3)))
        ASSERT_FALSE(ref::holds(pi, f)) << to_string(f);
      continue;
    }
    ASSERT_TRUE(run(nfa, w->trace));
    ASSERT_TRUE(ref::holds(w->trace, f)) << to_string(f);
    EXPECT_EQ(w->states_visited.front(), nfa.initial);
    EXPECT_TRUE(nfa.state(w->states_visited.back()).accepting);
    for (std::size_t k = 0; k < w->trace.size(); ++k) {
      bool stepped = false;
      for (const auto& e : nfa.edges)
        stepped = stepped || (e.from == w->states_visited[k] && e.to == w->states_visited[k + 1] &&
                              sat_prop(w->trace[k], e.guard));
      EXPECT_TRUE(stepped);
    }
  }
}

TEST(Witness, SymbolsAreSmallestModels) {
  auto w = is_satisfiable(parse("X (b | a)"));
  ASSERT_TRUE(w);
  EXPECT_EQ(format_trace(w->trace), "; a");
  auto both = is_satisfiable(parse("a & b"));
  ASSERT_TRUE(both);
  EXPECT_EQ(format_trace(both->trace), "a b");
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(parse("X true & a"), parse("a"), 3));
  EXPECT_TRUE(equivalent(parse("W false"), parse("!(X true)"), 3));
  EXPECT_FALSE(equivalent(parse("a"), parse("b"), 1));
  EXPECT_THROW(equivalent(parse("a & b & c"), parse("d & e"), 1), alphabet_error);
}

TEST(Equivalent, ReflexiveAndSymmetric) {
  auto fs = enumerate_formulas({"a", "b"}, 3, 20000);
  for (std::size_t i = 0; i < fs.size(); i += 3)
    for (std::size_t j = 0; j < fs.size(); j += 5) {
      EXPECT_TRUE(equivalent(fs[i], fs[i], 2));
      EXPECT_EQ(equivalent(fs[i], fs[j], 2), equivalent(fs[j], fs[i], 2));
    }
}
