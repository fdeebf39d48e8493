#pragma once

// Formula generators: exhaustive enumeration in a canonical order and
// seeded random generation.  Both are reproducible across runs and
// platforms (no std distributions are involved).

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fltl/formula.hpp"

namespace fltl {

/// Every formula with at most max_nodes AST nodes over `atoms`, using
/// true, false and all primitive operators.  Ordered by node count, then
/// leaves < ! < X < W < & < | < U < R, then operands.  Stops after `cap`.
inline std::vector<Formula> enumerate_formulas(
    const std::vector<std::string>& atoms, std::size_t max_nodes,
    std::size_t cap) {
  std::vector<Formula> out;
  std::vector<std::vector<Formula>> by_nodes(max_nodes + 1);
  auto emit = [&](std::size_t n, Formula f) {
    by_nodes[n].push_back(f);
    if (out.size() < cap) out.push_back(std::move(f));
  };
  for (std::size_t n = 1; n <= max_nodes && out.size() < cap; ++n) {
    if (n == 1) {
      for (const auto& a : atoms) emit(1, atom(a));
      emit(1, tt());
      emit(1, ff());
      continue;
    }
    for (Kind k : {Kind::Not, Kind::Next, Kind::WeakNext})
      for (const auto& sub : by_nodes[n - 1])
        emit(n, Formula::make_unary(k, sub));
    for (Kind k : {Kind::And, Kind::Or, Kind::Until, Kind::Release})
      for (std::size_t left = 1; left + 1 < n; ++left)
        for (const auto& l : by_nodes[left])
          for (const auto& r : by_nodes[n - 1 - left])
            emit(n, Formula::make_binary(k, l, r));
  }
  return out;
}

/// Operator mix for random generation.
struct GeneratorProfile {
  bool constants = true;
  bool falsity = true;  // with constants: false as well as true
  bool negation = true;
  bool next = true;
  bool weak_next = true;
  bool eventually_always = false;  // F and G, desugared
  bool conjunction = true;
  bool disjunction = true;
  bool until = true;
  bool release = true;
  bool implication = false;

  /// Primitive extended operators only.
  static GeneratorProfile extended() { return {}; }

  /// !, &, X, U over atoms and true.
  static GeneratorProfile ltlf_core() {
    GeneratorProfile p;
    p.falsity = false;
    p.weak_next = false;
    p.disjunction = false;
    p.release = false;
    return p;
  }

  /// Mix resembling hand-written specifications.
  static GeneratorProfile specification() {
    GeneratorProfile p;
    p.constants = false;
    p.eventually_always = true;
    p.implication = true;
    return p;
  }
};

class RandomFormulaGenerator {
 public:
  RandomFormulaGenerator(std::uint64_t seed, std::vector<std::string> atoms,
                         GeneratorProfile profile = GeneratorProfile::extended())
      : rng_(seed), atoms_(std::move(atoms)), profile_(profile) {
    if (atoms_.empty()) profile_.constants = true;
    if (profile_.negation) unary_.push_back(Op::Not);
    if (profile_.next) unary_.push_back(Op::Next);
    if (profile_.weak_next) unary_.push_back(Op::WeakNext);
    if (profile_.eventually_always) {
      unary_.push_back(Op::Eventually);
      unary_.push_back(Op::Always);
    }
    if (profile_.conjunction) binary_.push_back(Op::And);
    if (profile_.disjunction) binary_.push_back(Op::Or);
    if (profile_.until) binary_.push_back(Op::Until);
    if (profile_.release) binary_.push_back(Op::Release);
    if (profile_.implication) binary_.push_back(Op::Implies);
  }

  std::size_t uniform(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  /// A random formula built from exactly `ops` generator steps (leaves and
  /// operators; F, G and -> count as one step each).
  Formula generate(std::size_t ops) {
    if (ops <= 1 || (unary_.empty() && (binary_.empty() || ops < 3)))
      return leaf();
    bool can_binary = !binary_.empty() && ops >= 3;
    bool use_unary = unary_.empty() ? false
                     : !can_binary   ? true
                                     : uniform(3) == 0;
    if (use_unary) {
      Formula sub = generate(ops - 1);
      switch (unary_[uniform(unary_.size())]) {
        case Op::Not:
          return neg(sub);
        case Op::Next:
          return next(sub);
        case Op::WeakNext:
          return wnext(sub);
        case Op::Eventually:
          return eventually(sub);
        default:
          return always(sub);
      }
    }
    std::size_t left = 1 + uniform(ops - 2);
    Formula l = generate(left);
    Formula r = generate(ops - 1 - left);
    switch (binary_[uniform(binary_.size())]) {
      case Op::And:
        return conj(l, r);
      case Op::Or:
        return disj(l, r);
      case Op::Until:
        return until(l, r);
      case Op::Release:
        return release(l, r);
      default:
        return implies(l, r);
    }
  }

 private:
  enum class Op { Not, Next, WeakNext, Eventually, Always, And, Or, Until, Release, Implies };

  Formula leaf() {
    std::size_t choices =
        atoms_.size() + (profile_.constants ? (profile_.falsity ? 2 : 1) : 0);
    std::size_t pick = uniform(choices);
    if (pick < atoms_.size()) return atom(atoms_[pick]);
    return pick == atoms_.size() ? tt() : ff();
  }

  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
  GeneratorProfile profile_;
  std::vector<Op> unary_;
  std::vector<Op> binary_;
};

/// Benchmark corpus: `base` formulas over four propositions whose sizes
/// climb evenly from 1 to 27, followed by their negations.
inline std::vector<Formula> generate_corpus(std::uint64_t seed,
                                            std::size_t base = 92) {
  RandomFormulaGenerator gen(seed, {"a", "b", "c", "d"},
                             GeneratorProfile::specification());
  std::vector<Formula> formulas;
  formulas.reserve(2 * base);
  for (std::size_t i = 0; i < base; ++i) {
    std::size_t target = base > 1 ? 1 + (i * 26) / (base - 1) : 1;
    Formula best = gen.generate(target);
    std::size_t best_gap = 1000;
    for (int attempt = 0; attempt < 2000; ++attempt) {
      Formula f = gen.generate(1 + gen.uniform(target));
      std::size_t s = size(f);
      std::size_t gap = s > target ? s - target : target - s;
      if (gap < best_gap) {
        best = f;
        best_gap = gap;
      }
      if (gap == 0) break;
    }
    formulas.push_back(best);
  }
  for (std::size_t i = 0; i < base; ++i) formulas.push_back(neg(formulas[i]));
  return formulas;
}

}  // namespace fltl
