#pragma once

// Propositional guard algebra: truth tables, rule-based simplification and
// exact two-level minimization for small guards.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fltl/formula.hpp"
#include "fltl/pnf.hpp"

namespace fltl::guard {

/// Guards mentioning at most this many atoms are minimized exactly.
inline constexpr std::size_t kExactMinimizeLimit = 6;
/// Guards mentioning more atoms than this are never enumerated.
inline constexpr std::size_t kTruthTableLimit = 20;

/// Row r assigns vars[i] = bit i of r.
struct TruthTable {
  std::vector<std::string> vars;
  std::vector<bool> rows;

  bool tautology() const {
    return std::all_of(rows.begin(), rows.end(), [](bool b) { return b; });
  }
  bool contradiction() const {
    return std::none_of(rows.begin(), rows.end(), [](bool b) { return b; });
  }
};

namespace detail {

inline bool eval_row(const Formula& g, const std::vector<std::string>& vars,
                     std::uint64_t row) {
  switch (g.kind()) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom: {
      auto it = std::lower_bound(vars.begin(), vars.end(), g.name());
      if (it == vars.end() || *it != g.name()) return false;
      return (row >> (it - vars.begin())) & 1U;
    }
    case Kind::Not:
      return !eval_row(g.operand(), vars, row);
    case Kind::And:
      return eval_row(g.lhs(), vars, row) && eval_row(g.rhs(), vars, row);
    case Kind::Or:
      return eval_row(g.lhs(), vars, row) || eval_row(g.rhs(), vars, row);
    default:
      throw std::invalid_argument("guard is not propositional");
  }
}

inline void flatten(const Formula& f, Kind k, std::vector<Formula>& out) {
  if (f.kind() == k) {
    flatten(f.lhs(), k, out);
    flatten(f.rhs(), k, out);
  } else {
    out.push_back(f);
  }
}

inline Formula complement(const Formula& literal) {
  if (literal.kind() == Kind::Not) return literal.operand();
  return neg(literal);
}

inline Formula rebuild(const std::vector<Formula>& items, Kind k) {
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i)
    acc = k == Kind::And ? conj(acc, items[i]) : disj(acc, items[i]);
  return acc;
}

inline Formula simplify_pnf(const Formula& g) {
  if (g.kind() != Kind::And && g.kind() != Kind::Or) return g;
  const Kind k = g.kind();
  const Kind dual = k == Kind::And ? Kind::Or : Kind::And;
  const Kind identity = k == Kind::And ? Kind::True : Kind::False;
  const Kind absorbing = k == Kind::And ? Kind::False : Kind::True;
  auto absorbing_formula = [&] { return absorbing == Kind::True ? tt() : ff(); };

  std::vector<Formula> raw;
  flatten(g, k, raw);
  std::vector<Formula> items;
  for (const auto& r : raw) {
    Formula s = simplify_pnf(r);
    if (s.kind() == k)
      flatten(s, k, items);
    else
      items.push_back(s);
  }
  std::erase_if(items, [&](const Formula& f) { return f.kind() == identity; });
  for (const auto& f : items)
    if (f.kind() == absorbing) return absorbing_formula();
  items = make_set(std::move(items));
  for (const auto& f : items)
    if (f.is_literal() && !f.is_constant() &&
        set_contains(items, complement(f)))
      return absorbing_formula();

  // Absorption: x & (x | y) = x and x | (x & y) = x.
  std::vector<FormulaSet> parts;
  parts.reserve(items.size());
  for (const auto& f : items) {
    std::vector<Formula> p;
    flatten(f, dual, p);
    parts.push_back(make_set(std::move(p)));
  }
  std::vector<Formula> kept;
  for (std::size_t j = 0; j < items.size(); ++j) {
    bool absorbed = false;
    for (std::size_t i = 0; i < items.size() && !absorbed; ++i) {
      if (i == j) continue;
      if (set_includes(parts[j], parts[i]) &&
          (parts[i].size() < parts[j].size() || i < j))
        absorbed = true;
    }
    if (!absorbed) kept.push_back(items[j]);
  }
  if (kept.empty()) return identity == Kind::True ? tt() : ff();
  return rebuild(kept, k);
}

struct Cube {
  std::uint32_t care = 0;
  std::uint32_t value = 0;

  bool covers(std::uint32_t minterm) const {
    return (minterm & care) == value;
  }
  int literals() const { return std::popcount(care); }
  auto operator<=>(const Cube&) const = default;
};

inline bool is_implicant(const Cube& c, const std::vector<bool>& onset) {
  for (std::uint32_t m = 0; m < onset.size(); ++m)
    if (c.covers(m) && !onset[m]) return false;
  return true;
}

inline std::vector<Cube> prime_implicants(const std::vector<bool>& onset,
                                          std::size_t nvars) {
  std::vector<Cube> primes;
  const std::uint32_t full = (std::uint32_t{1} << nvars) - 1;
  // Enumerate every cube by its care mask and a value inside that mask.
  for (std::uint32_t care = 0; care <= full; ++care) {
    for (std::uint32_t value = care;; value = (value - 1) & care) {
      Cube c{care, value};
      if (is_implicant(c, onset)) {
        bool prime = true;
        for (std::size_t v = 0; v < nvars && prime; ++v) {
          std::uint32_t bit = std::uint32_t{1} << v;
          if (!(care & bit)) continue;
          if (is_implicant(Cube{care & ~bit, value & ~bit}, onset))
            prime = false;
        }
        if (prime) primes.push_back(c);
      }
      if (value == 0) break;
    }
  }
  std::sort(primes.begin(), primes.end(), [](const Cube& a, const Cube& b) {
    if (a.literals() != b.literals()) return a.literals() < b.literals();
    return a < b;
  });
  return primes;
}

// Exact minimum cover by branch and bound over the uncovered minterm with
// the fewest candidate primes.  Cost is (cube count, literal count).
class CoverSearch {
 public:
  CoverSearch(std::vector<Cube> primes, std::vector<std::uint32_t> minterms)
      : primes_(std::move(primes)), minterms_(std::move(minterms)) {}

  std::vector<std::size_t> solve() {
    std::vector<std::size_t> chosen;
    search(chosen);
    if (best_.empty() && !minterms_.empty()) return greedy();
    return best_;
  }

 private:
  using Cost = std::pair<std::size_t, int>;

  Cost cost(const std::vector<std::size_t>& pick) const {
    int lits = 0;
    for (auto i : pick) lits += primes_[i].literals();
    return {pick.size(), lits};
  }

  void search(std::vector<std::size_t>& chosen) {
    if (++steps_ > kBudget) return;
    if (!best_.empty() && chosen.size() >= best_.size() &&
        cost(chosen) >= best_cost_)
      return;
    // Pick the uncovered minterm with the fewest covering primes.
    std::size_t best_m = minterms_.size();
    std::size_t fewest = primes_.size() + 1;
    for (std::size_t mi = 0; mi < minterms_.size(); ++mi) {
      std::uint32_t m = minterms_[mi];
      bool covered = std::any_of(chosen.begin(), chosen.end(),
                                 [&](std::size_t p) { return primes_[p].covers(m); });
      if (covered) continue;
      std::size_t n = 0;
      for (const auto& p : primes_) n += p.covers(m) ? 1 : 0;
      if (n < fewest) {
        fewest = n;
        best_m = mi;
      }
    }
    if (best_m == minterms_.size()) {
      Cost c = cost(chosen);
      if (best_.empty() || c < best_cost_) {
        best_ = chosen;
        best_cost_ = c;
      }
      return;
    }
    for (std::size_t p = 0; p < primes_.size(); ++p) {
      if (!primes_[p].covers(minterms_[best_m])) continue;
      chosen.push_back(p);
      search(chosen);
      chosen.pop_back();
    }
  }

  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> pick;
    std::vector<bool> covered(minterms_.size(), false);
    while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
      std::size_t best = 0, gain_best = 0;
      for (std::size_t p = 0; p < primes_.size(); ++p) {
        std::size_t gain = 0;
        for (std::size_t mi = 0; mi < minterms_.size(); ++mi)
          if (!covered[mi] && primes_[p].covers(minterms_[mi])) ++gain;
        if (gain > gain_best) {
          gain_best = gain;
          best = p;
        }
      }
      pick.push_back(best);
      for (std::size_t mi = 0; mi < minterms_.size(); ++mi)
        if (primes_[best].covers(minterms_[mi])) covered[mi] = true;
    }
    return pick;
  }

  static constexpr std::size_t kBudget = 200000;
  std::vector<Cube> primes_;
  std::vector<std::uint32_t> minterms_;
  std::vector<std::size_t> best_;
  Cost best_cost_{0, 0};
  std::size_t steps_ = 0;
};

}  // namespace detail

inline TruthTable truth_table(const Formula& g, std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > kTruthTableLimit)
    throw std::invalid_argument("too many atoms for a truth table");
  TruthTable t;
  t.rows.resize(std::size_t{1} << vars.size());
  for (std::uint64_t r = 0; r < t.rows.size(); ++r)
    t.rows[r] = detail::eval_row(g, vars, r);
  t.vars = std::move(vars);
  return t;
}

inline TruthTable truth_table(const Formula& g) {
  return truth_table(g, atoms_of(g));
}

/// Exact satisfiability when the guard mentions few enough atoms; beyond
/// that, only guards that fold to `false` are reported unsatisfiable.
inline bool satisfiable(const Formula& g) {
  auto vars = atoms_of(g);
  if (vars.size() > kTruthTableLimit)
    return detail::simplify_pnf(to_pnf(g)).kind() != Kind::False;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << vars.size()); ++r)
    if (detail::eval_row(g, vars, r)) return true;
  return false;
}

/// g1 ==_p g2, by truth table over the union of their atoms.
inline bool equivalent(const Formula& g1, const Formula& g2) {
  auto vars = atoms_of(g1);
  auto more = atoms_of(g2);
  vars.insert(vars.end(), more.begin(), more.end());
  auto t1 = truth_table(g1, vars);
  auto t2 = truth_table(g2, vars);
  return t1.rows == t2.rows;
}

/// Negation normal form, flattening, constant folding, idempotence,
/// complementary literals and absorption.
inline Formula simplify_rules(const Formula& g) {
  if (!g.is_propositional())
    throw std::invalid_argument("guard is not propositional");
  return detail::simplify_pnf(to_pnf(g));
}

/// Irredundant sum of products for the table.  Cubes are ordered by size,
/// then by their variable masks; literals follow variable order.
inline Formula minimize(const TruthTable& table) {
  if (table.vars.size() > kExactMinimizeLimit)
    throw std::invalid_argument("too many atoms for exact minimization");
  if (table.contradiction()) return ff();
  if (table.tautology()) return tt();
  auto primes = detail::prime_implicants(table.rows, table.vars.size());
  std::vector<std::uint32_t> minterms;
  for (std::uint32_t m = 0; m < table.rows.size(); ++m)
    if (table.rows[m]) minterms.push_back(m);
  auto pick = detail::CoverSearch(primes, minterms).solve();
  std::vector<detail::Cube> cubes;
  for (auto i : pick) cubes.push_back(primes[i]);
  std::sort(cubes.begin(), cubes.end(),
            [](const detail::Cube& a, const detail::Cube& b) {
              if (a.literals() != b.literals()) return a.literals() < b.literals();
              return a < b;
            });
  std::vector<Formula> terms;
  for (const auto& c : cubes) {
    std::vector<Formula> lits;
    for (std::size_t v = 0; v < table.vars.size(); ++v) {
      std::uint32_t bit = std::uint32_t{1} << v;
      if (!(c.care & bit)) continue;
      Formula a = atom(table.vars[v]);
      lits.push_back((c.value & bit) ? a : neg(a));
    }
    terms.push_back(detail::rebuild(lits, Kind::And));
  }
  return detail::rebuild(terms, Kind::Or);
}

/// Canonical minimization for small guards, rule-based otherwise.
inline Formula simplify(const Formula& g) {
  if (!g.is_propositional())
    throw std::invalid_argument("guard is not propositional");
  auto vars = atoms_of(g);
  if (vars.size() <= kExactMinimizeLimit) return minimize(truth_table(g, vars));
  return simplify_rules(g);
}

}  // namespace fltl::guard
