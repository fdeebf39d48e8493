#pragma once

// Command-line front end.  Kept in a header so tests can drive it
// in-process with string streams.
//
// Exit status: 0 success, 1 parse or usage error, 2 oracle mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fltl/fltl.hpp"

namespace fltl::cli {

namespace detail {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First non-blank, non-comment line of a formula file.
inline std::string formula_from_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return line;
  }
  throw usage_error("no formula in '" + path + "'");
}

struct Output {
  std::ostream& stdout_stream;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      stdout_stream << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot write '" + path + "'");
    f << text;
  }
};

inline std::string set_text(const FormulaSet& q) {
  std::string out = "{";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ", ";
    out += to_string(q[i]);
  }
  return out + "}";
}

inline const char* next_text(NextOp op) { return op == NextOp::Strong ? "X" : "W"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Finite LTL to NFA compiler", "fltl"};
  app.require_subcommand(1, 1);

  std::vector<std::string> positional;
  std::string formula_file;
  std::string out_path;
  std::string mode = "relaxed";

  auto add_formula = [&](CLI::App* cmd) {
    cmd->add_option("--file,-f", formula_file, "Read the formula from a file");
  };

  auto* compile = app.add_subcommand("compile", "Build the automaton of a formula");
  std::string format = "dot";
  bool prune = false;
  compile->add_option("formula", positional, "Formula text");
  add_formula(compile);
  compile->add_option("--mode", mode, "ANF flavour")->check(CLI::IsMember({"relaxed", "strict"}));
  compile->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}));
  compile->add_flag("--prune", prune, "Drop states that cannot reach acceptance");
  compile->add_option("--out,-o", out_path, "Output file");

  auto* check = app.add_subcommand("check", "Run traces through the automaton");
  bool oracle = false;
  check->add_option("args", positional, "[FORMULA] TRACE_FILE")->required();
  add_formula(check);
  check->add_option("--mode", mode, "ANF flavour")->check(CLI::IsMember({"relaxed", "strict"}));
  check->add_flag("--oracle", oracle, "Also evaluate the formula semantically");

  auto* sat_cmd = app.add_subcommand("sat", "Satisfiability with a shortest witness");
  sat_cmd->add_option("formula", positional, "Formula text");
  add_formula(sat_cmd);

  auto* translate = app.add_subcommand("translate-ltlf", "Print the Finite LTL encoding of an LTL_f formula");
  translate->alias("translate_ltlf");
  translate->add_option("formula", positional, "Formula text");
  add_formula(translate);

  auto* anf_cmd = app.add_subcommand("anf", "Print the automaton normal form");
  anf_cmd->add_option("formula", positional, "Formula text");
  add_formula(anf_cmd);
  std::string anf_mode = "strict";
  anf_cmd->add_option("--mode", anf_mode, "ANF flavour")->check(CLI::IsMember({"relaxed", "strict"}));

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark automaton construction");
  std::string corpus;
  std::optional<std::uint64_t> seed;
  double timeout = 60.0;
  std::string edges = "merged";
  unsigned jobs = 1;
  auto* corpus_opt = bench_cmd->add_option("--corpus", corpus, "File with one formula per line");
  auto* seed_opt = bench_cmd->add_option("--generate", seed, "Generate the corpus from a seed");
  corpus_opt->excludes(seed_opt);
  bench_cmd->add_option("--timeout", timeout, "Per-formula timeout in seconds")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--edges", edges, "Edge count reported")->check(CLI::IsMember({"merged", "clauses", "concrete"}));
  bench_cmd->add_option("--jobs,-j", jobs, "Parallel builds")->check(CLI::Range(1U, 256U));
  bench_cmd->add_option("--mode", mode, "ANF flavour")->check(CLI::IsMember({"relaxed", "strict"}));
  bench_cmd->add_option("--out,-o", out_path, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    auto formula_text = [&]() -> std::string {
      if (!formula_file.empty()) {
        if (!positional.empty())
          throw detail::usage_error("give the formula inline or with --file, not both");
        return detail::formula_from_file(formula_file);
      }
      if (positional.size() != 1) throw detail::usage_error("expected one formula");
      return positional.front();
    };
    const AnfMode anf_flavour = mode == "strict" ? AnfMode::Strict : AnfMode::Relaxed;

    if (compile->parsed()) {
      BuildOptions options;
      options.mode = anf_flavour;
      Nfa nfa = merge_edges(build(parse(formula_text()), options));
      if (prune) nfa = prune_dead(nfa);
      std::string text = format == "json" ? to_json(nfa).dump(2) + "\n" : to_dot(nfa);
      detail::Output{out, out_path}.write(text);
      return 0;
    }

    if (check->parsed()) {
      std::string trace_path;
      if (!formula_file.empty()) {
        if (positional.size() != 1) throw detail::usage_error("expected TRACE_FILE");
        trace_path = positional[0];
      } else {
        if (positional.size() != 2) throw detail::usage_error("expected FORMULA TRACE_FILE");
        trace_path = positional[1];
      }
      positional.resize(formula_file.empty() ? 1 : 0);
      Formula f = parse(formula_text());
      std::istringstream in(detail::read_file(trace_path));
      auto traces = read_traces(in);
      BuildOptions options;
      options.mode = anf_flavour;
      options.alphabet = atoms_of(traces);
      for (const auto& a : atoms_of(f)) options.alphabet.push_back(a);
      Nfa nfa = merge_edges(build(f, options));
      int status = 0;
      for (const auto& pi : traces) {
        bool accepted = fltl::run(nfa, pi);
        out << (accepted ? "ACCEPT" : "REJECT");
        if (oracle) {
          bool expected = sat(pi, f);
          out << " oracle=" << (expected ? "ACCEPT" : "REJECT");
          if (expected != accepted) {
            out << " MISMATCH";
            status = 2;
          }
        }
        out << '\n';
      }
      return status;
    }

    if (sat_cmd->parsed()) {
      auto w = is_satisfiable(parse(formula_text()));
      if (w)
        out << "SAT\n" << format_trace(w->trace) << '\n';
      else
        out << "UNSAT\n";
      return 0;
    }

    if (translate->parsed()) {
      out << to_string(translate_ltlf(parse(formula_text()))) << '\n';
      return 0;
    }

    if (anf_cmd->parsed()) {
      Formula f = parse(formula_text());
      if (anf_mode == "strict") {
        for (const auto& c : anf(f).clauses) {
          out << '{';
          for (std::size_t i = 0; i < c.lits.size(); ++i) {
            if (i) out << ", ";
            out << to_string(c.lits[i].to_formula());
          }
          out << "} | " << detail::next_text(c.next_op) << " | "
              << detail::set_text(c.nf) << '\n';
        }
      } else {
        for (const auto& c : anf_relaxed(f))
          out << '(' << to_string(c.guard) << ") | " << detail::next_text(c.next_op)
              << " | " << detail::set_text(c.nf) << '\n';
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::vector<Formula> formulas;
      if (seed) {
        formulas = generate_corpus(*seed);
      } else if (!corpus.empty()) {
        std::istringstream in(detail::read_file(corpus));
        formulas = read_corpus(in);
      } else {
        throw detail::usage_error("bench needs --corpus FILE or --generate SEED");
      }
      BenchOptions options;
      options.mode = anf_flavour;
      options.timeout_s = timeout;
      options.jobs = jobs;
      options.edge_count = edges == "clauses"    ? EdgeCount::Clauses
                           : edges == "concrete" ? EdgeCount::Concrete
                                                 : EdgeCount::Merged;
      std::ostringstream csv;
      write_csv(csv, bench(formulas, options));
      detail::Output{out, out_path}.write(csv.str());
      return 0;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const detail::usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace fltl::cli
