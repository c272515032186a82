// Command-line front end. Lives in a header so tests can drive it in-process.
//
//   solve   --rule R --algo {dp|bruteforce|fptas|fpt-scaled} [--epsilon P/Q] --input FILE [--json]
//   axioms  --rule R --axiom {all|NAME} [--input FILE] [--trials N --seed S ...] [--json]
//   gen     --out FILE --seed S [generator flags]
//   reduce  --from approval --objective {cost|distance} --input FILE [--out FILE] [--json]
//
// Exit status: 0 success, 1 solver error, 2 input error.

#ifndef MDPB_CLI_HPP
#define MDPB_CLI_HPP

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdpb/approx.hpp"
#include "mdpb/axioms.hpp"
#include "mdpb/exact.hpp"
#include "mdpb/generator.hpp"
#include "mdpb/io.hpp"
#include "mdpb/reductions.hpp"

namespace mdpb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitInputError = 2;

/// Parses "P/Q" (or a bare integer P) into a fraction.
inline Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [&](const std::string& part) -> std::int64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 18) {
      throw Error(ErrorCode::kInvalidEpsilon, "\"" + text + "\" is not a fraction P/Q");
    }
    return std::stoll(part);
  };
  Fraction f{number(text.substr(0, slash)), slash == std::string::npos ? 1 : number(text.substr(slash + 1))};
  if (f.den == 0) throw Error(ErrorCode::kInvalidEpsilon, "zero denominator in \"" + text + "\"");
  return f;
}

namespace detail {

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSearchSpaceTooLarge:
    case ErrorCode::kTableTooLarge:
    case ErrorCode::kAllCostsZero:
    case ErrorCode::kDegenerateVarianceCoefficient:
      return kExitSolverError;
    default:
      return kExitInputError;
  }
}

struct GeneratorFlags {
  GeneratorConfig config;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--min-projects", config.min_projects, "Fewest projects per instance");
    cmd->add_option("--max-projects", config.max_projects, "Most projects per instance");
    cmd->add_option("--max-degrees", config.max_degrees, "Most nonzero degrees per project");
    cmd->add_option("--min-voters", config.min_voters, "Fewest voters per instance");
    cmd->add_option("--max-voters", config.max_voters, "Most voters per instance");
    cmd->add_option("--max-cost", config.max_cost, "Largest permissible cost");
    cmd->add_option("--min-budget", config.min_budget, "Smallest budget");
    cmd->add_option("--max-budget", config.max_budget, "Largest budget");
  }

  Json to_json() const {
    return Json{{"min_projects", config.min_projects}, {"max_projects", config.max_projects},
                {"max_degrees", config.max_degrees},   {"min_voters", config.min_voters},
                {"max_voters", config.max_voters},     {"max_cost", config.max_cost},
                {"min_budget", config.min_budget},     {"max_budget", config.max_budget}};
  }
};

inline void write_text(const std::string& path, const std::string& body, std::ostream& out) {
  if (path == "-") {
    out << body << "\n";
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParseError, "cannot write " + path);
  file << body << "\n";
}

inline std::string describe_allocation(const Instance& inst, const Allocation& alloc) {
  std::string s;
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    if (!s.empty()) s += " ";
    s += inst.projects[j].name + "=" + std::to_string(chosen_cost(inst, alloc, j));
  }
  return s;
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Participatory budgeting with multi-degree projects"};
  app.require_subcommand(1);

  std::string rule_name;
  std::string algo = "dp";
  std::string epsilon_text;
  std::string input;
  std::string output;
  std::string axiom_name = "all";
  std::string from = "approval";
  std::string objective;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool as_json = false;
  detail::GeneratorFlags gen_flags;

  auto* solve = app.add_subcommand("solve", "Solve an instance under a rule");
  solve->add_option("--rule", rule_name, "cardinal | cost | capped | distance")->required();
  solve->add_option("--algo", algo, "dp | bruteforce | fptas | fpt-scaled");
  solve->add_option("--epsilon", epsilon_text, "Approximation parameter as P/Q");
  solve->add_option("--input", input, "Instance JSON file")->required();
  solve->add_flag("--json", as_json, "Emit a JSON report");

  auto* axioms = app.add_subcommand("axioms", "Check budgeting axioms");
  axioms->add_option("--rule", rule_name, "cardinal | cost | capped | distance")->required();
  axioms->add_option("--axiom", axiom_name, "all or one axiom name");
  axioms->add_option("--input", input, "Instance JSON file to check");
  axioms->add_option("--trials", trials, "Random instances to search");
  axioms->add_option("--seed", seed, "Search seed");
  axioms->add_flag("--json", as_json, "Emit a JSON report");
  gen_flags.add_to(axioms);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--out", output, "Output file, or - for stdout")->required();
  gen->add_option("--seed", seed, "Generator seed");
  gen_flags.add_to(gen);

  auto* reduce = app.add_subcommand("reduce", "Embed an approval instance");
  reduce->add_option("--from", from, "Source model (approval)");
  reduce->add_option("--objective", objective, "cost | distance")->required();
  reduce->add_option("--input", input, "Approval instance JSON file")->required();
  reduce->add_option("--out", output, "Write the instance document here");
  reduce->add_flag("--json", as_json, "Emit a JSON report");

  std::vector<std::string> storage{"mdpb"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    std::optional<RuleId> rule;
    if (!rule_name.empty()) {
      rule = parse_rule(rule_name);
      if (!rule) {
        err << "unknown rule \"" << rule_name << "\"\n";
        return kExitInputError;
      }
    }

    if (*solve) {
      const auto inst = parse_instance(read_file(input));
      SolveResult result;
      if (algo == "dp") {
        result = solve_exact(*rule, inst);
      } else if (algo == "bruteforce") {
        result = brute_force(*rule, inst).best;
      } else if (algo == "fpt-scaled") {
        result = solve_scaled(*rule, inst);
      } else if (algo == "fptas") {
        if (epsilon_text.empty()) {
          err << "--algo fptas requires --epsilon P/Q\n";
          return kExitInputError;
        }
        const auto eps = parse_fraction(epsilon_text);
        result = *rule == RuleId::kDistance ? approximate_distance(inst, eps) : fptas_max(*rule, inst, eps);
      } else {
        err << "unknown algorithm \"" << algo << "\"\n";
        return kExitInputError;
      }
      if (as_json) {
        Json inputs{{"rule", rule_name}, {"algo", algo}, {"input", input}};
        if (!epsilon_text.empty()) inputs["epsilon"] = epsilon_text;
        out << make_report("solve", inputs, "result", solve_result_to_json(inst, result)).dump(2) << "\n";
      } else {
        out << "rule " << rule_name << ", algorithm " << to_string(result.algorithm) << "\n"
            << "optimal value: " << result.optimal_value << "\n"
            << "allocation: " << detail::describe_allocation(inst, result.allocation) << "\n"
            << "table: " << result.table_stats.rows << " rows, " << result.table_stats.columns << " columns, "
            << result.table_stats.cells << " cells\n";
      }
      return kExitOk;
    }

    if (*axioms) {
      std::vector<AxiomId> selected;
      if (axiom_name == "all") {
        selected.assign(std::begin(kAllAxioms), std::end(kAllAxioms));
      } else if (auto a = parse_axiom(axiom_name)) {
        selected.push_back(*a);
      } else {
        err << "unknown axiom \"" << axiom_name << "\"\n";
        return kExitInputError;
      }
      if (input.empty() && trials == 0) {
        err << "axioms needs --input FILE or --trials N\n";
        return kExitInputError;
      }
      std::optional<Instance> inst;
      if (!input.empty()) inst = parse_instance(read_file(input));
      if (trials > 0) check_config(gen_flags.config);

      Json reports = Json::array();
      for (auto axiom : selected) {
        if (inst) {
          auto report = check_axiom(axiom, *rule, *inst);
          Json entry = to_json(report);
          entry["source"] = "input";
          reports.push_back(entry);
          if (!as_json) out << to_string(axiom) << " [" << rule_name << "] on input: "
                            << (report.violated() ? "Violated" : "Satisfied") << "\n";
        }
        if (trials > 0) {
          auto report = search_counterexamples(*rule, axiom, gen_flags.config, trials, seed);
          Json entry = to_json(report);
          entry["source"] = "search";
          reports.push_back(entry);
          if (!as_json) {
            out << to_string(axiom) << " [" << rule_name << "] over " << *report.trials << " trials: "
                << (report.violated() ? "Violated" : "Satisfied") << "\n";
          }
        }
      }
      if (as_json) {
        Json inputs{{"rule", rule_name}, {"axiom", axiom_name}};
        if (!input.empty()) inputs["input"] = input;
        if (trials > 0) {
          inputs["trials"] = trials;
          inputs["seed"] = seed;
          inputs["config"] = gen_flags.to_json();
        }
        out << make_report("axioms", inputs, "report", reports).dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          if (r.contains("witness")) out << "witness (" << r["axiom"].get<std::string>() << "): " << r["witness"].dump() << "\n";
        }
      }
      return kExitOk;
    }

    if (*gen) {
      const auto inst = generate_instance(gen_flags.config, seed);
      detail::write_text(output, serialize(inst), out);
      return kExitOk;
    }

    if (*reduce) {
      if (from != "approval") {
        err << "unsupported source model \"" << from << "\"\n";
        return kExitInputError;
      }
      const auto approval = approval_from_json(Json::parse(read_file(input)));
      Json result;
      Instance inst;
      if (objective == "cost") {
        inst = reduce_from_approval_cost(approval);
      } else if (objective == "distance") {
        auto reduced = reduce_from_approval_distance(approval);
        inst = std::move(reduced.instance);
        result["z"] = reduced.z;
      } else {
        err << "unknown objective \"" << objective << "\"\n";
        return kExitInputError;
      }
      result["instance"] = to_json(inst);
      if (!output.empty()) detail::write_text(output, serialize(inst), out);
      if (as_json) {
        out << make_report("reduce", Json{{"from", from}, {"objective", objective}, {"input", input}}, "result",
                           result)
                   .dump(2)
            << "\n";
      } else if (output.empty()) {
        out << serialize(inst) << "\n";
        if (result.contains("z")) out << "z = " << result["z"].get<Score>() << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return detail::exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mdpb

#endif  // MDPB_CLI_HPP
