// Copyright 2026 The graphfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphfair/binary.h"
#include "graphfair/errors.h"
#include "graphfair/fairness.h"
#include "graphfair/fpt.h"
#include "graphfair/generators.h"
#include "graphfair/io.h"
#include "graphfair/oracle.h"
#include "graphfair/reductions.h"

namespace graphfair::cli {
namespace {

struct SearchFlags {
  std::string space = "allocations";
  std::uint64_t budget = OracleOptions{}.budget;
  int workers = 1;

  OracleOptions ToOptions() const {
    OracleOptions options;
    options.mode = space == "orientations" ? SearchMode::kOrientations
                                           : SearchMode::kAllAllocations;
    options.budget = budget;
    options.workers = workers;
    return options;
  }
};

void AddSearchFlags(CLI::App* command, SearchFlags& flags) {
  command->add_option("--space", flags.space, "Search space")
      ->check(CLI::IsMember({"allocations", "orientations"}));
  command->add_option("--budget", flags.budget, "Maximum states to enumerate")
      ->check(CLI::PositiveNumber);
  command->add_option("--workers", flags.workers, "Enumeration threads")
      ->check(CLI::Range(1, 256));
}

const std::map<std::string, WelfareKind> kWelfareNames = {
    {"util", WelfareKind::kUtilitarian},
    {"egal", WelfareKind::kEgalitarian},
    {"nash", WelfareKind::kNash},
};

std::string Owners(const Allocation& allocation) {
  std::ostringstream s;
  for (ItemId item = 0; item < allocation.num_items(); ++item) {
    if (item > 0) s << ' ';
    s << allocation.owner(item);
  }
  return s.str();
}

const char* Bool(bool b) { return b ? "true" : "false"; }

std::vector<Utility> ParseValues(const std::string& text,
                                 std::optional<int> d) {
  std::vector<Utility> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == "d") {
      if (!d) throw InputError("--values uses 'd' but --d was not given");
      values.push_back(*d);
      continue;
    }
    Utility v = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v < 0) {
      throw InputError("bad value '" + token + "' in --values");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InputError("--values is empty");
  return values;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Envy-free and EFX allocation on graphical instances",
               "graphfair"};
  app.require_subcommand(1);

  // check
  std::string check_input, check_allocation, check_property;
  auto* check = app.add_subcommand("check", "Test a property of an allocation");
  check->add_option("--input", check_input, "Instance file")->required();
  check->add_option("--allocation", check_allocation, "Allocation file")
      ->required();
  check->add_option("--property", check_property, "Property to test")
      ->required()
      ->check(CLI::IsMember({"ef", "efx", "orientation", "nonwasteful"}));

  // solve
  std::string solve_input, solve_algo, solve_out;
  SearchFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Find a fair allocation");
  solve->add_option("--input", solve_input, "Instance file")->required();
  solve->add_option("--algo", solve_algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember(
          {"binary-ef", "binary-efx", "fpt-ef", "oracle-ef", "oracle-efx-um"}));
  solve->add_option("--out", solve_out, "Allocation output file")->required();
  AddSearchFlags(solve, solve_flags);

  // pof
  std::string pof_input, pof_welfare;
  SearchFlags pof_flags;
  auto* pof = app.add_subcommand("pof", "Price of EFX for one welfare notion");
  pof->add_option("--input", pof_input, "Instance file")->required();
  pof->add_option("--welfare", pof_welfare, "Welfare notion")
      ->required()
      ->check(CLI::IsMember({"util", "egal", "nash"}));
  AddSearchFlags(pof, pof_flags);

  // gen
  std::string gen_family, gen_out, gen_values = "0,1";
  std::optional<int> gen_d;
  int gen_agents = 1;
  double gen_prob = 0.5;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", gen_family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"star", "random"}));
  gen->add_option("--d", gen_d, "Star size, or the value of 'd' in --values");
  gen->add_option("--agents", gen_agents, "Number of agents");
  gen->add_option("--prob", gen_prob, "Edge probability");
  gen->add_option("--values", gen_values,
                  "Comma-separated utility values; 'd' stands for --d");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Instance output file")->required();

  // reduce
  std::string reduce_from, reduce_target, reduce_input, reduce_out,
      reduce_gadget = "published";
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("--from", reduce_from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"mcis"}));
  reduce->add_option("--target", reduce_target, "Target problem")
      ->required()
      ->check(CLI::IsMember({"ef", "um-efx", "em-efx"}));
  reduce->add_option("--input", reduce_input, "MCIS file")->required();
  reduce->add_option("--out", reduce_out, "Instance output file")->required();
  reduce
      ->add_option("--gadget", reduce_gadget,
                   "UM+EFX path gadget: published, or strict (w3 values the "
                   "middle edge at d+1)")
      ->check(CLI::IsMember({"published", "strict"}));

  // oracle
  std::string oracle_input, oracle_query, oracle_welfare = "util",
                                          oracle_constraint = "none";
  std::optional<Utility> oracle_threshold;
  SearchFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground-truth queries");
  oracle->add_option("--input", oracle_input, "Instance file")->required();
  oracle->add_option("--query", oracle_query, "Query")
      ->required()
      ->check(CLI::IsMember({"exists-ef", "exists-efx", "max-welfare",
                             "um-plus-efx", "em-efx-threshold"}));
  oracle->add_option("--threshold", oracle_threshold,
                     "Egalitarian threshold for em-efx-threshold");
  oracle->add_option("--welfare", oracle_welfare, "Welfare for max-welfare")
      ->check(CLI::IsMember({"util", "egal", "nash"}));
  oracle->add_option("--constraint", oracle_constraint,
                     "Fairness constraint for max-welfare")
      ->check(CLI::IsMember({"none", "ef", "efx"}));
  AddSearchFlags(oracle, oracle_flags);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*check) {
      const GraphicalInstance instance =
          ParseInstance(ReadTextFile(check_input));
      const Allocation allocation =
          ParseAllocation(ReadTextFile(check_allocation), instance);
      bool holds = false;
      if (check_property == "ef") holds = IsEnvyFree(instance, allocation);
      if (check_property == "efx") holds = IsEfx(instance, allocation);
      if (check_property == "orientation") {
        holds = IsOrientation(instance, allocation);
      }
      if (check_property == "nonwasteful") {
        holds = IsNonWasteful(instance, allocation);
      }
      out << "property: " << check_property << "\n"
          << "holds: " << Bool(holds) << "\n";
      return holds ? kExitHolds : kExitFails;
    }

    if (*solve) {
      const GraphicalInstance instance =
          ParseInstance(ReadTextFile(solve_input));
      const OracleOptions options = solve_flags.ToOptions();
      std::optional<Allocation> result;
      if (solve_algo == "binary-ef") result = SolveEfBinary(instance);
      if (solve_algo == "binary-efx") result = SolveEfxBinary(instance);
      if (solve_algo == "fpt-ef") result = SolveEfFpt(instance);
      if (solve_algo == "oracle-ef") {
        result = ExistsFair(instance, Fairness::kEnvyFree, options);
      }
      if (solve_algo == "oracle-efx-um") {
        if (auto best = MaxWelfare(instance, WelfareKind::kUtilitarian,
                                   FairnessConstraint::kEfx, options)) {
          result = best->witness;
        }
      }
      out << "algo: " << solve_algo << "\n";
      if (!result) {
        out << "status: none\n";
        return kExitFails;
      }
      WriteTextFile(solve_out, FormatAllocation(*result));
      const WelfareReport w = Welfare(instance, *result);
      out << "status: found\n"
          << "utilitarian: " << w.utilitarian << "\n"
          << "egalitarian: " << w.egalitarian << "\n"
          << "nash_product: " << w.nash_product << "\n";
      return kExitHolds;
    }

    if (*pof) {
      const GraphicalInstance instance = ParseInstance(ReadTextFile(pof_input));
      const PofRatio ratio =
          PriceOfEfx(instance, kWelfareNames.at(pof_welfare),
                     pof_flags.ToOptions());
      out << "welfare: " << pof_welfare << "\n"
          << "optimum: " << ratio.numerator << "\n";
      if (ratio.fair_set_empty) {
        out << "efx_optimum: none\n";
      } else {
        out << "efx_optimum: " << ratio.denominator << "\n";
      }
      out << "pof: " << ratio.ToString() << "\n";
      return kExitHolds;
    }

    if (*gen) {
      GraphicalInstance instance = [&] {
        if (gen_family == "star") {
          if (!gen_d) throw InputError("--family star needs --d");
          return GenerateStar(*gen_d);
        }
        RandomInstanceSpec spec;
        spec.num_agents = gen_agents;
        spec.edge_probability = gen_prob;
        spec.values = ParseValues(gen_values, gen_d);
        spec.seed = gen_seed;
        return GenerateRandom(spec);
      }();
      WriteTextFile(gen_out, FormatInstance(instance));
      out << "agents: " << instance.num_agents() << "\n"
          << "items: " << instance.num_items() << "\n";
      return kExitHolds;
    }

    if (*reduce) {
      const McisInstance mcis = ParseMcis(ReadTextFile(reduce_input));
      std::optional<Utility> threshold;
      GraphicalInstance instance = [&] {
        if (reduce_target == "ef") return ReduceMcisToEf(mcis);
        if (reduce_target == "um-efx") {
          return ReduceMcisToUmEfx(mcis, reduce_gadget == "strict"
                                             ? UmEfxGadget::kStrictMiddleEdge
                                             : UmEfxGadget::kPublished);
        }
        EgalitarianEfxInstance pair = ReduceMcisToEmEfx(mcis);
        threshold = pair.threshold;
        return std::move(pair.instance);
      }();
      WriteTextFile(reduce_out, FormatInstance(instance));
      out << "agents: " << instance.num_agents() << "\n"
          << "items: " << instance.num_items() << "\n";
      if (threshold) out << "threshold: " << *threshold << "\n";
      return kExitHolds;
    }

    if (*oracle) {
      const GraphicalInstance instance =
          ParseInstance(ReadTextFile(oracle_input));
      const OracleOptions options = oracle_flags.ToOptions();
      if (oracle_query == "em-efx-threshold" && !oracle_threshold) {
        throw InputError("em-efx-threshold needs --threshold");
      }
      out << "query: " << oracle_query << "\n";
      if (oracle_query == "exists-ef" || oracle_query == "exists-efx") {
        const auto witness = ExistsFair(
            instance,
            oracle_query == "exists-ef" ? Fairness::kEnvyFree : Fairness::kEfx,
            options);
        out << "exists: " << Bool(witness.has_value()) << "\n";
        if (witness) out << "witness: " << Owners(*witness) << "\n";
      } else if (oracle_query == "max-welfare") {
        const FairnessConstraint constraint =
            oracle_constraint == "ef"    ? FairnessConstraint::kEnvyFree
            : oracle_constraint == "efx" ? FairnessConstraint::kEfx
                                         : FairnessConstraint::kNone;
        const auto best = MaxWelfare(instance, kWelfareNames.at(oracle_welfare),
                                     constraint, options);
        out << "welfare: " << oracle_welfare << "\n"
            << "constraint: " << oracle_constraint << "\n";
        if (best) {
          out << "optimum: " << best->value << "\n"
              << "witness: " << Owners(best->witness) << "\n";
        } else {
          out << "optimum: none\n";
        }
      } else if (oracle_query == "um-plus-efx") {
        out << "w_star: " << OptimalUtilitarianWelfare(instance) << "\n"
            << "result: " << Bool(DecideUmPlusEfx(instance, options)) << "\n";
      } else {
        out << "threshold: " << *oracle_threshold << "\n"
            << "result: "
            << Bool(DecideEmEfxThreshold(instance, *oracle_threshold, options))
            << "\n";
      }
      return kExitHolds;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace graphfair::cli
