// Command line front end for the one-lie search library.
//
// Subcommands:
//   plan        emit a query family / staged plan construction
//   decode      turn an answer sequence into a verdict
//   simulate    sweep scenarios against a family and check the decoder
//   verify      structural and semantic checks for a family
//   search-min  exhaustive minimum family size search (small n)
//   restrict    drop an element that is asked as a repeated singleton
//
// All results go to stdout as JSON; diagnostics go to stderr.  Exit codes:
// 0 = success / affirmative finding, 1 = negative finding (not solving,
// undecidable, inconsistent, mismatches), 2 = usage or capacity error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onelie/json_io.hpp"
#include "onelie/search.hpp"
#include "onelie/strategies.hpp"
#include "onelie/verifier.hpp"

namespace {

using nlohmann::json;
using namespace onelie;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

MultiFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  json j;
  in >> j;
  return family_from_json(j);
}

// "{1,2},none" or "{2},3" -> excellent set and optional lie position
Scenario parse_scenario(const std::string& spec, const MultiFamily& family) {
  auto brace_open = spec.find('{');
  auto brace_close = spec.find('}');
  if (brace_open != 0 || brace_close == std::string::npos)
    throw std::invalid_argument("scenario must look like \"{1,2},none\" or \"{2},3\"");
  std::uint64_t excellent = 0;
  std::string inner = spec.substr(1, brace_close - 1);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    auto comma = inner.find(',', pos);
    std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) {
      int e = std::stoi(tok);
      if (e < 1 || e > family.n())
        throw std::invalid_argument("scenario element " + tok + " outside the universe");
      excellent |= element_bit(e);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (brace_close + 1 >= spec.size() || spec[brace_close + 1] != ',')
    throw std::invalid_argument("scenario needs a lie part after the set, e.g. \",none\"");
  std::string lie_part = spec.substr(brace_close + 2);
  Scenario sc{excellent, std::nullopt};
  if (lie_part != "none") {
    int lie = std::stoi(lie_part);
    if (lie < 0 || lie >= family.m())
      throw std::invalid_argument("lie position " + lie_part + " out of range");
    sc.lie = lie;
  }
  return sc;
}

bool verdict_correct(const Verdict& v, std::uint64_t excellent) {
  if (v.kind == VerdictKind::Found) return (excellent & element_bit(v.element)) != 0;
  if (v.kind == VerdictKind::NoExcellent) return excellent == 0;
  return false;
}

struct PlanArgs {
  std::string mode;
  int n = 0;
  int r = 2;
  std::vector<std::string> answers;
};

int run_plan(const PlanArgs& a) {
  if (a.mode == "one-lie") {
    emit(family_to_json(optimal_one_lie_family(a.n)));
    return 0;
  }
  if (a.mode == "no-lie") {
    emit(family_to_json(singleton_family_no_lie(a.n)));
    return 0;
  }
  if (a.mode == "exactly-one") {
    emit(family_to_json(binary_mask_family_exactly_one(a.n)));
    return 0;
  }
  if (a.mode != "two-round" && a.mode != "r-round")
    throw std::invalid_argument("unknown plan mode: " + a.mode);
  RoundPlan plan = (a.mode == "two-round") ? two_round_plan(a.n) : multi_round_plan(a.n, a.r);
  json out = {{"mode", a.mode},
              {"n", a.n},
              {"rounds", plan.rounds()},
              {"fanout", plan.fanout()},
              {"max_length", plan.worst_case_length()},
              {"round1", family_to_json(plan.first_round())}};
  if (!a.answers.empty()) {
    // materialize only the branch the given answers take
    std::vector<AnswerSequence> prior;
    for (const auto& s : a.answers) prior.push_back(AnswerSequence::from_string(s));
    MultiFamily next = plan.round_family(static_cast<int>(prior.size()), prior);
    out["rounds_answered"] = static_cast<int>(prior.size());
    out["next_round"] = family_to_json(next);
    if (next.m() == 0) out["verdict"] = verdict_to_json(plan.decode(prior));
  }
  emit(out);
  return 0;
}

struct DecodeArgs {
  std::string family_path;
  std::string answers;
  int lie_budget = 1;
  std::string method = "generic";
};

int run_decode(const DecodeArgs& a) {
  MultiFamily family = load_family(a.family_path);
  AnswerSequence answers = AnswerSequence::from_string(a.answers);
  Verdict v;
  if (a.method == "optimal") {
    if (a.lie_budget != 1)
      throw std::invalid_argument("the optimal-family decoder is specific to one lie");
    if (!(family == optimal_one_lie_family(family.n())))
      throw std::invalid_argument(
          "--method optimal needs the family produced by plan --mode one-lie");
    v = decode_optimal(family.n(), answers);
  } else if (a.method == "generic") {
    v = decode_generic(family, answers, a.lie_budget);
  } else {
    throw std::invalid_argument("unknown decode method: " + a.method);
  }
  emit(verdict_to_json(v));
  return (v.kind == VerdictKind::Found || v.kind == VerdictKind::NoExcellent) ? 0 : 1;
}

struct SimulateArgs {
  std::string family_path;
  bool exhaustive = false;
  std::string scenario;
  int lie_budget = 1;
  int sample = 0;
  std::uint64_t seed = 12345;
};

int run_simulate(const SimulateArgs& a) {
  MultiFamily family = load_family(a.family_path);
  const int m = family.m();

  if (!a.scenario.empty()) {
    Scenario sc = parse_scenario(a.scenario, family);
    AnswerSequence answers = answers_for(family, sc);
    Verdict v = decode_generic(family, answers, a.lie_budget);
    emit({{"excellent", mask_to_json(sc.excellent)},
          {"lie", sc.lie ? json(*sc.lie) : json(nullptr)},
          {"answers", answers.str()},
          {"verdict", verdict_to_json(v)}});
    return verdict_correct(v, sc.excellent) ? 0 : 1;
  }

  const bool optimal_shape = family == optimal_one_lie_family(family.n());
  std::uint64_t scenarios = 0, mismatches = 0, cross_checked = 0;
  json failures = json::array();

  auto check_one = [&](std::uint64_t excellent, const AnswerSequence& answers) {
    ++scenarios;
    Verdict v = decode_generic(family, answers, a.lie_budget);
    bool ok = verdict_correct(v, excellent);
    if (ok && optimal_shape && a.lie_budget == 1) {
      ++cross_checked;
      ok = decode_optimal(family.n(), answers) == v;
    }
    if (!ok) {
      ++mismatches;
      if (failures.size() < 10)
        failures.push_back({{"excellent", mask_to_json(excellent)},
                            {"answers", answers.str()},
                            {"verdict", verdict_to_json(v)}});
    }
  };

  if (a.exhaustive) {
    if (family.n() > kMaxSolvesUniverse)
      throw CapacityError("exhaustive simulation supports n <= " +
                          std::to_string(kMaxSolvesUniverse) + "; use --sample for larger n");
    // every excellent set, truthful answers plus every flip set within budget
    const std::uint64_t count = 1ull << family.n();
    for (std::uint64_t t = 0; t < count; ++t) {
      AnswerSequence truthful = answers_for(family, Scenario{t, std::nullopt});
      check_one(t, truthful);
      std::vector<int> stack;
      auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(stack.size()) == a.lie_budget) return;
        for (int p = from; p < m; ++p) {
          stack.push_back(p);
          AnswerSequence s = truthful;
          for (int q : stack) s = s.with_flip(q);
          check_one(t, s);
          self(self, p + 1);
          stack.pop_back();
        }
      };
      rec(rec, 0);
    }
  } else if (a.sample > 0) {
    if (family.n() > kMaxEnumerationUniverse)
      throw CapacityError("decoding still enumerates subsets; sampled simulation supports n <= " +
                          std::to_string(kMaxEnumerationUniverse));
    std::mt19937_64 eng(a.seed);
    for (int i = 0; i < a.sample; ++i) {
      std::uint64_t t = eng() & family.universe().full_mask();
      int flips = static_cast<int>(eng() % static_cast<std::uint64_t>(a.lie_budget + 1));
      AnswerSequence s = answers_for(family, Scenario{t, std::nullopt});
      for (int f = 0; f < flips && m > 0; ++f)
        s = s.with_flip(static_cast<int>(eng() % static_cast<std::uint64_t>(m)));
      check_one(t, s);
    }
  } else {
    throw std::invalid_argument("simulate needs --exhaustive, --sample or --scenario");
  }

  emit({{"n", family.n()},
        {"m", m},
        {"lie_budget", a.lie_budget},
        {"mode", a.exhaustive ? "exhaustive" : "sample"},
        {"scenarios", scenarios},
        {"decoder_cross_checks", cross_checked},
        {"mismatches", mismatches},
        {"failures", failures}});
  return mismatches == 0 ? 0 : 1;
}

struct VerifyArgs {
  std::string family_path;
  bool semantic = false;
  bool lemma = false;
  bool both = false;
};

int run_verify(const VerifyArgs& a) {
  MultiFamily family = load_family(a.family_path);
  bool do_lemma = a.lemma || a.both || (!a.semantic && !a.lemma);
  bool do_semantic = a.semantic || a.both;

  json out = {{"n", family.n()}, {"m", family.m()}};
  bool solving = true;

  if (do_lemma) {
    CoverageReport cov = check_coverage(family);
    json jcov = {{"ok", cov.ok}, {"cover_counts", cov.cover_counts}};
    if (!cov.ok) jcov["under_covered"] = cov.under_covered;
    out["coverage"] = jcov;
    solving = solving && cov.ok;

    PartitionReport part = check_partition_condition(family);
    json jpart = {{"ok", part.ok}};
    if (!part.ok) {
      jpart["witness"] = partition_to_json(family, *part.witness);
      json cands = json::array();
      for (std::uint64_t t : split_candidates(family, *part.witness)) cands.push_back(mask_to_json(t));
      jpart["candidates"] = cands;
    }
    out["partition"] = jpart;
    solving = solving && part.ok;
  }

  if (do_semantic) {
    SolvesReport sr = solves(family, 1);
    json jsem = {{"ok", sr.ok}};
    if (!sr.ok) jsem["witness_answers"] = sr.witness->str();
    out["semantic"] = jsem;
    solving = solving && sr.ok;
  }

  out["solving"] = solving;
  emit(out);
  return solving ? 0 : 1;
}

struct SearchArgs {
  int n = 0;
  int max_m = 0;
  bool no_prune = false;
  bool all_minimal = false;
  int threads = 0;
};

int run_search(const SearchArgs& a) {
  SearchOptions opt;
  opt.max_m = a.max_m;
  opt.prune = !a.no_prune;
  opt.threads = a.threads;
  SearchReport rep = min_family_size(a.n, opt);

  json witnesses = json::array();
  for (const auto& w : rep.witnesses) {
    witnesses.push_back(family_to_json(w));
    if (!a.all_minimal) break;
  }
  emit({{"n", rep.n},
        {"max_m", rep.max_m},
        {"min_size", rep.min_size ? json(*rep.min_size) : json(nullptr)},
        {"families_examined", rep.families_examined},
        {"pruned_by", rep.pruned_by},
        {"solve_checks", rep.solve_checks},
        {"witness_count", rep.witnesses.size()},
        {"witnesses", witnesses},
        {"witnesses_truncated", !a.all_minimal && rep.witnesses.size() > 1}});
  return rep.min_size ? 0 : 1;
}

struct RestrictArgs {
  std::string family_path;
  int j = 0;
};

int run_restrict(const RestrictArgs& a) {
  MultiFamily family = load_family(a.family_path);
  emit(family_to_json(restrict_family(family, a.j)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search strategies that find one excellent element despite one lie"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  CLI::App* plan = app.add_subcommand("plan", "emit a query family or staged plan");
  plan->add_option("--mode", plan_args.mode, "one-lie | no-lie | exactly-one | two-round | r-round")
      ->required();
  plan->add_option("--n", plan_args.n, "universe size")->required();
  plan->add_option("--r", plan_args.r, "rounds for r-round plans");
  plan->add_option("--answers", plan_args.answers,
                   "answers per completed round; materializes the next round");

  DecodeArgs decode_args;
  CLI::App* decode = app.add_subcommand("decode", "decode an answer sequence");
  decode->add_option("family", decode_args.family_path, "family JSON file")->required();
  decode->add_option("answers", decode_args.answers, "answer string, e.g. YYNNY")->required();
  decode->add_option("--lie-budget", decode_args.lie_budget, "maximum lies (default 1)");
  decode->add_option("--method", decode_args.method, "generic (default) | optimal");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand("simulate", "sweep scenarios and check verdicts");
  simulate->add_option("family", sim_args.family_path, "family JSON file")->required();
  simulate->add_flag("--exhaustive", sim_args.exhaustive, "all excellent sets and lie patterns");
  simulate->add_option("--scenario", sim_args.scenario, "one scenario, e.g. \"{2},none\"");
  simulate->add_option("--lie-budget", sim_args.lie_budget, "maximum lies (default 1)");
  simulate->add_option("--sample", sim_args.sample, "number of random scenarios instead");
  simulate->add_option("--seed", sim_args.seed, "seed for --sample (default 12345)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check whether a family solves the problem");
  verify->add_option("family", verify_args.family_path, "family JSON file")->required();
  verify->add_flag("--semantic", verify_args.semantic, "decode every reachable sequence");
  verify->add_flag("--lemma", verify_args.lemma, "coverage and split-candidate conditions");
  verify->add_flag("--both", verify_args.both, "run both check groups (default)");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search-min", "exhaustive minimum family size search");
  search->add_option("--n", search_args.n, "universe size (at most 4)")->required();
  search->add_option("--max-m", search_args.max_m, "largest size tried (default 2n+1)");
  search->add_flag("--no-prune", search_args.no_prune, "disable the necessary-condition filters");
  search->add_flag("--all-minimal", search_args.all_minimal, "emit every minimal family");
  search->add_option("--threads", search_args.threads, "worker threads (default: hardware)");

  RestrictArgs restrict_args;
  CLI::App* restrict_cmd = app.add_subcommand("restrict", "remove a repeated-singleton element");
  restrict_cmd->add_option("family", restrict_args.family_path, "family JSON file")->required();
  restrict_cmd->add_option("--j", restrict_args.j, "element to remove")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*plan) return run_plan(plan_args);
    if (*decode) return run_decode(decode_args);
    if (*simulate) return run_simulate(sim_args);
    if (*verify) return run_verify(verify_args);
    if (*search) return run_search(search_args);
    if (*restrict_cmd) return run_restrict(restrict_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
