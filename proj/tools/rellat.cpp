// Copyright 2026 The rellat Authors
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

// rellat: command-line front end for evaluation, law checking, model search,
// closure generation and constraint-aware rewriting.
//
// Exit codes: 0 ok, 1 counterexample / violation / no model, 2 usage or input
// error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "rellat/closure.hpp"
#include "rellat/error.hpp"
#include "rellat/evaluate.hpp"
#include "rellat/law.hpp"
#include "rellat/model_search.hpp"
#include "rellat/relation_json.hpp"
#include "rellat/rewriter.hpp"
#include "rellat/term.hpp"

namespace {

using nlohmann::json;
using namespace rellat;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

std::string format_assignment(const Assignment& env) {
  std::ostringstream os;
  for (const auto& [name, r] : env) os << "    " << name << " = " << r << "\n";
  return os.str();
}

json assignment_json(const Assignment& env) {
  json j = json::object();
  for (const auto& [name, r] : env) j[name] = to_json(r);
  return j;
}

// Universe from --universe, else the environment's, else degenerate.
Universe pick_universe(const std::string& universe_file, const Environment* env) {
  if (!universe_file.empty()) return universe_from_json(read_json_file(universe_file));
  if (env && env->universe) return *env->universe;
  return Universe();
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string term;
  std::string env_file;
  std::string universe_file;
  bool json_out = false;
};

int run_eval(const EvalArgs& a) {
  Environment env;
  std::optional<Universe> override_u;
  if (!a.universe_file.empty()) {
    override_u = universe_from_json(read_json_file(a.universe_file));
  }
  if (!a.env_file.empty()) {
    env = environment_from_json(read_json_file(a.env_file),
                                override_u ? &*override_u : nullptr);
  }
  const Universe u = override_u ? *override_u : pick_universe("", &env);
  const Term t = parse_term(a.term);
  const Relation r = eval(t, env.relations, u);
  if (a.json_out) {
    std::cout << json{{"term", to_string(t)}, {"result", to_json(r)}}.dump(2) << "\n";
  } else {
    std::cout << r << "\n";
  }
  return kOk;
}

// ---- law ------------------------------------------------------------------

struct LawArgs {
  std::string id;
  std::string universe_file;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::string sweep = "3x3";
  bool json_out = false;
};

std::vector<Universe> law_universes(const LawArgs& a) {
  if (!a.universe_file.empty()) {
    return {universe_from_json(read_json_file(a.universe_file))};
  }
  std::size_t attrs = 0;
  std::size_t values = 0;
  char x = 0;
  std::istringstream in(a.sweep);
  if (!(in >> attrs >> x >> values) || (x != 'x' && x != 'X') || !in.eof()) {
    throw InvalidInput("--sweep expects AxV, e.g. 3x3");
  }
  return desk_universes(attrs, values);
}

struct LawReport {
  std::string text;
  json data;
  bool failed = false;  // a counterexample contradicts the catalogue status
};

LawReport check_one(const Law& law, const std::vector<Universe>& universes,
                    const LawArgs& a) {
  LawReport rep;
  SweepResult s = sweep_law(law, universes, a.trials, a.seed);
  const bool found = !s.verdict.holds();
  std::ostringstream os;
  rep.data = {{"id", law.id},
              {"status", std::string(status_name(law.status))},
              {"trials", s.verdict.trials},
              {"vacuous", s.verdict.vacuous},
              {"universes", s.universes_checked},
              {"counterexample", found}};

  switch (law.status) {
    case LawStatus::kValid:
      rep.failed = found;
      os << (found ? "FAIL " : "PASS ") << law.id << ": ";
      if (found) {
        os << "counterexample at trial " << s.verdict.counterexample->trial << "\n";
      } else {
        os << "no counterexample in " << s.verdict.trials << " trials over "
           << s.universes_checked << " universe(s)\n";
      }
      break;
    case LawStatus::kInvalid:
      rep.failed = true;
      os << "INVALID " << law.id << ": ";
      if (found) {
        os << "random counterexample at trial " << s.verdict.counterexample->trial << "\n";
      } else {
        os << "no random counterexample in " << s.verdict.trials << " trials\n";
      }
      break;
    case LawStatus::kOpen:
      os << "OPEN: " << (found ? "counterexample found"
                               : "no counterexample found in " +
                                     std::to_string(s.verdict.trials) + " trials")
         << " (" << law.id << ")\n";
      break;
  }

  json cx = nullptr;
  if (found) {
    const auto& c = *s.verdict.counterexample;
    os << "  universe: " << universes[*s.universe_index] << "\n"
       << "  clause: " << to_string(law.clauses[c.clause]) << "\n"
       << format_assignment(c.assignment) << "    lhs = " << c.lhs << "\n"
       << "    rhs = " << c.rhs << "\n";
    cx = {{"universe", to_json(universes[*s.universe_index])},
          {"clause", to_string(law.clauses[c.clause])},
          {"assignment", assignment_json(c.assignment)},
          {"lhs", to_json(c.lhs)},
          {"rhs", to_json(c.rhs)}};
  }
  if (law.witness) {
    const auto& w = *law.witness;
    auto clause = falsified_clause(law, w.assignment, w.universe);
    os << "  catalogued witness over " << w.universe << ":\n"
       << format_assignment(w.assignment);
    if (clause) {
      const auto& eq = law.clauses[*clause].conclusion;
      const Relation lhs = eval(eq.lhs, w.assignment, w.universe);
      const Relation rhs = eval(eq.rhs, w.assignment, w.universe);
      os << "    " << to_string(eq.lhs) << " = " << lhs << "\n"
         << "    " << to_string(eq.rhs) << " = " << rhs << "\n";
    } else {
      os << "    (witness does not falsify the law)\n";
    }
    rep.data["witness_replays"] = clause.has_value();
  }
  rep.data["details"] = cx;
  rep.data["verdict"] = law.status == LawStatus::kOpen
                            ? "open"
                            : (rep.failed ? "counterexample" : "holds");
  rep.text = os.str();
  return rep;
}

int run_law_list(bool json_out) {
  json arr = json::array();
  for (const Law& law : law_catalogue()) {
    if (json_out) {
      arr.push_back({{"id", law.id},
                     {"status", std::string(status_name(law.status))},
                     {"text", law.text},
                     {"source", law.source},
                     {"derived_from", law.derived_from}});
    } else {
      std::cout << law.id << "  [" << status_name(law.status) << "]  " << law.text << "\n";
    }
  }
  if (json_out) std::cout << arr.dump(2) << "\n";
  return kOk;
}

int run_law_check(const LawArgs& a) {
  const Law& law = find_law(a.id);
  const LawReport rep = check_one(law, law_universes(a), a);
  std::cout << (a.json_out ? rep.data.dump(2) + "\n" : rep.text);
  return rep.failed ? kFound : kOk;
}

int run_law_check_all(const LawArgs& a) {
  const auto universes = law_universes(a);
  json arr = json::array();
  std::size_t failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Law& law : law_catalogue()) {
    if (law.status == LawStatus::kInvalid) continue;
    LawReport rep = check_one(law, universes, a);
    failures += rep.failed ? 1 : 0;
    if (a.json_out) {
      arr.push_back(std::move(rep.data));
    } else {
      std::cout << rep.text;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (a.json_out) {
    std::cout << json{{"laws", arr}, {"failures", failures}, {"seconds", secs}}.dump(2)
              << "\n";
  } else {
    std::cout << failures << " failure(s); " << secs << " s\n";
  }
  return failures ? kFound : kOk;
}

// ---- model ----------------------------------------------------------------

struct ModelArgs {
  std::vector<std::string> assume;
  std::string refute;
  std::size_t max_size = 5;
  bool dot = false;
  bool json_out = false;
};

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int run_model_find(const ModelArgs& a) {
  AxiomSet assume(split_ids(a.assume));
  find_law(a.refute);
  SearchStats stats;
  auto m = find_separating_model(assume, a.refute, a.max_size, &stats);
  if (a.json_out) {
    json j{{"assume", assume.ids()},
           {"refute", a.refute},
           {"max_size", a.max_size},
           {"lattices", stats.lattices},
           {"designations", stats.designations},
           {"found", m.has_value()}};
    if (m) {
      json asg = json::object();
      for (const auto& [n, e] : m->counterexample.assignment) asg[n] = e;
      j["size"] = m->lattice.size();
      j["shape"] = shape_name(m->lattice);
      j["order"] = describe_order(m->lattice);
      j["r00"] = m->lattice.r00();
      j["r11"] = m->lattice.r11();
      j["violated"] = m->counterexample.law;
      j["assignment"] = asg;
      j["replays"] = replays(m->counterexample);
    }
    std::cout << j.dump(2) << "\n";
  } else if (m) {
    std::cout << format_model(*m);
    if (a.dot) std::cout << to_dot(m->lattice);
  } else {
    std::cout << "no model of size <= " << a.max_size << " satisfies {";
    for (std::size_t i = 0; i < assume.ids().size(); ++i) {
      std::cout << (i ? ", " : "") << assume.ids()[i];
    }
    std::cout << "} while violating " << a.refute << " (" << stats.lattices
              << " lattices, " << stats.designations << " designations searched)\n";
  }
  return m ? kOk : kFound;
}

// ---- closure --------------------------------------------------------------

struct ClosureArgs {
  std::string file;
  std::string universe_file;
  std::size_t cap = 10000;
  bool dot = false;
  bool json_out = false;
};

int run_closure(const ClosureArgs& a) {
  const json j = read_json_file(a.file);
  std::optional<Universe> u;
  const json* gens = &j;
  if (j.is_object()) {
    if (!j.contains("generators")) throw InvalidInput("generators file needs \"generators\"");
    gens = &j.at("generators");
    if (j.contains("universe")) u = universe_from_json(j.at("universe"));
  }
  if (!a.universe_file.empty()) u = universe_from_json(read_json_file(a.universe_file));
  if (!u) throw InvalidInput("closure needs a universe (--universe or \"universe\" key)");
  if (!gens->is_array()) throw InvalidInput("generators must be a list of relations");

  std::vector<Relation> generators;
  for (const auto& g : *gens) generators.push_back(relation_from_json(g, *u));
  ClosureOptions opts;
  opts.cap = a.cap;
  const Closure c = generate_closure(generators, *u, opts);
  const LatticeReport rep = verify_lattice(c);

  if (a.dot) {
    std::cout << export_dot(c);
  } else if (a.json_out) {
    json elems = json::array();
    for (const auto& e : c.elements) elems.push_back(to_json(e));
    json edges = json::array();
    for (auto [lo, hi] : c.hasse_edges) edges.push_back({lo, hi});
    std::cout << json{{"elements", elems},
                      {"hasse_edges", edges},
                      {"lattice", rep.ok()},
                      {"problems", rep.problems}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << c.elements.size() << " elements, " << c.hasse_edges.size()
              << " covering pairs\n";
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      std::cout << "  n" << i << "  " << c.elements[i] << "\n";
    }
    std::cout << "lattice: " << (rep.ok() ? "yes" : "no") << "\n";
    for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
    if (auto p = find_pentagon(c)) {
      std::cout << "pentagon: n" << (*p)[0] << " < n" << (*p)[1] << " < n" << (*p)[2]
                << " < n" << (*p)[4] << ", n" << (*p)[0] << " < n" << (*p)[3] << " < n"
                << (*p)[4] << "\n";
    }
  }
  return rep.ok() ? kOk : kFound;
}

// ---- rewrite --------------------------------------------------------------

struct RewriteArgs {
  std::string term;
  std::string constraints_file;
  std::string env_file;
  std::string universe_file;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool json_out = false;
};

int run_rewrite(const RewriteArgs& a) {
  const ConstraintSet c = constraints_from_json(read_json_file(a.constraints_file));
  std::optional<Universe> override_u;
  if (!a.universe_file.empty()) {
    override_u = universe_from_json(read_json_file(a.universe_file));
  }
  const Environment env = environment_from_json(read_json_file(a.env_file),
                                                override_u ? &*override_u : nullptr);
  RewriteOptions opts;
  opts.trials = a.trials;
  opts.seed = a.seed;
  if (override_u) {
    opts.universe = override_u;
  } else if (env.universe) {
    opts.universe = env.universe;
  }
  const Term t = parse_term(a.term);

  try {
    const RewriteResult r = eliminate_redundant_joins(t, c, env.relations, opts);
    if (a.json_out) {
      json steps = json::array();
      for (const auto& s : r.steps) {
        steps.push_back({{"before", to_string(s.before)},
                         {"after", to_string(s.after)},
                         {"rule", s.rule},
                         {"justification", constraint_names(s.justification)}});
      }
      std::cout << json{{"input", to_string(t)},
                        {"result", to_string(r.term)},
                        {"steps", steps},
                        {"verified_trials", a.trials}}
                       .dump(2)
                << "\n";
    } else {
      std::size_t i = 1;
      for (const auto& s : r.steps) {
        std::cout << i++ << ". " << to_string(s.before) << "  =>  " << to_string(s.after)
                  << "  [" << s.rule << "; ";
        const auto names = constraint_names(s.justification);
        for (std::size_t k = 0; k < names.size(); ++k) std::cout << (k ? ", " : "") << names[k];
        std::cout << "; verified over " << a.trials << " trials]\n";
      }
      if (r.steps.empty()) std::cout << "no rewrite applies\n";
      std::cout << to_string(r.term) << "\n";
    }
    return kOk;
  } catch (const ConstraintViolation& e) {
    if (a.json_out) {
      std::cout << json{{"violation", e.constraint()}, {"detail", e.what()}}.dump(2) << "\n";
    } else {
      std::cout << e.what() << "\n";
    }
    return kFound;
  } catch (const UnverifiedRewrite& e) {
    std::cout << "verification failed: " << e.what() << "\n";
    return kFound;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational lattice toolkit"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term");
  eval_cmd->add_option("term", eval_args.term, "Term, e.g. \"A ^ D\"")->required();
  eval_cmd->add_option("--env", eval_args.env_file, "Environment JSON file");
  eval_cmd->add_option("--universe", eval_args.universe_file, "Universe JSON file");
  eval_cmd->add_flag("--json", eval_args.json_out, "JSON output");

  LawArgs law_args;
  auto* law_cmd = app.add_subcommand("law", "Law catalogue");
  law_cmd->require_subcommand(1);
  auto add_law_opts = [&](CLI::App* cmd) {
    cmd->add_option("--universe", law_args.universe_file, "Check on this universe only");
    cmd->add_option("--trials", law_args.trials, "Trials per universe")->capture_default_str();
    cmd->add_option("--seed", law_args.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--sweep", law_args.sweep, "Universe sweep bound AxV")
        ->capture_default_str();
    cmd->add_flag("--json", law_args.json_out, "JSON output");
  };
  bool list_json = false;
  auto* law_list = law_cmd->add_subcommand("list", "List catalogue laws");
  law_list->add_flag("--json", list_json, "JSON output");
  auto* law_check = law_cmd->add_subcommand("check", "Check one law");
  law_check->add_option("id", law_args.id, "Law id")->required();
  add_law_opts(law_check);
  auto* law_check_all = law_cmd->add_subcommand("check-all", "Check every non-invalid law");
  add_law_opts(law_check_all);

  ModelArgs model_args;
  auto* model_cmd = app.add_subcommand("model", "Finite model search");
  model_cmd->require_subcommand(1);
  auto* model_find = model_cmd->add_subcommand("find", "Find a separating model");
  model_find->add_option("--assume", model_args.assume,
                         "Assumed law ids or groups (SLA always included)")
      ->delimiter(',');
  model_find->add_option("--refute", model_args.refute, "Law to violate")->required();
  model_find->add_option("--max-size", model_args.max_size, "Largest lattice size")
      ->capture_default_str()
      ->check(CLI::Range(1, static_cast<int>(FiniteLattice::kMaxSize)));
  model_find->add_flag("--dot", model_args.dot, "Also print DOT");
  model_find->add_flag("--json", model_args.json_out, "JSON output");

  ClosureArgs closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "Generate a ^/v closure");
  closure_cmd->add_option("file", closure_args.file, "Generators JSON file")->required();
  closure_cmd->add_option("--universe", closure_args.universe_file, "Universe JSON file");
  closure_cmd->add_option("--cap", closure_args.cap, "Element cap")->capture_default_str();
  auto* dot_flag = closure_cmd->add_flag("--dot", closure_args.dot, "DOT output");
  closure_cmd->add_flag("--json", closure_args.json_out, "JSON output")->excludes(dot_flag);

  RewriteArgs rewrite_args;
  auto* rewrite_cmd = app.add_subcommand("rewrite", "Eliminate redundant joins");
  rewrite_cmd->add_option("term", rewrite_args.term, "Query term")->required();
  rewrite_cmd->add_option("--constraints", rewrite_args.constraints_file,
                          "Constraints JSON file")
      ->required();
  rewrite_cmd->add_option("--env", rewrite_args.env_file, "Environment JSON file")
      ->required();
  rewrite_cmd->add_option("--universe", rewrite_args.universe_file, "Universe JSON file");
  rewrite_cmd->add_option("--trials", rewrite_args.trials, "Verification trials")
      ->capture_default_str();
  rewrite_cmd->add_option("--seed", rewrite_args.seed, "RNG seed")->capture_default_str();
  rewrite_cmd->add_flag("--json", rewrite_args.json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval_args);
    if (*law_list) return run_law_list(list_json);
    if (*law_check) return run_law_check(law_args);
    if (*law_check_all) return run_law_check_all(law_args);
    if (*model_find) return run_model_find(model_args);
    if (*closure_cmd) return run_closure(closure_args);
    if (*rewrite_cmd) return run_rewrite(rewrite_args);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
