// Copyright 2026 The minparent Authors
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

// Command-line driver. Talks to the solvers only through the C interface.
//
// Exit codes: 0 success, 1 infeasible, 2 usage, parse or I/O error,
// 3 internal error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minparent/minparent.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Carries an exit code out of a failed C call.
struct Failure {
  int exit_code;
  std::string message;
};

int ExitCodeFor(mp_status status) {
  switch (status) {
    case MP_OK:
      return kExitOk;
    case MP_ERR_INFEASIBLE:
      return kExitInfeasible;
    case MP_ERR_INVALID_ARGUMENT:
    case MP_ERR_PARSE:
    case MP_ERR_IO:
      return kExitUsage;
    case MP_ERR_BUDGET_EXCEEDED:
    case MP_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

void Check(mp_status status) {
  if (status != MP_OK) {
    throw Failure{ExitCodeFor(status), std::string(mp_status_name(status)) +
                                           ": " + mp_last_error()};
  }
}

struct StringDeleter {
  void operator()(char* s) const { mp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PopulationDeleter {
  void operator()(mp_population* p) const { mp_population_free(p); }
};
struct SolutionDeleter {
  void operator()(mp_solution* s) const { mp_solution_free(s); }
};
struct InstanceDeleter {
  void operator()(mp_fmp_instance* i) const { mp_fmp_free(i); }
};
struct SelectionDeleter {
  void operator()(mp_selection* s) const { mp_selection_free(s); }
};
using Population = std::unique_ptr<mp_population, PopulationDeleter>;
using Solution = std::unique_ptr<mp_solution, SolutionDeleter>;
using Instance = std::unique_ptr<mp_fmp_instance, InstanceDeleter>;
using Selection = std::unique_ptr<mp_selection, SelectionDeleter>;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitUsage, "cannot write '" + path + "'"};
  out << text;
}

// Writes to `path`, or to stdout when it is empty. Adds a final newline.
void Emit(const std::string& path, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

Population LoadPopulation(const std::string& path) {
  mp_population* raw = nullptr;
  Check(mp_population_load(path.c_str(), &raw));
  return Population(raw);
}

std::string Take(char* raw) { return std::string(OwnedString(raw).get()); }

std::string SolutionReport(const mp_solution* solution) {
  char* raw = nullptr;
  Check(mp_solution_report(solution, &raw));
  return Take(raw);
}

std::string SelectionReport(const mp_selection* selection) {
  char* raw = nullptr;
  Check(mp_selection_report(selection, &raw));
  return Take(raw);
}

std::vector<std::string> SplitList(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

// ---------------------------------------------------------------------------
// Subcommands

int RunCheck(const std::string& path, const std::string& member_list,
             bool show_parents) {
  Population population = LoadPopulation(path);
  std::vector<size_t> members;
  for (const std::string& id : SplitList(member_list, ',')) {
    size_t index = 0;
    Check(mp_population_index_of(population.get(), id.c_str(), &index));
    members.push_back(index);
  }
  int result = 0;
  Check(mp_is_sibling_set(population.get(), members.data(), members.size(),
                          &result));
  std::cout << "SIBLING " << (result != 0 ? "true" : "false") << '\n';
  if (result != 0 && show_parents) {
    char* raw = nullptr;
    Check(mp_materialize_parents(population.get(), members.data(),
                                 members.size(), &raw));
    std::cout << Take(raw) << '\n';
  }
  return kExitOk;
}

int RunSolveGreedy(const std::string& path, size_t c) {
  Population population = LoadPopulation(path);
  mp_solution* raw = nullptr;
  Check(mp_solve_greedy(population.get(), c, &raw));
  Solution solution(raw);
  std::cout << SolutionReport(solution.get());
  return kExitOk;
}

int RunSolveExact(const std::string& path, size_t max_slots,
                  int64_t budget_ms) {
  Population population = LoadPopulation(path);
  mp_solution* raw = nullptr;
  Check(mp_solve_exact(population.get(), max_slots, budget_ms, &raw));
  Solution solution(raw);
  std::cout << SolutionReport(solution.get());
  return kExitOk;
}

Instance LoadInstance(const std::string& universe, const std::string& pool,
                      const std::string& partition) {
  mp_fmp_instance* raw = nullptr;
  Check(mp_fmp_parse(ReadFile(universe).c_str(), ReadFile(pool).c_str(),
                     ReadFile(partition).c_str(), &raw));
  return Instance(raw);
}

int RunFindParents(const std::string& universe, const std::string& pool,
                   const std::string& partition, bool greedy,
                   int64_t budget_ms) {
  Instance instance = LoadInstance(universe, pool, partition);
  mp_selection* raw = nullptr;
  mp_status status = greedy ? mp_find_parents_greedy(instance.get(), &raw)
                            : mp_find_parents_exact(instance.get(), budget_ms, &raw);
  if (status == MP_ERR_BUDGET_EXCEEDED) {
    std::cerr << "exact search timed out; reporting the greedy selection\n";
    status = mp_find_parents_greedy(instance.get(), &raw);
  }
  if (status == MP_ERR_INFEASIBLE) {
    std::cerr << mp_last_error() << '\n';
    std::cout << "status INFEASIBLE\nparents 0\ngroups 0\noracle_calls 0\n"
                 "wall_ms 0\n";
    return kExitInfeasible;
  }
  Check(status);
  Selection selection(raw);
  std::cout << SelectionReport(selection.get());
  return kExitOk;
}

struct ChildrenRange {
  size_t min = 1;
  size_t max = 1;
};

ChildrenRange ParseChildren(const std::string& text) {
  ChildrenRange range;
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      range.min = range.max = std::stoul(text);
    } else {
      range.min = std::stoul(text.substr(0, dash));
      range.max = std::stoul(text.substr(dash + 1));
    }
  } catch (const std::exception&) {
    throw Failure{kExitUsage, "--children expects C or LO-HI, got '" + text + "'"};
  }
  return range;
}

int RunGenRandom(const mp_sim_config& config, const std::string& output,
                 const std::string& truth_path) {
  mp_population* raw = nullptr;
  char* truth_raw = nullptr;
  Check(mp_gen_random(&config, &raw, &truth_raw));
  Population population(raw);
  const std::string truth = Take(truth_raw);
  char* text = nullptr;
  Check(mp_population_serialize(population.get(), &text));
  Emit(output, Take(text));
  if (!truth_path.empty()) Emit(truth_path, truth);
  return kExitOk;
}

int RunReduceTp(const std::string& graph, const std::string& output) {
  mp_population* raw = nullptr;
  Check(mp_reduce_tp(ReadFile(graph).c_str(), &raw));
  Population population(raw);
  char* text = nullptr;
  Check(mp_population_serialize(population.get(), &text));
  Emit(output, Take(text));
  return kExitOk;
}

int RunReduceMinRep(const std::string& minrep, const std::string& directory,
                    bool faithful) {
  mp_fmp_instance* raw = nullptr;
  Check(mp_reduce_minrep(ReadFile(minrep).c_str(), faithful ? 1 : 0, &raw));
  Instance instance(raw);
  char* universe = nullptr;
  char* pool = nullptr;
  char* partition = nullptr;
  Check(mp_fmp_serialize(instance.get(), &universe, &pool, &partition));
  const std::string universe_text = Take(universe);
  const std::string pool_text = Take(pool);
  const std::string partition_text = Take(partition);
  if (directory.empty()) {
    std::cout << "== universe\n" << universe_text << "\n== pool\n" << pool_text
              << "\n== partition\n" << partition_text << '\n';
    return kExitOk;
  }
  std::filesystem::create_directories(directory);
  const std::filesystem::path dir(directory);
  Emit((dir / "universe.pop").string(), universe_text);
  Emit((dir / "pool.pop").string(), pool_text);
  Emit((dir / "partition.txt").string(), partition_text);
  std::cout << "universe " << mp_fmp_universe_size(instance.get()) << "\npool "
            << mp_fmp_pool_size(instance.get()) << "\nloci "
            << mp_fmp_num_loci(instance.get()) << "\ncells "
            << mp_fmp_cell_count(instance.get()) << '\n';
  return kExitOk;
}

int RunTpBrute(const std::string& graph) {
  char* text = nullptr;
  Check(mp_solve_tp_brute(ReadFile(graph).c_str(), nullptr, &text));
  std::cout << Take(text);
  return kExitOk;
}

int RunMinRepBrute(const std::string& minrep) {
  char* text = nullptr;
  Check(mp_solve_minrep_brute(ReadFile(minrep).c_str(), nullptr, &text));
  std::cout << Take(text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Benchmarks

// Manifest rows: "<suite> <instance> <algorithm> <c> [budget_ms]". Instances
// are population paths relative to the manifest, "tp:<graph path>" for a
// reduced triangle-packing graph, or
// "gen:<families>:<children>:<loci>:<alleles>:<seed>".
struct BenchRow {
  std::string suite;
  std::string instance;
  std::string algorithm;
  size_t c = 0;
  int64_t budget_ms = 60000;
};

std::vector<BenchRow> ReadManifest(const std::string& path) {
  std::istringstream in(ReadFile(path));
  std::vector<BenchRow> rows;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    BenchRow row;
    std::string c;
    if (!(fields >> row.suite) || row.suite.front() == '#') continue;
    if (!(fields >> row.instance >> row.algorithm >> c)) {
      throw Failure{kExitUsage, path + ":" + std::to_string(number) +
                                    ": expected '<suite> <instance> "
                                    "<algorithm> <c> [budget_ms]'"};
    }
    row.c = c == "-" ? 0 : std::stoul(c);
    fields >> row.budget_ms;
    rows.push_back(row);
  }
  return rows;
}

Population BenchPopulation(const std::string& instance,
                           const std::filesystem::path& base) {
  if (instance.rfind("gen:", 0) == 0) {
    const auto parts = SplitList(instance.substr(4), ':');
    if (parts.size() != 5) {
      throw Failure{kExitUsage, "bad generator spec '" + instance + "'"};
    }
    mp_sim_config config{};
    config.families = std::stoul(parts[0]);
    const ChildrenRange children = ParseChildren(parts[1]);
    config.children_min = children.min;
    config.children_max = children.max;
    config.loci = std::stoul(parts[2]);
    config.alleles_per_locus = std::stoul(parts[3]);
    config.seed = std::stoull(parts[4]);
    mp_population* raw = nullptr;
    Check(mp_gen_random(&config, &raw, nullptr));
    return Population(raw);
  }
  if (instance.rfind("tp:", 0) == 0) {
    mp_population* raw = nullptr;
    Check(mp_reduce_tp(ReadFile((base / instance.substr(3)).string()).c_str(),
                       &raw));
    return Population(raw);
  }
  return LoadPopulation((base / instance).string());
}

int RunBench(const std::string& suite, const std::string& manifest) {
  const auto rows = ReadManifest(manifest);
  const std::filesystem::path base =
      std::filesystem::path(manifest).parent_path();
  std::cout << "instance,n,l,algorithm,c,parents,optimal,oracle_calls,millis\n";
  size_t matched = 0;
  for (const BenchRow& row : rows) {
    if (row.suite != suite) continue;
    ++matched;
    Population population = BenchPopulation(row.instance, base);
    mp_solution* raw = nullptr;
    if (row.algorithm == "greedy") {
      Check(mp_solve_greedy(population.get(), row.c, &raw));
    } else if (row.algorithm == "exact") {
      Check(mp_solve_exact(population.get(), 64, row.budget_ms, &raw));
    } else {
      throw Failure{kExitUsage, "unknown algorithm '" + row.algorithm + "'"};
    }
    Solution solution(raw);
    std::cout << row.instance << ',' << mp_population_size(population.get())
              << ',' << mp_population_num_loci(population.get()) << ','
              << row.algorithm << ',';
    if (row.algorithm == "greedy") std::cout << row.c;
    std::cout << ',' << mp_solution_parent_count(solution.get()) << ','
              << (mp_solution_status(solution.get()) == MP_SOLVE_OPTIMAL
                      ? "true"
                      : "false")
              << ',' << mp_solution_oracle_calls(solution.get()) << ','
              << mp_solution_wall_ms(solution.get()) << '\n';
  }
  if (matched == 0) {
    throw Failure{kExitUsage, "no manifest rows for suite '" + suite + "'"};
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-parent sibling reconstruction solvers"};
  app.require_subcommand(1);

  std::string population_path;
  std::string members;
  bool show_parents = false;
  auto* check = app.add_subcommand("check", "Test whether individuals form a sibling set");
  check->add_option("population", population_path, "Population file")->required();
  check->add_option("--members", members, "Comma-separated ids")->required();
  check->add_flag("--parents", show_parents, "Also print two witnessing parents");

  size_t c = 2;
  auto* greedy = app.add_subcommand("solve-greedy", "Greedy cover with cap c");
  greedy->add_option("population", population_path, "Population file")->required();
  greedy->add_option("--c", c, "Subset-enumeration cap")->check(CLI::PositiveNumber);

  size_t max_slots = 64;
  int64_t budget_ms = 0;
  auto* exact = app.add_subcommand("solve-exact", "Exact minimum-parent cover");
  exact->add_option("population", population_path, "Population file")->required();
  exact->add_option("--max-slots", max_slots, "Largest parent count to try");
  exact->add_option("--budget-ms", budget_ms, "Time budget in ms (0: none)");

  std::string universe_path, pool_path, partition_path;
  bool use_exact = false;
  bool use_greedy = false;
  auto* find = app.add_subcommand("find-parents", "Choose parents for a fixed partition");
  find->add_option("universe", universe_path, "Universe population file")->required();
  find->add_option("pool", pool_path, "Candidate parent population file")->required();
  find->add_option("partition", partition_path, "Partition file")->required();
  auto* exact_flag = find->add_flag("--exact", use_exact, "Exhaustive search");
  auto* greedy_flag = find->add_flag("--greedy", use_greedy, "Greedy heuristic");
  exact_flag->excludes(greedy_flag);
  find->add_option("--budget-ms", budget_ms, "Time budget for --exact (0: none)");

  mp_sim_config sim{};
  sim.families = 1;
  sim.loci = 1;
  sim.alleles_per_locus = 2;
  std::string children = "1";
  std::string output;
  std::string truth_path;
  auto* gen = app.add_subcommand("gen-random", "Generate a synthetic population");
  gen->add_option("--families", sim.families)->required();
  gen->add_option("--children", children, "C or LO-HI")->required();
  gen->add_option("--loci", sim.loci)->required();
  gen->add_option("--alleles", sim.alleles_per_locus)->required();
  gen->add_option("--seed", sim.seed)->required();
  gen->add_option("-o", output, "Population output file (default stdout)");
  gen->add_option("--truth", truth_path, "Ground-truth family file");

  std::string graph_path;
  auto* reduce_tp = app.add_subcommand("reduce-tp", "Triangle packing to MIN-PARENT");
  reduce_tp->add_option("graph", graph_path, "Graph file")->required();
  reduce_tp->add_option("-o", output, "Population output file (default stdout)");

  std::string minrep_path;
  bool faithful = false;
  auto* reduce_minrep =
      app.add_subcommand("reduce-minrep", "MINREP to FIND-MIN-PARENT");
  reduce_minrep->add_option("minrep", minrep_path, "MINREP file")->required();
  reduce_minrep->add_option("-o", output,
                            "Output directory (universe.pop, pool.pop, partition.txt)");
  reduce_minrep->add_flag("--faithful", faithful,
                          "One non-edge locus per (pair, individual)");

  auto* tp_brute = app.add_subcommand("solve-tp-brute", "Exhaustive triangle packing");
  tp_brute->add_option("graph", graph_path, "Graph file")->required();

  auto* minrep_brute = app.add_subcommand("solve-minrep-brute", "Exhaustive MINREP");
  minrep_brute->add_option("minrep", minrep_path, "MINREP file")->required();

  std::string suite = "smoke";
  std::string manifest = MINPARENT_DEFAULT_MANIFEST;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite, CSV to stdout");
  bench->add_option("--suite", suite, "Suite name from the manifest");
  bench->add_option("--manifest", manifest, "Manifest file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return RunCheck(population_path, members, show_parents);
    if (*greedy) return RunSolveGreedy(population_path, c);
    if (*exact) return RunSolveExact(population_path, max_slots, budget_ms);
    if (*find) {
      if (!use_exact && !use_greedy) {
        std::cerr << "find-parents: pass --exact or --greedy\n";
        return kExitUsage;
      }
      return RunFindParents(universe_path, pool_path, partition_path,
                            use_greedy, budget_ms);
    }
    if (*gen) {
      const ChildrenRange range = ParseChildren(children);
      sim.children_min = range.min;
      sim.children_max = range.max;
      return RunGenRandom(sim, output, truth_path);
    }
    if (*reduce_tp) return RunReduceTp(graph_path, output);
    if (*reduce_minrep) return RunReduceMinRep(minrep_path, output, faithful);
    if (*tp_brute) return RunTpBrute(graph_path);
    if (*minrep_brute) return RunMinRepBrute(minrep_path);
    if (*bench) return RunBench(suite, manifest);
  } catch (const Failure& f) {
    std::cerr << "minparent: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "minparent: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
