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

#include "minparent/minparent.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "minparent/error.hpp"
#include "minparent/exact.hpp"
#include "minparent/genotypes.hpp"
#include "minparent/greedy.hpp"
#include "minparent/mendel.hpp"
#include "minparent/reductions.hpp"
#include "minparent/report.hpp"
#include "minparent/simgen.hpp"

struct mp_population {
  minparent::Population value;
};

struct mp_solution {
  minparent::CoverSolution value;
  std::string report;
  std::int64_t wall_ms = 0;
};

struct mp_fmp_instance {
  minparent::FindMinParentInstance value;
};

struct mp_selection {
  minparent::ParentSelection value;
  std::string report;
  std::int64_t wall_ms = 0;
};

namespace {

using minparent::Error;
using minparent::ErrorCode;

thread_local std::string last_error;

mp_status Fail(mp_status status, const std::string& message) {
  last_error = message;
  return status;
}

mp_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return MP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse:
      return MP_ERR_PARSE;
    case ErrorCode::kIo:
      return MP_ERR_IO;
    case ErrorCode::kInfeasible:
      return MP_ERR_INFEASIBLE;
    case ErrorCode::kBudgetExceeded:
      return MP_ERR_BUDGET_EXCEEDED;
  }
  return MP_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
mp_status Guard(Body&& body) {
  try {
    last_error.clear();
    body();
    return MP_OK;
  } catch (const Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(MP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(MP_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(MP_ERR_INTERNAL, "unknown error");
  }
}

void Require(bool condition, const char* message) {
  if (!condition) minparent::ThrowInvalidArgument(message);
}

char* Duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

minparent::MemberSet Members(const size_t* members, size_t count) {
  Require(members != nullptr || count == 0, "members is null");
  return minparent::MemberSet(members, members + count);
}

mp_solve_status ToSolveStatus(minparent::SolveStatus status) {
  switch (status) {
    case minparent::SolveStatus::kOptimal:
      return MP_SOLVE_OPTIMAL;
    case minparent::SolveStatus::kFeasible:
      return MP_SOLVE_FEASIBLE;
    case minparent::SolveStatus::kInfeasible:
      return MP_SOLVE_INFEASIBLE;
  }
  return MP_SOLVE_INFEASIBLE;
}

std::optional<std::chrono::milliseconds> Budget(int64_t budget_ms) {
  if (budget_ms <= 0) return std::nullopt;
  return std::chrono::milliseconds(budget_ms);
}

template <typename Fn>
auto Timed(Fn&& fn, std::int64_t& wall_ms) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  return result;
}

mp_solution* MakeSolution(const minparent::Population& population,
                          minparent::CoverSolution solution,
                          std::int64_t wall_ms) {
  auto* out = new mp_solution{std::move(solution), {}, wall_ms};
  out->report =
      minparent::FormatReport(minparent::MakeReport(population, out->value, wall_ms));
  return out;
}

mp_selection* MakeSelection(const minparent::FindMinParentInstance& instance,
                            minparent::ParentSelection selection,
                            std::int64_t wall_ms) {
  auto* out = new mp_selection{std::move(selection), {}, wall_ms};
  out->report =
      minparent::FormatReport(minparent::MakeReport(instance, out->value, wall_ms));
  return out;
}

std::string VertexName(std::size_t index, char side) {
  return std::string(1, side) + std::to_string(index);
}

}  // namespace

extern "C" {

const char* mp_last_error(void) { return last_error.c_str(); }

const char* mp_status_name(mp_status status) {
  switch (status) {
    case MP_OK:
      return "ok";
    case MP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case MP_ERR_PARSE:
      return "parse error";
    case MP_ERR_IO:
      return "i/o error";
    case MP_ERR_INFEASIBLE:
      return "infeasible";
    case MP_ERR_BUDGET_EXCEEDED:
      return "budget exceeded";
    case MP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void mp_string_free(char* text) { std::free(text); }

mp_status mp_population_parse(const char* text, mp_population** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new mp_population{minparent::ParsePopulation(text)};
  });
}

mp_status mp_population_load(const char* path, mp_population** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new mp_population{minparent::LoadPopulation(path)};
  });
}

void mp_population_free(mp_population* population) { delete population; }

size_t mp_population_size(const mp_population* population) {
  return population == nullptr ? 0 : population->value.size();
}

size_t mp_population_num_loci(const mp_population* population) {
  return population == nullptr ? 0 : population->value.num_loci();
}

mp_status mp_population_index_of(const mp_population* population,
                                 const char* id, size_t* out_index) {
  return Guard([&] {
    Require(population != nullptr && id != nullptr && out_index != nullptr,
            "null argument");
    auto index = population->value.IndexOf(id);
    if (!index) {
      minparent::ThrowInvalidArgument("unknown individual '" + std::string(id) +
                                      "'");
    }
    *out_index = *index;
  });
}

mp_status mp_population_serialize(const mp_population* population,
                                  char** out_text) {
  return Guard([&] {
    Require(population != nullptr && out_text != nullptr, "null argument");
    *out_text = Duplicate(minparent::SerializePopulation(population->value));
  });
}

mp_status mp_is_sibling_set(const mp_population* population,
                            const size_t* members, size_t count,
                            int* out_result) {
  return Guard([&] {
    Require(population != nullptr && out_result != nullptr, "null argument");
    *out_result =
        minparent::IsSiblingSet(population->value, Members(members, count)) ? 1
                                                                            : 0;
  });
}

mp_status mp_materialize_parents(const mp_population* population,
                                 const size_t* members, size_t count,
                                 char** out_text) {
  return Guard([&] {
    Require(population != nullptr && out_text != nullptr, "null argument");
    auto parents =
        minparent::MaterializeParents(population->value, Members(members, count));
    minparent::Population pair(population->value.num_loci(),
                               {parents.first, parents.second});
    *out_text = Duplicate(minparent::SerializePopulation(pair));
  });
}

mp_status mp_solve_greedy(const mp_population* population, size_t c,
                          mp_solution** out) {
  return Guard([&] {
    Require(population != nullptr && out != nullptr, "null argument");
    std::int64_t wall_ms = 0;
    auto solution = Timed(
        [&] {
          return minparent::GreedyCover(population->value,
                                        minparent::GreedyConfig{c});
        },
        wall_ms);
    *out = MakeSolution(population->value, std::move(solution), wall_ms);
  });
}

mp_status mp_solve_exact(const mp_population* population, size_t max_slots,
                         int64_t budget_ms, mp_solution** out) {
  return Guard([&] {
    Require(population != nullptr && out != nullptr, "null argument");
    minparent::ExactLimits limits;
    limits.max_slots = max_slots;
    limits.time_budget = Budget(budget_ms);
    std::int64_t wall_ms = 0;
    auto solution = Timed(
        [&] { return minparent::ExactMinParent(population->value, limits); },
        wall_ms);
    *out = MakeSolution(population->value, std::move(solution), wall_ms);
  });
}

void mp_solution_free(mp_solution* solution) { delete solution; }

mp_solve_status mp_solution_status(const mp_solution* solution) {
  return solution == nullptr ? MP_SOLVE_INFEASIBLE
                             : ToSolveStatus(solution->value.status);
}

size_t mp_solution_parent_count(const mp_solution* solution) {
  return solution == nullptr ? 0 : solution->value.parent_count();
}

size_t mp_solution_group_count(const mp_solution* solution) {
  return solution == nullptr ? 0 : solution->value.groups.size();
}

size_t mp_solution_max_group_size(const mp_solution* solution) {
  return solution == nullptr ? 0 : solution->value.max_group_size();
}

uint64_t mp_solution_oracle_calls(const mp_solution* solution) {
  return solution == nullptr ? 0 : solution->value.oracle_calls;
}

int64_t mp_solution_wall_ms(const mp_solution* solution) {
  return solution == nullptr ? 0 : solution->wall_ms;
}

mp_status mp_solution_report(const mp_solution* solution, char** out_text) {
  return Guard([&] {
    Require(solution != nullptr && out_text != nullptr, "null argument");
    *out_text = Duplicate(solution->report);
  });
}

mp_status mp_fmp_parse(const char* universe_text, const char* pool_text,
                       const char* partition_text, mp_fmp_instance** out) {
  return Guard([&] {
    Require(universe_text != nullptr && pool_text != nullptr &&
                partition_text != nullptr && out != nullptr,
            "null argument");
    minparent::Population universe = minparent::ParsePopulation(universe_text);
    minparent::Population pool = minparent::ParsePopulation(pool_text);
    auto partition = minparent::ParsePartition(partition_text, universe);
    *out = new mp_fmp_instance{minparent::FindMinParentInstance(
        std::move(universe), std::move(pool), std::move(partition))};
  });
}

void mp_fmp_free(mp_fmp_instance* instance) { delete instance; }

size_t mp_fmp_universe_size(const mp_fmp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.universe().size();
}

size_t mp_fmp_pool_size(const mp_fmp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.pool().size();
}

size_t mp_fmp_cell_count(const mp_fmp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.partition().size();
}

size_t mp_fmp_num_loci(const mp_fmp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.universe().num_loci();
}

mp_status mp_fmp_serialize(const mp_fmp_instance* instance,
                           char** out_universe, char** out_pool,
                           char** out_partition) {
  return Guard([&] {
    Require(instance != nullptr && out_universe != nullptr &&
                out_pool != nullptr && out_partition != nullptr,
            "null argument");
    const auto& value = instance->value;
    std::string universe = minparent::SerializePopulation(value.universe());
    std::string pool = minparent::SerializePopulation(value.pool());
    std::string partition =
        minparent::SerializePartition(value.partition(), value.universe());
    *out_universe = Duplicate(universe);
    *out_pool = Duplicate(pool);
    *out_partition = Duplicate(partition);
  });
}

mp_status mp_find_parents_exact(const mp_fmp_instance* instance,
                                int64_t budget_ms, mp_selection** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    minparent::ExactLimits limits;
    limits.time_budget = Budget(budget_ms);
    std::int64_t wall_ms = 0;
    auto selection = Timed(
        [&] { return minparent::ExactFindMinParent(instance->value, limits); },
        wall_ms);
    *out = MakeSelection(instance->value, std::move(selection), wall_ms);
  });
}

mp_status mp_find_parents_greedy(const mp_fmp_instance* instance,
                                 mp_selection** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    std::int64_t wall_ms = 0;
    auto selection = Timed(
        [&] { return minparent::GreedyFindMinParent(instance->value); },
        wall_ms);
    *out = MakeSelection(instance->value, std::move(selection), wall_ms);
  });
}

void mp_selection_free(mp_selection* selection) { delete selection; }

mp_solve_status mp_selection_status(const mp_selection* selection) {
  return selection == nullptr ? MP_SOLVE_INFEASIBLE
                              : ToSolveStatus(selection->value.status);
}

size_t mp_selection_size(const mp_selection* selection) {
  return selection == nullptr ? 0 : selection->value.size();
}

int64_t mp_selection_wall_ms(const mp_selection* selection) {
  return selection == nullptr ? 0 : selection->wall_ms;
}

mp_status mp_selection_report(const mp_selection* selection, char** out_text) {
  return Guard([&] {
    Require(selection != nullptr && out_text != nullptr, "null argument");
    *out_text = Duplicate(selection->report);
  });
}

mp_status mp_reduce_tp(const char* graph_text, mp_population** out) {
  return Guard([&] {
    Require(graph_text != nullptr && out != nullptr, "null argument");
    *out = new mp_population{
        minparent::ReduceTriangles(minparent::ParseGraph(graph_text))};
  });
}

mp_status mp_reduce_minrep(const char* minrep_text, int faithful,
                           mp_fmp_instance** out) {
  return Guard([&] {
    Require(minrep_text != nullptr && out != nullptr, "null argument");
    const auto mode = faithful != 0 ? minparent::NonEdgeMode::kFaithful
                                    : minparent::NonEdgeMode::kCompact;
    *out = new mp_fmp_instance{
        minparent::ReduceMinRep(minparent::ParseMinRep(minrep_text), mode)};
  });
}

mp_status mp_solve_tp_brute(const char* graph_text, size_t* out_t,
                            char** out_text) {
  return Guard([&] {
    Require(graph_text != nullptr, "null argument");
    const auto packing =
        minparent::BruteTrianglePacking(minparent::ParseGraph(graph_text));
    if (out_t != nullptr) *out_t = packing.t();
    if (out_text != nullptr) {
      std::string text = "t " + std::to_string(packing.t()) + "\n";
      for (const auto& tri : packing.triangles) {
        text += "triangle " + std::to_string(tri[0]) + " " +
                std::to_string(tri[1]) + " " + std::to_string(tri[2]) + "\n";
      }
      *out_text = Duplicate(text);
    }
  });
}

mp_status mp_solve_minrep_brute(const char* minrep_text, size_t* out_gamma,
                                char** out_text) {
  return Guard([&] {
    Require(minrep_text != nullptr, "null argument");
    const auto solution =
        minparent::BruteMinRep(minparent::ParseMinRep(minrep_text));
    if (out_gamma != nullptr) *out_gamma = solution.gamma;
    if (out_text != nullptr) {
      std::string text = "gamma " + std::to_string(solution.gamma) + "\nwitness";
      for (std::size_t a : solution.a_vertices) text += " " + VertexName(a, 'a');
      for (std::size_t b : solution.b_vertices) text += " " + VertexName(b, 'b');
      text += "\n";
      *out_text = Duplicate(text);
    }
  });
}

mp_status mp_gen_random(const mp_sim_config* config,
                        mp_population** out_population, char** out_truth) {
  return Guard([&] {
    Require(config != nullptr && out_population != nullptr, "null argument");
    minparent::SimConfig sim_config;
    sim_config.families = config->families;
    sim_config.children_min = config->children_min;
    sim_config.children_max = config->children_max;
    sim_config.loci = config->loci;
    sim_config.alleles_per_locus = config->alleles_per_locus;
    sim_config.seed = config->seed;
    auto sim = minparent::RandomPopulation(sim_config);
    char* truth = nullptr;
    if (out_truth != nullptr) truth = Duplicate(minparent::SerializeTruth(sim));
    *out_population = new mp_population{std::move(sim.population)};
    if (out_truth != nullptr) *out_truth = truth;
  });
}

}  // extern "C"
