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

#include "minparent/greedy.hpp"

#include <algorithm>
#include <string>

#include "minparent/error.hpp"

namespace minparent {
namespace {

// Advances `positions` (strictly increasing indices into a range of size n)
// to the next combination in lexicographic order.
bool NextCombination(std::vector<std::size_t>& positions, std::size_t n) {
  const std::size_t k = positions.size();
  for (std::size_t i = k; i-- > 0;) {
    if (positions[i] < n - k + i) {
      ++positions[i];
      for (std::size_t j = i + 1; j < k; ++j) positions[j] = positions[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

MemberSet NextGroup(const Population& population, const MemberSet& uncovered,
                    const GreedyConfig& config, OracleCounter* counter) {
  if (config.c == 0) ThrowInvalidArgument("greedy cap c must be at least 1");
  if (uncovered.empty()) ThrowInvalidArgument("no uncovered individuals");
  MemberSet pool = uncovered;
  std::sort(pool.begin(), pool.end());

  const std::size_t top = std::min(config.c, pool.size());
  MemberSet candidate;
  for (std::size_t size = top; size >= 1; --size) {
    std::vector<std::size_t> positions(size);
    for (std::size_t i = 0; i < size; ++i) positions[i] = i;
    do {
      candidate.clear();
      for (std::size_t p : positions) candidate.push_back(pool[p]);
      if (IsSiblingSet(population, candidate, counter)) return candidate;
    } while (NextCombination(positions, pool.size()));
  }
  // Singletons are always sibling sets, so the loop returns.
  ThrowInvalidArgument("no sibling subset found");
}

CoverSolution GreedyCover(const Population& population,
                          const GreedyConfig& config) {
  if (config.c == 0) ThrowInvalidArgument("greedy cap c must be at least 1");
  OracleCounter counter;
  CoverSolution solution;
  MemberSet uncovered(population.size());
  for (std::size_t i = 0; i < uncovered.size(); ++i) uncovered[i] = i;

  while (!uncovered.empty()) {
    MemberSet group = NextGroup(population, uncovered, config, &counter);
    const std::size_t first = solution.slot_count;
    auto parents = MaterializeParents(population, group,
                                      "P" + std::to_string(first),
                                      "P" + std::to_string(first + 1));
    solution.slot_genotypes.push_back(std::move(parents.first));
    solution.slot_genotypes.push_back(std::move(parents.second));
    solution.family_of_group.push_back(SlotPair{first, first + 1});
    solution.slot_count += 2;

    MemberSet rest;
    std::set_difference(uncovered.begin(), uncovered.end(), group.begin(),
                        group.end(), std::back_inserter(rest));
    uncovered = std::move(rest);
    solution.groups.push_back(std::move(group));
  }
  solution.oracle_calls = counter.count();
  solution.status = SolveStatus::kFeasible;
  return solution;
}

}  // namespace minparent
