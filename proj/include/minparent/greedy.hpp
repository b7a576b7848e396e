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

// Greedy cover with subset-enumeration cap c: repeatedly pick a maximum
// sibling subset of size at most c among the uncovered individuals and give
// it two fresh parents.

#ifndef MINPARENT_GREEDY_HPP_
#define MINPARENT_GREEDY_HPP_

#include <cstddef>

#include "minparent/genotypes.hpp"
#include "minparent/mendel.hpp"

namespace minparent {

struct GreedyConfig {
  std::size_t c = 2;
};

// Largest sibling subset of `uncovered` with at most c members; ties go to the
// lexicographically smallest sorted index tuple. Sizes are scanned downwards,
// which is correct because every subset of a sibling set is one too.
// Throws Error(kInvalidArgument) if `uncovered` is empty or c == 0.
MemberSet NextGroup(const Population& population, const MemberSet& uncovered,
                    const GreedyConfig& config,
                    OracleCounter* counter = nullptr);

// Runs NextGroup until everything is covered. Group g gets slots 2g and 2g+1.
// `oracle_calls` in the result counts the IsSiblingSet calls of this run.
CoverSolution GreedyCover(const Population& population,
                          const GreedyConfig& config);

}  // namespace minparent

#endif  // MINPARENT_GREEDY_HPP_
