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

// Exact desk-scale solvers.
//
// MIN-PARENT is searched as a slot/family problem: pick k parent slots and
// give every individual an unordered pair of distinct slots (its family). The
// individuals sharing a family form a sibling group, so minimizing k over
// feasible assignments equals minimizing parents over covers. Feasibility of
// an assignment decomposes per locus (a parent is an arbitrary sequence of
// per-locus genotypes), and per locus each slot's genotype can be drawn from
// the alleles of its own children plus one wildcard.
//
// FIND-MIN-PARENT is searched over subsets of the candidate pool by
// ascending size.

#ifndef MINPARENT_EXACT_HPP_
#define MINPARENT_EXACT_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "minparent/genotypes.hpp"

namespace minparent {

struct ExactLimits {
  std::size_t max_slots = 64;
  // No deadline when empty.
  std::optional<std::chrono::milliseconds> time_budget;
};

struct FamilyAssignment {
  std::size_t slot_count = 0;
  std::vector<SlotPair> family_of_member;
};

// Genotype per slot making every listed child derivable from its family at
// this locus, or nullopt. `children[i]` belongs to `families[i]`; slot
// genotypes use alleles from `domain` only, and the last domain entry is
// treated as the wildcard. Slots without children get wildcard homozygotes.
std::optional<std::vector<Genotype>> LocusSlotAssignment(
    std::span<const Genotype> children, std::span<const SlotPair> families,
    std::size_t slot_count, std::span<const Allele> domain);

bool LocusSlotAssignmentExists(std::span<const Genotype> children,
                               const FamilyAssignment& assignment,
                               std::span<const Allele> domain);

// Minimum-parent cover. Slots are tried for k = 2, 3, ... with canonical
// symmetry breaking (individual 0 takes slots (0,1), a new slot index is used
// only after every smaller one). Returns status kOptimal when the search
// finishes; on timeout, or when max_slots is too small, returns the best
// greedy cover with status kFeasible.
CoverSolution ExactMinParent(const Population& population,
                             const ExactLimits& limits = {});

// A FIND-MIN-PARENT answer. `pair_of_group[c]` indexes into the pool and both
// entries lie in `chosen`.
struct ParentSelection {
  MemberSet chosen;
  std::vector<SlotPair> pair_of_group;
  SolveStatus status = SolveStatus::kFeasible;

  std::size_t size() const { return chosen.size(); }
};

// All pool pairs (i < j) producing every member of `cell`, lexicographic.
std::vector<SlotPair> FeasiblePairsForGroup(const FindMinParentInstance& instance,
                                            const MemberSet& cell);

// Minimum chosen subset of the pool, ties broken by the lexicographically
// smallest index set. Throws Error(kInfeasible) when some cell has no
// feasible pair and Error(kBudgetExceeded) on timeout.
ParentSelection ExactFindMinParent(const FindMinParentInstance& instance,
                                   const ExactLimits& limits = {});

// Repeatedly adds the pool pair feasible for the most unserved cells. No
// approximation guarantee. Throws Error(kInfeasible).
ParentSelection GreedyFindMinParent(const FindMinParentInstance& instance);

// Throws Error(kInvalidArgument) unless every cell is produced by its pair
// and every pair lies inside `chosen`.
void VerifyParentSelection(const FindMinParentInstance& instance,
                           const ParentSelection& selection);

}  // namespace minparent

#endif  // MINPARENT_EXACT_HPP_
