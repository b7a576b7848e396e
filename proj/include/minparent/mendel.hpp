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

// The sibling-set oracle: Mendelian child checks, per-locus parent-pair
// feasibility, sibling-set feasibility and parent materialization.
//
// A parent contributes exactly one allele per locus to each child, so every
// contributed allele is observed in some child. Parent alleles that are never
// contributed can all be replaced by one fresh symbol (the wildcard,
// max observed allele + 1) without changing feasibility. Enumerating parent
// genotypes over the observed alleles plus that wildcard is therefore
// complete. Loci are independent, since a parent is an arbitrary sequence of
// per-locus genotypes.

#ifndef MINPARENT_MENDEL_HPP_
#define MINPARENT_MENDEL_HPP_

#include <atomic>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minparent/genotypes.hpp"

namespace minparent {

// True iff one allele of `child` can come from `a` and the other from `b`.
constexpr bool CanBeChildAtLocus(Genotype child, Genotype a, Genotype b) {
  return (a.Contains(child.lo) && b.Contains(child.hi)) ||
         (a.Contains(child.hi) && b.Contains(child.lo));
}

// Throws Error(kInvalidArgument) if locus counts differ.
bool CanBeChildOf(const Individual& child, const Individual& a,
                  const Individual& b);

// Unordered pair of parent genotypes at one locus, first <= second.
struct LocusParentPair {
  Genotype first;
  Genotype second;

  static LocusParentPair Of(Genotype a, Genotype b) {
    return a <= b ? LocusParentPair{a, b} : LocusParentPair{b, a};
  }

  friend auto operator<=>(const LocusParentPair&,
                          const LocusParentPair&) = default;
};

// Max observed allele + 1, or 0 for an empty column.
Allele WildcardFor(std::span<const Genotype> children);

// Sorted distinct observed alleles followed by the wildcard.
std::vector<Allele> LocusDomain(std::span<const Genotype> children);

// Every genotype over `domain` in lexicographic order.
std::vector<Genotype> GenotypesOver(std::span<const Allele> domain);

// All unordered parent-genotype pairs over the locus domain that can produce
// every child, in lexicographic order. Empty iff no parent pair over any
// allele universe exists.
std::vector<LocusParentPair> LocusFeasible(std::span<const Genotype> children);

// Same answer as !LocusFeasible(children).empty(), with early exit.
bool LocusHasParents(std::span<const Genotype> children);

// Counts oracle invocations. Increments are atomic so the total is exact
// under concurrent use.
class OracleCounter {
 public:
  void Increment() { calls_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t count() const { return calls_.load(std::memory_order_relaxed); }
  void Reset() { calls_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> calls_{0};
};

// The oracle: is there a pair of parents producing every listed member?
// Throws Error(kInvalidArgument) on an out-of-range index. Each call
// increments `counter` when one is given.
bool IsSiblingSet(const Population& population,
                  std::span<const std::size_t> members,
                  OracleCounter* counter = nullptr);

// Two parents producing every member. Per locus the first pair of
// LocusFeasible is used. Throws Error(kInvalidArgument) if `members` is not a
// sibling set.
std::pair<Individual, Individual> MaterializeParents(
    const Population& population, std::span<const std::size_t> members,
    const std::string& first_id = "P0", const std::string& second_id = "P1");

// Reference oracle for small inputs: enumerates parent pairs jointly across
// all loci over the observed alleles plus wildcard and tests each member with
// CanBeChildOf on whole individuals. Exponential in the locus count.
bool BruteSiblingCheck(const Population& population,
                       std::span<const std::size_t> members);

// Checks every CoverSolution invariant against `population`: the groups
// partition it, family slots are distinct and in range, and every member is a
// child of its family's materialized parents. Throws Error(kInvalidArgument)
// describing the first violation.
void VerifyCoverSolution(const Population& population,
                         const CoverSolution& solution);

}  // namespace minparent

#endif  // MINPARENT_MENDEL_HPP_
