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

// Core domain types: genotypes, individuals, populations, cover solutions and
// FIND-MIN-PARENT instances, plus the canonical text formats.

#ifndef MINPARENT_GENOTYPES_HPP_
#define MINPARENT_GENOTYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minparent {

using Allele = std::uint32_t;

// Unordered pair of alleles at one locus, stored with lo <= hi so that
// multiset equality is plain field equality.
struct Genotype {
  Allele lo = 0;
  Allele hi = 0;

  static constexpr Genotype Of(Allele a, Allele b) {
    return a <= b ? Genotype{a, b} : Genotype{b, a};
  }
  static constexpr Genotype Homozygous(Allele a) { return Genotype{a, a}; }

  constexpr bool Contains(Allele a) const { return lo == a || hi == a; }

  friend constexpr auto operator<=>(const Genotype&,
                                    const Genotype&) = default;
};

// "lo/hi".
std::string ToString(const Genotype& g);

struct Individual {
  std::string id;
  std::vector<Genotype> loci;

  friend bool operator==(const Individual&, const Individual&) = default;
};

// Sorted, duplicate-free indices into a population.
using MemberSet = std::vector<std::size_t>;

// An immutable set of individuals sharing a locus count. Ids are unique.
class Population {
 public:
  Population() = default;
  // Throws Error(kInvalidArgument) on duplicate ids, bad ids or a member whose
  // locus count differs from `num_loci`.
  Population(std::size_t num_loci, std::vector<Individual> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t num_loci() const { return num_loci_; }
  const std::vector<Individual>& members() const { return members_; }
  const Individual& operator[](std::size_t i) const { return members_[i]; }

  std::optional<std::size_t> IndexOf(std::string_view id) const;

  // Genotypes of `members` at one locus, in member order.
  std::vector<Genotype> LocusColumn(std::size_t locus,
                                    const MemberSet& members) const;

  // Population restricted to `members` (kept in the given order).
  Population Subset(const MemberSet& members) const;

  friend bool operator==(const Population&, const Population&) = default;

 private:
  std::size_t num_loci_ = 0;
  std::vector<Individual> members_;
};

// Population text format: optional '#' comment lines and blank lines, a header
// line "n l", then n lines "ID a0/b0 ... a(l-1)/b(l-1)". Errors carry the line
// number.
Population ParsePopulation(std::string_view text);

// Canonical form: single spaces, lo/hi order, '\n' between lines, no trailing
// newline.
std::string SerializePopulation(const Population& population);

Population LoadPopulation(const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

enum class SolveStatus { kOptimal, kFeasible, kInfeasible };

std::string_view ToString(SolveStatus status);
std::optional<SolveStatus> ParseSolveStatus(std::string_view text);

// Two distinct parent slots, stored with first < second.
struct SlotPair {
  std::size_t first = 0;
  std::size_t second = 0;

  static SlotPair Of(std::size_t a, std::size_t b) {
    return a <= b ? SlotPair{a, b} : SlotPair{b, a};
  }

  friend auto operator<=>(const SlotPair&, const SlotPair&) = default;
};

// A MIN-PARENT solution: a partition of the population into sibling groups,
// each mapped to a pair of parent slots whose genotypes are materialized.
// The objective is `slot_count`; slots are parent identities, so two slots
// with equal genotypes still count twice.
struct CoverSolution {
  std::vector<MemberSet> groups;
  std::size_t slot_count = 0;
  std::vector<SlotPair> family_of_group;
  std::vector<Individual> slot_genotypes;
  std::uint64_t oracle_calls = 0;
  SolveStatus status = SolveStatus::kFeasible;

  std::size_t parent_count() const { return slot_count; }
  std::size_t max_group_size() const;
};

// A FIND-MIN-PARENT input: a universe, a candidate parent pool and a
// partition of the universe into sibling sets.
class FindMinParentInstance {
 public:
  // Validates: pool and universe share the locus count, ids are disjoint, the
  // partition covers the universe exactly and every cell is a sibling set.
  FindMinParentInstance(Population universe, Population pool,
                        std::vector<MemberSet> partition);

  const Population& universe() const { return universe_; }
  const Population& pool() const { return pool_; }
  const std::vector<MemberSet>& partition() const { return partition_; }

 private:
  Population universe_;
  Population pool_;
  std::vector<MemberSet> partition_;
};

// Partition text format: one line per cell listing member ids; '#' comments
// and blank lines are ignored. Cells are returned with sorted indices.
std::vector<MemberSet> ParsePartition(std::string_view text,
                                      const Population& universe);
std::string SerializePartition(const std::vector<MemberSet>& partition,
                               const Population& universe);

}  // namespace minparent

#endif  // MINPARENT_GENOTYPES_HPP_
