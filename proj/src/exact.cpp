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

#include "minparent/exact.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "minparent/error.hpp"
#include "minparent/greedy.hpp"
#include "minparent/mendel.hpp"

namespace minparent {
namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::milliseconds>& budget) {
    if (budget) end_ = Clock::now() + *budget;
  }

  // Consults the clock every 256 calls.
  bool Expired() {
    if (!end_) return false;
    if ((++ticks_ & 0xff) != 0) return false;
    return Clock::now() >= *end_;
  }

 private:
  std::optional<Clock::time_point> end_;
  std::uint64_t ticks_ = 0;
};

struct BudgetExceeded {};

// Backtracking over slots for one locus.
class LocusSolver {
 public:
  LocusSolver(std::span<const Genotype> children,
              std::span<const SlotPair> families, std::size_t slot_count,
              std::span<const Allele> domain)
      : children_(children), families_(families), slot_count_(slot_count) {
    wildcard_ = domain.empty() ? 0 : domain.back();
    kids_.resize(slot_count);
    for (std::size_t i = 0; i < families.size(); ++i) {
      kids_[families[i].first].push_back(i);
      kids_[families[i].second].push_back(i);
    }
    ok_ = BuildCandidates(domain);
    if (ok_) BuildOrder();
  }

  std::optional<std::vector<Genotype>> Solve() {
    if (!ok_) return std::nullopt;
    genotype_.assign(slot_count_, Genotype{});
    assigned_.assign(slot_count_, false);
    if (!Search(0)) return std::nullopt;
    return genotype_;
  }

 private:
  bool BuildCandidates(std::span<const Allele> domain) {
    candidates_.resize(slot_count_);
    for (std::size_t s = 0; s < slot_count_; ++s) {
      if (kids_[s].empty()) {
        candidates_[s] = {Genotype::Homozygous(wildcard_)};
        continue;
      }
      std::vector<Allele> alleles;
      for (std::size_t i : kids_[s]) {
        alleles.push_back(children_[i].lo);
        alleles.push_back(children_[i].hi);
      }
      std::sort(alleles.begin(), alleles.end());
      alleles.erase(std::unique(alleles.begin(), alleles.end()),
                    alleles.end());
      // Alleles outside the domain cannot be used.
      std::erase_if(alleles, [&](Allele a) {
        return std::find(domain.begin(), domain.end(), a) == domain.end();
      });
      alleles.push_back(wildcard_);
      for (std::size_t x = 0; x < alleles.size(); ++x) {
        for (std::size_t y = x; y < alleles.size(); ++y) {
          const Genotype g = Genotype::Of(alleles[x], alleles[y]);
          const bool hits_all =
              std::all_of(kids_[s].begin(), kids_[s].end(), [&](std::size_t i) {
                return g.Contains(children_[i].lo) ||
                       g.Contains(children_[i].hi);
              });
          if (hits_all) candidates_[s].push_back(g);
        }
      }
      if (candidates_[s].empty()) return false;
      std::sort(candidates_[s].begin(), candidates_[s].end());
    }
    return true;
  }

  // Most-constrained-first order that keeps each next slot connected to the
  // ones already placed, so member checks fire early.
  void BuildOrder() {
    std::vector<bool> placed(slot_count_, false);
    std::vector<std::size_t> links(slot_count_, 0);
    for (std::size_t step = 0; step < slot_count_; ++step) {
      std::size_t best = slot_count_;
      for (std::size_t s = 0; s < slot_count_; ++s) {
        if (placed[s]) continue;
        if (best == slot_count_ || links[s] > links[best] ||
            (links[s] == links[best] &&
             candidates_[s].size() < candidates_[best].size())) {
          best = s;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t i : kids_[best]) {
        const SlotPair f = families_[i];
        const std::size_t other = f.first == best ? f.second : f.first;
        if (!placed[other]) ++links[other];
      }
    }
  }

  bool Search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t slot = order_[depth];
    for (const Genotype& g : candidates_[slot]) {
      bool consistent = true;
      for (std::size_t i : kids_[slot]) {
        const SlotPair f = families_[i];
        const std::size_t other = f.first == slot ? f.second : f.first;
        if (assigned_[other] &&
            !CanBeChildAtLocus(children_[i], g, genotype_[other])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      genotype_[slot] = g;
      assigned_[slot] = true;
      if (Search(depth + 1)) return true;
      assigned_[slot] = false;
    }
    return false;
  }

  std::span<const Genotype> children_;
  std::span<const SlotPair> families_;
  std::size_t slot_count_;
  Allele wildcard_ = 0;
  bool ok_ = false;
  std::vector<std::vector<std::size_t>> kids_;
  std::vector<std::vector<Genotype>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<Genotype> genotype_;
  std::vector<bool> assigned_;
};

// Depth-first search over canonical family assignments for a fixed k.
class SlotSearch {
 public:
  SlotSearch(const Population& population, Deadline& deadline)
      : population_(population), deadline_(deadline) {
    MemberSet everyone(population.size());
    for (std::size_t i = 0; i < everyone.size(); ++i) everyone[i] = i;
    for (std::size_t j = 0; j < population.num_loci(); ++j) {
      columns_.push_back(population.LocusColumn(j, everyone));
      domains_.push_back(LocusDomain(columns_.back()));
    }
    families_.resize(population.size());
  }

  // Throws BudgetExceeded.
  bool Run(std::size_t k) {
    slot_limit_ = k;
    return Assign(0, 0);
  }

  const std::vector<SlotPair>& families() const { return families_; }
  const std::vector<std::vector<Genotype>>& columns() const { return columns_; }
  const std::vector<std::vector<Allele>>& domains() const { return domains_; }

 private:
  bool Assign(std::size_t member, std::size_t used) {
    if (member == population_.size()) return true;
    if (deadline_.Expired()) throw BudgetExceeded{};
    // Existing slot pairs first, then one fresh slot, then two.
    for (std::size_t b = 1; b <= used && b < slot_limit_; ++b) {
      const bool fresh_b = b == used;
      for (std::size_t a = 0; a < b && a < used; ++a) {
        families_[member] = SlotPair{a, b};
        const std::size_t next_used = fresh_b ? used + 1 : used;
        if (Consistent(member + 1) && Assign(member + 1, next_used)) {
          return true;
        }
      }
    }
    if (used + 2 <= slot_limit_) {
      // Two fresh slots hold only this member, so nothing can conflict.
      families_[member] = SlotPair{used, used + 1};
      if (Assign(member + 1, used + 2)) return true;
    }
    return false;
  }

  bool Consistent(std::size_t prefix) {
    const std::span<const SlotPair> families(families_.data(), prefix);
    std::size_t slots = 0;
    for (const SlotPair& f : families) slots = std::max(slots, f.second + 1);
    const std::size_t num_loci = columns_.size();
    // The locus that failed last time is the likeliest to fail again.
    for (std::size_t step = 0; step < num_loci; ++step) {
      const std::size_t j = (last_failed_ + step) % num_loci;
      const std::span<const Genotype> children(columns_[j].data(), prefix);
      if (!LocusSolver(children, families, slots, domains_[j]).Solve()) {
        last_failed_ = j;
        return false;
      }
    }
    return true;
  }

  const Population& population_;
  Deadline& deadline_;
  std::vector<std::vector<Genotype>> columns_;
  std::vector<std::vector<Allele>> domains_;
  std::vector<SlotPair> families_;
  std::size_t slot_limit_ = 0;
  std::size_t last_failed_ = 0;
};

CoverSolution BuildCover(const Population& population,
                         const std::vector<SlotPair>& families,
                         const std::vector<std::vector<Genotype>>& columns,
                         const std::vector<std::vector<Allele>>& domains) {
  CoverSolution solution;
  std::size_t slots = 0;
  for (const SlotPair& f : families) slots = std::max(slots, f.second + 1);
  solution.slot_count = slots;
  for (std::size_t s = 0; s < slots; ++s) {
    solution.slot_genotypes.push_back(
        Individual{"P" + std::to_string(s), {}});
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto witness = LocusSlotAssignment(columns[j], families, slots, domains[j]);
    if (!witness) ThrowInvalidArgument("internal: assignment lost a witness");
    for (std::size_t s = 0; s < slots; ++s) {
      solution.slot_genotypes[s].loci.push_back((*witness)[s]);
    }
  }
  std::map<SlotPair, std::size_t> group_of_family;
  for (std::size_t m = 0; m < population.size(); ++m) {
    auto [it, inserted] =
        group_of_family.emplace(families[m], solution.groups.size());
    if (inserted) {
      solution.groups.emplace_back();
      solution.family_of_group.push_back(families[m]);
    }
    solution.groups[it->second].push_back(m);
  }
  return solution;
}

CoverSolution Fallback(const Population& population) {
  CoverSolution best = GreedyCover(population, GreedyConfig{3});
  best.status = SolveStatus::kFeasible;
  return best;
}

}  // namespace

std::optional<std::vector<Genotype>> LocusSlotAssignment(
    std::span<const Genotype> children, std::span<const SlotPair> families,
    std::size_t slot_count, std::span<const Allele> domain) {
  if (children.size() != families.size()) {
    ThrowInvalidArgument("children and families differ in length");
  }
  for (const SlotPair& f : families) {
    if (f.first == f.second || f.first >= slot_count ||
        f.second >= slot_count) {
      ThrowInvalidArgument("family slots must be distinct and below k");
    }
  }
  return LocusSolver(children, families, slot_count, domain).Solve();
}

bool LocusSlotAssignmentExists(std::span<const Genotype> children,
                               const FamilyAssignment& assignment,
                               std::span<const Allele> domain) {
  return LocusSlotAssignment(children, assignment.family_of_member,
                             assignment.slot_count, domain)
      .has_value();
}

CoverSolution ExactMinParent(const Population& population,
                             const ExactLimits& limits) {
  if (population.empty()) {
    CoverSolution empty;
    empty.status = SolveStatus::kOptimal;
    return empty;
  }
  Deadline deadline(limits.time_budget);
  SlotSearch search(population, deadline);
  try {
    for (std::size_t k = 2; k <= limits.max_slots; ++k) {
      if (search.Run(k)) {
        CoverSolution solution = BuildCover(population, search.families(),
                                            search.columns(), search.domains());
        solution.status = SolveStatus::kOptimal;
        return solution;
      }
    }
  } catch (const BudgetExceeded&) {
    return Fallback(population);
  }
  return Fallback(population);
}

std::vector<SlotPair> FeasiblePairsForGroup(
    const FindMinParentInstance& instance, const MemberSet& cell) {
  const Population& pool = instance.pool();
  const Population& universe = instance.universe();
  std::vector<SlotPair> pairs;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const bool produces_all =
          std::all_of(cell.begin(), cell.end(), [&](std::size_t m) {
            return CanBeChildOf(universe[m], pool[i], pool[j]);
          });
      if (produces_all) pairs.push_back(SlotPair{i, j});
    }
  }
  return pairs;
}

namespace {

std::vector<std::vector<SlotPair>> AllFeasiblePairs(
    const FindMinParentInstance& instance) {
  std::vector<std::vector<SlotPair>> feasible;
  for (std::size_t c = 0; c < instance.partition().size(); ++c) {
    feasible.push_back(FeasiblePairsForGroup(instance, instance.partition()[c]));
    if (feasible.back().empty()) {
      throw Error(ErrorCode::kInfeasible,
                  "partition cell " + std::to_string(c) +
                      " has no feasible parent pair in the pool");
    }
  }
  return feasible;
}

// First pair of each cell lying inside `chosen`, or nullopt if a cell has none.
std::optional<std::vector<SlotPair>> PairsWithin(
    const std::vector<std::vector<SlotPair>>& feasible,
    const std::vector<bool>& chosen) {
  std::vector<SlotPair> pairs;
  pairs.reserve(feasible.size());
  for (const auto& options : feasible) {
    auto it = std::find_if(options.begin(), options.end(), [&](SlotPair p) {
      return chosen[p.first] && chosen[p.second];
    });
    if (it == options.end()) return std::nullopt;
    pairs.push_back(*it);
  }
  return pairs;
}

}  // namespace

ParentSelection ExactFindMinParent(const FindMinParentInstance& instance,
                                   const ExactLimits& limits) {
  const auto feasible = AllFeasiblePairs(instance);
  const std::size_t pool_size = instance.pool().size();
  Deadline deadline(limits.time_budget);
  for (std::size_t size = 0; size <= pool_size; ++size) {
    std::vector<std::size_t> positions(size);
    for (std::size_t i = 0; i < size; ++i) positions[i] = i;
    while (true) {
      if (deadline.Expired()) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "time budget exceeded at subset size " +
                        std::to_string(size));
      }
      std::vector<bool> chosen(pool_size, false);
      for (std::size_t p : positions) chosen[p] = true;
      if (auto pairs = PairsWithin(feasible, chosen)) {
        ParentSelection selection;
        selection.chosen.assign(positions.begin(), positions.end());
        selection.pair_of_group = std::move(*pairs);
        selection.status = SolveStatus::kOptimal;
        return selection;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && positions[i - 1] == pool_size - size + i - 1) --i;
      if (i == 0) break;
      ++positions[i - 1];
      for (std::size_t t = i; t < size; ++t) positions[t] = positions[t - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInfeasible, "no subset of the pool serves every cell");
}

ParentSelection GreedyFindMinParent(const FindMinParentInstance& instance) {
  const auto feasible = AllFeasiblePairs(instance);
  const std::size_t pool_size = instance.pool().size();
  std::vector<bool> chosen(pool_size, false);
  std::vector<bool> served(feasible.size(), false);
  auto refresh = [&] {
    for (std::size_t c = 0; c < feasible.size(); ++c) {
      if (served[c]) continue;
      served[c] = std::any_of(
          feasible[c].begin(), feasible[c].end(),
          [&](SlotPair p) { return chosen[p.first] && chosen[p.second]; });
    }
  };
  refresh();
  while (std::find(served.begin(), served.end(), false) != served.end()) {
    std::map<SlotPair, std::size_t> votes;
    for (std::size_t c = 0; c < feasible.size(); ++c) {
      if (served[c]) continue;
      for (SlotPair p : feasible[c]) ++votes[p];
    }
    // std::map iterates lexicographically, so strict '>' keeps the first.
    SlotPair best{};
    std::size_t best_votes = 0;
    for (const auto& [pair, count] : votes) {
      if (count > best_votes) {
        best = pair;
        best_votes = count;
      }
    }
    chosen[best.first] = true;
    chosen[best.second] = true;
    refresh();
  }
  ParentSelection selection;
  for (std::size_t p = 0; p < pool_size; ++p) {
    if (chosen[p]) selection.chosen.push_back(p);
  }
  selection.pair_of_group = *PairsWithin(feasible, chosen);
  selection.status = SolveStatus::kFeasible;
  return selection;
}

void VerifyParentSelection(const FindMinParentInstance& instance,
                           const ParentSelection& selection) {
  const auto& partition = instance.partition();
  if (selection.pair_of_group.size() != partition.size()) {
    ThrowInvalidArgument("selection does not assign a pair to every cell");
  }
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const SlotPair p = selection.pair_of_group[c];
    const auto in_chosen = [&](std::size_t x) {
      return std::binary_search(selection.chosen.begin(),
                                selection.chosen.end(), x);
    };
    if (p.first == p.second || !in_chosen(p.first) || !in_chosen(p.second)) {
      ThrowInvalidArgument("cell " + std::to_string(c) +
                           " uses a parent outside the selection");
    }
    for (std::size_t m : partition[c]) {
      if (!CanBeChildOf(instance.universe()[m], instance.pool()[p.first],
                        instance.pool()[p.second])) {
        ThrowInvalidArgument("member '" + instance.universe()[m].id +
                             "' is not a child of its cell's parents");
      }
    }
  }
}

}  // namespace minparent
