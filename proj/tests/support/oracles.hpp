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

// Test-only reference solvers and instance generators. Nothing here calls the
// search code it is used to check: the MIN-PARENT oracle enumerates set
// partitions and slot structures directly, and per-locus parent pairs are
// enumerated from scratch.

#ifndef MINPARENT_TESTS_SUPPORT_ORACLES_HPP_
#define MINPARENT_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minparent/genotypes.hpp"
#include "minparent/mendel.hpp"
#include "minparent/reductions.hpp"

namespace minparent::testing {

// Uniform random population: n individuals, `loci` loci, alleles 1..alleles.
inline Population RandomUniformPopulation(std::mt19937_64& rng, std::size_t n,
                                          std::size_t loci,
                                          std::size_t alleles) {
  std::uniform_int_distribution<Allele> pick(1, static_cast<Allele>(alleles));
  std::vector<Individual> members;
  for (std::size_t i = 0; i < n; ++i) {
    Individual m{"I" + std::to_string(i), {}};
    for (std::size_t j = 0; j < loci; ++j) {
      m.loci.push_back(Genotype::Of(pick(rng), pick(rng)));
    }
    members.push_back(std::move(m));
  }
  return Population(loci, std::move(members));
}

inline Population SingleLocusPopulation(const std::vector<Genotype>& column) {
  std::vector<Individual> members;
  for (std::size_t i = 0; i < column.size(); ++i) {
    members.push_back(Individual{"I" + std::to_string(i), {column[i]}});
  }
  return Population(1, std::move(members));
}

// Every unordered parent-genotype pair over `alleles` that produces all of
// `children` at one locus, by direct enumeration.
inline std::set<std::pair<Genotype, Genotype>> BruteLocusPairs(
    const std::vector<Genotype>& children, const std::vector<Allele>& alleles) {
  std::vector<Genotype> genotypes;
  for (Allele x : alleles)
    for (Allele y : alleles)
      if (x <= y) genotypes.push_back(Genotype{x, y});
  std::set<std::pair<Genotype, Genotype>> out;
  for (const Genotype& p : genotypes) {
    for (const Genotype& q : genotypes) {
      if (q < p) continue;
      bool ok = true;
      for (const Genotype& c : children) {
        const bool forward = (c.lo == p.lo || c.lo == p.hi) &&
                             (c.hi == q.lo || c.hi == q.hi);
        const bool backward = (c.hi == p.lo || c.hi == p.hi) &&
                              (c.lo == q.lo || c.lo == q.hi);
        ok = ok && (forward || backward);
      }
      if (ok) out.emplace(p, q);
    }
  }
  return out;
}

// Largest subset accepted by the oracle, by enumerating every subset.
inline std::size_t LargestSiblingSet(const Population& population) {
  const std::size_t n = population.size();
  std::size_t best = n == 0 ? 0 : 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    MemberSet members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    if (IsSiblingSet(population, members)) best = size;
  }
  return best;
}

// Minimum parent count by enumerating every set partition of the population,
// every assignment of distinct slot pairs to its blocks (slots introduced in
// first-use order), and every slot genotype over observed alleles plus a
// wildcard, locus by locus. Returns 0 for an empty population.
class BruteMinParentOracle {
 public:
  explicit BruteMinParentOracle(const Population& population)
      : population_(population) {
    for (std::size_t j = 0; j < population.num_loci(); ++j) {
      std::set<Allele> observed;
      for (const Individual& m : population.members()) {
        observed.insert(m.loci[j].lo);
        observed.insert(m.loci[j].hi);
      }
      std::vector<Allele> domain(observed.begin(), observed.end());
      domain.push_back(observed.empty() ? 0 : *observed.rbegin() + 1);
      std::vector<Genotype> genotypes;
      for (std::size_t a = 0; a < domain.size(); ++a)
        for (std::size_t b = a; b < domain.size(); ++b)
          genotypes.push_back(Genotype{domain[a], domain[b]});
      genotypes_.push_back(std::move(genotypes));
    }
  }

  std::size_t Solve() {
    const std::size_t n = population_.size();
    if (n == 0) return 0;
    for (std::size_t k = 2;; ++k) {
      slots_ = k;
      block_of_.assign(n, 0);
      if (Partition(0, 0)) return k;
    }
  }

 private:
  // Restricted-growth enumeration of set partitions.
  bool Partition(std::size_t member, std::size_t blocks) {
    if (member == population_.size()) {
      if (blocks > slots_ * (slots_ - 1) / 2) return false;
      families_.assign(blocks, {0, 0});
      return AssignFamilies(0, 0, blocks);
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block_of_[member] = b;
      if (Partition(member + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  }

  bool AssignFamilies(std::size_t block, std::size_t used, std::size_t blocks) {
    if (block == blocks) return AllLociFeasible();
    for (std::size_t a = 0; a < slots_; ++a) {
      for (std::size_t b = a + 1; b < slots_; ++b) {
        // Slots appear in first-use order.
        if (a > used || b > std::max(used, a + 1)) continue;
        if (a == used && b != used + 1) continue;
        const std::pair<std::size_t, std::size_t> family{a, b};
        if (std::find(families_.begin(), families_.begin() + block, family) !=
            families_.begin() + block) {
          continue;
        }
        families_[block] = family;
        const std::size_t next = std::max(used, b + 1);
        if (AssignFamilies(block + 1, next, blocks)) return true;
      }
    }
    return false;
  }

  bool AllLociFeasible() {
    for (std::size_t j = 0; j < population_.num_loci(); ++j) {
      slot_genotype_.assign(slots_, Genotype{});
      if (!AssignSlots(j, 0)) return false;
    }
    return true;
  }

  bool AssignSlots(std::size_t locus, std::size_t slot) {
    if (slot == slots_) return true;
    for (const Genotype& g : genotypes_[locus]) {
      slot_genotype_[slot] = g;
      bool ok = true;
      for (std::size_t m = 0; m < population_.size() && ok; ++m) {
        const auto [a, b] = families_[block_of_[m]];
        if (b != slot) continue;
        const Individual v{"v", {slot_genotype_[a]}};
        const Individual w{"w", {slot_genotype_[b]}};
        const Individual child{"c", {population_[m].loci[locus]}};
        ok = CanBeChildOf(child, v, w);
      }
      if (ok && AssignSlots(locus, slot + 1)) return true;
    }
    return false;
  }

  const Population& population_;
  std::vector<std::vector<Genotype>> genotypes_;
  std::size_t slots_ = 0;
  std::vector<std::size_t> block_of_;
  std::vector<std::pair<std::size_t, std::size_t>> families_;
  std::vector<Genotype> slot_genotype_;
};

inline std::size_t BruteMinParent(const Population& population) {
  return BruteMinParentOracle(population).Solve();
}

// Named small graphs.
inline Graph MakeGraph(std::size_t n,
                       std::vector<std::pair<std::size_t, std::size_t>> edges) {
  return Graph(n, std::move(edges));
}
inline Graph K3() { return MakeGraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph K4() {
  return MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
inline Graph C4() { return MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph P4() { return MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph Bowtie() {
  return MakeGraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Edge-bitmask canonical form: the lexicographically smallest adjacency bit
// string over all vertex permutations.
inline std::uint64_t CanonicalCode(std::size_t n, std::uint64_t edge_mask,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& slots) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t e = 0; e < slots.size(); ++e) {
    index[slots[e].first][slots[e].second] = e;
    index[slots[e].second][slots[e].first] = e;
  }
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (edge_mask & (std::uint64_t{1} << e)) {
        code |= std::uint64_t{1} << index[perm[slots[e].first]][perm[slots[e].second]];
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every connected graph on 1..max_nodes nodes with maximum degree <= 4, one
// per isomorphism class, ordered by node count then canonical code.
inline std::vector<Graph> ConnectedGraphCatalog(std::size_t max_nodes) {
  std::vector<Graph> catalog;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
         ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      std::vector<std::size_t> degree(n, 0);
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if (mask & (std::uint64_t{1} << e)) {
          edges.push_back(slots[e]);
          ++degree[slots[e].first];
          ++degree[slots[e].second];
        }
      }
      if (edges.size() + 1 < n) continue;
      if (*std::max_element(degree.begin(), degree.end()) > 4) continue;
      Graph g(n, edges);
      if (!g.Connected()) continue;
      if (!seen.insert(CanonicalCode(n, mask, slots)).second) continue;
      catalog.push_back(std::move(g));
    }
  }
  return catalog;
}

// A few 7-node graphs to extend the catalog beyond exhaustive sizes.
inline std::vector<Graph> SevenNodeGraphs() {
  return {
      MakeGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),  // P7
      MakeGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}}),  // C7
      // Two triangles joined by a path through node 6.
      MakeGraph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 6}, {6, 3}}),
      // Triangle strip (square of a path).
      MakeGraph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                    {3, 5}, {4, 5}, {4, 6}, {5, 6}}),
      // Bowtie with a pendant path.
      MakeGraph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}}),
      // Three triangles sharing a hub-free chain: 0-1-2, 2-3-4, 4-5-6.
      MakeGraph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5},
                    {4, 6}, {5, 6}}),
      // Star-like tree with max degree 4.
      MakeGraph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}}),
      // Wheel W5 plus a pendant (hub degree 4 + pendant on a rim node).
      MakeGraph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4},
                    {1, 4}, {1, 5}, {5, 6}}),
  };
}

}  // namespace minparent::testing

#endif  // MINPARENT_TESTS_SUPPORT_ORACLES_HPP_
