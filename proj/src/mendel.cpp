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

#include "minparent/mendel.hpp"

#include <algorithm>

#include "minparent/error.hpp"

namespace minparent {
namespace {

// Parents carry at most four alleles at a locus, so a column with more
// distinct alleles has no parent pair.
constexpr std::size_t kMaxParentAlleles = 4;

std::vector<Allele> DistinctAlleles(std::span<const Genotype> children) {
  std::vector<Allele> alleles;
  alleles.reserve(children.size() * 2);
  for (const Genotype& g : children) {
    alleles.push_back(g.lo);
    alleles.push_back(g.hi);
  }
  std::sort(alleles.begin(), alleles.end());
  alleles.erase(std::unique(alleles.begin(), alleles.end()), alleles.end());
  return alleles;
}

bool ProducesAll(std::span<const Genotype> children, Genotype a, Genotype b) {
  return std::all_of(children.begin(), children.end(), [&](const Genotype& c) {
    return CanBeChildAtLocus(c, a, b);
  });
}

void CheckIndices(const Population& population,
                  std::span<const std::size_t> members) {
  for (std::size_t m : members) {
    if (m >= population.size()) {
      ThrowInvalidArgument("member index " + std::to_string(m) +
                           " out of range for a population of " +
                           std::to_string(population.size()));
    }
  }
}

std::vector<Genotype> Column(const Population& population,
                             std::span<const std::size_t> members,
                             std::size_t locus) {
  std::vector<Genotype> column;
  column.reserve(members.size());
  for (std::size_t m : members) column.push_back(population[m].loci[locus]);
  return column;
}

}  // namespace

bool CanBeChildOf(const Individual& child, const Individual& a,
                  const Individual& b) {
  if (child.loci.size() != a.loci.size() ||
      child.loci.size() != b.loci.size()) {
    ThrowInvalidArgument("locus count mismatch between '" + child.id +
                         "', '" + a.id + "' and '" + b.id + "'");
  }
  for (std::size_t j = 0; j < child.loci.size(); ++j) {
    if (!CanBeChildAtLocus(child.loci[j], a.loci[j], b.loci[j])) return false;
  }
  return true;
}

Allele WildcardFor(std::span<const Genotype> children) {
  Allele max_allele = 0;
  bool any = false;
  for (const Genotype& g : children) {
    max_allele = std::max(max_allele, g.hi);
    any = true;
  }
  return any ? max_allele + 1 : 0;
}

std::vector<Allele> LocusDomain(std::span<const Genotype> children) {
  std::vector<Allele> domain = DistinctAlleles(children);
  domain.push_back(WildcardFor(children));
  return domain;
}

std::vector<Genotype> GenotypesOver(std::span<const Allele> domain) {
  std::vector<Genotype> genotypes;
  genotypes.reserve(domain.size() * (domain.size() + 1) / 2);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i; j < domain.size(); ++j) {
      genotypes.push_back(Genotype::Of(domain[i], domain[j]));
    }
  }
  std::sort(genotypes.begin(), genotypes.end());
  return genotypes;
}

std::vector<LocusParentPair> LocusFeasible(
    std::span<const Genotype> children) {
  std::vector<LocusParentPair> pairs;
  if (DistinctAlleles(children).size() > kMaxParentAlleles) return pairs;
  const std::vector<Genotype> genotypes =
      GenotypesOver(LocusDomain(children));
  for (std::size_t i = 0; i < genotypes.size(); ++i) {
    for (std::size_t j = i; j < genotypes.size(); ++j) {
      if (ProducesAll(children, genotypes[i], genotypes[j])) {
        pairs.push_back(LocusParentPair{genotypes[i], genotypes[j]});
      }
    }
  }
  return pairs;
}

bool LocusHasParents(std::span<const Genotype> children) {
  if (DistinctAlleles(children).size() > kMaxParentAlleles) return false;
  const std::vector<Genotype> genotypes =
      GenotypesOver(LocusDomain(children));
  for (std::size_t i = 0; i < genotypes.size(); ++i) {
    for (std::size_t j = i; j < genotypes.size(); ++j) {
      if (ProducesAll(children, genotypes[i], genotypes[j])) return true;
    }
  }
  return false;
}

bool IsSiblingSet(const Population& population,
                  std::span<const std::size_t> members,
                  OracleCounter* counter) {
  if (counter != nullptr) counter->Increment();
  CheckIndices(population, members);
  // Pairs and smaller are always producible.
  if (members.size() <= 2) return true;
  for (std::size_t j = 0; j < population.num_loci(); ++j) {
    if (!LocusHasParents(Column(population, members, j))) return false;
  }
  return true;
}

std::pair<Individual, Individual> MaterializeParents(
    const Population& population, std::span<const std::size_t> members,
    const std::string& first_id, const std::string& second_id) {
  CheckIndices(population, members);
  std::pair<Individual, Individual> parents;
  parents.first.id = first_id;
  parents.second.id = second_id;
  for (std::size_t j = 0; j < population.num_loci(); ++j) {
    const std::vector<LocusParentPair> pairs =
        LocusFeasible(Column(population, members, j));
    if (pairs.empty()) {
      ThrowInvalidArgument("members are not a sibling set (locus " +
                           std::to_string(j) + ")");
    }
    parents.first.loci.push_back(pairs.front().first);
    parents.second.loci.push_back(pairs.front().second);
  }
  return parents;
}

namespace {

// Depth-first enumeration of whole parent individuals, one locus at a time.
class BruteParentSearch {
 public:
  BruteParentSearch(const Population& population,
                    std::span<const std::size_t> members)
      : population_(population), members_(members) {
    v_.loci.resize(population.num_loci());
    w_.loci.resize(population.num_loci());
    v_.id = "v";
    w_.id = "w";
    for (std::size_t j = 0; j < population.num_loci(); ++j) {
      // No allele-count shortcut here: the domain may exceed five symbols.
      genotypes_.push_back(
          GenotypesOver(LocusDomain(Column(population, members, j))));
    }
  }

  bool Run() { return Search(0); }

 private:
  bool Search(std::size_t locus) {
    if (locus == population_.num_loci()) {
      return std::all_of(members_.begin(), members_.end(), [&](std::size_t m) {
        return CanBeChildOf(population_[m], v_, w_);
      });
    }
    const std::vector<Genotype>& options = genotypes_[locus];
    for (std::size_t i = 0; i < options.size(); ++i) {
      // The locus pair is unordered: swapping v and w at one locus does not
      // change which children they produce.
      for (std::size_t k = i; k < options.size(); ++k) {
        v_.loci[locus] = options[i];
        w_.loci[locus] = options[k];
        bool alive = true;
        for (std::size_t m : members_) {
          if (!CanBeChildAtLocus(population_[m].loci[locus], v_.loci[locus],
                                 w_.loci[locus])) {
            alive = false;
            break;
          }
        }
        if (alive && Search(locus + 1)) return true;
      }
    }
    return false;
  }

  const Population& population_;
  std::span<const std::size_t> members_;
  std::vector<std::vector<Genotype>> genotypes_;
  Individual v_;
  Individual w_;
};

}  // namespace

bool BruteSiblingCheck(const Population& population,
                       std::span<const std::size_t> members) {
  CheckIndices(population, members);
  return BruteParentSearch(population, members).Run();
}

void VerifyCoverSolution(const Population& population,
                         const CoverSolution& solution) {
  if (solution.family_of_group.size() != solution.groups.size()) {
    ThrowInvalidArgument("family_of_group size differs from group count");
  }
  if (solution.slot_genotypes.size() != solution.slot_count) {
    ThrowInvalidArgument("slot_genotypes size differs from slot_count");
  }
  std::vector<int> cover(population.size(), 0);
  for (std::size_t g = 0; g < solution.groups.size(); ++g) {
    const SlotPair family = solution.family_of_group[g];
    if (family.first == family.second) {
      ThrowInvalidArgument("group " + std::to_string(g) +
                           " uses the same slot twice");
    }
    if (family.first >= solution.slot_count ||
        family.second >= solution.slot_count) {
      ThrowInvalidArgument("group " + std::to_string(g) +
                           " references a slot out of range");
    }
    const Individual& a = solution.slot_genotypes[family.first];
    const Individual& b = solution.slot_genotypes[family.second];
    for (std::size_t m : solution.groups[g]) {
      if (m >= population.size()) {
        ThrowInvalidArgument("group " + std::to_string(g) +
                             " references member out of range");
      }
      ++cover[m];
      if (!CanBeChildOf(population[m], a, b)) {
        ThrowInvalidArgument("member '" + population[m].id +
                             "' is not a child of its family's parents");
      }
    }
  }
  for (std::size_t m = 0; m < cover.size(); ++m) {
    if (cover[m] != 1) {
      ThrowInvalidArgument("member '" + population[m].id + "' is covered " +
                           std::to_string(cover[m]) + " times");
    }
  }
}

}  // namespace minparent
