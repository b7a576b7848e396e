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

#include "minparent/simgen.hpp"

#include <utility>

#include "minparent/error.hpp"

namespace minparent {

std::uint64_t SplitMix64::Next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Bounded(std::uint64_t bound) {
  if (bound == 0) ThrowInvalidArgument("bound must be positive");
  __extension__ using Wide = unsigned __int128;
  const Wide product = static_cast<Wide>(Next()) * bound;
  return static_cast<std::uint64_t>(product >> 64);
}

void ValidateSimConfig(const SimConfig& config) {
  if (config.families == 0 || config.children_min == 0 || config.loci == 0 ||
      config.alleles_per_locus == 0) {
    ThrowInvalidArgument("simulation counts must be at least 1");
  }
  if (config.children_min > config.children_max) {
    ThrowInvalidArgument("children range is empty");
  }
}

Individual MendelianChild(const Individual& a, const Individual& b,
                          SplitMix64& rng, std::string id) {
  if (a.loci.size() != b.loci.size()) {
    ThrowInvalidArgument("parents differ in locus count");
  }
  Individual child{std::move(id), {}};
  child.loci.reserve(a.loci.size());
  for (std::size_t j = 0; j < a.loci.size(); ++j) {
    const Allele from_a = rng.Bounded(2) == 0 ? a.loci[j].lo : a.loci[j].hi;
    const Allele from_b = rng.Bounded(2) == 0 ? b.loci[j].lo : b.loci[j].hi;
    child.loci.push_back(Genotype::Of(from_a, from_b));
  }
  return child;
}

SimPopulation RandomPopulation(const SimConfig& config) {
  ValidateSimConfig(config);
  SplitMix64 rng(config.seed);
  SimPopulation sim;
  for (std::size_t f = 0; f < config.families; ++f) {
    for (int p = 0; p < 2; ++p) {
      Individual parent{"F" + std::to_string(f) + "_P" + std::to_string(p), {}};
      for (std::size_t j = 0; j < config.loci; ++j) {
        const auto x = static_cast<Allele>(rng.Bounded(config.alleles_per_locus) + 1);
        const auto y = static_cast<Allele>(rng.Bounded(config.alleles_per_locus) + 1);
        parent.loci.push_back(Genotype::Of(x, y));
      }
      sim.parents.push_back(std::move(parent));
    }
  }
  std::vector<Individual> children;
  for (std::size_t f = 0; f < config.families; ++f) {
    std::size_t count = config.children_min;
    if (config.children_max > config.children_min) {
      count += rng.Bounded(config.children_max - config.children_min + 1);
    }
    SimFamily family;
    family.parent_ids[0] = sim.parents[2 * f].id;
    family.parent_ids[1] = sim.parents[2 * f + 1].id;
    for (std::size_t c = 0; c < count; ++c) {
      family.children.push_back(children.size());
      children.push_back(MendelianChild(
          sim.parents[2 * f], sim.parents[2 * f + 1], rng,
          "F" + std::to_string(f) + "_C" + std::to_string(c)));
    }
    sim.families.push_back(std::move(family));
  }
  sim.population = Population(config.loci, std::move(children));
  return sim;
}

std::string SerializeTruth(const SimPopulation& sim) {
  std::string out;
  for (std::size_t f = 0; f < sim.families.size(); ++f) {
    const SimFamily& family = sim.families[f];
    if (f > 0) out += '\n';
    out += family.parent_ids[0] + " " + family.parent_ids[1];
    for (std::size_t c : family.children) {
      out += " " + sim.population[c].id;
    }
  }
  return out;
}

}  // namespace minparent
