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

// Seeded synthetic populations with known families.

#ifndef MINPARENT_SIMGEN_HPP_
#define MINPARENT_SIMGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "minparent/genotypes.hpp"

namespace minparent {

// SplitMix64: state += 0x9e3779b97f4a7c15, then the output is the state
// mixed by xor-shift 30/27/31 with multipliers 0xbf58476d1ce4e5b9 and
// 0x94d049bb133111eb. Bounded draws use the high 64 bits of
// next() * bound (128-bit product).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t Bounded(std::uint64_t bound);
  // Independent stream derived from this one (consumes one draw).
  SplitMix64 Split() { return SplitMix64(Next()); }

 private:
  std::uint64_t state_;
};

struct SimConfig {
  std::size_t families = 1;
  std::size_t children_min = 1;
  std::size_t children_max = 1;
  std::size_t loci = 1;
  std::size_t alleles_per_locus = 2;
  std::uint64_t seed = 0;
};

// Throws Error(kInvalidArgument) on zero counts or children_min > children_max.
void ValidateSimConfig(const SimConfig& config);

// Per locus draws one allele of `a` then one allele of `b`, each uniform.
// Throws Error(kInvalidArgument) on a locus-count mismatch.
Individual MendelianChild(const Individual& a, const Individual& b,
                          SplitMix64& rng, std::string id);

struct SimFamily {
  std::string parent_ids[2];
  MemberSet children;
};

struct SimPopulation {
  Population population;
  std::vector<Individual> parents;
  std::vector<SimFamily> families;
};

// Draw order: every founder (family by family, two per family, locus by
// locus, two alleles each, uniform over 1..alleles_per_locus), then for each
// family its child count (ranges only) followed by its children. Parents are
// "F<f>_P0"/"F<f>_P1" and children "F<f>_C<b>".
SimPopulation RandomPopulation(const SimConfig& config);

// One line per family: the two parent ids then the child ids.
std::string SerializeTruth(const SimPopulation& sim);

}  // namespace minparent

#endif  // MINPARENT_SIMGEN_HPP_
