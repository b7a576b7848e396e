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

// Plain-text solution reports:
//
//   status <OPTIMAL|FEASIBLE|INFEASIBLE>
//   parents <k>
//   slot <i> <genotype> ...        (k lines)
//   groups <g>
//   <slotA> <slotB> : <member ids> (g lines)
//   oracle_calls <count>
//   wall_ms <milliseconds>
//   chosen <pool ids>              (FIND-MIN-PARENT reports only)

#ifndef MINPARENT_REPORT_HPP_
#define MINPARENT_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minparent/exact.hpp"
#include "minparent/genotypes.hpp"

namespace minparent {

struct ReportGroup {
  SlotPair family;
  std::vector<std::string> member_ids;

  friend bool operator==(const ReportGroup&, const ReportGroup&) = default;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kFeasible;
  std::vector<std::vector<Genotype>> slots;
  std::vector<ReportGroup> groups;
  std::uint64_t oracle_calls = 0;
  std::int64_t wall_ms = 0;
  std::vector<std::string> chosen;

  std::size_t parents() const { return slots.size(); }

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

SolveReport MakeReport(const Population& population,
                       const CoverSolution& solution, std::int64_t wall_ms);

// Slots are the chosen pool members in index order.
SolveReport MakeReport(const FindMinParentInstance& instance,
                       const ParentSelection& selection, std::int64_t wall_ms);

SolveReport InfeasibleReport(std::int64_t wall_ms);

// Lines joined by '\n' with a trailing newline.
std::string FormatReport(const SolveReport& report);

// Throws Error(kParse) with a line number on malformed input.
SolveReport ParseReport(std::string_view text);

}  // namespace minparent

#endif  // MINPARENT_REPORT_HPP_
