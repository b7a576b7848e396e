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

#include "minparent/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "minparent/error.hpp"

namespace minparent {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T ToNumber(std::string_view token, int line) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    ThrowParse(line, "expected a number, found '" + std::string(token) + "'");
  }
  return value;
}

Genotype ToGenotype(std::string_view token, int line) {
  const std::size_t slash = token.find('/');
  if (slash == std::string_view::npos) {
    ThrowParse(line, "malformed genotype '" + std::string(token) + "'");
  }
  return Genotype::Of(ToNumber<Allele>(token.substr(0, slash), line),
                      ToNumber<Allele>(token.substr(slash + 1), line));
}

}  // namespace

SolveReport MakeReport(const Population& population,
                       const CoverSolution& solution, std::int64_t wall_ms) {
  SolveReport report;
  report.status = solution.status;
  for (const Individual& slot : solution.slot_genotypes) {
    report.slots.push_back(slot.loci);
  }
  for (std::size_t g = 0; g < solution.groups.size(); ++g) {
    ReportGroup group{solution.family_of_group[g], {}};
    for (std::size_t m : solution.groups[g]) {
      group.member_ids.push_back(population[m].id);
    }
    report.groups.push_back(std::move(group));
  }
  report.oracle_calls = solution.oracle_calls;
  report.wall_ms = wall_ms;
  return report;
}

SolveReport MakeReport(const FindMinParentInstance& instance,
                       const ParentSelection& selection, std::int64_t wall_ms) {
  SolveReport report;
  report.status = selection.status;
  for (std::size_t p : selection.chosen) {
    report.slots.push_back(instance.pool()[p].loci);
    report.chosen.push_back(instance.pool()[p].id);
  }
  auto slot_of = [&](std::size_t pool_index) {
    return static_cast<std::size_t>(
        std::lower_bound(selection.chosen.begin(), selection.chosen.end(),
                         pool_index) -
        selection.chosen.begin());
  };
  for (std::size_t c = 0; c < instance.partition().size(); ++c) {
    const SlotPair pair = selection.pair_of_group[c];
    ReportGroup group{SlotPair::Of(slot_of(pair.first), slot_of(pair.second)),
                      {}};
    for (std::size_t m : instance.partition()[c]) {
      group.member_ids.push_back(instance.universe()[m].id);
    }
    report.groups.push_back(std::move(group));
  }
  report.wall_ms = wall_ms;
  return report;
}

SolveReport InfeasibleReport(std::int64_t wall_ms) {
  SolveReport report;
  report.status = SolveStatus::kInfeasible;
  report.wall_ms = wall_ms;
  return report;
}

std::string FormatReport(const SolveReport& report) {
  std::ostringstream out;
  out << "status " << ToString(report.status) << '\n';
  out << "parents " << report.slots.size() << '\n';
  for (std::size_t s = 0; s < report.slots.size(); ++s) {
    out << "slot " << s;
    for (const Genotype& g : report.slots[s]) out << ' ' << ToString(g);
    out << '\n';
  }
  out << "groups " << report.groups.size() << '\n';
  for (const ReportGroup& group : report.groups) {
    out << group.family.first << ' ' << group.family.second << " :";
    for (const std::string& id : group.member_ids) out << ' ' << id;
    out << '\n';
  }
  out << "oracle_calls " << report.oracle_calls << '\n';
  out << "wall_ms " << report.wall_ms << '\n';
  if (!report.chosen.empty()) {
    out << "chosen";
    for (const std::string& id : report.chosen) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

SolveReport ParseReport(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  {
    std::size_t pos = 0;
    int number = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      auto tokens = Tokens(text.substr(pos, end - pos));
      if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
      pos = end + 1;
    }
  }
  std::size_t cursor = 0;
  auto expect = [&](std::string_view keyword,
                    std::size_t arity) -> const std::vector<std::string_view>& {
    if (cursor >= lines.size()) {
      ThrowParse(0, "missing '" + std::string(keyword) + "' line");
    }
    const auto& [number, tokens] = lines[cursor];
    if (tokens[0] != keyword || tokens.size() != arity + 1) {
      ThrowParse(number, "expected '" + std::string(keyword) + "'");
    }
    ++cursor;
    return tokens;
  };

  SolveReport report;
  const auto& status = expect("status", 1);
  auto parsed = ParseSolveStatus(status[1]);
  if (!parsed) ThrowParse(lines[cursor - 1].first, "unknown status");
  report.status = *parsed;

  const std::size_t parents =
      ToNumber<std::size_t>(expect("parents", 1)[1], lines[cursor - 1].first);
  for (std::size_t s = 0; s < parents; ++s) {
    if (cursor >= lines.size()) ThrowParse(0, "missing slot line");
    const auto& [number, tokens] = lines[cursor++];
    if (tokens.size() < 2 || tokens[0] != "slot" ||
        ToNumber<std::size_t>(tokens[1], number) != s) {
      ThrowParse(number, "expected 'slot " + std::to_string(s) + "'");
    }
    std::vector<Genotype> loci;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      loci.push_back(ToGenotype(tokens[t], number));
    }
    report.slots.push_back(std::move(loci));
  }

  const std::size_t groups =
      ToNumber<std::size_t>(expect("groups", 1)[1], lines[cursor - 1].first);
  for (std::size_t g = 0; g < groups; ++g) {
    if (cursor >= lines.size()) ThrowParse(0, "missing group line");
    const auto& [number, tokens] = lines[cursor++];
    if (tokens.size() < 3 || tokens[2] != ":") {
      ThrowParse(number, "expected '<slotA> <slotB> : <ids>'");
    }
    ReportGroup group;
    group.family = SlotPair::Of(ToNumber<std::size_t>(tokens[0], number),
                                ToNumber<std::size_t>(tokens[1], number));
    if (group.family.first == group.family.second ||
        group.family.second >= parents) {
      ThrowParse(number, "group references invalid slots");
    }
    for (std::size_t t = 3; t < tokens.size(); ++t) {
      group.member_ids.emplace_back(tokens[t]);
    }
    report.groups.push_back(std::move(group));
  }

  report.oracle_calls = ToNumber<std::uint64_t>(expect("oracle_calls", 1)[1],
                                                lines[cursor - 1].first);
  report.wall_ms =
      ToNumber<std::int64_t>(expect("wall_ms", 1)[1], lines[cursor - 1].first);
  if (cursor < lines.size() && lines[cursor].second[0] == "chosen") {
    const auto& tokens = lines[cursor++].second;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      report.chosen.emplace_back(tokens[t]);
    }
  }
  if (cursor != lines.size()) {
    ThrowParse(lines[cursor].first, "unexpected trailing content");
  }
  return report;
}

}  // namespace minparent
