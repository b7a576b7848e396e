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

#include "minparent/genotypes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "minparent/error.hpp"
#include "minparent/mendel.hpp"

namespace minparent {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// Iterates over data lines, skipping blanks and '#' comments, and remembers
// the 1-based number of the last line returned.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool Next(std::vector<std::string_view>& tokens) {
    while (pos_ <= text_.size() && !done_) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) {
        end = text_.size();
        done_ = true;
      }
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_number_;
      tokens = SplitWhitespace(line);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  int line_number() const { return line_number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_number_ = 0;
  bool done_ = false;
};

bool ParseCount(std::string_view token, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

Allele ParseAllele(std::string_view token, int line) {
  if (!token.empty() && token.front() == '-') {
    ThrowParse(line, "negative allele '" + std::string(token) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      token.empty()) {
    ThrowParse(line, "malformed allele '" + std::string(token) + "'");
  }
  // The largest value is reserved so that a wildcard (max + 1) always fits.
  if (value >= std::numeric_limits<Allele>::max()) {
    ThrowParse(line, "allele out of range '" + std::string(token) + "'");
  }
  return static_cast<Allele>(value);
}

Genotype ParseGenotype(std::string_view token, int line) {
  std::size_t slash = token.find('/');
  if (slash == std::string_view::npos ||
      token.find('/', slash + 1) != std::string_view::npos) {
    ThrowParse(line, "malformed genotype '" + std::string(token) +
                         "' (expected a/b)");
  }
  return Genotype::Of(ParseAllele(token.substr(0, slash), line),
                      ParseAllele(token.substr(slash + 1), line));
}

}  // namespace

std::string ToString(const Genotype& g) {
  return std::to_string(g.lo) + "/" + std::to_string(g.hi);
}

Population::Population(std::size_t num_loci, std::vector<Individual> members)
    : num_loci_(num_loci), members_(std::move(members)) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Individual& m = members_[i];
    if (m.id.empty() || m.id.front() == '#' ||
        std::any_of(m.id.begin(), m.id.end(), [](char c) {
          return std::isspace(static_cast<unsigned char>(c));
        })) {
      ThrowInvalidArgument("invalid individual id '" + m.id + "'");
    }
    if (!seen.insert(m.id).second) {
      ThrowInvalidArgument("duplicate individual id '" + m.id + "'");
    }
    if (m.loci.size() != num_loci_) {
      ThrowInvalidArgument("individual '" + m.id + "' has " +
                           std::to_string(m.loci.size()) + " loci, expected " +
                           std::to_string(num_loci_));
    }
    for (const Genotype& g : m.loci) {
      if (g.lo > g.hi) {
        ThrowInvalidArgument("individual '" + m.id +
                             "' has a non-canonical genotype");
      }
      if (g.hi == std::numeric_limits<Allele>::max()) {
        ThrowInvalidArgument("individual '" + m.id +
                             "' uses the reserved maximum allele");
      }
    }
  }
}

std::optional<std::size_t> Population::IndexOf(std::string_view id) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<Genotype> Population::LocusColumn(std::size_t locus,
                                              const MemberSet& members) const {
  std::vector<Genotype> column;
  column.reserve(members.size());
  for (std::size_t m : members) column.push_back(members_[m].loci[locus]);
  return column;
}

Population Population::Subset(const MemberSet& members) const {
  std::vector<Individual> kept;
  kept.reserve(members.size());
  for (std::size_t m : members) {
    if (m >= members_.size()) {
      ThrowInvalidArgument("member index " + std::to_string(m) +
                           " out of range");
    }
    kept.push_back(members_[m]);
  }
  return Population(num_loci_, std::move(kept));
}

Population ParsePopulation(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tokens;
  if (!reader.Next(tokens)) ThrowParse(0, "missing header line 'n l'");
  std::size_t n = 0;
  std::size_t num_loci = 0;
  if (tokens.size() != 2 || !ParseCount(tokens[0], n) ||
      !ParseCount(tokens[1], num_loci)) {
    ThrowParse(reader.line_number(), "malformed header (expected 'n l')");
  }

  std::vector<Individual> members;
  std::unordered_set<std::string> seen;
  while (reader.Next(tokens)) {
    const int line = reader.line_number();
    if (members.size() == n) {
      ThrowParse(line, "declared n=" + std::to_string(n) + " but found more " +
                           "than " + std::to_string(n) + " rows");
    }
    if (tokens.size() != num_loci + 1) {
      ThrowParse(line, "expected " + std::to_string(num_loci) +
                           " genotypes, found " +
                           std::to_string(tokens.size() - 1));
    }
    Individual individual;
    individual.id = std::string(tokens[0]);
    if (!seen.insert(individual.id).second) {
      ThrowParse(line, "duplicate id '" + individual.id + "'");
    }
    individual.loci.reserve(num_loci);
    for (std::size_t j = 1; j < tokens.size(); ++j) {
      individual.loci.push_back(ParseGenotype(tokens[j], line));
    }
    members.push_back(std::move(individual));
  }
  if (members.size() != n) {
    ThrowParse(reader.line_number(),
               "declared n=" + std::to_string(n) + " but found " +
                   std::to_string(members.size()) + " rows");
  }
  return Population(num_loci, std::move(members));
}

std::string SerializePopulation(const Population& population) {
  std::string out = std::to_string(population.size()) + " " +
                    std::to_string(population.num_loci());
  for (const Individual& m : population.members()) {
    out += '\n';
    out += m.id;
    for (const Genotype& g : m.loci) {
      out += ' ';
      out += ToString(g);
    }
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  }
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

Population LoadPopulation(const std::filesystem::path& path) {
  try {
    return ParsePopulation(ReadTextFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "OPTIMAL";
    case SolveStatus::kFeasible:
      return "FEASIBLE";
    case SolveStatus::kInfeasible:
      return "INFEASIBLE";
  }
  return "UNKNOWN";
}

std::optional<SolveStatus> ParseSolveStatus(std::string_view text) {
  if (text == "OPTIMAL") return SolveStatus::kOptimal;
  if (text == "FEASIBLE") return SolveStatus::kFeasible;
  if (text == "INFEASIBLE") return SolveStatus::kInfeasible;
  return std::nullopt;
}

std::size_t CoverSolution::max_group_size() const {
  std::size_t best = 0;
  for (const MemberSet& g : groups) best = std::max(best, g.size());
  return best;
}

FindMinParentInstance::FindMinParentInstance(Population universe,
                                             Population pool,
                                             std::vector<MemberSet> partition)
    : universe_(std::move(universe)),
      pool_(std::move(pool)),
      partition_(std::move(partition)) {
  if (!pool_.empty() && !universe_.empty() &&
      pool_.num_loci() != universe_.num_loci()) {
    ThrowInvalidArgument("pool has " + std::to_string(pool_.num_loci()) +
                         " loci but the universe has " +
                         std::to_string(universe_.num_loci()));
  }
  for (const Individual& p : pool_.members()) {
    if (universe_.IndexOf(p.id)) {
      ThrowInvalidArgument("pool id '" + p.id + "' also names a universe member");
    }
  }
  std::vector<int> cover(universe_.size(), 0);
  for (MemberSet& cell : partition_) {
    std::sort(cell.begin(), cell.end());
    for (std::size_t m : cell) {
      if (m >= universe_.size()) {
        ThrowInvalidArgument("partition index " + std::to_string(m) +
                             " out of range");
      }
      ++cover[m];
    }
  }
  for (std::size_t m = 0; m < cover.size(); ++m) {
    if (cover[m] != 1) {
      ThrowInvalidArgument("partition covers '" + universe_[m].id + "' " +
                           std::to_string(cover[m]) + " times");
    }
  }
  for (std::size_t c = 0; c < partition_.size(); ++c) {
    if (!IsSiblingSet(universe_, partition_[c])) {
      ThrowInvalidArgument("partition cell " + std::to_string(c) +
                           " is not a sibling set");
    }
  }
}

std::vector<MemberSet> ParsePartition(std::string_view text,
                                      const Population& universe) {
  LineReader reader(text);
  std::vector<std::string_view> tokens;
  std::vector<MemberSet> cells;
  while (reader.Next(tokens)) {
    MemberSet cell;
    for (std::string_view id : tokens) {
      auto index = universe.IndexOf(id);
      if (!index) {
        ThrowParse(reader.line_number(),
                   "unknown member id '" + std::string(id) + "'");
      }
      cell.push_back(*index);
    }
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end()) {
      ThrowParse(reader.line_number(), "member listed twice in one cell");
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string SerializePartition(const std::vector<MemberSet>& partition,
                               const Population& universe) {
  std::string out;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (c > 0) out += '\n';
    for (std::size_t i = 0; i < partition[c].size(); ++i) {
      if (i > 0) out += ' ';
      out += universe[partition[c][i]].id;
    }
  }
  return out;
}

}  // namespace minparent
