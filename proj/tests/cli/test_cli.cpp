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

// Runs the command-line tool as a subprocess and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "minparent/mendel.hpp"
#include "minparent/greedy.hpp"
#include "minparent/report.hpp"

namespace mp = minparent;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string command =
      std::string(MINPARENT_CLI) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    run.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Data(const std::string& name) {
  return std::string(MINPARENT_DATA_DIR) + "/" + name;
}

std::filesystem::path Scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "minparent_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void Write(const std::filesystem::path& path, const std::string& text) {
  FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs(text.c_str(), f);
  std::fclose(f);
}

}  // namespace

TEST_CASE("check") {
  const Run yes = Cli("check " + Data("sibling_trio.pop") + " --members I1,I2,I3");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "SIBLING true\n");
  const auto wide = Scratch("wide.pop");
  Write(wide, "3 1\nA 1/2\nB 3/4\nC 5/6\n");
  const Run no = Cli("check " + wide.string() + " --members A,B,C");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "SIBLING false\n");
  const Run parents =
      Cli("check " + Data("sibling_trio.pop") + " --members I1,I3 --parents");
  CHECK(parents.out.rfind("SIBLING true\n", 0) == 0);
  CHECK(Cli("check " + Data("sibling_trio.pop") + " --members I1,I9").exit_code == 2);
}

TEST_CASE("solve-exact and solve-greedy") {
  const auto single = Scratch("single.pop");
  Write(single, "1 1\nX 2/2\n");
  const Run one = Cli("solve-exact " + single.string());
  CHECK(one.exit_code == 0);
  CHECK(one.out.rfind("status OPTIMAL\nparents 2\n", 0) == 0);

  const Run ex = Cli("solve-exact " + Data("sibling_trio.pop"));
  CHECK(ex.exit_code == 0);
  const mp::SolveReport report = mp::ParseReport(ex.out);
  CHECK(report.status == mp::SolveStatus::kOptimal);
  CHECK(report.parents() == 2);

  // Greedy report counts exactly the oracle calls of an in-process run.
  const Run g = Cli("solve-greedy " + Data("sibling_trio.pop") + " --c 2");
  CHECK(g.exit_code == 0);
  const mp::SolveReport greedy = mp::ParseReport(g.out);
  const mp::Population pop = mp::LoadPopulation(Data("sibling_trio.pop"));
  CHECK(greedy.oracle_calls == mp::GreedyCover(pop, {2}).oracle_calls);
  CHECK(greedy.parents() == 4);

  CHECK(Cli("solve-greedy " + Data("sibling_trio.pop") + " --c 0").exit_code == 2);
  const auto broken = Scratch("broken.pop");
  Write(broken, "2 1\nA 1/1\n");
  CHECK(Cli("solve-exact " + broken.string()).exit_code == 2);
  CHECK(Cli("solve-exact /nonexistent.pop").exit_code == 2);
  CHECK(Cli("").exit_code == 2);
  CHECK(Cli("no-such-command").exit_code == 2);
}

TEST_CASE("gen-random is deterministic") {
  const std::string args = "gen-random --families 3 --children 2-4 --loci 4 "
                           "--alleles 5 --seed 9";
  const Run a = Cli(args);
  const Run b = Cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_NOTHROW(mp::ParsePopulation(a.out));
  const auto pop = Scratch("gen.pop");
  const auto truth = Scratch("gen.truth");
  CHECK(Cli(args + " -o " + pop.string() + " --truth " + truth.string()).exit_code == 0);
  CHECK(mp::SerializePopulation(mp::LoadPopulation(pop)) ==
        mp::SerializePopulation(mp::ParsePopulation(a.out)));
  CHECK(std::filesystem::file_size(truth) > 0);
  CHECK(Cli("gen-random --families 1 --children 3-1 --loci 1 --alleles 2 --seed 0")
            .exit_code == 2);
}

TEST_CASE("reductions and brute solvers") {
  const Run tp = Cli("reduce-tp " + Data("graphs/c4.graph"));
  CHECK(tp.exit_code == 0);
  CHECK(mp::ParsePopulation(tp.out).num_loci() == 8);
  CHECK(Cli("solve-tp-brute " + Data("graphs/bowtie.graph")).out.rfind("t 1\n", 0) == 0);
  const Run gamma = Cli("solve-minrep-brute " + Data("minrep/toy.minrep"));
  CHECK(gamma.out.rfind("gamma 2\n", 0) == 0);

  const auto dir = Scratch("toy_fmp");
  CHECK(Cli("reduce-minrep " + Data("minrep/toy.minrep") + " -o " + dir.string())
            .exit_code == 0);
  const std::string files = (dir / "universe.pop").string() + " " +
                            (dir / "pool.pop").string() + " " +
                            (dir / "partition.txt").string();
  const Run exact = Cli("find-parents " + files + " --exact");
  CHECK(exact.exit_code == 0);
  const mp::SolveReport r = mp::ParseReport(exact.out);
  CHECK(r.parents() == 2);
  CHECK(r.chosen == std::vector<std::string>{"pa0", "pb0"});
  CHECK(Cli("find-parents " + files + " --greedy").exit_code == 0);
  CHECK(Cli("find-parents " + files).exit_code == 2);

  const Run sections = Cli("reduce-minrep " + Data("minrep/toy.minrep") + " --faithful");
  CHECK(sections.out.find("== universe") != std::string::npos);
  CHECK(sections.out.find("== partition") != std::string::npos);
}

TEST_CASE("find-parents infeasible") {
  const auto u = Scratch("inf_u.pop"), p = Scratch("inf_p.pop"), c = Scratch("inf_c.txt");
  Write(u, "1 1\nC 1/1\n");
  Write(p, "2 1\nP 9/9\nQ 9/9\n");
  Write(c, "C\n");
  const Run run = Cli("find-parents " + u.string() + " " + p.string() + " " +
                      c.string() + " --exact");
  CHECK(run.exit_code == 1);
  CHECK(mp::ParseReport(run.out).status == mp::SolveStatus::kInfeasible);
}

TEST_CASE("bench smoke") {
  const Run run = Cli("bench --suite smoke --manifest " +
                      std::string(MINPARENT_SOURCE_DIR) + "/bench/manifest.txt");
  CHECK(run.exit_code == 0);
  CHECK(run.out.rfind("instance,n,l,algorithm,c,parents,optimal,oracle_calls,millis\n",
                      0) == 0);
  CHECK(run.out.find("sibling_trio.pop,3,2,exact,,2,true") != std::string::npos);
  CHECK(Cli("bench --suite nosuch").exit_code == 2);
}
