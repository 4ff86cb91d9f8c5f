// Copyright 2026 The Emulator Forge Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

// Runs the CLI with stdout/stderr captured; returns the process exit code.
int run(const std::string& args, const fs::path& log) {
  std::string cmd = std::string(FORGE_BIN) + " " + args + " > " +
                    log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("forge_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path operator/(const std::string& name) const { return path / name; }

  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("gen is byte-deterministic in the seed") {
  TempDir tmp;
  fs::path a = tmp / "a.txt", b = tmp / "b.txt", c = tmp / "c.txt";
  CHECK(run("gen --n 80 --m 200 --seed 11 --out " + a.string(),
            tmp / "log") == 0);
  CHECK(run("gen --n 80 --m 200 --seed 11 --out " + b.string(),
            tmp / "log") == 0);
  CHECK(run("gen --n 80 --m 200 --seed 12 --out " + c.string(),
            tmp / "log") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("gen unit weights produce an unweighted graph file") {
  TempDir tmp;
  fs::path g = tmp / "g.txt";
  CHECK(run("gen --n 40 --m 90 --weights unit --seed 3 --out " + g.string(),
            tmp / "log") == 0);
  CHECK(slurp(g).find("p 40 90 unweighted") != std::string::npos);
}

TEST_CASE("gen rejects infeasible m with a usage error") {
  TempDir tmp;
  CHECK(run("gen --n 5 --m 100 --out " + (tmp / "g.txt").string(),
            tmp / "log") == 2);
}

TEST_CASE("build then verify round-trips with exit 0") {
  TempDir tmp;
  fs::path g = tmp / "g.txt", em = tmp / "em.txt", csv = tmp / "s.csv";
  REQUIRE(run("gen --n 70 --m 180 --seed 5 --out " + g.string(),
              tmp / "log") == 0);
  for (std::string mode : {"general", "fast", "alg1", "alg2"}) {
    std::string karg = mode == "general" || mode == "fast" ? " --k 4" : "";
    CAPTURE(mode);
    CHECK(run("build " + g.string() + " --mode " + mode + karg +
                  " --seed 5 --out " + em.string(),
              tmp / "log") == 0);
    CHECK(fs::exists(em.string() + ".size.csv"));
    CHECK(run("verify " + g.string() + " " + em.string() + " --out " +
                  csv.string(),
              tmp / "log") == 0);
    CHECK(slurp(csv).find("summary:") != std::string::npos);
  }
}

TEST_CASE("verify reports violations with exit 1") {
  TempDir tmp;
  fs::path g = tmp / "g.txt", em = tmp / "em.txt";
  REQUIRE(run("gen --n 30 --m 60 --seed 9 --out " + g.string(),
              tmp / "log") == 0);
  // An empty emulator misses every finite distance.
  std::ofstream(em) << "h 30 0 3 general 9\nb 0.33 0.33\n";
  CHECK(run("verify " + g.string() + " " + em.string(), tmp / "log") == 1);
}

TEST_CASE("mode/k incompatibility is a usage error") {
  TempDir tmp;
  fs::path g = tmp / "g.txt";
  REQUIRE(run("gen --n 20 --m 40 --seed 1 --out " + g.string(),
              tmp / "log") == 0);
  CHECK(run("build " + g.string() + " --mode alg1 --k 4 --out " +
                (tmp / "e.txt").string(),
            tmp / "log") == 2);
  CHECK(run("build " + g.string() + " --mode alg2 --k 3 --out " +
                (tmp / "e.txt").string(),
            tmp / "log") == 2);
}

TEST_CASE("unknown flags and missing files are usage errors") {
  TempDir tmp;
  CHECK(run("gen --bogus 1", tmp / "log") == 2);
  CHECK(run("build " + (tmp / "absent.txt").string() + " --out " +
                (tmp / "e.txt").string(),
            tmp / "log") == 2);
  CHECK(run("frobnicate", tmp / "log") == 2);
}

TEST_CASE("compare-tz emits the threshold table and sweeps winners") {
  TempDir tmp;
  fs::path out = tmp / "tz.csv", log = tmp / "log";
  CHECK(run("compare-tz --k 2 --sweep 71 --out " + out.string(), log) == 0);
  std::string text = slurp(out);
  CHECK(text.find("2,4.375,8.75,") != std::string::npos);
  CHECK(text.find(",70,64") != std::string::npos);
  CHECK(text.find("70,o") != std::string::npos);
  CHECK(text.find("71,t") != std::string::npos);
}

TEST_CASE("compare-tz beyond the precision cap is a capability error") {
  TempDir tmp;
  CHECK(run("compare-tz --k 13", tmp / "log") == 3);
}

TEST_CASE("bench reports a slope only for multi-point grids") {
  TempDir tmp;
  fs::path out = tmp / "bench.csv";
  CHECK(run("bench --grid 64 --k 2 --seeds 1 --out " + out.string(),
            tmp / "log") == 0);
  CHECK(slurp(out).find("slope,n/a") != std::string::npos);
  CHECK(run("bench --grid 64,128 --k 2 --seeds 1 --out " + out.string(),
            tmp / "log") == 0);
  std::string text = slurp(out);
  CHECK(text.find("slope,n/a") == std::string::npos);
  CHECK(text.find("slope,") != std::string::npos);
}

TEST_CASE("gen/build pipeline is byte-deterministic end to end") {
  TempDir tmp;
  fs::path g1 = tmp / "g1.txt", g2 = tmp / "g2.txt";
  fs::path e1 = tmp / "e1.txt", e2 = tmp / "e2.txt";
  REQUIRE(run("gen --n 60 --m 150 --seed 21 --out " + g1.string(),
              tmp / "log") == 0);
  REQUIRE(run("gen --n 60 --m 150 --seed 21 --out " + g2.string(),
              tmp / "log") == 0);
  for (std::string mode : {"general", "fast"}) {
    CAPTURE(mode);
    REQUIRE(run("build " + g1.string() + " --mode " + mode +
                    " --k 5 --seed 21 --out " + e1.string(),
                tmp / "log") == 0);
    REQUIRE(run("build " + g2.string() + " --mode " + mode +
                    " --k 5 --seed 21 --out " + e2.string(),
                tmp / "log") == 0);
    CHECK(slurp(e1) == slurp(e2));
    CHECK(slurp(e1.string() + ".size.csv") == slurp(e2.string() + ".size.csv"));
  }
}
