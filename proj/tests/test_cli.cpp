// Copyright 2026 The photonsim Authors
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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "photonsim/circuit_io.hpp"
#include "photonsim/matrix_io.hpp"
#include "photonsim/random.hpp"
#include "photonsim/reference_circuits.hpp"
#include "test_support.hpp"

using namespace photonsim;
using photonsim::testing::max_abs_diff;
namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("photonsim_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // Runs the CLI with stdout to `out` and stderr to `err`; returns the exit code.
  int run(const std::string& args, const std::string& out = "stdout.txt") const {
    const std::string cmd = std::string("\"") + PHOTONSIM_CLI + "\" " + args + " > \"" + path(out) +
                            "\" 2> \"" + path("stderr.txt") + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
};

const char* kBalancedBs =
    R"({"modes": 2, "components": [{"type": "BS", "offset": 0, "theta": 0.78539816339744828}]})";

int count_lines(const std::string& text, bool skip_comments = true) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += !(skip_comments && !line.empty() && line[0] == '#');
  return n;
}

}  // namespace

TEST_CASE("cli unitary of the reference CNOT") {
  Workspace ws;
  const std::string file = ws.write("cnot.json", serialize_circuit(ralph_cnot()));
  REQUIRE(ws.run("unitary " + file + " --output " + ws.path("u.txt")) == 0);
  const ComplexMatrix u = load_matrix(ws.path("u.txt"));
  CHECK(max_abs_diff(u, photonsim::testing::cnot_reference_unitary()) < 1e-12);

  REQUIRE(ws.run("unitary " + file + " --output " + ws.path("u.bin")) == 0);
  CHECK(max_abs_diff(load_matrix(ws.path("u.bin")), u) == 0.0);

  const std::string empty = ws.write("empty.json", R"({"modes": 3, "components": []})");
  REQUIRE(ws.run("unitary " + empty + " --output " + ws.path("id.txt")) == 0);
  CHECK(load_matrix(ws.path("id.txt")) == ComplexMatrix::Identity(3, 3));
}

TEST_CASE("cli parse errors exit with 2 and a position") {
  Workspace ws;
  const std::string bad = ws.write("bad.json", "{\n  \"modes\": 2,\n  \"components\": [ oops ]\n}\n");
  CHECK(ws.run("unitary " + bad) == 2);
  CHECK(ws.read("stderr.txt").find("line 3") != std::string::npos);
  CHECK(ws.run("") == 2);
  CHECK(ws.run("frobnicate") == 2);
  CHECK(ws.run("unitary " + ws.path("missing.json")) == 2);
  const std::string bs = ws.write("bs.json", kBalancedBs);
  CHECK(ws.run("probs " + bs + " --input-state \"|1,1\"") == 2);
  CHECK(ws.run("probs " + bs + " --input-state \"|1,1>\" --post-select \"count(modes 0) = 1\"") == 2);
  CHECK(ws.run("probs " + bs + " --input-state \"|1,1>\" --backend warp") == 2);
}

TEST_CASE("cli probabilities of a balanced beam splitter") {
  Workspace ws;
  const std::string bs = ws.write("bs.json", kBalancedBs);
  REQUIRE(ws.run("probs " + bs + " --input-state \"|1,1>\" --backend naive") == 0);
  const std::string out = ws.read("stdout.txt");
  CHECK(out.find("# total_mass=") != std::string::npos);
  CHECK(count_lines(out) == 4);  // header row plus three outcomes
  for (const char* row : {"\"|2,0>\",", "\"|0,2>\","}) {
    const auto at = out.find(row);
    REQUIRE(at != std::string::npos);
    CHECK(std::stod(out.substr(at + 8)) == doctest::Approx(0.5).epsilon(1e-12));
  }

  CHECK(ws.run("probs " + bs + " --input-state \"|1,1>\" --backend cc2017") == 4);
  CHECK(ws.run("sample " + bs + " --input-state \"|1,1>\" --backend slos --seed 1") == 4);
  CHECK(ws.run("probs " + bs + " --input-state \"|1,1>\" --post-select \"count(modes 0) == 1\"") == 5);
}

TEST_CASE("cli probabilities with post-selection reproduce the CNOT row") {
  Workspace ws;
  const std::string file = ws.write("cnot.json", serialize_circuit(ralph_cnot()));
  REQUIRE(ws.run("probs " + file +
                 " --input-state \"|0,1,0,1,0,0>\" --post-select \"count(modes 1..2) == 1 && count(modes 3..4) == 1\"") == 0);
  const std::string out = ws.read("stdout.txt");
  CHECK(out.find("success_probability=0.111111111111") != std::string::npos);
  CHECK(out.find("\"|0,1,0,1,0,0>\",1") != std::string::npos);
}

TEST_CASE("cli capability and numeric failures") {
  Workspace ws;
  const std::string pol = ws.write(
      "pol.json", R"({"modes": 1, "components": [{"type": "WP", "offset": 0, "delta": 1.5707963267948966, "xi": 0.7853981633974483}]})");
  CHECK(ws.run("probs " + pol + " --input-state \"|1>\"") == 4);
  REQUIRE(ws.run("probs " + pol + " --input-state \"|{P:H}>\"") == 0);
  CHECK(ws.read("stdout.txt").find("\"|0,1>\",1") != std::string::npos);

  const std::string td = ws.write("td.json", R"({"modes": 1, "components": [{"type": "TD", "offset": 0, "periods": 1}]})");
  CHECK(ws.run("unitary " + td) == 4);

  const std::string nonunitary = ws.write("m.txt", "1 0\n0 2\n");
  CHECK(ws.run("probs " + nonunitary + " --input-state \"|1,0>\"") == 3);
  CHECK(ws.run("decompose " + nonunitary) == 3);

  Rng rng = split_stream(1, 0);
  std::ostringstream big;
  write_matrix_text(big, haar_unitary(12, rng).matrix());
  const std::string m12 = ws.write("m12.txt", big.str());
  CHECK(ws.run("probs " + m12 + " --input-state \"|1,1,1,1,1,1,0,0,0,0,0,0>\" --memory-budget 1K") == 3);
}

TEST_CASE("cli sampling is seed-reproducible") {
  Workspace ws;
  const std::string id = ws.write("id.txt", "1 0 0\n0 1 0\n0 0 1\n");
  REQUIRE(ws.run("sample " + id + " --input-state \"|2,0,1>\" -k 10 --seed 4") == 0);
  const std::string out = ws.read("stdout.txt");
  CHECK(count_lines(out) == 10);
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line[0] != '#') CHECK(line == "|2,0,1>");
  }

  Rng rng = split_stream(2, 0);
  std::ostringstream m;
  write_matrix_text(m, haar_unitary(5, rng).matrix());
  const std::string u = ws.write("u.txt", m.str());
  const std::string args = "sample " + u + " --input-state \"|1,1,0,1,0>\" -k 500 --seed 9 --threads 2";
  REQUIRE(ws.run(args + " --output " + ws.path("a.txt")) == 0);
  REQUIRE(ws.run(args + " --output " + ws.path("b.txt")) == 0);
  CHECK(ws.read("a.txt") == ws.read("b.txt"));
  REQUIRE(ws.run("sample " + u + " --input-state \"|1,1,0,1,0>\" -k 500 --seed 9 --output " + ws.path("c.txt")) == 0);
  CHECK(ws.read("a.txt") == ws.read("c.txt"));

  REQUIRE(ws.run("sample " + u + " --input-state \"|1,0,0,0,0>\" -k 3") == 0);
  CHECK(ws.read("stderr.txt").rfind("seed: ", 0) == 0);
}

TEST_CASE("cli certification report") {
  Workspace ws;
  const std::string samples = ws.write("s.txt", "# header\n|2,0,0>\n|1,1,0>\n|0,0,2>\n|1,0,1>\n");
  REQUIRE(ws.run("certify " + samples + " --k 1,3") == 0);
  const std::string out = ws.read("stdout.txt");
  CHECK(out.find("K,estimate,analytic,std_error\n") != std::string::npos);
  CHECK(out.find("\n1,0.25,") != std::string::npos);
  CHECK(out.find("\n3,1,1,0\n") != std::string::npos);

  const std::string mixed = ws.write("mixed.txt", "|1,0>\n|1,0,0>\n");
  CHECK(ws.run("certify " + mixed) == 2);
  const std::string empty = ws.write("empty.txt", "# nothing\n");
  CHECK(ws.run("certify " + empty) == 2);
  CHECK(ws.run("certify " + samples + " --k 4") == 2);
}

TEST_CASE("cli decomposition round trips") {
  Workspace ws;
  for (const char* mesh : {"triangular", "rectangular"}) {
    Rng rng = split_stream(3, 0);
    const ComplexMatrix u = haar_unitary(6, rng).matrix();
    std::ostringstream m;
    write_matrix_text(m, u);
    const std::string in = ws.write("u.txt", m.str());
    REQUIRE(ws.run("decompose " + in + " --mesh " + mesh + " --output " + ws.path("mesh.json")) == 0);
    REQUIRE(ws.run("unitary " + ws.path("mesh.json") + " --output " + ws.path("back.txt")) == 0);
    CHECK(max_abs_diff(load_matrix(ws.path("back.txt")), u) < 1e-8);
  }
  const std::string phase = ws.write("p.txt", "0.6+0.8j\n");
  REQUIRE(ws.run("decompose " + phase) == 0);
  const Circuit c = parse_circuit(ws.read("stdout.txt"));
  CHECK(flatten(c).size() == 1);
}

TEST_CASE("cli HOM histogram") {
  Workspace ws;
  REQUIRE(ws.run("hom --periods 4000 --seed 5", "a.csv") == 0);
  REQUIRE(ws.run("hom --periods 4000 --seed 5", "b.csv") == 0);
  const std::string a = ws.read("a.csv");
  CHECK(a == ws.read("b.csv"));
  CHECK(a.find("tau,count\n") != std::string::npos);
  CHECK(a.find("\n0,0\n") != std::string::npos);
  CHECK(count_lines(a) == 12);
  REQUIRE(ws.run("hom --periods 4000 --seed 5 --multi-photon 0.05 --window 2") == 0);
  const std::string noisy = ws.read("stdout.txt");
  CHECK(count_lines(noisy) == 6);
  CHECK(noisy.find("\n0,0\n") == std::string::npos);
  CHECK(ws.run("hom --emission 2") == 2);
}

TEST_CASE("cli gate analysis") {
  Workspace ws;
  const std::string cnot = ws.write("cnot.json", serialize_circuit(ralph_cnot()));
  const std::string spec = ws.write("spec.json", R"({
    "states": [
      {"label": "00", "state": "|0,1,0,1,0,0>"},
      {"label": "01", "state": "|0,1,0,0,1,0>"},
      {"label": "10", "state": "|0,0,1,1,0,0>"},
      {"label": "11", "state": "|0,0,1,0,1,0>"}
    ],
    "expected": {"00": "00", "01": "01", "10": "11", "11": "10"},
    "post_select": "count(modes 1..2) == 1 && count(modes 3..4) == 1"
  })");
  REQUIRE(ws.run("analyze " + cnot + " --spec " + spec) == 0);
  const std::string out = ws.read("stdout.txt");
  CHECK(out.find("performance=1/9, error rate=0.000%") != std::string::npos);
  REQUIRE(ws.run("analyze " + cnot + " --spec " + spec + " --format csv") == 0);
  CHECK(ws.read("stdout.txt").find("input,00,01,10,11,success") != std::string::npos);

  CHECK(ws.run("analyze " + cnot + " --spec " + spec + " --post-select \"count(modes 0) == 2\"") == 5);
  const std::string bad_spec = ws.write("bad.json", R"({"states": [], "bogus": 1})");
  CHECK(ws.run("analyze " + cnot + " --spec " + bad_spec) == 2);

  const std::string id = ws.write("id.json", R"({"modes": 2, "components": []})");
  const std::string id_spec = ws.write("id_spec.json", R"({
    "states": [{"label": "0", "state": "|1,0>"}, {"label": "1", "state": "|0,1>"}],
    "expected": {"0": "0", "1": "1"}})");
  REQUIRE(ws.run("analyze " + id + " --spec " + id_spec) == 0);
  CHECK(ws.read("stdout.txt").find("performance=1, error rate=0.000%") != std::string::npos);
}
