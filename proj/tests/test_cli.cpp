// Drives the installed binary through std::system and checks the printed
// contract: worked outputs, exit codes, and byte-stable CSV. The binary
// path arrives in MONGEDOMP_CLI (set by the test harness).

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("MONGEDOMP_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "MONGEDOMP_CLI must point at the binary");
  const std::string cmd = std::string("\"") + bin + "\" " + args +
                          " > cli_stdout.txt 2> cli_stderr.txt";
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  CliResult res;
  res.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  res.out = slurp("cli_stdout.txt");
  res.err = slurp("cli_stderr.txt");
  return res;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  REQUIRE(out.good());
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const char* kWorkedTp =
    R"({"p": 2, "q": 2, "s": [3, 2], "d": [2, 3],
        "cost_scaled": [100, 200, 200, 300]})";

const char* kWorkedDomp =
    R"({"n": 3, "p": 1,
        "cost_scaled": [100, 400, 500, 400, 200, 600, 500, 600, 300],
        "lambda": [-1, -1, -1]})";

}  // namespace

TEST_CASE("solve-tp prints the worked primal and duals") {
  write_file("worked_tp.json", kWorkedTp);
  const CliResult plain = run_cli("solve-tp worked_tp.json");
  CHECK(plain.code == 0);
  CHECK(contains(plain.out, "path: (1,1) (1,2) (2,2)"));
  CHECK(contains(plain.out, "shipments: 2 1 2"));
  CHECK(contains(plain.out, "objective: 10.00"));

  const CliResult duals = run_cli("solve-tp worked_tp.json --duals formula-row");
  CHECK(duals.code == 0);
  CHECK(contains(duals.out, "u = (0.00, 1.00)"));
  CHECK(contains(duals.out, "v = (1.00, 2.00)"));
  CHECK(contains(duals.out, "dual objective: 10.00"));

  const CliResult checked = run_cli("solve-tp worked_tp.json --check");
  CHECK(checked.code == 0);
  CHECK(contains(checked.out, "check: ok"));
}

TEST_CASE("solve-tp exit codes") {
  const CliResult missing = run_cli("solve-tp no_such_file.json");
  CHECK(missing.code == 2);

  write_file("garbage.json", "ceci n'est pas du json");
  CHECK(run_cli("solve-tp garbage.json").code == 2);

  write_file("unbalanced.json",
             R"({"p": 1, "q": 1, "s": [2], "d": [3], "cost_scaled": [100]})");
  CHECK(run_cli("solve-tp unbalanced.json").code == 3);

  write_file("skew.json",
             R"({"p": 2, "q": 2, "s": [1, 1], "d": [1, 1],
                 "cost_scaled": [1, 2, 2, 4]})");
  const CliResult non_monge = run_cli("solve-tp skew.json --check");
  CHECK(non_monge.code == 0);
  CHECK(contains(non_monge.out, "warning"));
}

TEST_CASE("solve-domp on the worked instance") {
  write_file("worked_domp.json", kWorkedDomp);
  for (const char* method : {"enum", "benders-b1", "benders-b2"}) {
    const CliResult res = run_cli(std::string("solve-domp worked_domp.json") +
                                  " --method " + method + " --epsilon 0");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "value: -14.00"));
    CHECK(contains(res.out, "open: {3}"));
    CHECK(contains(res.out, "status: optimal"));
  }
}

TEST_CASE("solve-domp generator path, verification, and exit codes") {
  const CliResult ok = run_cli(
      "solve-domp --n 6 --p 3 --seed 1 --family krange --verify --epsilon 0");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "verify: ok"));

  const CliResult trivial = run_cli("solve-domp --n 5 --p 5 --verify --epsilon 0");
  CHECK(trivial.code == 0);

  CHECK(run_cli("solve-domp --n 17 --method enum").code == 5);
  CHECK(run_cli("solve-domp --n 17 --method benders-b1").code == 5);
  CHECK(run_cli("solve-domp").code == 2);
  CHECK(run_cli("solve-domp --n 4 --family nosuch").code == 2);
}

TEST_CASE("methods agree through the command line") {
  std::string values[3];
  int i = 0;
  for (const char* method : {"enum", "benders-b1", "benders-b2"}) {
    const CliResult res = run_cli(
        std::string("solve-domp --n 6 --seed 4 --family random --epsilon 0") +
        " --method " + method);
    REQUIRE(res.code == 0);
    const auto at = res.out.find("value:");
    REQUIRE(at != std::string::npos);
    values[i++] = res.out.substr(at, res.out.find('\n', at) - at);
  }
  CHECK(values[0] == values[1]);
  CHECK(values[0] == values[2]);
}

TEST_CASE("gen writes instances the solver accepts") {
  const CliResult gen =
      run_cli("gen --n 6 --seed 1 --family reverse --out gen_out.json");
  CHECK(gen.code == 0);
  CHECK(contains(gen.out, "lambda = (6, 5, 4, 3, 2, 1)"));

  const CliResult solved = run_cli("solve-domp gen_out.json --method enum");
  CHECK(solved.code == 0);

  // Without --out the document goes to stdout and parses back in.
  const CliResult piped = run_cli("gen --n 4 --seed 2 --family median");
  CHECK(piped.code == 0);
  write_file("gen_pipe.json", piped.out);
  CHECK(run_cli("solve-domp gen_pipe.json --method enum").code == 0);
}

TEST_CASE("bench emits a stable CSV") {
  const CliResult empty = run_cli("bench --seeds 0");
  CHECK(empty.code == 0);
  CHECK(empty.out ==
        "instance_id,n,p,lambda_tag,seed,method,status,objective,bound,gap,"
        "time_ms,iterations,cuts_added,separation_time_ms\n");

  const std::string flags =
      "bench --ns 5 --denoms 2 --families median random --seeds 1 "
      "--methods enum benders-b1 --epsilon 0";
  const CliResult first = run_cli(flags);
  const CliResult second = run_cli(flags);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(contains(first.out, "n05_d2_median_s1"));
  // one header plus 2 families x 2 methods
  int lines = 0;
  for (char c : first.out) lines += c == '\n';
  CHECK(lines == 5);
}

TEST_CASE("verify runs the invariant suites") {
  const CliResult quick =
      run_cli("verify --suite encoding-count --max-n 4 --max-g 4");
  CHECK(quick.code == 0);
  CHECK(contains(quick.out, "encoding-count"));
  CHECK(contains(quick.out, "pass"));

  const CliResult all = run_cli("verify --trials 5 --max-n 3 --max-g 3");
  CHECK(all.code == 0);

  CHECK(run_cli("verify --suite nosuch").code == 2);
}
