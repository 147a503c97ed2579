// End-to-end checks of the command-line surface: spawns the real binary and
// inspects stdout plus exit codes. Invoked as: cli_tests <path-to-hiernet>.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = "'" + g_binary + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << '\n';
    std::exit(2);
  }
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok    " << what << '\n';
  } else {
    std::cout << "FAIL  " << what << '\n';
    ++g_failures;
  }
}

void expect_exit(const std::string& args, int want) {
  const RunResult r = run(args);
  expect(r.exit_code == want,
         "`" + args + "` exits " + std::to_string(want) + " (got " +
             std::to_string(r.exit_code) + ")");
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-hiernet>\n";
    return 2;
  }
  g_binary = argv[1];

  // generate
  {
    const RunResult r = run("generate -n 4 -k 2");
    expect(r.exit_code == 0, "generate (4,2) succeeds");
    expect(contains(r.output, "# hiernet n=4 k=2 vertices=16 edges=36\n"),
           "generate (4,2) writes the exact header");
    std::size_t lines = 0;
    for (char c : r.output) lines += c == '\n';
    expect(lines == 37, "generate (4,2) writes 36 edges");
  }
  {
    const RunResult r = run("generate -n 3 -k 2 --format dot");
    expect(r.exit_code == 0, "generate dot succeeds");
    std::size_t edges = 0;
    for (std::size_t at = r.output.find(" -- "); at != std::string::npos;
         at = r.output.find(" -- ", at + 1))
      ++edges;
    expect(edges == 14, "dot output has one edge statement per edge");
    expect(contains(r.output, "\"00\";"), "dot output declares the root node");
  }

  // stats
  {
    const RunResult r = run("stats -n 3 -k 2 --mode both --json");
    expect(r.exit_code == 0, "stats both (3,2) succeeds");
    expect(contains(r.output, "\"all\": true"), "stats both reports a full match");
    expect(contains(r.output, "\"exact\": \"3/7\""), "stats carries exact transitivity");
  }
  expect_exit("stats -n 2 -k 3 --mode both", 0);
  {
    // Analytic mode must not materialize: far beyond any cap, still instant.
    const RunResult r = run("stats -n 6 -k 30 --mode analytic --json");
    expect(r.exit_code == 0, "analytic stats work at n^k = 6^30");
    expect(contains(r.output, "\"diameter\": 59"), "closed-form diameter is present");
  }
  {
    const RunResult r = run("stats -n 2 -k 2 --mode analytic --json");
    expect(r.exit_code == 0, "stats (2,2) succeeds");
    expect(contains(r.output, "\"gamma_theory\": null"),
           "gamma is null for n = 2 in JSON");
  }

  // verify
  {
    const RunResult r = run("verify -n 3 -k 2");
    expect(r.exit_code == 0, "verify (3,2) passes");
    expect(contains(r.output, "PASS  distance oracle"),
           "verify prints the oracle row");
    expect(!contains(r.output, "FAIL"), "verify (3,2) has no failing row");
  }
  expect_exit("verify -n 2 -k 5", 0);

  // dist
  {
    const RunResult r = run("dist -n 3 -k 2 --from 12 --to 21");
    expect(r.exit_code == 0 && r.output == "2\n", "dist (3,2) 12 -> 21 prints 2");
  }
  {
    const RunResult r = run("dist -n 3 -k 2 --from 01 --to 10");
    expect(r.exit_code == 0 && r.output == "3\n", "dist (3,2) 01 -> 10 prints 3");
  }
  {
    const RunResult r = run("dist -n 3 -k 2 --from 00 --to 00");
    expect(r.exit_code == 0 && r.output == "0\n", "dist to self prints 0");
  }
  {
    const RunResult r = run("dist -n 2 -k 4 --from 0101 --to 1010 --check-bfs");
    expect(r.exit_code == 0 && r.output == "7\n",
           "dist --check-bfs confirms the diametral pair");
  }
  {
    const RunResult r = run("dist -n 12 -k 3 --from 11,0,3 --to 0,0,0");
    expect(r.exit_code == 0 && r.output == "3\n", "comma labels work for n > 10");
  }

  // sweep
  {
    const RunResult r = run("sweep --n-range 4:4:1 --k-range 1:5 --metric transitivity");
    expect(r.exit_code == 0, "sweep transitivity succeeds");
    expect(contains(r.output, "n,k,transitivity\n4,1,1\n4,2,0.490566037736\n"),
           "sweep rows carry 12-digit floats");
  }
  {
    const RunResult r = run("sweep --n-range 2:3 --metric gamma_theory");
    expect(r.exit_code == 0, "sweep gamma_theory tolerates n = 2");
    expect(contains(r.output, "2,1,NA\n"), "undefined cells are NA");
  }

  // output redirection
  {
    const std::string path = "cli_test_out.tmp";
    const RunResult r = run("generate -n 2 -k 2 -o " + path);
    expect(r.exit_code == 0 && r.output.empty(), "-o writes no stdout");
    FILE* f = std::fopen(path.c_str(), "r");
    expect(f != nullptr, "-o creates the file");
    if (f) {
      char line[64] = {0};
      expect(std::fgets(line, sizeof line, f) != nullptr &&
                 std::string(line) == "# hiernet n=2 k=2 vertices=4 edges=3\n",
             "-o file starts with the header");
      std::fclose(f);
    }
    std::remove(path.c_str());
  }

  // usage errors all exit 2
  expect_exit("stats -n 1 -k 2", 2);
  expect_exit("stats -n 3", 2);
  expect_exit("generate -n 3 -k 0", 2);
  expect_exit("generate -n 3 -k 2 --cap 5", 2);
  expect_exit("generate -n 2 -k 30", 2);  // default cap
  expect_exit("dist -n 3 -k 2 --from 12 --to 31", 2);
  expect_exit("dist -n 3 -k 2 --from 123 --to 210", 2);
  expect_exit("dist -n 3 -k 2 --from 12", 2);
  expect_exit("sweep --n-range 4:2 --metric size", 2);
  expect_exit("sweep --n-range 2:4 --metric entropy", 2);
  expect_exit("sweep --n-range x:4 --metric size", 2);
  expect_exit("frobnicate", 2);
  expect_exit("", 2);
  expect_exit("stats -n 3 -k 2 --mode sideways", 2);
  expect_exit("generate -n 3 -k 2 -o /nonexistent-dir/x", 2);

  // --help is a success, not a usage error
  expect_exit("--help", 0);
  expect_exit("stats --help", 0);

  if (g_failures) {
    std::cout << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
