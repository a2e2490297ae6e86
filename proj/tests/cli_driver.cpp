// End-to-end checks of the command-line tool: takes the binary path as argv[1],
// runs each subcommand against generated files and checks output + exit codes.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "FAIL: " << what << '\n';
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string binary;
std::string dir;

RunResult run(const std::string& args) {
  std::string out_path = dir + "/stdout.txt";
  std::string err_path = dir + "/stderr.txt";
  std::string cmd = binary + " " + args + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_driver <stanley-binary>\n";
    return 2;
  }
  binary = argv[1];
  char tmpl[] = "/tmp/stanley-cli-XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::cerr << "cannot create temp dir\n";
    return 2;
  }
  dir = tmpl;

  // Families emit parseable ideal files.
  RunResult r = run("family maximal 3 --emit " + dir + "/m3.ideal");
  expect(r.code == 0, "family maximal 3 --emit");
  expect(slurp(dir + "/m3.ideal") == "n = 3\nI = x1, x2, x3\n", "m3 file contents");

  r = run("family skeleton 4 2");
  expect(r.code == 0 && r.out.find("x1*x2") != std::string::npos, "family skeleton 4 2");

  r = run("family stanley-reisner 4 --facet 1,2 --facet 3,4 --emit " + dir +
          "/delta.ideal");
  expect(r.code == 0, "family stanley-reisner");
  expect(slurp(dir + "/delta.ideal").find("module = S/I") != std::string::npos,
         "stanley-reisner emits the face ring");

  // Exact values.
  r = run("sdepth " + dir + "/m3.ideal");
  expect(r.code == 0 && r.out == "2\n", "sdepth m3 = 2, got: " + r.out);
  r = run("fdepth " + dir + "/m3.ideal");
  expect(r.code == 0 && r.out == "1\n", "fdepth m3 = 1");
  r = run("dim " + dir + "/m3.ideal");
  expect(r.code == 0 && r.out == "3\n", "dim m3 = 3");
  r = run("fdepth " + dir + "/delta.ideal");
  expect(r.code == 0 && r.out == "1\n", "fdepth of the face ring = 1");

  // JSON output.
  r = run("sdepth " + dir + "/m3.ideal --json --witness");
  expect(r.code == 0, "sdepth --json exit");
  {
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(!j.is_discarded(), "sdepth --json parses");
    expect(j["command"] == "sdepth" && j["value"] == 2 && j["status"] == "exact" &&
               j["poset_size"] == 7 && j.contains("witness") && j.contains("elapsed_ms"),
           "sdepth --json fields");
  }

  // Witness text output.
  r = run("sdepth " + dir + "/m3.ideal --witness --single-thread");
  expect(r.code == 0 && r.out.find("# partition") != std::string::npos &&
             r.out.find("# decomposition") != std::string::npos,
         "sdepth --witness sections");

  // bounds on an ideal and on a proper quotient.
  r = run("bounds " + dir + "/m3.ideal");
  expect(r.code == 0 && r.out.find("minrho 1\n") != std::string::npos &&
             r.out.find("gencount 1\n") != std::string::npos &&
             r.out.find("recursive 1\n") != std::string::npos &&
             r.out.find("upper 2\n") != std::string::npos,
         "bounds m3, got: " + r.out);
  write_file(dir + "/fig4.ideal",
             "n = 2\nI = x1^2*x2^4, x1^3*x2^3, x1^5*x2\nJ = x1^4*x2^5, x1^6*x2^2\n");
  r = run("bounds " + dir + "/fig4.ideal");
  expect(r.code == 0 && r.out.find("gencount n/a") != std::string::npos,
         "bounds with J != 0 marks ideal-only bounds n/a");

  // Poset dump honors the g override.
  r = run("poset " + dir + "/m3.ideal");
  expect(r.code == 0 && count_lines(r.out) == 7, "poset m3 has 7 lines");
  r = run("poset " + dir + "/fig4.ideal --g 7,6");
  expect(r.code == 0 && count_lines(r.out) == 15, "fig4 poset at g=(7,6) has 15 lines");
  r = run("sdepth " + dir + "/fig4.ideal --g \"7 6\"");
  expect(r.code == 0 && r.out == "0\n", "sdepth fig4 = 0");
  r = run("sdepth " + dir + "/fig4.ideal --g \"1 1\"");
  expect(r.code == 1, "inadmissible --g is a usage error");

  // decompose / verify round trip.
  r = run("decompose " + dir + "/m3.ideal --target 2");
  expect(r.code == 0, "decompose --target 2");
  write_file(dir + "/m3.dec", r.out);
  r = run("verify " + dir + "/m3.ideal " + dir + "/m3.dec");
  expect(r.code == 0 && r.out == "valid\n", "verify emitted decomposition");

  // Tampering is caught, with exit code 3.
  {
    std::string dec = slurp(dir + "/m3.dec");
    write_file(dir + "/broken.dec", dec.substr(dec.find('\n') + 1));
    r = run("verify " + dir + "/m3.ideal " + dir + "/broken.dec");
    expect(r.code == 3 && r.out.find("invalid") != std::string::npos,
           "verify flags a missing space");
    r = run("verify " + dir + "/m3.ideal " + dir + "/broken.dec --json");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.code == 3 && !j.is_discarded() && j["valid"] == false &&
               j.contains("counterexample"),
           "verify --json reports the counterexample");
  }

  // Unreachable target.
  r = run("decompose " + dir + "/m3.ideal --target 3");
  expect(r.code == 3 && r.err.find("impossible") != std::string::npos,
         "decompose --target 3 is impossible");

  // Budget exhaustion: exit 2 and a lower bound.
  r = run("sdepth " + dir + "/m3.ideal --node-limit 1");
  expect(r.code == 2 && r.out.find(">=") != std::string::npos,
         "node limit gives a lower bound and exit 2");

  // Empty module outcome.
  write_file(dir + "/empty.ideal", "n = 2\nI = x1, x2\nJ = x2, x1\n");
  r = run("sdepth " + dir + "/empty.ideal");
  expect(r.code == 0 && r.out == "empty module\n", "empty module outcome");
  r = run("sdepth " + dir + "/empty.ideal --json");
  {
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.code == 0 && !j.is_discarded() && j["status"] == "empty_module" &&
               j["value"].is_null(),
           "empty module JSON");
  }

  // Parse errors carry positions and exit 1.
  write_file(dir + "/bad.ideal", "n = 2\nI = x1, y\n");
  r = run("sdepth " + dir + "/bad.ideal");
  expect(r.code == 1 && r.err.find("2:") != std::string::npos,
         "parse error reports the line");
  r = run("sdepth " + dir + "/missing.ideal");
  expect(r.code == 1, "missing file is an error");
  r = run("frobnicate");
  expect(r.code == 1, "unknown command is a usage error");
  r = run("sdepth");
  expect(r.code == 1, "missing argument is a usage error");

  // Quotient module files work end to end.
  write_file(dir + "/ring.ideal", "n = 4\nmodule = S/I\nI = x1*x3, x1*x4, x2*x3, x2*x4\n");
  r = run("fdepth " + dir + "/ring.ideal");
  expect(r.code == 0 && r.out == "1\n", "fdepth of S/I from file");
  r = run("dim " + dir + "/ring.ideal");
  expect(r.code == 0 && r.out == "2\n", "dim of S/I from file");

  // Threads flag accepted and consistent.
  r = run("fdepth " + dir + "/m3.ideal --threads 4");
  expect(r.code == 0 && r.out == "1\n", "fdepth with worker threads");

  // JSON values match the human-readable output.
  {
    RunResult plain = run("dim " + dir + "/fig4.ideal");
    RunResult js = run("dim " + dir + "/fig4.ideal --json");
    auto j = nlohmann::json::parse(js.out, nullptr, false);
    expect(!j.is_discarded() && std::to_string(j["value"].get<int>()) + "\n" == plain.out,
           "dim JSON matches plain output");
    RunResult fplain = run("fdepth " + dir + "/m3.ideal");
    RunResult fjs = run("fdepth " + dir + "/m3.ideal --json");
    auto fj = nlohmann::json::parse(fjs.out, nullptr, false);
    expect(!fj.is_discarded() &&
               std::to_string(fj["value"].get<int>()) + "\n" == fplain.out,
           "fdepth JSON matches plain output");
    RunResult bjs = run("bounds " + dir + "/m3.ideal --json");
    auto bj = nlohmann::json::parse(bjs.out, nullptr, false);
    expect(!bj.is_discarded() && bj["minrho"] == 1 && bj["gencount"] == 1 &&
               bj["recursive"] == 1 && bj["upper"] == 2,
           "bounds JSON fields");
  }

  // The projective-plane ideal through the CLI.
  r = run("family rp2 --emit " + dir + "/rp2.ideal");
  expect(r.code == 0, "family rp2 --emit");
  r = run("fdepth " + dir + "/rp2.ideal");
  expect(r.code == 0 && r.out == "3\n", "fdepth rp2 = 3");

  // The two-generator staircase and its printed decomposition verify cleanly.
  write_file(dir + "/fig1.ideal", "n = 2\nI = x1*x2^3, x1^3*x2\n");
  write_file(dir + "/fig1.dec",
             "x^(1,3) K[ 1 2 ]\nx^(3,2) K[ 1 ]\nx^(3,1) K[ 1 ]\n");
  r = run("verify " + dir + "/fig1.ideal " + dir + "/fig1.dec");
  expect(r.code == 0 && r.out == "valid\n", "verify the staircase decomposition");

  if (failures == 0) {
    std::cout << "cli driver: all checks passed\n";
    return 0;
  }
  std::cout << "cli driver: " << failures << " check(s) failed\n";
  return 1;
}
