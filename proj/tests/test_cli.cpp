#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "spinstat/report.hpp"

#include "cli_runner.hpp"

#include <cstdio>
#include <fstream>

using clirunner::CommandResult;
using clirunner::quote;
using clirunner::run_command;
using clirunner::TempFile;

namespace {

std::string g_cli;

CommandResult run_cli(const std::string& args) {
  return run_command(quote(g_cli) + " " + args);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s [doctest options] <path-to-spinstat-cli>\n",
                 argv[0]);
    return 1;
  }
  g_cli = argv[argc - 1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv);
  return context.run();
}

TEST_CASE("phases prints the composite and rotation phases") {
  const CommandResult r = run_cli("phases --kappa 1/2 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("kappa_n = kappa^(n^2)    = +1") != std::string::npos);
  CHECK(r.output.find("rotation kappa^(n(n-1))  = +1") != std::string::npos);
  CHECK(r.output.find("exponent sum 4") != std::string::npos);
  CHECK(r.output.find("exponent sum 2") != std::string::npos);

  const CommandResult anyon = run_cli("phases --kappa 1/4 --n 3");
  CHECK(anyon.exit_code == 0);
  // kappa^9 = exp(2 pi i 9/4) = exp(2 pi i 1/4)
  CHECK(anyon.output.find("kappa_n = kappa^(n^2)    = +i") != std::string::npos);

  const CommandResult boson = run_cli("phases --kappa 0 --n 5");
  CHECK(boson.exit_code == 0);
  CHECK(boson.output.find("kappa                    = +1") != std::string::npos);
}

TEST_CASE("phases rejects bad arguments with exit 2") {
  CHECK(run_cli("phases --kappa 1/2 --n 0").exit_code == 2);
  CHECK(run_cli("phases --kappa nonsense --n 2").exit_code == 2);
  CHECK(run_cli("phases --n 2").exit_code == 2);
}

TEST_CASE("braid-demo prints both canonical words") {
  const CommandResult r = run_cli("braid-demo --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("full_twist(3) in B_3") != std::string::npos);
  CHECK(r.output.find("length       = 6") != std::string::npos);
  CHECK(r.output.find("length       = 9") != std::string::npos);
  CHECK(r.output.find("s1 s2 s1 s2 s1 s2") != std::string::npos);
  CHECK(r.output.find("[1 2 3]") != std::string::npos);       // twist is trivial
  CHECK(r.output.find("[4 5 6 1 2 3]") != std::string::npos); // block swap

  const CommandResult one = run_cli("braid-demo --n 1");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("word         = e") != std::string::npos);

  const CommandResult big = run_cli("braid-demo --n 4");
  CHECK(big.output.find("length       = 12") != std::string::npos);
  CHECK(big.output.find("length       = 16") != std::string::npos);

  CHECK(run_cli("braid-demo --n 0").exit_code == 2);
  CHECK(run_cli("braid-demo").exit_code == 2);
}

TEST_CASE("theorem2 verdicts and exit codes") {
  const CommandResult holds = run_cli("theorem2 --spin 1/2 --sn 1 --n 2");
  CHECK(holds.exit_code == 0);
  CHECK(holds.output.find("holds") != std::string::npos);

  const CommandResult trivial = run_cli("theorem2 --spin 0 --sn 0 --n 3");
  CHECK(trivial.exit_code == 0);

  const CommandResult fails = run_cli("theorem2 --spin 1/4 --sn 9/10 --n 2");
  CHECK(fails.exit_code == 1);
  CHECK(fails.output.find("fails") != std::string::npos);

  CHECK(run_cli("theorem2 --spin 1/2 --sn 1 --n -3").exit_code == 2);
  CHECK(run_cli("theorem2 --spin 1/2 --n 2").exit_code == 2);
}

TEST_CASE("verify passes on the degenerate smallest grid") {
  const CommandResult r = run_cli("verify --spin 0 --grid-m 2 --grid-k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("verify passes for fermion spin on a modest grid") {
  const CommandResult r =
      run_cli("verify --spin 1/2 --grid-m 8 --grid-k 4 --k-sweep -16,-3,0,5,16");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS] unitarity") != std::string::npos);
  CHECK(r.output.find("[PASS] equivariance") != std::string::npos);
  CHECK(r.output.find("[PASS] intertwining") != std::string::npos);
  CHECK(r.output.find("[PASS] roundtrip") != std::string::npos);
}

TEST_CASE("verify accepts an inexact decimal spin") {
  const CommandResult r =
      run_cli("verify --spin 0.137 --grid-m 8 --grid-k 3 --k-sweep -8,0,8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("verify rejects bad grids with exit 2") {
  CHECK(run_cli("verify --spin 1/2 --grid-m 7 --grid-k 4").exit_code == 2);
  CHECK(run_cli("verify --spin 1/2 --grid-m 0 --grid-k 4").exit_code == 2);
  CHECK(run_cli("verify --spin 1/2 --grid-m 8 --grid-k 0").exit_code == 2);
  CHECK(run_cli("verify --spin bogus").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("wrong-subcommand").exit_code == 2);
}

TEST_CASE("a false claimed kappa fails the equivariance check") {
  const CommandResult r =
      run_cli("verify --spin 1/2 --kappa 0 --grid-m 8 --grid-k 4 --k-sweep 0");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("[FAIL] equivariance") != std::string::npos);
  CHECK(r.output.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("csv round-trips the printed residuals") {
  TempFile csv(".csv");
  const CommandResult r = run_cli(
      "verify --spin 1/3 --grid-m 8 --grid-k 3 --k-sweep -5,0,2 --csv " +
      quote(csv.path()));
  REQUIRE(r.exit_code == 0);

  std::ifstream in(csv.path());
  REQUIRE(in.good());
  const spinstat::VerificationReport parsed = spinstat::read_csv(in);
  CHECK(parsed.overall());
  // 1 unitarity + 1 equivariance + 3 * (intertwining + roundtrip)
  REQUIRE(parsed.entries().size() == 8);

  const auto printed = clirunner::table_values(r.output);
  REQUIRE(printed.size() == parsed.entries().size());
  for (std::size_t i = 0; i < printed.size(); ++i)
    CHECK(printed[i] == spinstat::format_value(parsed.entries()[i].value));
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  const std::string args = "verify --spin 1/2 --grid-m 4 --grid-k 2 --k-sweep 0,3";
  const CommandResult a = run_cli(args);
  const CommandResult b = run_cli(args);
  CHECK(a.output == b.output);
  const CommandResult c = run_cli(args + " --seed 99");
  CHECK(c.exit_code == 0);
  CHECK(c.output != a.output);
}
