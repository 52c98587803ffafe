#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "goldbach/instance.hpp"
#include "test_util.hpp"

// Toy arguments keep every invocation well under a second: 3 evens above 100,
// drive prime 13 (the unique-match case checked in the instance suite).
namespace {
const std::string kBin = CLI_BIN;
const std::string kToy = "--base 100 --count 3 --pmax 13 --pdrive 13";
}  // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(testutil::run_cli(kBin, "").exit_code == 1);
    CHECK(testutil::run_cli(kBin, "frobnicate").exit_code == 1);
    CHECK(testutil::run_cli(kBin, "run --sgate bogus").exit_code == 1);
    CHECK(testutil::run_cli(kBin, "--help").exit_code == 0);
}

TEST_CASE("oracle") {
    const auto ok = testutil::run_cli(kBin, "oracle 10 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("10: first prime 3; partitions (3,7) (5,5)") != std::string::npos);
    CHECK(ok.output.find("4: first prime 2; partitions (2,2)") != std::string::npos);

    // 98 - 3 = 95 is composite, so pmax = 3 cannot resolve it
    const auto unresolved = testutil::run_cli(kBin, "oracle 98 --pmax 3");
    CHECK(unresolved.exit_code == 2);
    CHECK(unresolved.output.find("unresolved") != std::string::npos);
}

TEST_CASE("build writes a loadable instance document") {
    const auto res = testutil::run_cli(kBin, "build " + kToy + " --out cli_build");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("match: n'=1 (even 102)") != std::string::npos);
    const auto inst = goldbach::parse_instance(testutil::read_file("cli_build_instance.json"));
    CHECK(inst.evens == std::vector<std::uint64_t>{102, 104, 106});
    CHECK(inst.match_g_index == 0);
}

TEST_CASE("match-degeneracy exit codes") {
    // 104-3 and 106-3 both prime
    CHECK(testutil::run_cli(kBin, "build --base 100 --count 3 --pmax 13 --pdrive 3")
              .exit_code == 3);
    // 102-11, 104-11, 106-11 all composite
    CHECK(testutil::run_cli(kBin, "build --base 100 --count 3 --pmax 13 --pdrive 11")
              .exit_code == 4);
}

TEST_CASE("run simulates, reports, and verifies") {
    const auto res = testutil::run_cli(
        kBin, "run " + kToy + " --M 6 --vs 100 --dt 1e-3 --out cli_run");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("detected even: 102") != std::string::npos);
    CHECK(res.output.find("candidate partition: 13 + 89") != std::string::npos);
    CHECK(res.output.find("verified") != std::string::npos);
    const auto csv = testutil::read_file("cli_run_snapshots.csv");
    CHECK(csv.rfind("iteration,target_pop,rest_pop,aux_pop,theory\n", 0) == 0);
}

TEST_CASE("run --trace emits intra-pulse amplitudes") {
    const auto res = testutil::run_cli(
        kBin, "run " + kToy + " --M 6 --vs 100 --dt 1e-3 --iters 1 --trace --out cli_trace");
    CHECK(res.exit_code == 0);
    const auto trace = testutil::read_file("cli_trace_trace.csv");
    CHECK(trace.rfind("time,state_label,re,im\n", 0) == 0);
    CHECK(trace.find(",g1,") != std::string::npos);
    CHECK(trace.find(",e2,") != std::string::npos);
}

TEST_CASE("run can load a saved instance") {
    REQUIRE(testutil::run_cli(kBin, "build " + kToy + " --out cli_saved").exit_code == 0);
    const auto res = testutil::run_cli(
        kBin, "run --instance cli_saved_instance.json --M 6 --vs 100 --dt 1e-3 --out cli_loaded");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("detected even: 102") != std::string::npos);
}

TEST_CASE("integrator failure exits 5") {
    const auto res = testutil::run_cli(
        kBin, "run " + kToy + " --M 6 --vs 100 --dt 1 --out cli_coarse");
    CHECK(res.exit_code == 5);
}

TEST_CASE("a corrupted detection is caught by the verification gate") {
    const auto res = testutil::run_cli(
        kBin, "run " + kToy + " --M 6 --vs 100 --dt 1e-3 --inject-fault --out cli_fault");
    CHECK(res.exit_code == 7);
    CHECK(res.output.find("VERIFICATION FAILED") != std::string::npos);
}

TEST_CASE("campaign resolves an interval, simulating where the match is unique") {
    // evens 114,116,118: p=3 gives the unique match 116 = 3 + 113
    const auto res = testutil::run_cli(
        kBin, "campaign --base 112 --count 3 --M 6 --vs 100 --dt 1e-3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("116 = 3 + 113  [simulated]") != std::string::npos);
    CHECK(res.output.find("114 = 5 + 109  [classical]") != std::string::npos);
    CHECK(res.output.find("118 = 5 + 113  [classical]") != std::string::npos);
}

TEST_CASE("campaign exits 6 when the prime budget runs out") {
    // ln^2(4) < 2 primes, but 98 = 19 + 79 needs the 8th odd prime
    const auto res = testutil::run_cli(kBin, "campaign --base 4 --count 47 --dt 1e-3");
    CHECK(res.exit_code == 6);
    CHECK(res.output.find("survivors") != std::string::npos);
    CHECK(res.output.find("98") != std::string::npos);
}

TEST_CASE("sweep ranks parameter cells") {
    const auto res = testutil::run_cli(
        kBin, "sweep " + kToy + " --Ms 3,6 --vss 100 --dt 1e-3 --out cli_sweep");
    CHECK(res.exit_code == 0);
    const auto csv = testutil::read_file("cli_sweep_sweep.csv");
    CHECK(csv.rfind("M,v_s,r_opt,target_pop\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("outputs are byte-identical across runs") {
    const std::string args = " " + kToy + " --M 6 --vs 100 --dt 1e-3";
    REQUIRE(testutil::run_cli(kBin, "build " + kToy + " --out cli_det_a").exit_code == 0);
    REQUIRE(testutil::run_cli(kBin, "build " + kToy + " --out cli_det_b").exit_code == 0);
    CHECK(testutil::read_file("cli_det_a_instance.json") ==
          testutil::read_file("cli_det_b_instance.json"));

    REQUIRE(testutil::run_cli(kBin, "run" + args + " --out cli_det_a").exit_code == 0);
    REQUIRE(testutil::run_cli(kBin, "run" + args + " --out cli_det_b").exit_code == 0);
    const auto a = testutil::read_file("cli_det_a_snapshots.csv");
    CHECK(!a.empty());
    CHECK(a == testutil::read_file("cli_det_b_snapshots.csv"));
}
