#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"
#include "tnncells/atlas_json.hpp"

using namespace tnncells;
using testutil::A;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + TNNCELLS_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

std::filesystem::path temp_path(const char* stem) {
  return std::filesystem::temp_directory_path() /
         (std::string(stem) + "." + std::to_string(getpid()) + ".json");
}

}  // namespace

TEST_CASE("atlas subcommand emits deterministic JSON") {
  auto first = run_cli("atlas -t A -r 3 --y-word 1,3");
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("\"dim_histogram\": {\"0\":6,\"1\":6,\"2\":1}") !=
        std::string::npos);
  CHECK(first.output.find("\"kind\": \"springer_atlas\"") != std::string::npos);
  auto second = run_cli("atlas -t A -r 3 --y-word 1,3");
  CHECK(first.output == second.output);
}

TEST_CASE("atlas subcommand with no words uses the identity piece") {
  auto r = run_cli("atlas -t A -r 2");
  CHECK(r.exit_code == 0);
  CHECK(count_occurrences(r.output, "\"v\": ") == 19);
}

TEST_CASE("atlas table format") {
  auto r = run_cli("atlas -t A -r 2 --y-word 1 --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("A2 piece z=(1) zprime=()") != std::string::npos);
  CHECK(r.output.find("total 5 cells; histogram 0:3 1:2") != std::string::npos);
}

TEST_CASE("atlas rejects bad inputs with exit code 2") {
  CHECK(run_cli("atlas -t A -r 1 --y-word 1 --x-word 1").exit_code == 2);
  CHECK(run_cli("atlas -t A -r 2 --format yaml").exit_code == 2);
  CHECK(run_cli("atlas -t A -r 9").exit_code == 2);
  CHECK(run_cli("atlas -t E -r 6").exit_code == 2);
  CHECK(run_cli("atlas -t A").exit_code == 2);         // missing required rank
  CHECK(run_cli("").exit_code == 2);                   // missing subcommand
  CHECK(run_cli("atlas -t A -r 2 --y-word x").exit_code == 2);
}

TEST_CASE("version flag") {
  auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.1.0") != std::string::npos);
}

TEST_CASE("flag-atlas subcommand") {
  auto r = run_cli("flag-atlas -t A -r 2 --H 2 --y-word 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"kind\": \"flag_atlas\"") != std::string::npos);
  CHECK(r.output.find("\"H\": [2]") != std::string::npos);
  CHECK(r.output.find("\"dim_histogram\": {\"0\":2,\"1\":1}") != std::string::npos);

  CHECK(run_cli("flag-atlas -t A -r 2 --H 5 --y-word 1").exit_code == 2);
}

TEST_CASE("verify-adjoint passes clean and fails corrupted") {
  auto clean = run_cli("verify-adjoint");
  CHECK(clean.exit_code == 0);
  CHECK(clean.output.find("[PASS] ") != std::string::npos);
  CHECK(clean.output.find("19-family cross-oracle") != std::string::npos);
  CHECK(clean.output.find("[FAIL]") == std::string::npos);

  auto corrupt = run_cli("verify-adjoint --corrupt-support-table");
  CHECK(corrupt.exit_code == 3);
  CHECK(corrupt.output.find("[FAIL]") != std::string::npos);
}

TEST_CASE("parabolic subcommand") {
  auto full = run_cli("parabolic --n 3 --gens x1:1");
  CHECK(full.exit_code == 0);
  CHECK(full.output.find("\"is_full_group\": true") != std::string::npos);
  CHECK(full.output.find("\"minor_class\": \"totally_nonnegative\"") !=
        std::string::npos);
  CHECK(full.output.find("\"borel_chart_pass\": false") != std::string::npos);

  auto borel = run_cli("parabolic --n 2 --gens y1:1,t:2,1/2,x1:1");
  CHECK(borel.exit_code == 0);
  CHECK(borel.output.find("\"minor_class\": \"totally_positive\"") != std::string::npos);
  CHECK(borel.output.find("\"is_borel\": true") != std::string::npos);
  CHECK(borel.output.find("\"borel_chart_pass\": true") != std::string::npos);
  CHECK(borel.output.find("4.26556443707") != std::string::npos);

  CHECK(run_cli("parabolic --n 2 --gens x1:-1").exit_code == 2);
  CHECK(run_cli("parabolic --n 5 --gens x1:1").exit_code == 2);
  CHECK(run_cli("parabolic --gens x1:1").exit_code == 2);  // missing required n
}

TEST_CASE("selftest rejects unknown levels") {
  CHECK(run_cli("selftest --level bogus").exit_code == 2);
}

TEST_CASE("atlas golden diff round trip and regression exit") {
  auto a2 = A(2);
  auto atlas = springer_atlas(*a2, piece_of(*a2, std::vector<int>{1}, {}));
  auto golden_text = springer_golden_json(*a2, atlas);

  auto good_path = temp_path("tnncells_golden_good");
  {
    std::ofstream out(good_path, std::ios::binary);
    out << golden_text;
  }
  auto good = run_cli("atlas -t A -r 2 --y-word 1 --golden " + good_path.string());
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("\"golden_diff\": {\"complete\": true, \"regression\": false, "
                         "\"issues\": []}") != std::string::npos);

  auto doc = nlohmann::json::parse(golden_text);
  doc["cells"].erase(0);
  auto bad_path = temp_path("tnncells_golden_bad");
  {
    std::ofstream out(bad_path, std::ios::binary);
    out << doc.dump();
  }
  auto bad = run_cli("atlas -t A -r 2 --y-word 1 --golden " + bad_path.string());
  CHECK(bad.exit_code == 3);
  CHECK(bad.output.find("\"kind\": \"extra\"") != std::string::npos);
  CHECK(bad.output.find("golden regression detected") != std::string::npos);

  auto wrong_piece =
      run_cli("atlas -t A -r 2 --y-word 2 --golden " + good_path.string());
  CHECK(wrong_piece.exit_code == 2);

  CHECK(run_cli("atlas -t A -r 2 --y-word 1 --golden /nonexistent/file.json")
            .exit_code == 2);

  std::filesystem::remove(good_path);
  std::filesystem::remove(bad_path);
}

TEST_CASE("flag-atlas table format") {
  auto r = run_cli("flag-atlas -t A -r 2 --H 2 --y-word 1 --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("A2 H=(2) piece z=(1) zprime=()") != std::string::npos);
  CHECK(r.output.find("total 3 cells; histogram 0:2 1:1") != std::string::npos);
}
