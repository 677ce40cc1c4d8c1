// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace torusconj {
namespace {

using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

Json invoke_json(const std::vector<std::string>& args, const std::string& input = "") {
  const Outcome o = invoke(args, input);
  EXPECT_EQ(o.code, cli::kExitOk) << o.out << o.err;
  return Json::parse(o.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

TEST(Cli, SnfEnvelope) {
  const Json j = invoke_json({"snf", "--matrix", "2 4; 6 8"});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["command"], "snf");
  EXPECT_EQ(j["result"]["factors"], Json::parse("[2,4]"));
}

TEST(Cli, CrnWitness) {
  const Json j = invoke_json({"conjugate", "--group", "crn", "--a", "2 0", "--b", "0 2"});
  EXPECT_EQ(j["result"], true);
  EXPECT_EQ(j["witness"]["matrix"], Json::parse("[[0,1],[1,0]]"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"snf", "--matrix", "1 q"}).code, cli::kExitMalformed);
  EXPECT_EQ(invoke({"torus-equal", "--a", "2 2", "--b", "1 1"}).code, cli::kExitPrecondition);
  EXPECT_EQ(invoke({}).code, cli::kExitMalformed);
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST(Cli, ErrorsGoToBothStreams) {
  const Outcome o = invoke({"canonical", "--context", "autn-codim1", "--weights", "0 0"});
  EXPECT_EQ(o.code, cli::kExitPrecondition);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["error"]["kind"], "ZeroVector");
  EXPECT_NE(o.err.find("ZeroVector"), std::string::npos);
}

TEST(Cli, UnknownCommandIsNamed) {
  const Outcome o = invoke({"frobnicate"});
  EXPECT_EQ(o.code, cli::kExitMalformed);
  EXPECT_NE(o.out.find("frobnicate"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"normalizer", "--weights", "1 1 -1 -1 0"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, HnfRoundTrip) {
  const Outcome first = invoke({"hnf", "--matrix", "4 6 2; 2 2 8"});
  ASSERT_EQ(first.code, cli::kExitOk);
  const Outcome second = invoke({"hnf", "--matrix-json", first.out});
  ASSERT_EQ(second.code, cli::kExitOk);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, CanonicalRoundTrip) {
  const Outcome first = invoke({"canonical", "--context", "crn", "--matrix", "3 6 0; 0 4 2"});
  ASSERT_EQ(first.code, cli::kExitOk);
  const Json env = Json::parse(first.out);
  const Outcome second =
      invoke({"canonical", "--context", "crn", "--matrix-json", env["result"].dump()});
  ASSERT_EQ(second.code, cli::kExitOk);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, StdinOperands) {
  const Json j = invoke_json({"--stdin", "lattice-equal"}, R"({"a": [[1,2],[3,4]], "b": "1 0; 0 2"})");
  EXPECT_EQ(j["result"], true);
}

TEST(Cli, FileOperand) {
  const auto path = std::filesystem::temp_directory_path() / "torusconj_cli_matrix.txt";
  {
    std::ofstream f(path);
    f << "2 4\n6 8\n\n";
  }
  const Json j = invoke_json({"isotype", "--matrix-file", path.string()});
  EXPECT_EQ(j["result"]["factors"], Json::parse("[2,4]"));
  std::filesystem::remove(path);
}

TEST(Cli, LargeIntegersAreStrings) {
  const Json j = invoke_json({"hnf", "--matrix", "99999999999999999999 0"});
  EXPECT_EQ(j["result"][0][0], "99999999999999999999");
}

TEST(Cli, Golden) {
  const std::filesystem::path dir = TORUSCONJ_GOLDEN_DIR;
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    ++seen;
    std::istringstream listing(slurp(entry.path()));
    std::string line;
    std::getline(listing, line);
    const int expected_code = std::stoi(line);
    std::vector<std::string> args;
    while (std::getline(listing, line)) args.push_back(line);
    auto stem = entry.path();
    stem.replace_extension();
    const auto stdin_path = std::filesystem::path(stem.string() + ".stdin");
    const std::string input = std::filesystem::exists(stdin_path) ? slurp(stdin_path) : "";
    const Outcome o = invoke(args, input);
    SCOPED_TRACE(stem.filename().string());
    EXPECT_EQ(o.code, expected_code);
    EXPECT_EQ(o.out, slurp(stem.string() + ".out"));
  }
  EXPECT_GE(seen, 40);
}

}  // namespace
}  // namespace torusconj
