// Copyright 2026 The lorentz-harmonics Authors. All rights reserved.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "commands.hpp"
#include "lh/errors.hpp"
#include "run_config.hpp"

namespace lh::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  args.insert(args.begin(), "lh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err,
                       [&](const std::string& name) -> std::optional<std::string> {
                         auto it = env.find(name);
                         if (it == env.end()) return std::nullopt;
                         return it->second;
                       });
  return {code, out.str(), err.str()};
}

TEST(CliTest, CoefficientPaths) {
  auto r = run_cli({"coeff", "--j", "1", "--m", "0", "--tau", "0", "--eps", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["path"], "exact");
  EXPECT_EQ(j["kind"], "coefficient");
  r = run_cli({"coeff", "--j", "200", "--m", "0", "--tau", "0", "--eps", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["path"], "asymptotic");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({"coeff", "--j", "1", "--m", "5", "--eps", "2"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"coeff", "--j", "1", "--g", "2,0,0,0,0,0,0.6,0"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"coeff", "--j", "1", "--g", "2,0,0,0,0,0,0.5"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"norm", "--tau", "0,-1"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"sum", "--mode", "quadruple"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"ratio", "--eps", "1"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"coeff", "--j", "1"}, {{"LH_THREADS", "x"}}).code, kExitDomain);
  EXPECT_EQ(run_cli({"coeff", "--j", "1", "--tol", "-1"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"--help"}).code, kExitSuccess);
}

TEST(CliTest, GroupMatrixRoutesThroughCartan) {
  const auto r = run_cli({"coeff", "--j", "2", "--m", "1", "--g", "0.5,0,0,0,0,0,2,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["epsilon"].get<double>(), 2.0);
  EXPECT_TRUE(j.contains("cartan"));
  const auto direct = nlohmann::json::parse(
      run_cli({"coeff", "--j", "2", "--m", "1", "--eps", "2"}).out);
  EXPECT_NEAR(j["log_mag"].get<double>(), direct["log_mag"].get<double>(), 1e-14);
}

TEST(CliTest, Layering) {
  const auto dir = std::filesystem::temp_directory_path() / "lh_cli_test";
  std::filesystem::create_directories(dir);
  const std::string cfg = (dir / "lh.conf").string();
  std::ofstream(cfg) << "# comment\nj_max = 15\nformat = csv   # trailing\n";
  auto r = run_cli({"--config", cfg, "ratio", "--eps", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("j,log_mag", 0), 0u);
  EXPECT_NE(r.out.find("\n15,"), std::string::npos);
  // Flags beat the file.
  r = run_cli({"--config", cfg, "ratio", "--eps", "2", "--format", "json"});
  EXPECT_EQ(r.out.front(), '{');
  // Environment beats flags.
  r = run_cli({"--config", cfg, "ratio", "--eps", "2", "--format", "json"}, {{"LH_FORMAT", "csv"}});
  EXPECT_EQ(r.out.front(), 'j');
  // LH_CONFIG names the file when --config is absent.
  r = run_cli({"ratio", "--eps", "2"}, {{"LH_CONFIG", cfg}});
  EXPECT_EQ(r.out.front(), 'j');
  std::ofstream(cfg) << "nonsense = 1\n";
  EXPECT_EQ(run_cli({"--config", cfg, "norm"}).code, kExitDomain);
  std::filesystem::remove_all(dir);
}

TEST(CliTest, ParseComplex) {
  EXPECT_EQ(parse_complex("1.5"), std::complex<double>(1.5, 0.0));
  EXPECT_EQ(parse_complex("1,0.2"), std::complex<double>(1.0, 0.2));
  EXPECT_THROW(parse_complex("1,"), DomainError);
  EXPECT_THROW(parse_complex("abc"), DomainError);
}

TEST(CliTest, RunConfigValidation) {
  RunConfig c;
  apply_setting(c, "branch", "plus");
  EXPECT_EQ(c.policy().branch, AsymptoticBranch::kPlus);
  apply_setting(c, "path", "exact");
  EXPECT_EQ(c.policy().selection, PathSelection::kExact);
  c.j_max = 0;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_THROW(apply_setting(c, "format", "xml"), DomainError);
}

TEST(CliTest, CsvFlattening) {
  RunConfig c;
  c.format = OutputFormat::kCsv;
  const Output o = cmd_norm({0.0}, c);
  const std::string text = render(o, OutputFormat::kCsv);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "tau_re,tau_im,j_max,computed_re,computed_im,target_re,target_im,deviation,"
            "tail_bound,within_budget");
}

}  // namespace
}  // namespace lh::cli
