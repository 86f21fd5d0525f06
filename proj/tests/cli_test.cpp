// Copyright 2026 The ghzbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using ghzbox::cli::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ghzbox");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = ghzbox::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_csv(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ghzbox_cli_test_" + name + ".csv");
}

}  // namespace

TEST(cli_expand, position_frame) {
    const Result r = run_cli({"--json", "expand", "position", "position", "position"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["command"], "expand");
    EXPECT_EQ(j["paper_anchor"], "Eq. (3a) first");
    EXPECT_EQ(j["outputs"]["term_count"], 4);
    EXPECT_EQ(j["outputs"]["raw_products"], 16);
    EXPECT_EQ(j["outputs"]["cancelled_labels"], 4);
    const Json& first = j["outputs"]["terms"][0];
    EXPECT_EQ(first["label"], "LLR");
    EXPECT_NEAR(first["coefficient"]["re"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(first["coefficient"]["im"].get<double>(), 0.5, 1e-12);
}

TEST(cli_expand, bonding_and_phase_frames) {
    const Json bbp = run_cli({"--json", "expand", "bonding", "bonding", "position"}).json();
    EXPECT_EQ(bbp["paper_anchor"], "Eq. (3a) second");
    EXPECT_EQ(bbp["outputs"]["term_count"], 4);
    const Json ppp = run_cli({"--json", "expand", "phase", "phase", "phase"}).json();
    EXPECT_EQ(ppp["outputs"]["term_count"], 2);
}

TEST(cli_expand, usage_errors) {
    EXPECT_EQ(run_cli({"expand", "position", "spin", "position"}).code, 2);
    EXPECT_EQ(run_cli({"expand", "position", "position"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(cli_rules, both_rules_and_symmetry) {
    const Json j = run_cli({"--json", "rules"}).json();
    EXPECT_EQ(j["outputs"]["position"]["same"], "R");
    EXPECT_EQ(j["outputs"]["position"]["different"], "L");
    EXPECT_EQ(j["outputs"]["bonding"]["same"], "L");
    EXPECT_EQ(j["outputs"]["bonding"]["different"], "R");
    EXPECT_EQ(j["outputs"]["symmetric"], true);
    EXPECT_EQ(j["outputs"]["position"]["pairings"].size(), 3u);
    EXPECT_EQ(j["outputs"]["certain_predictions"], 24);
}

TEST(cli_epr, sets_and_contradiction) {
    const Json j = run_cli({"--json", "epr"}).json();
    EXPECT_EQ(j["outputs"]["set_4a"], Json({"LLR", "LRL", "RLL", "RRR"}));
    EXPECT_EQ(j["outputs"]["set_4b"], Json({"RRL", "RLR", "LRR", "LLL"}));
    EXPECT_TRUE(j["outputs"]["intersection"].empty());
    EXPECT_EQ(j["outputs"]["contradiction"], true);
    EXPECT_EQ(j["outputs"]["parity"]["clash"], true);
}

TEST(cli_lhv, counts) {
    const Json j = run_cli({"--json", "lhv"}).json();
    EXPECT_EQ(j["outputs"]["total"], 64);
    EXPECT_EQ(j["outputs"]["survivors"], 0);
    EXPECT_GT(j["outputs"]["single_family_survivors"]["position"].get<int>(), 0);
    EXPECT_EQ(j["outputs"]["assignments"].size(), 64u);
}

TEST(cli_measure, position_pair_makes_c_certain_for_every_seed) {
    for (int seed = 0; seed < 20; ++seed) {
        const Result r = run_cli({"--json", "--seed", std::to_string(seed), "measure", "A:position", "B:position"});
        ASSERT_EQ(r.code, 0) << r.err;
        const Json j = r.json();
        bool seen = false;
        for (const Json& p : j["outputs"]["predictions"]) {
            if (p["box"] == "C" && p["basis"] == "position") {
                seen = true;
                EXPECT_FALSE(p["certain"].is_null()) << "seed " << seed;
            }
        }
        EXPECT_TRUE(seen);
    }
}

TEST(cli_measure, two_box_partner_matches) {
    for (int seed = 0; seed < 10; ++seed) {
        const Json j =
            run_cli({"--json", "--seed", std::to_string(seed), "measure", "--state", "two-box", "A:position"}).json();
        const std::string a = j["outputs"]["outcomes"][0]["outcome"];
        const Json& b = j["outputs"]["predictions"][0];
        EXPECT_EQ(b["box"], "B");
        EXPECT_EQ(b["basis"], "position");
        EXPECT_EQ(b["certain"], a);
    }
}

TEST(cli_measure, deterministic_for_fixed_seed) {
    const std::vector<std::string> args{"--json", "--seed", "99", "measure", "A:bonding", "C:phase"};
    const Result a = run_cli(args);
    const Result b = run_cli(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Result text_a = run_cli({"--seed", "99", "measure", "A:bonding", "C:phase"});
    const Result text_b = run_cli({"--seed", "99", "measure", "A:bonding", "C:phase"});
    EXPECT_EQ(text_a.out, text_b.out);
}

TEST(cli_measure, usage_errors) {
    EXPECT_EQ(run_cli({"measure", "A:position"}).code, 2);
    EXPECT_EQ(run_cli({"--seed", "1", "measure", "A:position", "A:bonding"}).code, 2);
    EXPECT_EQ(run_cli({"--seed", "1", "measure", "--allow-repeat", "A:position", "A:bonding"}).code, 0);
    EXPECT_EQ(run_cli({"--seed", "1", "measure", "D:position"}).code, 2);
    EXPECT_EQ(run_cli({"--seed", "1", "measure", "A-position"}).code, 2);
    EXPECT_EQ(run_cli({"--seed", "1", "measure", "--state", "two-box", "C:position"}).code, 2);
    EXPECT_EQ(run_cli({"--seed", "1", "measure", "--state", "four-box", "A:position"}).code, 2);
}

TEST(cli_waveform, fig9_two_curves) {
    const auto path = temp_csv("fig9");
    const Result r = run_cli({"--json", "waveform", "fig9", "--resolution", "512", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["paper_anchor"], "Fig. 9");
    EXPECT_EQ(j["outputs"]["series"], Json({"plus1", "minus1"}));
    EXPECT_EQ(j["outputs"]["rows"], 1024);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "series,x,psi_re,psi_im,density");
    std::filesystem::remove(path);
}

TEST(cli_waveform, fig10_reports_overlap) {
    const auto path = temp_csv("fig10");
    const Json j = run_cli({"--json", "waveform", "fig10", "--resolution", "16", "--out", path.string()}).json();
    EXPECT_LT(j["outputs"]["overlap"].get<double>(), 0.01);
    EXPECT_EQ(j["outputs"]["overlap_threshold"], 0.01);
    EXPECT_EQ(j["inputs"]["separation"], 10.0);
    std::filesystem::remove(path);
}

TEST(cli_waveform, resolution_boundary_and_io_error) {
    const auto path = temp_csv("bounds");
    EXPECT_EQ(run_cli({"waveform", "fig2", "--resolution", "16", "--out", path.string()}).code, 0);
    EXPECT_EQ(run_cli({"waveform", "fig2", "--resolution", "15", "--out", path.string()}).code, 2);
    EXPECT_EQ(run_cli({"waveform", "fig7", "--out", path.string()}).code, 2);
    EXPECT_EQ(run_cli({"waveform", "fig2", "--out", "/nonexistent-dir/x.csv"}).code, 3);
    std::filesystem::remove(path);
}

TEST(cli_report, every_command_carries_an_anchor) {
    const auto path = temp_csv("anchor");
    const std::vector<std::vector<std::string>> commands = {
        {"--json", "expand", "phase", "bonding", "position"},
        {"--json", "rules"},
        {"--json", "epr"},
        {"--json", "lhv"},
        {"--json", "--seed", "3", "measure", "B:phase"},
        {"--json", "waveform", "fig2", "--out", path.string()},
    };
    for (const auto& args : commands) {
        const Result r = run_cli(args);
        ASSERT_EQ(r.code, 0) << args[1] << ": " << r.err;
        const Json j = r.json();
        ASSERT_TRUE(j.contains("paper_anchor"));
        EXPECT_FALSE(j["paper_anchor"].get<std::string>().empty());
        EXPECT_TRUE(j["inputs"].is_object());
        EXPECT_TRUE(j["outputs"].is_object());
    }
    std::filesystem::remove(path);
}

TEST(cli_report, json_round_trips_doubles) {
    const Json j = run_cli({"--json", "expand", "bonding", "phase", "position"}).json();
    for (const Json& t : j["outputs"]["terms"]) {
        const double re = t["coefficient"]["re"].get<double>();
        const double back = Json::parse(Json(re).dump()).get<double>();
        EXPECT_EQ(re, back);
    }
}
