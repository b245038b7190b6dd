#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = delsub::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    const Result r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("delsub_cli_" + name)).string();
}

}  // namespace

TEST(Cli, BallExample) {
    EXPECT_EQ(run_json({"ball", "--kind", "ds", "--word", "010"}), Json::parse(R"(["00","01","10","11"])"));
    EXPECT_EQ(run_json({"ball", "--kind", "del", "--word", "0110"}).size(), 3u);
    EXPECT_EQ(run({"ball", "--kind", "sub", "--word", "01", "--format", "text"}).out, "00\n01\n11\n");
}

TEST(Cli, VerifyIntersectionBoundsExample) {
    const Json j = run_json({"verify", "intersection-bounds", "--n", "6"});
    EXPECT_EQ(j["verdict"], "PASS");
    EXPECT_EQ(j["extremal_observed"], 15);
    EXPECT_EQ(j["bound"], 15);
    EXPECT_FALSE(j.contains("elapsed"));
    EXPECT_TRUE(run_json({"verify", "intersection-bounds", "--n", "6", "--timing"}).contains("elapsed"));
}

TEST(Cli, CodeSizeSumsToSpace) {
    long total = 0;
    for (int a = 0; a < 16; ++a)
        total += run_json({"code", "size", "--family", "vt", "--n", "8", "--a", std::to_string(a)}).get<long>();
    EXPECT_EQ(total, 256);
}

TEST(Cli, VerifyFailureExitsOne) {
    const Result r = run({"verify", "thm2", "--n", "8"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(Json::parse(r.out)["verdict"], "FAIL");
}

TEST(Cli, VerifyRangeCombinesOrSplits) {
    const Json combined = run_json({"verify", "ball-sizes", "--n-min", "2", "--n-max", "4"});
    EXPECT_EQ(combined["n_range"], Json::parse("[2,4]"));
    const Json split = run_json({"verify", "ball-sizes", "--n-min", "2", "--n-max", "4", "--per-n"});
    ASSERT_TRUE(split.is_array());
    EXPECT_EQ(split.size(), 3u);
    const Result csv = run({"verify", "ball-sizes", "--n-min", "2", "--n-max", "3", "--per-n", "--format", "csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST(Cli, VerifyIsIdenticalAcrossJobCounts) {
    for (const char* target : {"intersection-bounds", "bad-count", "thm3", "pair-structure"}) {
        const Result a = run({"verify", target, "--n", "8", "--jobs", "1"});
        const Result b = run({"verify", target, "--n", "8", "--jobs", "8"});
        EXPECT_EQ(a.out, b.out) << target;
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, UsageErrorsNameTheFlag) {
    struct Case {
        std::vector<std::string> args;
        std::string needle;
    };
    const std::vector<Case> cases{
        {{"frobnicate"}, "frobnicate"},
        {{"ball", "--word", "01x"}, "--word"},
        {{"ball", "--kind", "xyz", "--word", "01"}, "--kind"},
        {{"code", "size", "--family", "vt", "--n", "8", "--a", "99"}, "--a"},
        {{"code", "size", "--family", "nope", "--n", "8"}, "--family"},
        {{"code", "size", "--family", "inv", "--n", "8"}, "--m"},
        {{"code", "list", "--family", "full", "--n", "30"}, "--n"},
        {{"code", "explode"}, "explode"},
        {{"verify", "nope"}, "<target>"},
        {{"verify", "ball-sizes", "--n", "abc"}, "--n"},
        {{"verify", "ball-sizes", "--jobs", "0"}, "--jobs"},
        {{"simulate", "--word", "0000", "--N", "5"}, "--N"},
        {{"intersect", "--word", "01"}, "--word"},
        {{"apply", "--word", "0110", "--del", "9"}, "--del"},
        {{"witness", "--word", "0110", "--z", "01"}, "--z"},
        {{"decode", "--family", "full", "--n", "4"}, "--read"},
        {{"ball", "--word", "01", "--format", "csv"}, "--format"},
    };
    for (const auto& c : cases) {
        const Result r = run(c.args);
        EXPECT_EQ(r.code, 2) << c.args[0];
        EXPECT_NE(r.err.find(c.needle), std::string::npos) << r.err;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"verify", "--help"}).code, 0);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ClassifyAndIntersect) {
    const Json c = run_json({"classify", "--word", "0110", "--word", "1010"});
    EXPECT_EQ(c["case"], "ADJACENT_TRANSPOSITION");
    EXPECT_EQ(c["d"], 2);
    EXPECT_EQ(c["decomposition"]["total"], 7);
    EXPECT_EQ(c["round_trip"], true);
    const Json i = run_json({"intersect", "--kind", "del", "--word", "0110", "--word", "1010"});
    EXPECT_EQ(i["words"], Json::parse(R"(["010","110"])"));
}

TEST(Cli, SequenceWitnessAndFriends) {
    const Json s = run_json({"seq", "--word", "0101"});
    EXPECT_EQ(s["runs"], 4);
    EXPECT_EQ(s["vt1"], 6);
    EXPECT_EQ(s["vt2"], 13);
    EXPECT_EQ(run_json({"seq", "--word", "1000", "--psi-inverse"})["psi_inverse"], "1111");
    EXPECT_EQ(run_json({"apply", "--word", "0110", "--del", "1", "--sub", "2"})["result"], "100");
    EXPECT_EQ(run_json({"witness", "--word", "010", "--z", "00"}).size(), 3u);
    EXPECT_EQ(run_json({"preimage", "--z", "00"}).size(), 7u);
    EXPECT_EQ(run_json({"constrained", "--u", "00", "--v", "010"}).size(), 3u);
    const Json b = run_json({"bad", "--word", "0110", "--word", "1010", "--z", "010"});
    EXPECT_TRUE(b["bad"].is_boolean());
    EXPECT_EQ(run({"ball", "--kind", "del", "--word", "0110", "--by-run"}).code, 0);
}

TEST(Cli, CodeSubcommands) {
    const std::string path = temp_path("code.txt");
    EXPECT_EQ(run({"code", "list", "--family", "vt", "--n", "6", "--a", "0", "--out", path}).code, 0);
    const Json loaded = run_json({"code", "load", "--in", path});
    EXPECT_EQ(loaded["matches_enumeration"], true);
    EXPECT_EQ(loaded["words"], run_json({"code", "size", "--family", "vt", "--n", "6", "--a", "0"}));
    std::remove(path.c_str());

    EXPECT_EQ(run_json({"code", "check", "--family", "vt", "--n", "4", "--a", "5", "--word", "1001"})["member"], true);
    const Json info = run_json({"code", "info", "--family", "run_bounded", "--n", "6"});
    EXPECT_EQ(info["size"], 32);
    EXPECT_EQ(info["closed_form"], 32);
    EXPECT_GE(run_json({"code", "best", "--family", "vt", "--n", "8"})["size"].get<int>(), 16);
    const Json parts = run_json({"code", "partition", "--family", "inv", "--n", "6", "--m", "2"});
    EXPECT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0]["size"].get<int>() + parts[1]["size"].get<int>(), 64);
    EXPECT_EQ(run_json({"code", "subcode", "--inner", "family=cl,n=8,a0=0,a1=3,a2=5", "--outer",
                        "family=vt,n=8,a=3"})["subcode"],
              true);
}

TEST(Cli, SimulateThenDecode) {
    const std::string word = "0000101101";
    const Json best = run_json({"code", "best", "--family", "cl", "--n", "10"});
    const std::string bundle = temp_path("bundle.txt");
    // pick a codeword of the best coset with a large enough ball
    const Result list = run({"code", "list", "--family", "cl", "--n", "10", "--a2", "73", "--format", "json"});
    ASSERT_EQ(list.code, 0);
    const Json words = Json::parse(list.out)["words"];
    ASSERT_FALSE(words.empty());
    const std::string x = words.back();
    ASSERT_EQ(run({"simulate", "--word", x, "--N", "7", "--seed", "11", "--out", bundle}).code, 0);
    const Json d = run_json({"decode", "--family", "cl", "--n", "10", "--a2", "73", "--in", bundle});
    EXPECT_EQ(d["status"], "UNIQUE");
    EXPECT_EQ(d["candidates"], Json::array({x}));
    const Json o = run_json({"decode", "--family", "cl", "--a2", "73", "--in", bundle, "--oracle"});
    EXPECT_EQ(o["candidates"], d["candidates"]);
    std::remove(bundle.c_str());
    EXPECT_EQ(best["params"], "a0=0,a1=0,a2=73");

    const Result a = run({"simulate", "--word", word, "--N", "9"});
    EXPECT_EQ(a.out, run({"simulate", "--word", word, "--N", "9"}).out);
    EXPECT_EQ(a.out.rfind("# n=10 N=9\n", 0), 0u);
    const Json samples = run_json({"simulate", "--word", "010101", "--samples", "3"});
    EXPECT_EQ(samples.size(), 3u);
    const Json r = run_json({"decode", "--family", "full", "--n", "6", "--read", "00000", "--read", "11111"});
    EXPECT_EQ(r["status"], "INCONSISTENT");
}

TEST(Cli, DispatchTableCoversTheLibrary) {
    // every public operation of the library, by module
    const std::vector<std::string> operations{
        // sequences
        "runs", "run_count", "weight", "complement", "reverse", "vt_syndrome", "inversion_number", "psi",
        "psi_inverse", "common_affixes", "max_le2_periodic_length",
        // error_balls
        "deletion_ball", "substitution_ball", "ds_ball", "deletions_by_run", "apply_del_sub", "ball_intersection",
        "classify_pair", "reconstruct_pair", "decompose_intersection", "witnesses", "is_bad", "preimage_ball",
        "constrained_deletion_matches",
        // codes
        "contains", "enumerate", "members", "size", "redundancy", "best_coset", "coset_partition", "coset_count",
        "subcode_check", "run_bounded_size_formula", "default_rll_period", "parse_family", "parse_code_spec",
        "write_code_file", "read_code_file",
        // reconstruct
        "channel_sample", "collect_reads", "decode", "decode_by_code_scan", "write_read_bundle", "read_read_bundle",
        // verify
        "verify_ball_sizes", "verify_del_positions", "verify_constrained_deletion", "verify_pair_structure",
        "verify_decomposition", "verify_intersection_bounds", "verify_claim_tables", "verify_bad_count",
        "verify_code_theorem", "verify_rll", "verify_run_bounded", "verify_vt_lemma", "verify_cp_lemma",
        "verify_list_decoding", "verify_reconstruction", "to_json", "to_text", "to_csv"};
    std::set<std::string> reachable;
    for (const auto& c : delsub::cli::commands()) {
        reachable.insert(c.operations.begin(), c.operations.end());
        // each table entry is a real subcommand
        EXPECT_EQ(run({c.name, "--help"}).code, 0) << c.name;
    }
    for (const auto& op : operations) EXPECT_TRUE(reachable.count(op)) << op;
}

TEST(Cli, EveryVerifyTargetRunsFromTheCommandLine) {
    const Json list = run_json({"verify", "list"});
    for (const auto& t : list) {
        const std::string name = t["target"];
        if (name == "claim-tables") continue;
        const int n = std::min(t["n_min"].get<int>() + 1, 9);
        const Result r = run({"verify", name, "--n", std::to_string(n)});
        EXPECT_TRUE(r.code == 0 || r.code == 1) << name << ": " << r.err;
        EXPECT_EQ(Json::parse(r.out)["target"], name);
    }
    const Json rec = run_json({"verify", "reconstruction", "--n", "9", "--trials", "50"});
    EXPECT_EQ(rec["verdict"], "PASS");
}
