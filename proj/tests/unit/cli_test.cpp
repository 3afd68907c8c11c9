#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sumsym::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sumsym_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string three_item_scenario() {
    return write("s.json",
                 R"({"items":[{"id":"a","f":"1"},{"id":"b","f":"2"},{"id":"c","f":"3"}],)"
                 R"("treatments":[{"potency":"0","quota":1},{"potency":"1","quota":2}]})");
  }

  fs::path dir_;
};

TEST_F(CliTest, DecomposeZeroMatrix) {
  const auto m = write("z.csv", "0,0\n0,0\n");
  const auto r = invoke({"decompose", m});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "SUMMARY domain=int n=2 nnz=0 circuits=0 reconstruction=PASS\n");
}

TEST_F(CliTest, DecomposeRecords) {
  const auto m = write("m.csv", "1,2\n2,1\n");
  const auto r = invoke({"decompose", m});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out,
            "CIRCUIT 1 @ 1\nCIRCUIT 1>2 @ 2\nCIRCUIT 2 @ 1\n"
            "SUMMARY domain=int n=2 nnz=4 circuits=3 reconstruction=PASS\n");
}

TEST_F(CliTest, DecomposeLexPair) {
  const auto m = write("l.csv", "# domain: lexpair\n(0,0),(1,2)\n(1,2),(0,0)\n");
  const auto r = invoke({"decompose", m});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "CIRCUIT 1>2 @ (1,2)\nSUMMARY domain=lexpair n=2 nnz=2 circuits=1 reconstruction=PASS\n");
}

TEST_F(CliTest, DecomposeRejectsNonSumSymmetric) {
  const auto m = write("bad.csv", "0,5\n0,0\n");
  const auto r = invoke({"decompose", m});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("bad.csv: matrix is not sum-symmetric: index 1 has row sum 5 but column sum 0"),
            std::string::npos)
      << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, DomainFlag) {
  const auto m = write("r.csv", "1/2,1/2\n1/2,1/2\n");
  EXPECT_EQ(invoke({"decompose", m}).code, kInputError);
  const auto r = invoke({"decompose", m, "--domain", "rational"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("CIRCUIT 1 @ 1/2"), std::string::npos);
  EXPECT_EQ(invoke({"decompose", m, "--domain", "float"}).code, kInputError);
}

TEST_F(CliTest, Birkhoff) {
  const auto m = write("b.csv", "0,2,0\n0,0,2\n2,0,0\n");
  const auto r = invoke({"birkhoff", m});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out,
            "PERM 2,3,1 @ 2\n  CIRCUIT 1>2>3 @ 2\n"
            "SUMMARY domain=int n=3 nnz=3 permutations=1 common_sum=2 weight_total=2 reconstruction=PASS "
            "refinement=PASS\n");

  const auto unbalanced = write("u.csv", "1,0\n0,2\n");
  const auto e = invoke({"birkhoff", unbalanced});
  EXPECT_EQ(e.code, kInputError);
  EXPECT_NE(e.err.find("row 2 sums to 2 but row 1 sums to 1"), std::string::npos) << e.err;
}

TEST_F(CliTest, AllocateThenScoreRoundTrip) {
  const auto s = three_item_scenario();
  const auto a = invoke({"allocate", s, "-o", (dir_ / "a.json").string()});
  ASSERT_EQ(a.code, kSuccess);
  EXPECT_TRUE(a.out.empty());
  EXPECT_NE(read("a.json").find("\"score\": \"5\""), std::string::npos);

  const auto sc = invoke({"score", s, (dir_ / "a.json").string()});
  EXPECT_EQ(sc.code, kSuccess);
  EXPECT_EQ(sc.out, "5\n");
}

TEST_F(CliTest, ApproximateOutputIsLabelled) {
  const auto s = write("s.json",
                       R"({"items":[{"id":"a","f":"1/3"}],"treatments":[{"potency":"1","quota":1}]})");
  const auto a = invoke({"allocate", s, "--approx"});
  EXPECT_NE(a.out.find("\"score\": \"1/3\""), std::string::npos);
  EXPECT_NE(a.out.find("\"approximate_score\": \"~0.333333333333\""), std::string::npos);
  const auto alloc = write("a.json", a.out);
  EXPECT_EQ(invoke({"score", s, alloc, "--approx"}).out, "1/3\n~0.333333333333 (approximate)\n");
}

TEST_F(CliTest, UnsortedPotencies) {
  const auto s = write("s.json",
                       R"({"items":[{"id":"a","f":"1"},{"id":"b","f":"5"}],)"
                       R"("treatments":[{"potency":"3","quota":1},{"potency":"-1","quota":1}]})");
  const auto rejected = invoke({"allocate", s});
  EXPECT_EQ(rejected.code, kInputError);
  EXPECT_NE(rejected.err.find("s.json: potencies must be nondecreasing: treatment 1"), std::string::npos)
      << rejected.err;

  // Sorting keeps file labels: the high-potency treatment is still "1".
  const auto sorted = invoke({"allocate", s, "--sort-treatments"});
  EXPECT_EQ(sorted.code, kSuccess);
  EXPECT_NE(sorted.out.find("\"a\": 2"), std::string::npos) << sorted.out;
  EXPECT_NE(sorted.out.find("\"b\": 1"), std::string::npos) << sorted.out;
  EXPECT_NE(sorted.out.find("\"score\": \"14\""), std::string::npos) << sorted.out;

  const auto alloc = write("a.json", sorted.out);
  EXPECT_EQ(invoke({"score", s, alloc, "--sort-treatments"}).out, "14\n");
  EXPECT_EQ(invoke({"verify", "--scenario", s, "--allocation", alloc, "--sort-treatments"}).code, kSuccess);
}

TEST_F(CliTest, ScoreRejectsInfeasible) {
  const auto s = three_item_scenario();
  const auto bad = write("bad.json", R"({"assignment":{"a":1,"b":1,"c":2}})");
  const auto r = invoke({"score", s, bad});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("bad.json: treatment 1 receives 2 items but its quota is 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, VerifyDecomposition) {
  const auto m = write("m.csv", "1,2\n2,1\n");
  const auto good = write("good.txt", invoke({"decompose", m}).out);
  const auto pass = invoke({"verify", "--matrix", m, "--decomposition", good});
  EXPECT_EQ(pass.code, kSuccess);
  EXPECT_EQ(pass.out, "PASS: 3 records reconstruct the 2x2 matrix exactly\n");

  const auto tampered = write("bad.txt", "CIRCUIT 1 @ 1\nCIRCUIT 1>2 @ 3\nCIRCUIT 2 @ 1\n");
  const auto fail = invoke({"verify", "--matrix", m, "--decomposition", tampered});
  EXPECT_EQ(fail.code, kVerificationFailed);
  EXPECT_EQ(fail.out, "FAIL: entry (1,2): matrix has 2 but the circuits sum to 3\n");
}

TEST_F(CliTest, VerifyBirkhoffOutput) {
  const auto m = write("m.csv", "1,1\n1,1\n");
  const auto good = write("good.txt", invoke({"birkhoff", m}).out);
  EXPECT_EQ(invoke({"verify", "--matrix", m, "--decomposition", good}).code, kSuccess);

  // PERM records are right but a refinement line was edited.
  const auto bad = write("bad.txt", "PERM 1,2 @ 1\n  CIRCUIT 1 @ 1\n  CIRCUIT 2 @ 2\nPERM 2,1 @ 1\n  CIRCUIT 1>2 @ 1\n");
  const auto r = invoke({"verify", "--matrix", m, "--decomposition", bad});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL: refinement circuits: entry (2,2)"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyAllocation) {
  const auto s = three_item_scenario();
  const auto best = write("best.json", invoke({"allocate", s}).out);
  const auto pass = invoke({"verify", "--scenario", s, "--allocation", best});
  EXPECT_EQ(pass.code, kSuccess);
  EXPECT_EQ(pass.out, "PASS: allocation score 5 equals the exhaustive maximum over 3 feasible allocations\n");

  const auto worse = write("worse.json", R"({"assignment":{"a":2,"b":1,"c":2}})");
  const auto fail = invoke({"verify", "--scenario", s, "--allocation", worse});
  EXPECT_EQ(fail.code, kVerificationFailed);
  EXPECT_EQ(fail.out,
            "FAIL: allocation score 4 is below the exhaustive maximum 5 over 3 feasible allocations "
            "(witness: a->1, b->2, c->2)\n");

  const auto lying = write("lying.json", R"({"assignment":{"a":1,"b":2,"c":2},"score":"6"})");
  EXPECT_EQ(invoke({"verify", "--scenario", s, "--allocation", lying}).code, kVerificationFailed);

  const auto infeasible = write("inf.json", R"({"assignment":{"a":1,"b":1,"c":2}})");
  EXPECT_EQ(invoke({"verify", "--scenario", s, "--allocation", infeasible}).code, kVerificationFailed);
}

TEST_F(CliTest, VerifyCapExceeded) {
  const auto s = three_item_scenario();
  const auto best = write("best.json", invoke({"allocate", s}).out);
  const auto r = invoke({"verify", "--scenario", s, "--allocation", best, "--max-items", "2"});
  EXPECT_EQ(r.code, kCapExceeded);
  EXPECT_NE(r.err.find("capped at 2"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--scenario", s, "--allocation", best, "--max-allocations", "2"}).code, kCapExceeded);
}

TEST_F(CliTest, UsageErrors) {
  const auto m = write("m.csv", "1\n");
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"decompose", m, "--bogus"}).code, kInputError);
  EXPECT_EQ(invoke({"decompose", (dir_ / "missing.csv").string()}).code, kInputError);
  EXPECT_EQ(invoke({"decompose", m, "birkhoff", m}).code, kInputError);
  EXPECT_EQ(invoke({"verify", "--matrix", m}).code, kInputError);
  EXPECT_EQ(invoke({"verify"}).code, kInputError);
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}

TEST_F(CliTest, MalformedInputsNameTheirSource) {
  const auto m = write("m.csv", "1,2\n2,x\n");
  const auto r = invoke({"decompose", m});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("m.csv:2: cell 2"), std::string::npos) << r.err;

  const auto s = write("s.json", R"({"items":[{"id":"a","f":0.5}],"treatments":[{"potency":"1","quota":1}]})");
  const auto e = invoke({"allocate", s});
  EXPECT_EQ(e.code, kInputError);
  EXPECT_NE(e.err.find("s.json: items[0].f"), std::string::npos) << e.err;
}

}  // namespace
}  // namespace sumsym::cli
