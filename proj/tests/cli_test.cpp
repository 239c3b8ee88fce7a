#include "cli.hpp"
#include "sec/generate.hpp"
#include "sec/instance.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sec::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("strongcolor_cli_" + std::string(
                    ::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return run_command(args, out_, err_);
    }

    std::string cycle7() {
        auto inst = generate({.family = Family::Cycle, .vertices = 7});
        return write("c7.txt", serialize_instance(inst));
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(CliTest, ColorThenVerifyCycle) {
    const auto in = cycle7();
    ASSERT_EQ(run({"color", "--mode", "mad3", in}), kOk) << err_.str();
    const auto report = out_.str();
    EXPECT_NE(report.find("# certified yes"), std::string::npos);
    EXPECT_NE(report.find("# color_budget 7"), std::string::npos);
    const auto col = write("c7.col", report);
    EXPECT_EQ(run({"verify", in, col}), kOk);
    EXPECT_NE(out_.str().find("# violations 0"), std::string::npos);
}

TEST_F(CliTest, ColorGirthSeven) {
    const auto in = cycle7();
    EXPECT_EQ(run({"color", "--mode", "girth7", "--delta", "4", in}), kOk) << err_.str();
    EXPECT_NE(out_.str().find("# color_budget 12"), std::string::npos);
}

TEST_F(CliTest, ColorWithListsFile) {
    const auto in = write("p3.txt", "e 0 1\ne 1 2\n");
    const auto lists = write("p3.lists", "l 0 1 : 20 21 22 23 24 25 26\nl 1 2 : 20 21 22 23 24 25 26\n");
    ASSERT_EQ(run({"color", "--mode", "mad3", "--lists", lists, in}), kOk) << err_.str();
    EXPECT_NE(out_.str().find("c 0 1 2"), std::string::npos);
}

TEST_F(CliTest, VerifyReportsViolations) {
    const auto in = write("p4.txt", "e 0 1\ne 1 2\ne 2 3\n");
    const auto col = write("p4.col", "c 0 1 1\nc 1 2 2\nc 2 3 1\n");
    EXPECT_EQ(run({"verify", in, col}), kUncertified);
    EXPECT_NE(out_.str().find("# violations 1"), std::string::npos);
    const auto partial = write("p4b.col", "c 0 1 1\nc 5 6 1\n");
    EXPECT_EQ(run({"verify", "--partial", in, partial}), kUncertified);
}

TEST_F(CliTest, HypothesisRejection) {
    const auto k4 = write("k4.txt", "e 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    EXPECT_EQ(run({"color", "--mode", "mad3", k4}), kInputError);
    EXPECT_NE(err_.str().find("hypothesis"), std::string::npos);
}

TEST_F(CliTest, NonPlanarFallbackIsUncertified) {
    Instance inst;
    inst.graph = test::mcgee_graph();
    const auto in = write("mcgee.txt", serialize_instance(inst));
    EXPECT_EQ(run({"color", "--mode", "girth7", "--delta", "4", in}), kUncertified);
    EXPECT_NE(out_.str().find("# fallback"), std::string::npos);
    EXPECT_NE(err_.str().find("not declared planar"), std::string::npos);
}

TEST_F(CliTest, ExactMadGirth) {
    const auto in = cycle7();
    EXPECT_EQ(run({"exact", in}), kOk);
    EXPECT_NE(out_.str().find("chi_s 4"), std::string::npos);
    EXPECT_EQ(run({"mad", in}), kOk);
    EXPECT_NE(out_.str().find("mad 2"), std::string::npos);
    EXPECT_EQ(run({"girth", in}), kOk);
    EXPECT_EQ(out_.str(), "7\n");
    const auto tree = write("tree.txt", "e 0 1\ne 1 2\n");
    EXPECT_EQ(run({"girth", tree}), kOk);
    EXPECT_EQ(out_.str(), "inf\n");
    const auto petersen = write("pet.txt", serialize_instance({.graph = test::petersen_graph()}));
    EXPECT_EQ(run({"exact", "--cap", "5", petersen}), kInputError);
}

TEST_F(CliTest, AuditGirthSevenCycle) {
    const auto in = cycle7();
    EXPECT_EQ(run({"audit", "--which", "girth7", in}), kOk) << err_.str();
    EXPECT_NE(out_.str().find("# euler_total -14"), std::string::npos);
    EXPECT_NE(out_.str().find("# conserved yes"), std::string::npos);
    EXPECT_EQ(run({"audit", "--which", "mad", in}), kOk);
    EXPECT_NE(out_.str().find("negative vertex 0 final -1"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministic) {
    const std::vector<std::string> args{"gen", "--family", "PLANAR_GIRTH7", "--seed", "77",
                                        "--n", "30", "--cap", "5"};
    ASSERT_EQ(run(args), kOk);
    const auto first = out_.str();
    ASSERT_EQ(run(args), kOk);
    EXPECT_EQ(out_.str(), first);
    const auto in = write("gen.txt", first);
    EXPECT_EQ(run({"color", "--mode", "girth7", in}), kOk) << err_.str();
    const auto a = out_.str();
    EXPECT_EQ(run({"color", "--mode", "girth7", in}), kOk);
    EXPECT_EQ(out_.str(), a);
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(run({}), kInputError);
    EXPECT_EQ(run({"color", "--bogus"}), kInputError);
    EXPECT_EQ(run({"color", "--mode", "mad3", (dir_ / "missing.txt").string()}), kInputError);
    EXPECT_EQ(run({"color", "--mode", "nope", cycle7()}), kInputError);
    const auto bad = write("bad.txt", "e 0 1\ne 1 x\n");
    EXPECT_EQ(run({"girth", bad}), kInputError);
    EXPECT_NE(err_.str().find("line 2"), std::string::npos);
    EXPECT_EQ(run({"gen", "--family", "WHEEL"}), kInputError);
    EXPECT_EQ(run({"audit", "--which", "girth7", write("p.txt", "e 0 1\n")}), kInputError);
}

TEST_F(CliTest, Help) {
    EXPECT_EQ(run({"--help"}), kOk);
    EXPECT_NE(out_.str().find("color"), std::string::npos);
}

} // namespace
} // namespace sec::cli
