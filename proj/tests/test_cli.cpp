#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "worked_examples.hpp"
#include "tgi/cli.hpp"
#include "tgi/gallery.hpp"
#include "tgi/imaging.hpp"
#include "tgi/io.hpp"
#include "tgi/synth.hpp"

using namespace tgi;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("tgi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    int run(std::vector<std::string> args)
    {
        out.str("");
        err.str("");
        return cli::run(args, out, err);
    }

    fs::path dir;
    std::ostringstream out;
    std::ostringstream err;
};

} // namespace

TEST_F(Cli, HelpAndUsageErrors)
{
    EXPECT_EQ(run({"--help"}), 0);
    EXPECT_NE(out.str().find("product"), std::string::npos);
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"frobnicate"}), 2);
    EXPECT_EQ(run({"product", "--A", "a.t3j"}), 2);
    EXPECT_EQ(run({"info", "--in", path("x.t3j")}), 3);
    io::writeTensor(path("a.t3j"), synth::randomTensor(2, 2, 2, 3));
    EXPECT_EQ(run({"info", "--in", path("a.t3j"), "--transform", "fft"}), 2);
}

TEST_F(Cli, ProductMatchesPrintedExample)
{
    io::writeTensor(path("a.t3j"), fixtures::productA());
    io::writeTensor(path("b.t3j"), fixtures::productB());
    io::writeTransformMatrix(path("m.json"), fixtures::transformM1());
    ASSERT_EQ(run({"product", "--A", path("a.t3j"), "--B", path("b.t3j"), "--transform",
                   "file:" + path("m.json"), "--out", path("c.t3j"), "--report", path("r.json")}),
              0)
        << err.str();
    EXPECT_LE(maxAbsDiff(io::readTensor(path("c.t3j")), fixtures::productC()), 1e-9);
    EXPECT_TRUE(fs::exists(path("r.json")));
}

TEST_F(Cli, ShapeMismatchIsUsageError)
{
    io::writeTensor(path("a.t3j"), synth::randomTensor(3, 4, 2, 1));
    io::writeTensor(path("b.t3j"), synth::randomTensor(3, 4, 2, 2));
    EXPECT_EQ(run({"product", "--A", path("a.t3j"), "--B", path("b.t3j"), "--out", path("c.t3j")}),
              2);
    EXPECT_EQ(run({"product", "--A", path("missing.t3j"), "--B", path("b.t3j"), "--out",
                   path("c.t3j")}),
              3);
}

TEST_F(Cli, InverseWritesResidualReport)
{
    io::writeTransformMatrix(path("m.json"), fixtures::transformM1());
    io::writeTensor(path("a.t3j"), fixtures::drazinA());
    ASSERT_EQ(run({"inv", "--kind", "drazin", "--in", path("a.t3j"), "--transform",
                   "file:" + path("m.json"), "--out", path("x.t3j"), "--report", path("r.json")}),
              0)
        << err.str();
    std::ifstream in(path("r.json"));
    const auto report = nlohmann::json::parse(in);
    EXPECT_LT(report["residuals"]["e2"].get<double>(), 1e-9);
    EXPECT_EQ(run({"inv", "--kind", "weird", "--in", path("a.t3j"), "--out", path("x.t3j")}), 2);
}

TEST_F(Cli, InfoReportsIndices)
{
    io::writeTransformMatrix(path("m.json"), fixtures::transformNilpotent());
    io::writeTensor(path("a.t3j"), fixtures::nilpotentA());
    ASSERT_EQ(run({"info", "--in", path("a.t3j"), "--transform", "file:" + path("m.json")}), 0);
    const auto info = nlohmann::json::parse(out.str());
    EXPECT_EQ(info["tubalIndex"].get<int>(), 3);
    EXPECT_EQ(info["m"].get<int>(), 3);
    EXPECT_TRUE(info.contains("multirank"));

    io::writeTensor(path("r.t3j"), synth::randomTensor(2, 3, 2, 4));
    ASSERT_EQ(run({"info", "--in", path("r.t3j")}), 0);
    EXPECT_FALSE(nlohmann::json::parse(out.str()).contains("tubalIndex"));
}

TEST_F(Cli, SolveExitCodes)
{
    const Transform t = dftTransform(2);
    io::writeTensor(path("dd.t3j"), synth::diagDominantTensor(4, 2, t, 5));
    io::writeTensor(path("b.t3j"), synth::randomTensor(4, 1, 2, 6));
    EXPECT_EQ(run({"solve", "--method", "gauss-seidel", "--A", path("dd.t3j"), "--B",
                   path("b.t3j"), "--out", path("x.t3j")}),
              0)
        << err.str();
    EXPECT_EQ(run({"solve", "--method", "jacobi", "--A", path("dd.t3j"), "--B", path("b.t3j"),
                   "--max-iter", "1", "--out", path("x.t3j")}),
              5);
    EXPECT_NE(err.str().find("did not converge"), std::string::npos);

    io::writeTensor(path("sing.t3j"), synth::randomIndexTensor(4, 2, 2, t, 7));
    EXPECT_EQ(run({"solve", "--method", "drazin", "--A", path("sing.t3j"), "--B", path("b.t3j"),
                   "--out", path("x.t3j")}),
              4);
    EXPECT_EQ(run({"solve", "--method", "tikhonov", "--lambda", "0.1", "--A", path("sing.t3j"),
                   "--B", path("b.t3j"), "--out", path("x.t3j")}),
              0);
}

TEST_F(Cli, BenchCsvColumns)
{
    ASSERT_EQ(run({"bench", "--sizes", "3,4", "--k", "2", "--transforms", "dft,dct", "--reps", "1"}),
              0)
        << err.str();
    std::istringstream csv(out.str());
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "size,k,transform,mean_time_s,e2,e5,e1k");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 4);

    ASSERT_EQ(run({"bench", "--sizes", "3", "--kind", "core-ep", "--reps", "1", "--out",
                   path("b.csv")}),
              0);
    std::ifstream file(path("b.csv"));
    std::getline(file, line);
    EXPECT_EQ(line, "size,k,transform,mean_time_s,e3,e7,e1k");
}

TEST_F(Cli, DeblurWritesImageAndMetrics)
{
    const Transform t = dctTransform(3);
    const Tensor3 clean = syntheticImage(16);
    const Tensor3 a = buildBlurTensor(parsePsf("sigma=1,b=4", 16));
    writePng(path("true.png"), clean);
    writePng(path("blur.png"), mProduct(a, clean, t));
    ASSERT_EQ(run({"deblur", "--in", path("blur.png"), "--psf", "sigma=1,b=4", "--true",
                   path("true.png"), "--lambda", "sweep", "--out", path("out.png"), "--metrics",
                   path("m.json")}),
              0)
        << err.str();
    EXPECT_TRUE(fs::exists(path("out.png")));
    std::ifstream in(path("m.json"));
    EXPECT_FALSE(nlohmann::json::parse(in).empty());
    EXPECT_EQ(run({"deblur", "--in", path("blur.png"), "--psf", "sigma=1,b=4", "--lambda", "sweep",
                   "--out", path("out.png")}),
              2);
}
