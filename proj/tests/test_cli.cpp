#include <lightscope/patterns.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace lightscope;
namespace fs = std::filesystem;

namespace {

struct Csv {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& operator[](std::size_t i) const { return columns.at(i); }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Csv read_csv(const fs::path& path) {
    std::istringstream in(slurp(path));
    Csv out;
    std::string line;
    std::getline(in, line);
    std::istringstream h(line);
    for (std::string cell; std::getline(h, cell, ',');) {
        out.headers.push_back(cell);
    }
    out.columns.resize(out.headers.size());
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::size_t c = 0;
        for (std::string cell; std::getline(row, cell, ','); ++c) {
            out.columns.at(c).push_back(std::stod(cell));
        }
    }
    return out;
}

class Cli : public ::testing::Test {
protected:
    fs::path root;

    void SetUp() override {
        root = fs::temp_directory_path() /
               ("lightscope_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(root);
        fs::create_directories(root);
    }

    void TearDown() override { fs::remove_all(root); }

    int run(const std::string& args, std::string* err = nullptr) {
        const auto err_path = root / "stderr.txt";
        const std::string cmd =
            std::string(LIGHTSCOPE_CLI) + " " + args + " > /dev/null 2> " + err_path.string();
        const int status = std::system(cmd.c_str());
        if (err) {
            *err = slurp(err_path);
        }
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    fs::path out(const std::string& name) const { return root / name; }
};

AtomPattern as_pattern(const std::vector<double>& x, const std::vector<double>& values) {
    DetectorGrid g;
    g.positions = x;
    g.spacing = x[1] - x[0];
    g.fringe_period = default_config().fringe_period();
    return {g, values, "csv"};
}

}  // namespace

TEST_F(Cli, PatternDefaults) {
    ASSERT_EQ(run("pattern --svg --out " + out("p").string()), 0);
    const auto csv = read_csv(out("p") / "pattern.csv");
    ASSERT_EQ(csv.headers.size(), 5u);
    EXPECT_EQ(csv.headers[0], "x (units of d)");
    EXPECT_EQ(csv[0].size(), 6001u);
    const std::size_t i = 3000;
    EXPECT_EQ(csv[0][i], 0.0);
    const double ratio = csv[3][i] / csv[4][i];
    // Separate unit normalisation of each column moves the exact value 2 by ~1e-6.
    EXPECT_GE(ratio, 1.9);
    EXPECT_LE(ratio, 2.0 + 1e-5);
    for (std::size_t c = 1; c < 5; ++c) {
        double integral = 0.0;
        for (std::size_t j = 0; j + 1 < csv[0].size(); ++j) {
            integral += 0.5 * (csv[0][j + 1] - csv[0][j]) * (csv[c][j] + csv[c][j + 1]);
        }
        EXPECT_NEAR(integral, 1.0, 1e-6) << csv.headers[c];
    }
    EXPECT_TRUE(fs::exists(out("p") / "pattern.svg"));
    const auto zoom = read_csv(out("p") / "pattern_zoom.csv");
    const double period = default_config().fringe_period();
    EXPECT_NEAR(zoom[0].back(), 3 * period, 1e-12);
    EXPECT_NEAR(zoom[3][zoom[0].size() / 2], csv[3][i], 1e-14);
}

TEST_F(Cli, CsvFormat) {
    ASSERT_EQ(run("pattern --grid-span 0.2 --out " + out("p").string()), 0);
    const auto text = slurp(out("p") / "pattern.csv");
    EXPECT_EQ(text.find('\r'), std::string::npos);
    const auto second = text.substr(text.find('\n') + 1);
    const auto cell = second.substr(0, second.find(','));
    // d.dddddddddddddddde+xx: 17 significant digits.
    EXPECT_EQ(cell.size(), std::string("-2.0000000000000001e-01").size());
    EXPECT_NE(cell.find('e'), std::string::npos);
}

TEST_F(Cli, GridDoublingLeavesValues) {
    ASSERT_EQ(run("pattern --grid-points 6001 --out " + out("a").string()), 0);
    ASSERT_EQ(run("pattern --grid-points 12001 --out " + out("b").string()), 0);
    const auto a = read_csv(out("a") / "pattern.csv");
    const auto b = read_csv(out("b") / "pattern.csv");
    for (std::size_t c = 1; c < 5; ++c) {
        for (std::size_t i = 0; i < a[0].size(); ++i) {
            ASSERT_EQ(a[0][i], b[0][2 * i]);
            ASSERT_LE(std::abs(a[c][i] - b[c][2 * i]), 1e-8 * std::abs(a[c][i]));
        }
    }
}

TEST_F(Cli, MissingConfigIsUsageError) {
    std::string err;
    EXPECT_EQ(run("pattern --config /nonexistent/apparatus.cfg --out " + out("p").string(), &err),
              2);
    EXPECT_NE(err.find("apparatus.cfg"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("pattern --grid-points many"), 2);
    EXPECT_EQ(run("rerun"), 2);
    EXPECT_EQ(run("rerun --manifest " + out("none.json").string()), 2);
    EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, ConfigFile) {
    std::ofstream(out("a.cfg")) << "# test\nphoton_wavelength = 1\ngrid_span = 0.5\n";
    ASSERT_EQ(run("decohere --config " + out("a.cfg").string() + " --out " + out("o").string()), 0);
    const auto csv = read_csv(out("o") / "decohered_lambda_1.csv");
    EXPECT_NEAR(csv[0].front(), -0.5, 1e-12);
    std::ofstream(out("b.cfg")) << "photon_colour = green\n";
    std::string err;
    EXPECT_EQ(run("pattern --config " + out("b.cfg").string() + " --out " + out("o").string(), &err),
              2);
    EXPECT_NE(err.find("photon_colour"), std::string::npos);
}

TEST_F(Cli, RegimeViolationAndOverride) {
    std::string err;
    EXPECT_EQ(run("overlap --lambda 0.05 --out " + out("o").string()), 0);
    EXPECT_EQ(run("density --lambda 0.05 --out " + out("o").string(), &err), 2);
    EXPECT_NE(err.find("point-source"), std::string::npos);
    EXPECT_EQ(run("density --lambda 0.05 --override-regime --out " + out("o").string(), &err), 0);
    EXPECT_NE(err.find("warning"), std::string::npos);
}

TEST_F(Cli, FarFieldFilesAndConsistency) {
    const auto dir = out("f");
    ASSERT_EQ(run("farfield --lambda 10 --lambda 1 --lambda 0.1 --out " + dir.string()), 0);
    int csvs = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        csvs += e.path().extension() == ".csv";
    }
    EXPECT_EQ(csvs, 18);

    ASSERT_EQ(run("pattern --out " + dir.string()), 0);
    const auto pattern = read_csv(dir / "pattern.csv");
    const auto k0 = read_csv(dir / "farfield_lambda_0.1_kappa0.csv");
    for (std::size_t i = 0; i < k0[0].size(); ++i) {
        ASSERT_NEAR(k0[1][i], pattern[3][i], 1e-10);
    }

    ASSERT_EQ(run("decohere --lambda 10 --lambda 1 --lambda 0.1 --out " + dir.string()), 0);
    for (const char* tag : {"10", "1", "0.1"}) {
        const auto avg = read_csv(dir / ("farfield_lambda_" + std::string(tag) + "_average.csv"));
        const auto dec = read_csv(dir / ("decohered_lambda_" + std::string(tag) + ".csv"));
        const double peak = *std::max_element(dec[1].begin(), dec[1].end());
        for (std::size_t i = 0; i < avg[0].size(); ++i) {
            ASSERT_NEAR(avg[1][i], dec[1][i], 1e-6 * peak) << tag;
        }
    }
}

TEST_F(Cli, FarFieldRecoilOutOfRange) {
    std::string err;
    EXPECT_EQ(run("farfield --kappa 1000 --out " + out("f").string(), &err), 2);
    EXPECT_NE(err.find("kappa"), std::string::npos);
    EXPECT_EQ(run("farfield --kappa 0 --kappa 31.4 --out " + out("f").string()), 0);
    EXPECT_TRUE(fs::exists(out("f") / "farfield_lambda_0.1_kappa1.csv"));
}

TEST_F(Cli, Imaging) {
    const auto dir = out("i");
    ASSERT_EQ(run("imaging --lambda 0.1 --out " + dir.string()), 0);
    ASSERT_EQ(run("pattern --out " + dir.string()), 0);
    const auto pattern = read_csv(dir / "pattern.csv");
    const auto centre = read_csv(dir / "imaging_lambda_0.1_xgamma0.csv");
    const auto side = read_csv(dir / "imaging_lambda_0.1_xgamma1.csv");
    EXPECT_EQ(side.headers.at(3).rfind("joint_scale", 0), 0u);
    EXPECT_LT(l1_distance(as_pattern(side[0], side[1]), as_pattern(pattern[0], pattern[2])), 0.05);
    EXPECT_GT(central_visibility(as_pattern(centre[0], centre[1])), 0.9);
    EXPECT_LT(centre[3][0], 0.1 * side[3][0]);
    EXPECT_EQ(side[2][0], 0.5);
}

TEST_F(Cli, OverlapSweep) {
    ASSERT_EQ(run("overlap --out " + out("o").string()), 0);
    const auto csv = read_csv(out("o") / "overlap.csv");
    const std::size_t n = csv[0].size();
    ASSERT_EQ(n, 82u);
    EXPECT_NEAR(csv[0][0], 0.01, 1e-15);
    EXPECT_NEAR(csv[0][n - 2], 100.0, 1e-12);
    EXPECT_NEAR(csv[3][n - 2], slit_overlap(100.0, 1.0).magnitude(), 1e-14);
    EXPECT_GT(csv[3][n - 2], 0.99);
    EXPECT_TRUE(std::isinf(csv[0][n - 1]));
    EXPECT_EQ(csv[3][n - 1], 1.0);
    for (double g : csv[3]) {
        EXPECT_LE(g, 1.0);
    }
    ASSERT_EQ(run("overlap --lambda 0.1 --out " + out("o").string()), 0);
    const auto short_end = read_csv(out("o") / "overlap.csv");
    EXPECT_NEAR(short_end[3][0], slit_overlap(0.1, 1.0).magnitude(), 1e-14);
    EXPECT_LT(short_end[3][0], 0.1);
    EXPECT_NEAR(short_end[4][0], 0.5 * (1 + std::pow(short_end[3][0], 2)), 1e-12);
}

TEST_F(Cli, DensityBranchSemiclassical) {
    const auto dir = out("d");
    ASSERT_EQ(run("density --lambda 0.1 --out " + dir.string()), 0);
    const auto text = slurp(dir / "density_lambda_0.1.csv");
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "matrix,row,col,re,im");
    int atom_rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("atom,0,1,", 0) == 0 || line.rfind("atom,1,0,", 0) == 0) {
            std::istringstream row(line.substr(9));
            std::string re, im;
            std::getline(row, re, ',');
            std::getline(row, im, ',');
            EXPECT_LT(std::hypot(std::stod(re), std::stod(im)), 0.05);
            ++atom_rows;
        }
    }
    EXPECT_EQ(atom_rows, 2);
    EXPECT_TRUE(fs::exists(dir / "density_lambda_0.1.txt"));

    ASSERT_EQ(run("branch --lambda 0.1 --lambda 10 --out " + dir.string()), 0);
    const auto branch = read_csv(dir / "branch.csv");
    for (std::size_t i = 0; i < branch[0].size(); ++i) {
        if (branch[1][i] == 0.0) {
            EXPECT_EQ(branch[2][i], 0.0);
        }
    }
    const auto posterior = read_csv(dir / "posterior.csv");
    for (std::size_t i = 0; i < posterior[0].size(); ++i) {
        EXPECT_NEAR(posterior[2][i] + posterior[3][i], 1.0, 1e-12);
    }

    ASSERT_EQ(run("semiclassical --out " + dir.string()), 0);
    const auto semi = read_csv(dir / "semiclassical_lambda_0.1.csv");
    EXPECT_EQ(semi.headers.at(5), "carry_residual (rad)");
    EXPECT_LT(*std::max_element(semi[5].begin(), semi[5].end()), 1e-10);
}

TEST_F(Cli, UnitsInEveryHeader) {
    const auto dir = out("u");
    for (const char* cmd : {"pattern", "decohere", "farfield", "imaging", "overlap", "branch",
                            "semiclassical"}) {
        ASSERT_EQ(run(std::string(cmd) + " --lambda 1 --grid-span 0.3 --out " + dir.string()), 0)
            << cmd;
    }
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() != ".csv") {
            continue;
        }
        const auto csv = read_csv(e.path());
        EXPECT_NE(csv.headers[0].find("units of d"), std::string::npos) << e.path();
    }
}

TEST_F(Cli, ManifestRerunAndWorkersAreBitIdentical) {
    const auto a = out("a");
    const auto b = out("b");
    const auto c = out("c");
    ASSERT_EQ(run("farfield --lambda 1 --grid-span 1 --workers 1 --out " + a.string()), 0);
    ASSERT_EQ(run("farfield --lambda 1 --grid-span 1 --workers 3 --out " + b.string()), 0);
    ASSERT_EQ(run("rerun --manifest " + (a / "manifest.json").string() + " --out " + c.string()), 0);

    const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
    EXPECT_EQ(manifest["command"], "farfield");
    EXPECT_EQ(manifest["config"]["atom_de_broglie"], 0.004);
    EXPECT_TRUE(manifest.contains("tool_version"));
    EXPECT_TRUE(manifest.contains("wall_time_seconds"));
    int compared = 0;
    for (const auto& name : manifest["outputs"]) {
        const std::string file = name.get<std::string>();
        if (file == "manifest.json") {
            continue;
        }
        const auto ref = slurp(a / file);
        ASSERT_FALSE(ref.empty()) << file;
        EXPECT_EQ(ref, slurp(b / file)) << file;
        EXPECT_EQ(ref, slurp(c / file)) << file;
        ++compared;
    }
    EXPECT_EQ(compared, 6);
}
