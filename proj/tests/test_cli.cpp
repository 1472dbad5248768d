#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dmpf/scenario.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = DMPF_CLI_PATH;
const std::string kScenarios = std::string(DMPF_SOURCE_DIR) + "/scenarios";

struct Outcome
{
    int code = -1;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir = fs::temp_directory_path() / ("dmpf_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    Outcome cli(const std::string& args) const
    {
        const fs::path o = dir / "stdout.txt";
        const fs::path e = dir / "stderr.txt";
        const std::string cmd = "DMPF_OUTPUT_ROOT='" + (dir / "root").string() + "' '" + kCli + "' " + args
                              + " > '" + o.string() + "' 2> '" + e.string() + "'";
        const int status = std::system(cmd.c_str());
        Outcome r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(o);
        r.err = slurp(e);
        return r;
    }

    static std::string slurp(const fs::path& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path write_cfg(const std::string& name, const std::string& text) const
    {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p;
    }

    static std::size_t data_rows(const std::string& csv, const std::string& prefix = "")
    {
        std::istringstream in(csv);
        std::string line;
        std::size_t n = 0;
        bool header_seen = false;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            if (!header_seen) {
                header_seen = true;
                continue;
            }
            n += line.rfind(prefix, 0) == 0 ? 1 : 0;
        }
        return n;
    }

    fs::path dir;
};

} /* namespace */

TEST_F(CliTest, RunWritesArtifacts)
{
    const auto r = cli("run '" + kScenarios + "/tiny_room.cfg' --out '" + (dir / "a").string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string metrics = slurp(dir / "a" / "metrics.csv");
    EXPECT_EQ(metrics.rfind("# dmpf-metrics v1\n", 0), 0u);
    EXPECT_EQ(data_rows(metrics), 1u);
    EXPECT_TRUE(fs::exists(dir / "a" / "events.csv"));
    EXPECT_TRUE(fs::exists(dir / "a" / "timing.csv"));
    EXPECT_TRUE(fs::exists(dir / "a" / "final_map.pgm"));
    EXPECT_NE(r.out.find("T_total"), std::string::npos);
}

TEST_F(CliTest, DefaultOutputRootFromEnvironment)
{
    const auto r = cli("run '" + kScenarios + "/tiny_room.cfg' --seed 5");
    ASSERT_EQ(r.code, 0) << r.err;
    const fs::path events = dir / "root" / "tiny_room-seed5" / "events.csv";
    ASSERT_TRUE(fs::exists(events));
    EXPECT_NE(slurp(events).find("seed=5 "), std::string::npos);
}

TEST_F(CliTest, ZeroRobotsIsExitTwoNamingTheField)
{
    const auto cfg = write_cfg("bad.cfg", "world = " + std::string(DMPF_SOURCE_DIR)
                                              + "/data/room_10x10.txt\nn_robots = 0\nstarts =\n");
    const auto r = cli("run '" + cfg.string() + "'");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("n_robots"), std::string::npos) << r.err;

    const auto unknown = write_cfg("unknown.cfg", "speed = 3\n");
    const auto u = cli("validate '" + unknown.string() + "'");
    EXPECT_EQ(u.code, 2);
    EXPECT_NE(u.err.find("speed"), std::string::npos) << u.err;
}

TEST_F(CliTest, BadArgumentsAreExitTwo)
{
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("fly").code, 2);
    EXPECT_EQ(cli("run").code, 2);
    EXPECT_EQ(cli("sweep '" + kScenarios + "/tiny_room.cfg' --param d_s --values 1").code, 2);
}

TEST_F(CliTest, EventLogsByteIdenticalAcrossReruns)
{
    const std::string cfg = kScenarios + "/maze_two_robots.cfg";
    ASSERT_EQ(cli("run '" + cfg + "' --seed 4 --out '" + (dir / "x").string() + "'").code, 0);
    ASSERT_EQ(cli("run '" + cfg + "' --seed 4 --out '" + (dir / "y").string() + "'").code, 0);
    const std::string a = slurp(dir / "x" / "events.csv");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir / "y" / "events.csv"));
}

TEST_F(CliTest, SweepCsv)
{
    const auto r = cli("sweep '" + kScenarios + "/tiny_room.cfg' --param sigma_d --values 0.035,0.095 --runs 3 --jobs 2 --out '"
                       + (dir / "s").string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(dir / "s" / "sweep.csv");
    EXPECT_EQ(csv.rfind("# dmpf-batch v1\n", 0), 0u);
    EXPECT_EQ(data_rows(csv, "run,"), 6u);
    EXPECT_EQ(data_rows(csv, "aggregate,"), 2u);
    EXPECT_EQ(csv, r.out);
}

TEST_F(CliTest, CompareCsv)
{
    const auto r = cli("compare '" + kScenarios + "/tiny_room.cfg' --strategies mwf_cn,mmpf --runs 2 --out '"
                       + (dir / "c").string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(dir / "c" / "compare.csv");
    EXPECT_EQ(data_rows(csv, "run,"), 4u);
    EXPECT_EQ(data_rows(csv, "aggregate,"), 2u);
}

TEST_F(CliTest, NoiseDump)
{
    const auto r = cli("noise --alpha 1 --sigma 0.095 --seed 3 --n 10");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("# dmpf-noise v1", 0), 0u);
    EXPECT_EQ(data_rows(r.out), 10u);
    EXPECT_EQ(r.out, cli("noise --alpha 1 --sigma 0.095 --seed 3 --n 10").out);
    EXPECT_EQ(cli("noise --alpha 3 --n 2").code, 2);
}

TEST_F(CliTest, DefaultsReparseToIdenticalConfig)
{
    const auto r = cli("defaults");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(dmpf::parse_scenario(r.out) == dmpf::Scenario {});
    EXPECT_EQ(dmpf::format_scenario(dmpf::parse_scenario(r.out)), r.out);
}

TEST_F(CliTest, ValidateBundledScenario)
{
    const auto r = cli("validate '" + kScenarios + "/maze_drift_mapping.cfg'");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "ok\n");
}
