#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "dmpf/grid.hpp"
#include "dmpf/sensor.hpp"
#include "oracles.hpp"

using namespace dmpf;

namespace {

std::string write_temp(const std::string& name, const std::string& content)
{
    const auto p = std::filesystem::temp_directory_path() / ("dmpf_test_" + name);
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
}

/* Slab test: entry distance of a ray into an axis-aligned box, or +inf */
double ray_box(double ox, double oy, double dx, double dy, double x0, double y0, double x1, double y1)
{
    double tmin = -INFINITY;
    double tmax = INFINITY;
    auto slab = [&](double o, double d, double lo, double hi) {
        if (std::abs(d) < 1e-15)
            return o >= lo && o <= hi;
        double a = (lo - o) / d;
        double b = (hi - o) / d;
        if (a > b)
            std::swap(a, b);
        tmin = std::max(tmin, a);
        tmax = std::min(tmax, b);
        return true;
    };
    if (!slab(ox, dx, x0, x1) || !slab(oy, dy, y0, y1) || tmin > tmax || tmax < 0)
        return INFINITY;
    return std::max(tmin, 0.0);
}

} // namespace

TEST(Pose2, ThetaStaysNormalized)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const Pose2 a(u(rng), u(rng), u(rng));
        const Pose2 b(u(rng), u(rng), u(rng));
        const Pose2 c = a * b;
        EXPECT_GT(c.theta, -std::numbers::pi);
        EXPECT_LE(c.theta, std::numbers::pi);
    }
    EXPECT_DOUBLE_EQ(normalize_angle(-std::numbers::pi), std::numbers::pi);
}

TEST(Pose2, ComposeWithInverseIsIdentity)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const Pose2 a(u(rng), u(rng), u(rng));
        for (const Pose2& e : { a * a.inverse(), a.inverse() * a }) {
            EXPECT_NEAR(e.x, 0.0, 1e-12);
            EXPECT_NEAR(e.y, 0.0, 1e-12);
            EXPECT_NEAR(e.theta, 0.0, 1e-12);
        }
    }
}

TEST(Pose2, BetweenRecoversRelative)
{
    const Pose2 a(1.0, 2.0, 0.5);
    const Pose2 rel(0.3, -0.2, 0.1);
    const Pose2 b = a * rel;
    const Pose2 r = a.between(b);
    EXPECT_NEAR(r.x, rel.x, 1e-12);
    EXPECT_NEAR(r.y, rel.y, 1e-12);
    EXPECT_NEAR(r.theta, rel.theta, 1e-12);
}

TEST(Grid, CellCenterRoundTrips)
{
    const OccupancyGrid g(17, 9, 0.37, CellState::Free, Pose2(-3.0, 2.5, 0.4));
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x) {
            const Cell c { x, y };
            EXPECT_EQ(g.world_to_cell(g.cell_center(c)), c);
        }
}

TEST(Grid, RejectsZeroArea)
{
    EXPECT_THROW(OccupancyGrid(0, 5, 0.5), ValidationError);
    EXPECT_THROW(OccupancyGrid(5, 5, 0.0), ValidationError);
}

TEST(LoadWorld, AllFreeAscii)
{
    const auto g = load_world(write_temp("free.txt", "...\n...\n...\n"));
    EXPECT_EQ(g.width(), 3);
    EXPECT_EQ(g.height(), 3);
    EXPECT_EQ(g.count(CellState::Free), 9u);
    EXPECT_EQ(g.count(CellState::Unknown), 0u);
}

TEST(LoadWorld, SingleObstacle)
{
    const auto g = load_world(write_temp("one.txt", "...\n.#.\n...\n"));
    EXPECT_EQ(g.count(CellState::Occupied), 1u);
    EXPECT_EQ(g.at(Cell { 1, 1 }), CellState::Occupied);
}

TEST(LoadWorld, MazePgmMatchesPixelCount)
{
    const std::string path = std::string(DMPF_SOURCE_DIR) + "/data/maze_50x40.pgm";
    const auto g = load_world(path, 0.5);
    EXPECT_EQ(g.width(), 50);
    EXPECT_EQ(g.height(), 40);
    EXPECT_EQ(g.count(CellState::Unknown), 0u);
    /* count frozen from an independent pixel-counting script */
    EXPECT_EQ(g.count(CellState::Occupied), 310u);

    /* and recounted here straight from the raster bytes */
    std::ifstream in(path, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t raster = data.size() - 50 * 40;
    std::size_t dark = 0;
    for (std::size_t i = raster; i < data.size(); ++i)
        dark += static_cast<unsigned char>(data[i]) < 128 ? 1 : 0;
    EXPECT_EQ(g.count(CellState::Occupied), dark);
}

TEST(LoadWorld, AsciiAndPgmMazesAgree)
{
    const auto a = load_world(std::string(DMPF_SOURCE_DIR) + "/data/maze_50x40.txt", 0.5);
    const auto b = load_world(std::string(DMPF_SOURCE_DIR) + "/data/maze_50x40.pgm", 0.5);
    EXPECT_EQ(a, b);
}

TEST(LoadWorld, ParseErrorNamesLine)
{
    try {
        load_world(write_temp("bad.txt", "...\n.x.\n"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
    try {
        load_world(write_temp("ragged.txt", "...\n..\n"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(LoadWorld, TruncatedPgmNamesByte)
{
    try {
        load_world(write_temp("trunc.pgm", "P5\n4 4\n255\nabc"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
    }
}

TEST(LoadWorld, EmptyFileIsValidationError)
{
    EXPECT_THROW(load_world(write_temp("empty.txt", "\n\n")), ValidationError);
}

TEST(Pgm, RoundTripsThroughWriter)
{
    std::mt19937_64 rng(8);
    const auto w = oracle::random_world(23, 11, 0.3, rng);
    std::ostringstream out;
    write_pgm(w, out);
    const auto back = load_world(write_temp("rt.pgm", out.str()), 0.5);
    EXPECT_EQ(back, w);
}

TEST(Raycast, OpenWorldAllBeamsMaxRange)
{
    const OccupancyGrid w(20, 20, 0.5, CellState::Free);
    const Scan s = raycast_scan(w, Pose2(5.0, 5.0, 0.0), 3.0, 360);
    ASSERT_EQ(s.beams.size(), 360u);
    for (const Beam& b : s.beams) {
        EXPECT_DOUBLE_EQ(b.range, 3.0);
        EXPECT_FALSE(b.hit);
    }
}

TEST(Raycast, BeamAnglesFollowIndex)
{
    const OccupancyGrid w(20, 20, 0.5, CellState::Free);
    const double theta = 0.3;
    const Scan s = raycast_scan(w, Pose2(5.0, 5.0, theta), 3.0, 8);
    for (int k = 0; k < 8; ++k)
        EXPECT_NEAR(std::remainder(s.beams[k].angle - (theta + 2.0 * std::numbers::pi * k / 8.0),
                                   2.0 * std::numbers::pi), 0.0, 1e-12);
}

TEST(Raycast, WallAhead)
{
    OccupancyGrid w(20, 20, 0.5, CellState::Free);
    for (int y = 0; y < 20; ++y)
        w.set(Cell { 9, y }, CellState::Occupied);   /* x in [4.5, 5.0) */
    const Scan s = raycast_scan(w, Pose2(2.5, 5.1, 0.0), 7.0, 360);
    EXPECT_TRUE(s.beams[0].hit);
    EXPECT_NEAR(s.beams[0].range, 2.0, 0.25);
}

TEST(Raycast, InvalidPose)
{
    OccupancyGrid w(10, 10, 0.5, CellState::Free);
    w.set(Cell { 2, 2 }, CellState::Occupied);
    EXPECT_THROW(raycast_scan(w, w.cell_center(Cell { 2, 2 }), 3.0, 4), InvalidPoseError);
    EXPECT_THROW(raycast_scan(w, Pose2(-1.0, 1.0, 0.0), 3.0, 4), InvalidPoseError);
    EXPECT_THROW(raycast_scan(w, Pose2(1.0, 1.0, 0.0), 3.0, 0), ParameterError);
}

TEST(Raycast, MatchesBoxIntersectionOracle)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        auto w = oracle::random_world(30, 30, 0.08, rng, 0.5);
        for (int i = 0; i < 30; ++i) {
            w.set(Cell { i, 0 }, CellState::Occupied);
            w.set(Cell { i, 29 }, CellState::Occupied);
            w.set(Cell { 0, i }, CellState::Occupied);
            w.set(Cell { 29, i }, CellState::Occupied);
        }
        const Cell start = oracle::random_free_cell(w, rng);
        std::uniform_real_distribution<double> jitter(0.05, 0.45);
        const Pose2 pose(start.x * 0.5 + jitter(rng), start.y * 0.5 + jitter(rng), 0.7);
        const double d_s = 30.0;
        const Scan s = raycast_scan(w, pose, d_s, 72);
        for (const Beam& b : s.beams) {
            double best = INFINITY;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w.at(i) != CellState::Occupied)
                    continue;
                const Cell c = w.cell_at(i);
                best = std::min(best, ray_box(pose.x, pose.y, std::cos(b.angle), std::sin(b.angle),
                                              c.x * 0.5, c.y * 0.5, (c.x + 1) * 0.5, (c.y + 1) * 0.5));
            }
            ASSERT_TRUE(b.hit);
            EXPECT_NEAR(b.range, best, 0.25);
        }
    }
}

TEST(Raycast, ScanInvariantsAndDeterminism)
{
    std::mt19937_64 rng(5);
    const auto w = oracle::random_world(40, 40, 0.15, rng);
    const Cell c = oracle::random_free_cell(w, rng);
    const Pose2 pose = w.cell_center(c);
    const Scan a = raycast_scan(w, pose, 7.0, 360);
    const Scan b = raycast_scan(w, pose, 7.0, 360);
    EXPECT_EQ(a, b);
    for (const Beam& beam : a.beams) {
        EXPECT_GE(beam.range, 0.0);
        EXPECT_LE(beam.range, 7.0);
        EXPECT_EQ(!beam.hit, beam.range == 7.0);
    }
}

TEST(Raycast, OppositeHeadingsGiveSameRanges)
{
    const OccupancyGrid w(40, 40, 0.5, CellState::Free);
    const Pose2 p(9.3, 11.1, 0.2);
    auto ranges = [&](double th) {
        std::vector<double> r;
        for (const Beam& b : raycast_scan(w, Pose2(p.x, p.y, th), 5.0, 90).beams)
            r.push_back(b.range);
        std::sort(r.begin(), r.end());
        return r;
    };
    EXPECT_EQ(ranges(0.2), ranges(0.2 + std::numbers::pi));
}

TEST(IntegrateScan, SingleBeam)
{
    OccupancyGrid w(10, 3, 1.0, CellState::Free);
    w.set(Cell { 6, 1 }, CellState::Occupied);
    const Pose2 pose(1.5, 1.5, 0.0);
    const Scan s = raycast_scan(w, pose, 20.0, 1);
    OccupancyGrid m = OccupancyGrid::like(w, CellState::Unknown);
    integrate_scan(m, pose, s);
    for (int x = 1; x <= 5; ++x)
        EXPECT_EQ(m.at(Cell { x, 1 }), CellState::Free) << x;
    EXPECT_EQ(m.at(Cell { 6, 1 }), CellState::Occupied);
    EXPECT_EQ(m.count(CellState::Free), 5u);
    EXPECT_EQ(m.count(CellState::Occupied), 1u);
}

TEST(IntegrateScan, Idempotent)
{
    std::mt19937_64 rng(9);
    const auto w = oracle::random_world(30, 30, 0.2, rng);
    const Pose2 pose = w.cell_center(oracle::random_free_cell(w, rng));
    const Scan s = raycast_scan(w, pose, 7.0, 360);
    OccupancyGrid m = OccupancyGrid::like(w, CellState::Unknown);
    integrate_scan(m, pose, s);
    const OccupancyGrid once = m;
    integrate_scan(m, pose, s);
    EXPECT_EQ(m, once);
}

TEST(IntegrateScan, OpenRoomUnknownMatchesFloodFill)
{
    const auto w = load_world(std::string(DMPF_SOURCE_DIR) + "/data/room_10x10.txt", 0.5);
    const Pose2 pose = w.cell_center(Cell { w.width() / 2, w.height() / 2 });
    OccupancyGrid m = OccupancyGrid::like(w, CellState::Unknown);
    integrate_scan(m, pose, raycast_scan(w, pose, 20.0, 360));

    /* oracle: the Free room interior plus the walls 4-adjacent to it are observed */
    const auto dist = oracle::bfs(w, w.world_to_cell(pose), true);
    std::vector<bool> seen(w.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (dist[i] == oracle::kInf)
            continue;
        seen[i] = true;
        const Cell c = w.cell_at(i);
        for (int k = 0; k < 4; ++k) {
            const Cell n { c.x + kNeighborOffsets[k].x, c.y + kNeighborOffsets[k].y };
            if (w.in_bounds(n) && w.at(n) == CellState::Occupied)
                seen[w.index(n)] = true;
        }
    }
    const auto unseen = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), false));
    EXPECT_EQ(m.count(CellState::Unknown), unseen);
}

TEST(IntegrateScan, KnownCellsNeverShrink)
{
    std::mt19937_64 rng(10);
    const auto w = oracle::random_world(40, 40, 0.2, rng);
    OccupancyGrid m = OccupancyGrid::like(w, CellState::Unknown);
    std::size_t known = 0;
    for (int i = 0; i < 30; ++i) {
        const Pose2 pose = w.cell_center(oracle::random_free_cell(w, rng));
        integrate_scan(m, pose, raycast_scan(w, pose, 5.0, 180));
        const std::size_t now = m.size() - m.count(CellState::Unknown);
        EXPECT_GE(now, known);
        known = now;
    }
}

TEST(IntegrateScan, IdealScansNeverContradictTruth)
{
    std::mt19937_64 rng(12);
    const auto w = oracle::random_world(40, 40, 0.2, rng);
    OccupancyGrid m = OccupancyGrid::like(w, CellState::Unknown);
    for (int i = 0; i < 20; ++i) {
        const Pose2 pose = w.cell_center(oracle::random_free_cell(w, rng));
        integrate_scan(m, pose, raycast_scan(w, pose, 7.0, 360));
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.at(i) != CellState::Unknown) {
            EXPECT_EQ(m.at(i), w.at(i)) << i;
        }
}
