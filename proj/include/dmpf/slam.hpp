/* slam.hpp */

#ifndef DMPF_SLAM_HPP
#define DMPF_SLAM_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"
#include "dmpf/pose_graph.hpp"
#include "dmpf/random.hpp"
#include "dmpf/sensor.hpp"

namespace dmpf {

/* One frame of a submap window: the time index, its odometry reading and the scan */
struct OdomScan
{
    int t = 0;
    Pose2 odom;
    Scan scan;
};

struct SubmapScan
{
    int t = 0;
    Pose2 rel;      /* odometry pose relative to the submap anchor */
    Scan scan;
};

struct Submap
{
    int robot = 0;
    int index = 0;
    OccupancyGrid local_grid;   /* expressed in the anchor frame */
    Pose2 anchor;               /* odometry pose of the first frame */
    int t_start = 0;
    int t_end = 0;              /* inclusive */
    std::vector<SubmapScan> scans;

    SubmapRef ref() const { return { robot, index }; }
    PoseId anchor_vertex() const { return { robot, t_start }; }
};

/*
 * Integrates a window of consecutive frames into a local grid whose frame
 * is the first odometry pose. The grid is sized to hold every scan endpoint.
 */
inline Submap build_submap(int robot, int index, const std::vector<OdomScan>& window,
                           double resolution)
{
    if (window.empty())
        throw ValidationError("window", "submap window must not be empty");
    for (std::size_t i = 1; i < window.size(); ++i)
        if (window[i].t != window[i - 1].t + 1)
            throw ValidationError("window", "odometry frames are not consecutive at t="
                + std::to_string(window[i].t));

    Submap sm;
    sm.robot = robot;
    sm.index = index;
    sm.anchor = window.front().odom;
    sm.t_start = window.front().t;
    sm.t_end = window.back().t;

    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;
    bool first = true;
    for (const OdomScan& f : window) {
        const Pose2 rel = sm.anchor.between(f.odom);
        const double reach = f.scan.max_range + resolution;
        if (first) {
            min_x = rel.x - reach;
            max_x = rel.x + reach;
            min_y = rel.y - reach;
            max_y = rel.y + reach;
            first = false;
        } else {
            min_x = std::min(min_x, rel.x - reach);
            max_x = std::max(max_x, rel.x + reach);
            min_y = std::min(min_y, rel.y - reach);
            max_y = std::max(max_y, rel.y + reach);
        }
        sm.scans.push_back({ f.t, rel, f.scan });
    }

    const int w = std::max(1, static_cast<int>(std::ceil((max_x - min_x) / resolution)));
    const int h = std::max(1, static_cast<int>(std::ceil((max_y - min_y) / resolution)));
    sm.local_grid = OccupancyGrid(w, h, resolution, CellState::Unknown, Pose2(min_x, min_y, 0.0));
    for (const SubmapScan& s : sm.scans)
        integrate_scan(sm.local_grid, s.rel, s.scan);
    return sm;
}

struct ClosureNoise
{
    double sigma_xy = 0.05;       /* meters */
    double sigma_theta = 0.01;    /* radians */
    double outlier_rate = 0.0;    /* probability a proposal is corrupted */
};

struct ClosureReport
{
    std::vector<LoopClosure> scored;     /* every pair that passed the distance gate */
    std::vector<LoopClosure> accepted;   /* scored pairs with confidence above threshold */
    std::size_t pairs_considered = 0;
    std::size_t pairs_gated = 0;         /* skipped because anchors were farther than lambda */
};

namespace detail {

/* Sorted world-grid cell indices observed by a submap's scans at their true poses */
inline std::vector<std::size_t> truth_footprint(const Submap& sm,
                                                const std::vector<std::vector<Pose2>>& truth,
                                                const OccupancyGrid& geometry)
{
    if (sm.robot < 0 || static_cast<std::size_t>(sm.robot) >= truth.size())
        throw IntegrityError("no ground-truth trajectory for robot " + std::to_string(sm.robot));
    const auto& traj = truth[static_cast<std::size_t>(sm.robot)];

    std::vector<std::size_t> cells;
    for (const SubmapScan& s : sm.scans) {
        if (s.t < 0 || static_cast<std::size_t>(s.t) >= traj.size())
            throw IntegrityError("no ground-truth pose for robot " + std::to_string(sm.robot)
                + " at t=" + std::to_string(s.t));
        auto fp = scan_footprint(geometry, traj[static_cast<std::size_t>(s.t)], s.scan);
        cells.insert(cells.end(), fp.free_cells.begin(), fp.free_cells.end());
        cells.insert(cells.end(), fp.occupied_cells.begin(), fp.occupied_cells.end());
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

/* |A n B| / min(|A|, |B|) on sorted index sets */
inline double overlap_ratio(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.empty() || b.empty())
        return 0.0;
    std::size_t common = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    return static_cast<double>(common) / static_cast<double>(std::min(a.size(), b.size()));
}

} /* namespace detail */

/*
 * Synthetic replacement for feature matching. Every unordered pair of
 * distinct submaps whose anchor odometry poses lie within lambda is scored:
 * the relative transform is the true anchor-to-anchor pose plus Gaussian
 * noise, and the confidence is the truth footprint overlap, scaled by 0.4
 * when the proposal is drawn as an outlier (outliers also get a gross pose
 * error). `geometry` fixes the world grid used for footprints.
 */
inline ClosureReport propose_and_score_closures(const std::vector<Submap>& submaps, double lambda,
                                                const std::vector<std::vector<Pose2>>& truth,
                                                const ClosureNoise& noise,
                                                const OccupancyGrid& geometry, Rng& rng)
{
    ClosureReport report;
    std::vector<std::vector<std::size_t>> footprints(submaps.size());
    std::vector<bool> have_fp(submaps.size(), false);
    auto footprint = [&](std::size_t i) -> const std::vector<std::size_t>& {
        if (!have_fp[i]) {
            footprints[i] = detail::truth_footprint(submaps[i], truth, geometry);
            have_fp[i] = true;
        }
        return footprints[i];
    };

    for (std::size_t i = 0; i < submaps.size(); ++i) {
        for (std::size_t j = i + 1; j < submaps.size(); ++j) {
            const Submap& a = submaps[i];
            const Submap& b = submaps[j];
            if (a.robot == b.robot && a.index == b.index)
                continue;
            ++report.pairs_considered;
            if (a.anchor.distance_to(b.anchor) > lambda) {
                ++report.pairs_gated;
                continue;
            }

            /* footprints first: they validate the truth lookups below */
            const double overlap = detail::overlap_ratio(footprint(i), footprint(j));
            const Pose2& ta = truth[static_cast<std::size_t>(a.robot)][static_cast<std::size_t>(a.t_start)];
            const Pose2& tb = truth[static_cast<std::size_t>(b.robot)][static_cast<std::size_t>(b.t_start)];
            Pose2 rel = ta.between(tb);

            const bool outlier = noise.outlier_rate > 0.0 && rng.uniform() < noise.outlier_rate;
            double ex = noise.sigma_xy > 0.0 ? rng.normal(0.0, noise.sigma_xy) : 0.0;
            double ey = noise.sigma_xy > 0.0 ? rng.normal(0.0, noise.sigma_xy) : 0.0;
            double et = noise.sigma_theta > 0.0 ? rng.normal(0.0, noise.sigma_theta) : 0.0;
            if (outlier) {
                ex += rng.uniform(-2.0, 2.0);
                ey += rng.uniform(-2.0, 2.0);
                et += rng.uniform(-std::numbers::pi / 4.0, std::numbers::pi / 4.0);
            }
            rel = rel * Pose2(ex, ey, et);

            LoopClosure c;
            c.from = a.ref();
            c.to = b.ref();
            c.from_vertex = a.anchor_vertex();
            c.to_vertex = b.anchor_vertex();
            c.rel = rel;
            c.confidence = overlap * (1.0 - (outlier ? 0.6 : 0.0));
            c.kind = closure_kind(a.robot, b.robot);

            report.scored.push_back(c);
            if (closure_accepted(c.confidence))
                report.accepted.push_back(c);
        }
    }
    return report;
}

/*
 * Re-integrates every scan into one grid with the geometry of `geometry`.
 * A scan's pose is its own vertex estimate when present, otherwise the
 * anchor estimate composed with the odometry-relative pose. Any cell seen
 * Occupied by some scan stays Occupied.
 */
inline OccupancyGrid merge_global_map(const std::map<PoseId, Pose2>& estimates,
                                      const std::vector<Submap>& submaps,
                                      const OccupancyGrid& geometry)
{
    OccupancyGrid merged = OccupancyGrid::like(geometry, CellState::Unknown);
    std::vector<std::size_t> occupied;

    for (const Submap& sm : submaps) {
        const auto anchor_it = estimates.find(sm.anchor_vertex());
        if (anchor_it == estimates.end())
            throw IntegrityError("no estimate for submap anchor " + to_string(sm.anchor_vertex()));
        for (const SubmapScan& s : sm.scans) {
            const auto it = estimates.find({ sm.robot, s.t });
            const Pose2 pose = it != estimates.end() ? it->second : anchor_it->second * s.rel;
            auto fp = scan_footprint(merged, pose, s.scan);
            for (const std::size_t idx : fp.free_cells)
                merged.set(idx, CellState::Free);
            occupied.insert(occupied.end(), fp.occupied_cells.begin(), fp.occupied_cells.end());
        }
    }
    for (const std::size_t idx : occupied)
        merged.set(idx, CellState::Occupied);
    return merged;
}

} /* namespace dmpf */

#endif /* DMPF_SLAM_HPP */
