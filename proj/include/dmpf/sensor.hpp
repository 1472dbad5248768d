/* sensor.hpp */

#ifndef DMPF_SENSOR_HPP
#define DMPF_SENSOR_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"
#include "dmpf/random.hpp"

namespace dmpf {

struct Beam
{
    double angle = 0.0;   /* world-frame bearing (rad) */
    double range = 0.0;   /* meters */
    bool hit = false;

    bool operator==(const Beam&) const = default;
};

/*
 * A planar range scan. Beam angles are world-frame bearings as measured
 * from the capture pose; sensor_theta keeps that pose's heading so the scan
 * can be re-integrated at a different (estimated) pose.
 */
struct Scan
{
    std::vector<Beam> beams;
    double max_range = 0.0;
    double sensor_theta = 0.0;

    bool operator==(const Scan&) const = default;
};

/*
 * Grid traversal of a ray (Amanatides & Woo). Calls visit(cell, t_enter)
 * for each cell pierced by the ray in order, where t_enter is the distance
 * in meters at which the ray enters the cell (0 for the start cell). Stops
 * when visit returns false or after the first cell entered beyond max_t.
 * Cells outside the grid are reported too; the caller decides what they mean.
 */
template <typename Visitor>
void traverse_ray(const OccupancyGrid& grid, const Pose2& from, double world_angle,
                  double max_t, Visitor&& visit)
{
    double gx = 0.0;
    double gy = 0.0;
    grid.world_to_grid(from.x, from.y, gx, gy);

    const double local_angle = world_angle - grid.origin().theta;
    const double dx = std::cos(local_angle);
    const double dy = std::sin(local_angle);
    const double res = grid.resolution();
    constexpr double kInf = std::numeric_limits<double>::infinity();

    Cell cell { static_cast<int>(std::floor(gx)), static_cast<int>(std::floor(gy)) };
    const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
    const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);

    /* t in grid units along the ray to the next vertical/horizontal boundary */
    double t_max_x = kInf;
    double t_max_y = kInf;
    double t_delta_x = kInf;
    double t_delta_y = kInf;
    if (step_x != 0) {
        const double boundary = step_x > 0 ? cell.x + 1.0 : static_cast<double>(cell.x);
        t_max_x = (boundary - gx) / dx;
        t_delta_x = 1.0 / std::abs(dx);
    }
    if (step_y != 0) {
        const double boundary = step_y > 0 ? cell.y + 1.0 : static_cast<double>(cell.y);
        t_max_y = (boundary - gy) / dy;
        t_delta_y = 1.0 / std::abs(dy);
    }

    double t_enter = 0.0;
    for (;;) {
        if (!visit(cell, t_enter * res))
            return;
        if (t_enter * res > max_t)
            return;
        if (t_max_x == t_max_y) {
            /* exactly through a corner: the two side cells are only touched at a point */
            t_enter = t_max_x;
            t_max_x += t_delta_x;
            t_max_y += t_delta_y;
            cell.x += step_x;
            cell.y += step_y;
        } else if (t_max_x < t_max_y) {
            t_enter = t_max_x;
            t_max_x += t_delta_x;
            cell.x += step_x;
        } else {
            t_enter = t_max_y;
            t_max_y += t_delta_y;
            cell.y += step_y;
        }
    }
}

/* Optional additive Gaussian range noise */
struct RangeNoise
{
    double sigma = 0.0;
    Rng* rng = nullptr;
};

/*
 * Simulated planar LiDAR. Beam k points along theta + 2*pi*k/n_beams and
 * reports the distance to the boundary of the first Occupied cell it enters,
 * clamped to d_s. Leaving the grid counts as striking a wall at the border.
 */
inline Scan raycast_scan(const OccupancyGrid& world, const Pose2& pose, double d_s,
                         int n_beams, RangeNoise noise = {})
{
    if (n_beams < 1)
        throw ParameterError("n_beams must be >= 1");
    if (!(d_s > 0.0))
        throw ParameterError("sensor range must be positive");

    const Cell start = world.world_to_cell(pose);
    if (!world.in_bounds(start))
        throw InvalidPoseError("pose " + std::to_string(pose.x) + "," + std::to_string(pose.y)
            + " lies outside the world");
    if (world.at(start) != CellState::Free)
        throw InvalidPoseError("pose " + std::to_string(pose.x) + "," + std::to_string(pose.y)
            + " lies in a non-free cell");

    Scan scan;
    scan.max_range = d_s;
    scan.sensor_theta = pose.theta;
    scan.beams.reserve(static_cast<std::size_t>(n_beams));

    for (int k = 0; k < n_beams; ++k) {
        const double angle = normalize_angle(
            pose.theta + 2.0 * std::numbers::pi * k / static_cast<double>(n_beams));
        Beam beam { angle, d_s, false };

        traverse_ray(world, pose, angle, d_s, [&](const Cell& c, double t) {
            if (t >= d_s)
                return false;
            if (!world.in_bounds(c) || world.at(c) == CellState::Occupied) {
                beam.range = t;
                beam.hit = true;
                return false;
            }
            return true;
        });

        if (noise.sigma > 0.0 && noise.rng != nullptr && beam.hit) {
            beam.range = std::max(0.0, beam.range + noise.rng->normal(0.0, noise.sigma));
            if (beam.range >= d_s) {
                beam.range = d_s;
                beam.hit = false;
            }
        }
        scan.beams.push_back(beam);
    }
    return scan;
}

struct ScanFootprint
{
    std::vector<std::size_t> free_cells;       /* sorted, unique */
    std::vector<std::size_t> occupied_cells;   /* sorted, unique */
};

/* Cells a scan taken at `pose` observes in the geometry of `map`, without writing */
inline ScanFootprint scan_footprint(const OccupancyGrid& map, const Pose2& pose, const Scan& scan)
{
    ScanFootprint fp;
    auto& free_cells = fp.free_cells;
    auto& occupied_cells = fp.occupied_cells;

    for (const Beam& beam : scan.beams) {
        const double angle = beam.angle + (pose.theta - scan.sensor_theta);   /* exact at the capture pose */
        if (!beam.hit) {
            traverse_ray(map, pose, angle, beam.range, [&](const Cell& c, double t) {
                if (t >= beam.range)
                    return false;
                if (map.in_bounds(c))
                    free_cells.push_back(map.index(c));
                return true;
            });
            continue;
        }

        /*
         * An exact hit range is the entry distance of the struck cell, and pose
         * rounding can shift that entry to either side of it. A cell entered
         * within kBoundarySlack of the range is the hit (the closest one if
         * several are grazed); otherwise the hit is the cell holding the
         * endpoint, as with a noisy range.
         */
        constexpr double kBoundarySlack = 1e-9;
        std::vector<std::pair<Cell, double>> path;
        traverse_ray(map, pose, angle, beam.range + kBoundarySlack, [&](const Cell& c, double t) {
            if (t > beam.range + kBoundarySlack)
                return false;
            path.emplace_back(c, t);
            return true;
        });
        std::size_t hit = path.size() - 1;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < path.size(); ++i) {
            const double gap = std::abs(path[i].second - beam.range);
            if (gap <= kBoundarySlack && gap < best_gap) {
                best_gap = gap;
                hit = i;
            }
        }
        for (std::size_t i = 0; i < path.size(); ++i) {
            const Cell& c = path[i].first;
            if (!map.in_bounds(c))
                continue;
            if (i == hit)
                occupied_cells.push_back(map.index(c));
            else if (path[i].second < beam.range - kBoundarySlack)
                free_cells.push_back(map.index(c));
        }
    }

    std::sort(occupied_cells.begin(), occupied_cells.end());
    occupied_cells.erase(std::unique(occupied_cells.begin(), occupied_cells.end()),
                         occupied_cells.end());
    std::sort(free_cells.begin(), free_cells.end());
    free_cells.erase(std::unique(free_cells.begin(), free_cells.end()), free_cells.end());
    return fp;
}

/*
 * Marks the cells a scan observed when taken from `pose`. Traversed cells
 * become Free and the struck cell of a hit beam (see scan_footprint) becomes
 * Occupied. Within one scan Occupied is sticky; across
 * scans the last write wins. Segments leaving the map are clipped.
 * Returns the sorted indices of all cells written.
 */
inline std::vector<std::size_t> integrate_scan(OccupancyGrid& map, const Pose2& pose,
                                               const Scan& scan)
{
    const auto [free_cells, occupied_cells] = scan_footprint(map, pose, scan);

    std::vector<std::size_t> touched;
    touched.reserve(free_cells.size() + occupied_cells.size());
    std::set_union(free_cells.begin(), free_cells.end(),
                   occupied_cells.begin(), occupied_cells.end(), std::back_inserter(touched));

    for (const std::size_t idx : free_cells)
        map.set(idx, CellState::Free);
    for (const std::size_t idx : occupied_cells)
        map.set(idx, CellState::Occupied);
    return touched;
}

} /* namespace dmpf */

#endif /* DMPF_SENSOR_HPP */
