/* frontier.hpp */

#ifndef DMPF_FRONTIER_HPP
#define DMPF_FRONTIER_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"

namespace dmpf {

/*
 * A connected group of frontier cells. `centroid` is the member closest to
 * the arithmetic mean of the members (ties broken row-major), so it is
 * always a reachable frontier cell; `size` is the member count C_q.
 */
struct FrontierCluster
{
    std::vector<Cell> members;   /* sorted row-major */
    Cell centroid;
    int size = 0;

    bool operator==(const FrontierCluster&) const = default;
};

/*
 * strict: any Unknown 8-neighbor makes a Free cell a frontier.
 * accessible: a diagonal Unknown neighbor only counts when one of the two
 * orthogonal cells between them is not Occupied, so wall corners the sensor
 * can never see into do not stay frontiers forever.
 */
enum class FrontierRule { Strict, Accessible };

inline bool is_frontier(const OccupancyGrid& map, const Cell& c,
                        FrontierRule rule = FrontierRule::Strict)
{
    if (!map.is_free(c))
        return false;
    for (int k = 0; k < 8; ++k) {
        const Cell off = kNeighborOffsets[k];
        const Cell n { c.x + off.x, c.y + off.y };
        if (!map.in_bounds(n) || map.at(n) != CellState::Unknown)
            continue;
        if (rule == FrontierRule::Accessible && is_diagonal_offset(k)) {
            const bool blocked_x = map.get_or_unknown(Cell { c.x + off.x, c.y }) == CellState::Occupied;
            const bool blocked_y = map.get_or_unknown(Cell { c.x, c.y + off.y }) == CellState::Occupied;
            if (blocked_x && blocked_y)
                continue;
        }
        return true;
    }
    return false;
}

/* Frontier cells in row-major order */
inline std::vector<Cell> detect_frontiers(const OccupancyGrid& map,
                                          FrontierRule rule = FrontierRule::Strict)
{
    std::vector<Cell> frontiers;
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x)
            if (is_frontier(map, Cell { x, y }, rule))
                frontiers.push_back(Cell { x, y });
    return frontiers;
}

namespace detail {

inline Cell snap_centroid(const std::vector<Cell>& members)
{
    double mx = 0.0;
    double my = 0.0;
    for (const Cell& c : members) {
        mx += c.x;
        my += c.y;
    }
    mx /= static_cast<double>(members.size());
    my /= static_cast<double>(members.size());

    /* members are row-major sorted, so strict < keeps the first on ties */
    Cell best = members.front();
    double best_d2 = std::numeric_limits<double>::infinity();
    for (const Cell& c : members) {
        const double d2 = (c.x - mx) * (c.x - mx) + (c.y - my) * (c.y - my);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = c;
        }
    }
    return best;
}

} /* namespace detail */

/*
 * Partitions frontier cells into 8-connected components. Output is ordered
 * by (size descending, centroid row-major). Clusters smaller than min_size
 * are dropped.
 */
inline std::vector<FrontierCluster> cluster_frontiers(const std::vector<Cell>& frontiers,
                                                      int min_size = 1)
{
    std::vector<Cell> sorted = frontiers;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::unordered_set<Cell, CellHash> remaining(sorted.begin(), sorted.end());
    std::vector<FrontierCluster> clusters;

    for (const Cell& seed : sorted) {
        if (!remaining.contains(seed))
            continue;

        FrontierCluster cluster;
        std::vector<Cell> stack { seed };
        remaining.erase(seed);
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            cluster.members.push_back(c);
            for (const Cell& off : kNeighborOffsets) {
                const Cell n { c.x + off.x, c.y + off.y };
                if (auto it = remaining.find(n); it != remaining.end()) {
                    remaining.erase(it);
                    stack.push_back(n);
                }
            }
        }

        std::sort(cluster.members.begin(), cluster.members.end());
        cluster.size = static_cast<int>(cluster.members.size());
        cluster.centroid = detail::snap_centroid(cluster.members);
        if (cluster.size >= min_size)
            clusters.push_back(std::move(cluster));
    }

    std::sort(clusters.begin(), clusters.end(),
              [](const FrontierCluster& a, const FrontierCluster& b) {
                  if (a.size != b.size)
                      return a.size > b.size;
                  return a.centroid < b.centroid;
              });
    return clusters;
}

} /* namespace dmpf */

#endif /* DMPF_FRONTIER_HPP */
