/* planner.hpp */

#ifndef DMPF_PLANNER_HPP
#define DMPF_PLANNER_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"
#include "dmpf/wavefront.hpp"

namespace dmpf {

struct GridPath
{
    std::vector<Cell> cells;   /* from start to goal inclusive */
    int cost = 0;              /* in {3, 4} step units */
};

/* Octile distance for step costs 3 (orthogonal) and 4 (diagonal) */
inline int octile_heuristic(const Cell& a, const Cell& b)
{
    const int dx = std::abs(a.x - b.x);
    const int dy = std::abs(a.y - b.y);
    return kOrthogonalStep * std::max(dx, dy)
         + (kDiagonalStep - kOrthogonalStep) * std::min(dx, dy);
}

/*
 * 8-connected A* over Free cells of the belief map. Returns nullopt when the
 * goal is not traversable or not connected to the start. Ties in f are
 * broken by larger g, then row-major cell order, so results are stable.
 */
inline std::optional<GridPath> plan_path(const OccupancyGrid& map, const Cell& from, const Cell& to)
{
    if (!map.is_free(from) || !map.is_free(to))
        return std::nullopt;
    if (from == to)
        return GridPath { { from }, 0 };

    const std::size_t n = map.size();
    std::vector<int> g(n, DistanceField::kUnreachable);
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> closed(n, false);

    /* (f, -g, y, x) */
    using Entry = std::tuple<int, int, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

    g[map.index(from)] = 0;
    open.emplace(octile_heuristic(from, to), 0, from.y, from.x);

    while (!open.empty()) {
        const auto [f, neg_g, cy, cx] = open.top();
        open.pop();
        const Cell c { cx, cy };
        const std::size_t ci = map.index(c);
        if (closed[ci])
            continue;
        closed[ci] = true;

        if (c == to) {
            GridPath path;
            path.cost = g[ci];
            for (std::size_t i = ci; i != n; i = parent[i])
                path.cells.push_back(map.cell_at(i));
            std::reverse(path.cells.begin(), path.cells.end());
            return path;
        }

        for (int k = 0; k < 8; ++k) {
            const Cell nb { c.x + kNeighborOffsets[k].x, c.y + kNeighborOffsets[k].y };
            if (!map.is_free(nb))
                continue;
            const std::size_t ni = map.index(nb);
            if (closed[ni])
                continue;
            const int ng = g[ci] + (is_diagonal_offset(k) ? kDiagonalStep : kOrthogonalStep);
            if (ng < g[ni]) {
                g[ni] = ng;
                parent[ni] = ci;
                open.emplace(ng + octile_heuristic(nb, to), -ng, nb.y, nb.x);
            }
        }
    }
    return std::nullopt;
}

} /* namespace dmpf */

#endif /* DMPF_PLANNER_HPP */
