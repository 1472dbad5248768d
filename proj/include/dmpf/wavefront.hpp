/* wavefront.hpp */

#ifndef DMPF_WAVEFRONT_HPP
#define DMPF_WAVEFRONT_HPP

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"

namespace dmpf {

/* Step weights of the modified wave-front */
inline constexpr int kOrthogonalStep = 3;
inline constexpr int kDiagonalStep = 4;

/*
 * Integer distance field from a single source cell. Only Free cells of the
 * belief map are traversable (frontier cells are Free cells, so they are
 * reachable; interior Unknown space and obstacles are not).
 */
class DistanceField
{
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    DistanceField() = default;
    DistanceField(Cell source, int width, int height) :
        mSource(source), mWidth(width), mHeight(height),
        mValues(static_cast<std::size_t>(width) * height, kUnreachable) { }

    Cell source() const { return mSource; }
    int width() const { return mWidth; }
    int height() const { return mHeight; }

    bool in_bounds(const Cell& c) const
    {
        return c.x >= 0 && c.y >= 0 && c.x < mWidth && c.y < mHeight;
    }

    int at(const Cell& c) const
    {
        return in_bounds(c) ? mValues[index(c)] : kUnreachable;
    }

    bool reachable(const Cell& c) const { return at(c) != kUnreachable; }

    int& operator[](const Cell& c) { return mValues[index(c)]; }

    const std::vector<int>& values() const { return mValues; }

private:
    std::size_t index(const Cell& c) const
    {
        return static_cast<std::size_t>(c.y) * mWidth + c.x;
    }

    Cell mSource;
    int mWidth = 0;
    int mHeight = 0;
    std::vector<int> mValues;
};

namespace detail {

inline void check_source(const OccupancyGrid& map, const Cell& source)
{
    if (!map.in_bounds(source))
        throw InvalidSourceError("source cell is outside the map");
    if (map.at(source) != CellState::Free)
        throw InvalidSourceError("source cell must be Free");
}

} /* namespace detail */

/*
 * Modified wave-front distance d*(source, .): the fixed point of
 *   d*(p, p) = 0,  d*(k) = min over traversable 8-neighbors n of
 *                  d*(n) + 3 (orthogonal) or + 4 (diagonal),
 * computed by a bucket-queue Dijkstra. Five rotating buckets suffice
 * because no edge weight exceeds 4.
 */
inline DistanceField mwf_field(const OccupancyGrid& map, const Cell& source)
{
    detail::check_source(map, source);

    DistanceField field(source, map.width(), map.height());
    constexpr int kBuckets = kDiagonalStep + 1;
    std::array<std::vector<Cell>, kBuckets> buckets;

    field[source] = 0;
    buckets[0].push_back(source);
    std::size_t pending = 1;

    for (int dist = 0; pending > 0; ++dist) {
        auto& bucket = buckets[dist % kBuckets];
        /* entries may be appended to other buckets only, never this one */
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            const Cell c = bucket[i];
            --pending;
            if (field.at(c) != dist)
                continue;   /* stale entry */
            for (int k = 0; k < 8; ++k) {
                const Cell n { c.x + kNeighborOffsets[k].x, c.y + kNeighborOffsets[k].y };
                if (!map.is_free(n))
                    continue;
                const int nd = dist + (is_diagonal_offset(k) ? kDiagonalStep : kOrthogonalStep);
                if (nd < field.at(n)) {
                    field[n] = nd;
                    buckets[nd % kBuckets].push_back(n);
                    ++pending;
                }
            }
        }
        bucket.clear();
    }
    return field;
}

/* Original wave-front: 4-connected breadth-first distance with unit steps */
inline DistanceField orig_wavefront_field(const OccupancyGrid& map, const Cell& source)
{
    detail::check_source(map, source);

    DistanceField field(source, map.width(), map.height());
    std::vector<Cell> frontier { source };
    field[source] = 0;

    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const Cell c = frontier[head];
        const int d = field.at(c);
        for (int k = 0; k < 4; ++k) {
            const Cell n { c.x + kNeighborOffsets[k].x, c.y + kNeighborOffsets[k].y };
            if (map.is_free(n) && field.at(n) == DistanceField::kUnreachable) {
                field[n] = d + 1;
                frontier.push_back(n);
            }
        }
    }
    return field;
}

} /* namespace dmpf */

#endif /* DMPF_WAVEFRONT_HPP */
