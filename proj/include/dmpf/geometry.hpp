/* geometry.hpp */

#ifndef DMPF_GEOMETRY_HPP
#define DMPF_GEOMETRY_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>

namespace dmpf {

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double theta)
{
    constexpr double kPi = std::numbers::pi;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;

    if (theta > -kPi && theta <= kPi)
        return theta;

    double wrapped = std::fmod(theta + kPi, kTwoPi);
    if (wrapped <= 0.0)
        wrapped += kTwoPi;
    return wrapped - kPi;
}

/*
 * Pose2 is an element of SE(2): a heading theta (the rotation R) and a
 * planar position (x, y) (the translation p). Composition follows the
 * usual convention a * b = [R_a R_b, p_a + R_a p_b].
 */
struct Pose2
{
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    constexpr Pose2() = default;
    Pose2(double x_, double y_, double theta_) :
        x(x_), y(y_), theta(normalize_angle(theta_)) { }

    static Pose2 identity() { return {}; }

    Pose2 operator*(const Pose2& rhs) const
    {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return { x + c * rhs.x - s * rhs.y,
                 y + s * rhs.x + c * rhs.y,
                 theta + rhs.theta };
    }

    Pose2 inverse() const
    {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return { -c * x - s * y, s * x - c * y, -theta };
    }

    /* Relative pose of `other` expressed in this frame */
    Pose2 between(const Pose2& other) const { return inverse() * other; }

    /* Applies the pose to a point */
    void transform_point(double px, double py, double& ox, double& oy) const
    {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        ox = x + c * px - s * py;
        oy = y + s * px + c * py;
    }

    double distance_to(const Pose2& other) const
    {
        return std::hypot(other.x - x, other.y - y);
    }

    bool operator==(const Pose2&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Pose2& p)
{
    return os << "(" << p.x << ", " << p.y << ", " << p.theta << ")";
}

/// Integer grid cell coordinate. Ordering is row-major (y first, then x).
struct Cell
{
    int x = 0;
    int y = 0;

    constexpr bool operator==(const Cell&) const = default;
    constexpr std::strong_ordering operator<=>(const Cell& rhs) const
    {
        if (auto c = y <=> rhs.y; c != 0)
            return c;
        return x <=> rhs.x;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c)
{
    return os << "[" << c.x << ", " << c.y << "]";
}

struct CellHash
{
    std::size_t operator()(const Cell& c) const noexcept
    {
        const auto packed = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32)
                          | static_cast<std::uint32_t>(c.y);
        return std::hash<std::uint64_t>{}(packed);
    }
};

/* The eight neighbor offsets; the first four are orthogonal */
inline constexpr Cell kNeighborOffsets[8] = {
    { 1, 0 }, { -1, 0 }, { 0, 1 }, { 0, -1 },
    { 1, 1 }, { 1, -1 }, { -1, 1 }, { -1, -1 }
};

inline constexpr bool is_diagonal_offset(int index) { return index >= 4; }

} /* namespace dmpf */

#endif /* DMPF_GEOMETRY_HPP */
