/* potential.hpp */

#ifndef DMPF_POTENTIAL_HPP
#define DMPF_POTENTIAL_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/frontier.hpp"
#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"
#include "dmpf/noise.hpp"
#include "dmpf/wavefront.hpp"

namespace dmpf {

/* literal: k_r exp((d - d_s) / sigma_r); inverted: k_r exp((d_s - d) / sigma_r) */
enum class RepulsionSign { Literal, Inverted };

/* size: -k_a C_q / d*; size_squared: C_q repeated subtractions, i.e. -k_a C_q^2 / d* */
enum class AttractiveForm { Size, SizeSquared };

/* Which noise value enters the repulsion: accumulated chi or the last increment */
enum class NoiseTerm { Chi, DeltaChi };

/* Where the repulsive term is evaluated when ranking candidate centroids */
enum class RepulsionPoint { Centroid, RobotCell };

struct StrategyParams
{
    double k_a = 1.0;
    double k_r = 1.0;
    double sigma_r = 0.6;    /* relaxation distance (m) */
    double d_s = 7.0;        /* sensor range (m) */
    double alpha = 2.0;      /* noise color */
    double sigma_d = 0.095;  /* white-noise variance */
    RepulsionSign repulsion_sign = RepulsionSign::Literal;
    AttractiveForm attractive_form = AttractiveForm::Size;
    NoiseTerm noise_term = NoiseTerm::Chi;
    RepulsionPoint repulsion_point = RepulsionPoint::Centroid;
    int min_cluster_size = 1;

    void validate() const
    {
        auto positive = [](const char* name, double v) {
            if (!(v > 0.0))
                throw ValidationError(name, "must be > 0");
        };
        positive("k_a", k_a);
        positive("k_r", k_r);
        positive("sigma_r", sigma_r);
        positive("d_s", d_s);
        positive("sigma_d", sigma_d);
        if (!(alpha >= 0.0 && alpha <= 2.0))
            throw ValidationError("alpha", "must lie in [0, 2]");
        if (min_cluster_size < 1)
            throw ValidationError("min_cluster_size", "must be >= 1");
    }
};

/* Attractive term for a cluster of `size` frontiers at wave-front distance `distance` */
inline double attractive_from_distance(int size, double distance, const StrategyParams& params)
{
    if (distance == 0.0)
        throw DegenerateDistanceError("attractive potential undefined at distance 0");
    if (params.attractive_form == AttractiveForm::Size)
        return -params.k_a * size / distance;

    double pa = 0.0;
    for (int m = 0; m < size; ++m)
        pa -= params.k_a * size / distance;
    return pa;
}

/*
 * P_a(p, q) = -k_a C_q / d*(p, q) with the field computed from p.
 * Returns nullopt when the centroid is unreachable; throws
 * DegenerateDistanceError when q == p.
 */
inline std::optional<double> attractive_potential(const Cell& p, const FrontierCluster& cluster,
                                                  const DistanceField& field,
                                                  const StrategyParams& params)
{
    if (field.source() != p)
        throw ParameterError("distance field must be computed from the evaluation point");
    const int d = field.at(cluster.centroid);
    if (d == DistanceField::kUnreachable)
        return std::nullopt;
    return attractive_from_distance(cluster.size, static_cast<double>(d), params);
}

/* One repelling robot as seen by the planner */
struct RobotSnapshot
{
    Pose2 pose;
    double noise = 0.0;   /* current chi (or dchi) of this robot */
};

/* k_r e^{(d - d_s)/sigma_r} + chi for d < d_s, 0 otherwise */
inline double repulsion_term(double distance, double noise, const StrategyParams& params)
{
    if (distance >= params.d_s)
        return 0.0;
    const double exponent = params.repulsion_sign == RepulsionSign::Literal
        ? (distance - params.d_s) / params.sigma_r
        : (params.d_s - distance) / params.sigma_r;
    return params.k_r * std::exp(exponent) + noise;
}

/*
 * P_r at world point (px, py): sum over the given robots closer than d_s.
 * Callers pass the robots that repel (normally every robot except the planner).
 */
inline double repulsive_potential(double px, double py, std::span<const RobotSnapshot> robots,
                                  const StrategyParams& params)
{
    double pr = 0.0;
    for (const RobotSnapshot& r : robots)
        pr += repulsion_term(std::hypot(r.pose.x - px, r.pose.y - py), r.noise, params);
    return pr;
}

inline double repulsive_potential(const OccupancyGrid& map, const Cell& p,
                                  std::span<const RobotSnapshot> robots,
                                  const StrategyParams& params)
{
    const Pose2 w = map.cell_center(p);
    return repulsive_potential(w.x, w.y, robots, params);
}

/* Robots other than `self`, with the noise value selected by params */
inline std::vector<RobotSnapshot> peers_of(int self, std::span<const Pose2> poses,
                                           std::span<const double> noise)
{
    std::vector<RobotSnapshot> peers;
    for (std::size_t n = 0; n < poses.size(); ++n)
        if (static_cast<int>(n) != self)
            peers.push_back({ poses[n], n < noise.size() ? noise[n] : 0.0 });
    return peers;
}

/* P_total(i, p, q) = P_a(p, q) + P_r(i, p); nullopt if q is unreachable from p */
inline std::optional<double> total_potential(int robot, const Cell& p, const FrontierCluster& cluster,
                                             const DistanceField& field, const OccupancyGrid& map,
                                             std::span<const Pose2> robots,
                                             std::span<const double> noise,
                                             const StrategyParams& params)
{
    const auto pa = attractive_potential(p, cluster, field, params);
    if (!pa)
        return std::nullopt;
    const auto peers = peers_of(robot, robots, noise);
    return *pa + repulsive_potential(map, p, peers, params);
}

/* Per-candidate record kept for the decision log */
struct CandidateEvaluation
{
    Cell centroid;
    int size = 0;
    int distance = DistanceField::kUnreachable;
    double p_a = 0.0;
    double p_r = 0.0;
    double p_total = std::numeric_limits<double>::infinity();
    bool eligible = false;   /* reachable and not degenerate */
};

struct GoalDecision
{
    std::optional<std::size_t> chosen;   /* index into the cluster list */
    std::vector<CandidateEvaluation> candidates;
};

namespace detail {

/* argmin of P_total; ties go to the larger cluster, then the row-major first centroid */
inline std::optional<std::size_t> argmin_candidate(const std::vector<CandidateEvaluation>& cands)
{
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& c = cands[i];
        if (!c.eligible)
            continue;
        if (!best) {
            best = i;
            continue;
        }
        const auto& b = cands[*best];
        if (c.p_total < b.p_total
            || (c.p_total == b.p_total
                && (c.size > b.size || (c.size == b.size && c.centroid < b.centroid))))
            best = i;
    }
    return best;
}

} /* namespace detail */

/*
 * Optional per-evaluation noise source: given the index of a repelling robot
 * (index into `robots`), returns a fresh noise value. When absent, each
 * robot's current per-cycle value is reused for every candidate.
 */
using NoiseSampler = std::function<double(std::size_t robot)>;

/*
 * MWF-CN goal selection for `robot`. The attraction of every cluster is
 * read from one modified wave-front field grown from the robot's cell; the
 * repulsion of the other robots is evaluated at the candidate centroid (or at
 * the robot's own cell if params.repulsion_point says so). Clusters that are
 * unreachable or whose centroid is the robot's own cell are skipped.
 */
inline GoalDecision select_goal(int robot, const OccupancyGrid& map,
                                const std::vector<FrontierCluster>& clusters,
                                std::span<const Pose2> robots, std::span<const double> noise,
                                const StrategyParams& params,
                                const NoiseSampler& sampler = {})
{
    GoalDecision decision;
    const Cell p = map.world_to_cell(robots[static_cast<std::size_t>(robot)]);
    if (!map.is_free(p))
        return decision;

    const DistanceField field = mwf_field(map, p);
    const auto peers = peers_of(robot, robots, noise);

    for (const FrontierCluster& cluster : clusters) {
        CandidateEvaluation ev;
        ev.centroid = cluster.centroid;
        ev.size = cluster.size;
        ev.distance = field.at(cluster.centroid);
        if (ev.distance != DistanceField::kUnreachable && ev.distance > 0) {
            ev.p_a = attractive_from_distance(cluster.size, ev.distance, params);
            const Cell at = params.repulsion_point == RepulsionPoint::Centroid ? cluster.centroid : p;
            if (sampler) {
                const Pose2 w = map.cell_center(at);
                std::vector<RobotSnapshot> fresh = peers;
                std::size_t k = 0;
                for (std::size_t n = 0; n < robots.size(); ++n) {
                    if (static_cast<int>(n) == robot)
                        continue;
                    if (fresh[k].pose.distance_to(w) < params.d_s)
                        fresh[k].noise = sampler(n);
                    ++k;
                }
                ev.p_r = repulsive_potential(w.x, w.y, fresh, params);
            } else {
                ev.p_r = repulsive_potential(map, at, peers, params);
            }
            ev.p_total = ev.p_a + ev.p_r;
            ev.eligible = true;
        }
        decision.candidates.push_back(ev);
    }
    decision.chosen = detail::argmin_candidate(decision.candidates);
    return decision;
}

/* Linear repulsion of the baseline: k_r (d_s - d) / d_s inside the sensor range */
inline double linear_repulsion(double distance, const StrategyParams& params)
{
    if (distance >= params.d_s)
        return 0.0;
    return params.k_r * (params.d_s - distance) / params.d_s;
}

/*
 * MMPF baseline: attraction -k_a C_q / d_orig over the 4-connected unit
 * wave-front and noiseless linear repulsion, otherwise the same selection
 * rule as select_goal.
 */
inline GoalDecision mmpf_select_goal(int robot, const OccupancyGrid& map,
                                     const std::vector<FrontierCluster>& clusters,
                                     std::span<const Pose2> robots, const StrategyParams& params)
{
    GoalDecision decision;
    const Cell p = map.world_to_cell(robots[static_cast<std::size_t>(robot)]);
    if (!map.is_free(p))
        return decision;

    const DistanceField field = orig_wavefront_field(map, p);

    for (const FrontierCluster& cluster : clusters) {
        CandidateEvaluation ev;
        ev.centroid = cluster.centroid;
        ev.size = cluster.size;
        ev.distance = field.at(cluster.centroid);
        if (ev.distance != DistanceField::kUnreachable && ev.distance > 0) {
            ev.p_a = -params.k_a * cluster.size / static_cast<double>(ev.distance);
            const Cell at = params.repulsion_point == RepulsionPoint::Centroid ? cluster.centroid : p;
            const Pose2 w = map.cell_center(at);
            for (std::size_t n = 0; n < robots.size(); ++n)
                if (static_cast<int>(n) != robot)
                    ev.p_r += linear_repulsion(robots[n].distance_to(w), params);
            ev.p_total = ev.p_a + ev.p_r;
            ev.eligible = true;
        }
        decision.candidates.push_back(ev);
    }
    decision.chosen = detail::argmin_candidate(decision.candidates);
    return decision;
}

/*
 * Local steering toward a chosen goal: evaluates P_total at each traversable
 * 8-neighbor l of p (attraction from d*(l, q), read from a field grown from
 * the goal, which is valid because the step weights are symmetric) and
 * returns the neighbor with the lowest value. Returns nullopt if no
 * neighbor is traversable or none reaches the goal.
 */
inline std::optional<Cell> steer_step(int robot, const OccupancyGrid& map,
                                      const FrontierCluster& goal, const DistanceField& goal_field,
                                      std::span<const Pose2> robots, std::span<const double> noise,
                                      const StrategyParams& params)
{
    const Cell p = map.world_to_cell(robots[static_cast<std::size_t>(robot)]);
    const auto peers = peers_of(robot, robots, noise);

    std::optional<Cell> best;
    double best_value = std::numeric_limits<double>::infinity();
    for (const Cell& off : kNeighborOffsets) {
        const Cell l { p.x + off.x, p.y + off.y };
        if (!map.is_free(l))
            continue;
        const int d = goal_field.at(l);
        if (d == DistanceField::kUnreachable)
            continue;
        if (d == 0)
            return l;
        const double value = attractive_from_distance(goal.size, d, params)
                           + repulsive_potential(map, l, peers, params);
        if (value < best_value || (value == best_value && best && l < *best)) {
            best_value = value;
            best = l;
        }
    }
    return best;
}

} /* namespace dmpf */

#endif /* DMPF_POTENTIAL_HPP */
