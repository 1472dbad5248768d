/* sim.hpp */

#ifndef DMPF_SIM_HPP
#define DMPF_SIM_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/frontier.hpp"
#include "dmpf/geometry.hpp"
#include "dmpf/grid.hpp"
#include "dmpf/metrics.hpp"
#include "dmpf/noise.hpp"
#include "dmpf/planner.hpp"
#include "dmpf/pose_graph.hpp"
#include "dmpf/potential.hpp"
#include "dmpf/random.hpp"
#include "dmpf/sensor.hpp"
#include "dmpf/slam.hpp"
#include "dmpf/wavefront.hpp"

namespace dmpf {

enum class StrategyKind { MwfCn, Mmpf };
enum class CommModel { AlwaysOn, Radius };
enum class NavigationMode { AStar, Steer };
enum class SolverKind { Centralized, Distributed };

struct SlamConfig
{
    bool enabled = false;
    int submap_window = 30;        /* planning cycles per submap */
    double lambda = 10.0;          /* anchor distance gate (m) */
    ClosureNoise closure_noise;
    SolverKind solver = SolverKind::Centralized;
};

struct SimConfig
{
    std::string world_path;
    double resolution = 0.5;
    int n_robots = 2;
    std::vector<Pose2> starts;
    int n_beams = 360;
    double cycle_period = 1.0;        /* simulated seconds per cycle */
    double odom_drift = 0.0;          /* std per meter travelled, on x, y and theta */
    double range_noise = 0.0;         /* beam range std (m) */
    StrategyKind strategy = StrategyKind::MwfCn;
    StrategyParams params;
    double stuck_window = 120.0;      /* simulated seconds */
    CommModel comm = CommModel::AlwaysOn;
    double comm_radius = 0.0;         /* meters, radius model only */
    std::uint64_t seed = 1;
    int max_cycles = 2000;
    int replan_interval = 1;
    bool goal_commitment = true;      /* keep a still-open goal across replan cycles */
    NavigationMode navigation = NavigationMode::AStar;
    bool per_point_noise = false;
    std::size_t noise_window = 0;
    FrontierRule frontier_rule = FrontierRule::Accessible;
    double coverage_goal = 0.99;
    SlamConfig slam;
    int snapshot_every = 0;
    bool decision_log = false;

    void validate() const
    {
        if (n_robots < 1)
            throw ValidationError("n_robots", "must be >= 1");
        if (static_cast<int>(starts.size()) != n_robots)
            throw ValidationError("starts", "expected " + std::to_string(n_robots)
                + " start poses, got " + std::to_string(starts.size()));
        if (!(resolution > 0.0))
            throw ValidationError("resolution", "must be > 0");
        if (n_beams < 1)
            throw ValidationError("n_beams", "must be >= 1");
        if (!(cycle_period > 0.0))
            throw ValidationError("cycle_period", "must be > 0");
        if (odom_drift < 0.0)
            throw ValidationError("odom_drift", "must be >= 0");
        if (range_noise < 0.0)
            throw ValidationError("range_noise", "must be >= 0");
        if (!(stuck_window > 0.0))
            throw ValidationError("stuck_window", "must be > 0");
        if (comm == CommModel::Radius && comm_radius < 0.0)
            throw ValidationError("comm_radius", "must be >= 0");
        if (max_cycles < 1)
            throw ValidationError("max_cycles", "must be >= 1");
        if (replan_interval < 1)
            throw ValidationError("replan_interval", "must be >= 1");
        if (!(coverage_goal > 0.0 && coverage_goal <= 1.0))
            throw ValidationError("coverage_goal", "must lie in (0, 1]");
        if (slam.submap_window < 1)
            throw ValidationError("slam.submap_window", "must be >= 1");
        if (!(slam.lambda >= 0.0))
            throw ValidationError("slam.lambda", "must be >= 0");
        if (slam.closure_noise.sigma_xy < 0.0)
            throw ValidationError("slam.sigma_xy", "must be >= 0");
        if (slam.closure_noise.sigma_theta < 0.0)
            throw ValidationError("slam.sigma_theta", "must be >= 0");
        if (!(slam.closure_noise.outlier_rate >= 0.0 && slam.closure_noise.outlier_rate <= 1.0))
            throw ValidationError("slam.outlier_rate", "must lie in [0, 1]");
        if (snapshot_every < 0)
            throw ValidationError("snapshot_every", "must be >= 0");
        params.validate();
    }
};

inline const char* to_string(StrategyKind s) { return s == StrategyKind::MwfCn ? "mwf_cn" : "mmpf"; }

/* Seed streams; every random consumer draws from its own derived stream */
namespace seed_stream {
inline constexpr std::uint64_t kNoise = 100;
inline constexpr std::uint64_t kOdometry = 200;
inline constexpr std::uint64_t kRange = 300;
inline constexpr std::uint64_t kClosures = 400;
inline constexpr std::uint64_t kPointNoise = 500;
} /* namespace seed_stream */

/* Everything one robot's planning run recorded for post-run mapping */
struct Trajectory
{
    std::vector<Pose2> truth;
    std::vector<Pose2> odometry;
    std::vector<Scan> scans;
};

struct RobotState
{
    int id = 0;
    Pose2 true_pose;
    Pose2 odom_pose;
    OccupancyGrid belief;
    std::optional<FrontierCluster> goal;
    ColoredNoiseGen noise_gen;
    std::vector<Cell> path;         /* remaining cells, front is the next step */
    int stuck_since = 0;            /* cycle at which the robot entered its current cell */
    bool stuck = false;
    std::vector<std::uint8_t> own_seen;   /* explorable cells this robot's scans observed */
    std::int64_t own_cells = 0;
    Trajectory trajectory;
    Rng odom_rng;
    Rng range_rng;
    Rng point_rng;
};

/* true iff the robot's cell has not changed for at least the stuck window */
inline bool detect_stuck(const RobotState& robot, int now, double stuck_window, double cycle_period)
{
    return static_cast<double>(now - robot.stuck_since) * cycle_period >= stuck_window - 1e-9;
}

struct DecisionRow
{
    int cycle = 0;
    int robot = 0;
    double noise = 0.0;
    CandidateEvaluation candidate;
    bool chosen = false;
};

struct TimingRow
{
    int cycle = 0;
    int robot = 0;
    std::int64_t plan_us = 0;
};

struct MappingResult
{
    double ssim_optimized = 0.0;
    double ssim_dead_reckoned = 0.0;
    std::size_t submaps = 0;
    std::size_t closures_scored = 0;
    std::size_t closures_accepted = 0;
    std::size_t pairs_gated = 0;
    double initial_objective = 0.0;
    double final_objective = 0.0;
    OccupancyGrid optimized_map;
    OccupancyGrid dead_reckoned_map;
};

struct SimResult
{
    EventLog log;
    RunMetrics metrics;
    std::string termination;          /* coverage / idle / max_cycles */
    std::vector<DecisionRow> decisions;
    std::vector<TimingRow> timing;
    OccupancyGrid final_map;          /* union of the belief maps */
    std::vector<Trajectory> trajectories;
    std::optional<MappingResult> mapping;
};

/* 8-connected Free component(s) of the ground truth containing the given cells */
inline std::vector<std::uint8_t> explorable_region(const OccupancyGrid& world, const std::vector<Cell>& seeds)
{
    std::vector<std::uint8_t> mask(world.size(), 0);
    std::vector<Cell> stack;
    for (const Cell& s : seeds) {
        if (world.is_free(s) && !mask[world.index(s)]) {
            mask[world.index(s)] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (const Cell& off : kNeighborOffsets) {
            const Cell n { c.x + off.x, c.y + off.y };
            if (world.is_free(n) && !mask[world.index(n)]) {
                mask[world.index(n)] = 1;
                stack.push_back(n);
            }
        }
    }
    return mask;
}

/* Cell-wise merge: known beats Unknown, Occupied beats Free */
inline void merge_into(OccupancyGrid& dst, const OccupancyGrid& src)
{
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const CellState s = src.at(i);
        if (s == CellState::Unknown)
            continue;
        const CellState d = dst.at(i);
        if (d == CellState::Unknown || s == CellState::Occupied)
            dst.set(i, s);
    }
}

/*
 * Synchronous multi-robot exploration. Each cycle runs sense, exchange,
 * noise draw, plan and move for all robots in id order; planning sees the
 * peer positions from the end of the previous cycle.
 */
class Simulator
{
public:
    Simulator(SimConfig config, OccupancyGrid world) :
        mConfig(std::move(config)), mWorld(std::move(world))
    {
        mConfig.validate();
        if (mWorld.count(CellState::Unknown) != 0)
            throw ValidationError("world", "ground truth must not contain Unknown cells");

        std::vector<Cell> start_cells;
        for (int r = 0; r < mConfig.n_robots; ++r) {
            const Pose2& s = mConfig.starts[static_cast<std::size_t>(r)];
            const Cell c = mWorld.world_to_cell(s);
            if (!mWorld.is_free(c))
                throw ValidationError("starts", "start pose of robot " + std::to_string(r)
                    + " is not in a free cell");
            start_cells.push_back(c);
        }
        mExplorable = explorable_region(mWorld, start_cells);
        mExplorableCells = static_cast<std::int64_t>(std::count(mExplorable.begin(), mExplorable.end(), 1));
        mUnionSeen.assign(mWorld.size(), 0);

        for (int r = 0; r < mConfig.n_robots; ++r) {
            const auto ur = static_cast<std::uint64_t>(r);
            /* start at the cell center so the true pose always names one cell */
            const Pose2 start = [&] {
                const Pose2 c = mWorld.cell_center(start_cells[static_cast<std::size_t>(r)]);
                return Pose2(c.x, c.y, mConfig.starts[static_cast<std::size_t>(r)].theta);
            }();
            mRobots.push_back(RobotState {
                r, start, start, OccupancyGrid::like(mWorld, CellState::Unknown), std::nullopt,
                ColoredNoiseGen(mConfig.params.alpha, mConfig.params.sigma_d,
                                derive_seed(mConfig.seed, seed_stream::kNoise + ur), mConfig.noise_window),
                {}, 0, false, std::vector<std::uint8_t>(mWorld.size(), 0), 0, {},
                Rng(derive_seed(mConfig.seed, seed_stream::kOdometry + ur)),
                Rng(derive_seed(mConfig.seed, seed_stream::kRange + ur)),
                Rng(derive_seed(mConfig.seed, seed_stream::kPointNoise + ur)) });
        }

        mResult.log.header.n_robots = mConfig.n_robots;
        mResult.log.header.resolution = mWorld.resolution();
        mResult.log.header.cycle_period = mConfig.cycle_period;
        mResult.log.header.explorable_cells = mExplorableCells;
        mResult.log.header.seed = mConfig.seed;
        mResult.log.header.strategy = to_string(mConfig.strategy);
    }

    const SimConfig& config() const { return mConfig; }
    const OccupancyGrid& world() const { return mWorld; }
    const std::vector<RobotState>& robots() const { return mRobots; }
    int cycle() const { return mCycle; }
    bool done() const { return mDone; }
    std::int64_t explorable_cells() const { return mExplorableCells; }
    std::int64_t covered_cells() const { return mUnionCells; }
    double coverage() const
    {
        return mExplorableCells > 0 ? static_cast<double>(mUnionCells) / mExplorableCells : 1.0;
    }
    const SimResult& partial_result() const { return mResult; }

    /* Union of all belief maps, Occupied winning conflicts */
    OccupancyGrid merged_belief() const
    {
        OccupancyGrid m = OccupancyGrid::like(mWorld, CellState::Unknown);
        for (const RobotState& r : mRobots)
            merge_into(m, r.belief);
        return m;
    }

    /* Advances one cycle; returns false once the run has terminated */
    bool step()
    {
        if (mDone)
            return false;
        ++mCycle;

        std::vector<Pose2> poses;
        for (const RobotState& r : mRobots)
            poses.push_back(r.true_pose);

        sense();
        exchange(poses);

        const bool replan_cycle = (mCycle - 1) % mConfig.replan_interval == 0;
        if (replan_cycle && mConfig.strategy == StrategyKind::MwfCn)
            for (RobotState& r : mRobots)
                r.noise_gen.next_sample();

        bool all_idle = true;
        for (RobotState& r : mRobots) {
            if (r.path.empty() || (replan_cycle && !(mConfig.goal_commitment && goal_open(r))))
                plan(r, poses);
            if (r.goal)
                all_idle = false;
        }

        for (RobotState& r : mRobots)
            move(r, poses);

        const double before = coverage_fraction(mPrevUnion);
        const double after = coverage();
        std::string event = "-";
        if (before < 0.90 && after >= 0.90)
            event = "coverage90";
        if (before < 0.99 && after >= 0.99)
            event = event == "-" ? "coverage99" : "coverage90+99";
        mPrevUnion = mUnionCells;

        std::int64_t sum_own = 0;
        for (const RobotState& r : mRobots)
            sum_own += r.own_cells;
        for (RobotState& r : mRobots) {
            r.stuck = detect_stuck(r, mCycle, mConfig.stuck_window, mConfig.cycle_period);
            EventRecord rec;
            rec.cycle = mCycle;
            rec.robot = r.id;
            rec.x = r.true_pose.x;
            rec.y = r.true_pose.y;
            rec.theta = r.true_pose.theta;
            if (r.goal) {
                rec.goal_x = r.goal->centroid.x;
                rec.goal_y = r.goal->centroid.y;
            }
            rec.coverage = after;
            rec.own_cells = r.own_cells;
            rec.union_cells = mUnionCells;
            rec.overlap_cells = sum_own - mUnionCells;
            rec.stuck = r.stuck;
            rec.event = event;
            mResult.log.records.push_back(rec);
        }

        if (after >= mConfig.coverage_goal) {
            finish("coverage");
        } else if (all_idle) {
            finish("idle");
        } else if (mCycle >= mConfig.max_cycles) {
            finish("max_cycles");
        }
        return !mDone;
    }

    using Observer = std::function<void(const Simulator&)>;

    SimResult run(const Observer& after_cycle = {})
    {
        while (step()) {
            if (after_cycle)
                after_cycle(*this);
        }
        if (after_cycle)
            after_cycle(*this);

        mResult.final_map = merged_belief();
        for (const RobotState& r : mRobots)
            mResult.trajectories.push_back(r.trajectory);
        mResult.metrics = metrics_from_log(mResult.log);
        if (mConfig.slam.enabled)
            mResult.mapping = evaluate_mapping();
        if (mResult.mapping)
            mResult.metrics.ssim = mResult.mapping->ssim_optimized;
        else
            mResult.metrics.ssim = map_ssim(mWorld, mResult.final_map);
        if (mResult.mapping)
            mResult.metrics.ssim_dead_reckoned = mResult.mapping->ssim_dead_reckoned;
        return std::move(mResult);
    }

    /*
     * Post-run mapping: submaps from odometry and scans, synthetic closures,
     * pose-graph optimization, then merged maps from optimized and from
     * dead-reckoned poses, both scored against the ground truth.
     */
    MappingResult evaluate_mapping() const
    {
        const SlamConfig& sc = mConfig.slam;
        std::vector<Submap> submaps;
        std::vector<std::vector<Pose2>> odometry;
        std::vector<std::vector<Pose2>> truth;
        for (const RobotState& r : mRobots) {
            const Trajectory& tr = r.trajectory;
            odometry.push_back(tr.odometry);
            truth.push_back(tr.truth);
            int index = 0;
            for (std::size_t t0 = 0; t0 < tr.scans.size(); t0 += static_cast<std::size_t>(sc.submap_window)) {
                std::vector<OdomScan> window;
                const std::size_t t1 = std::min(tr.scans.size(), t0 + static_cast<std::size_t>(sc.submap_window));
                for (std::size_t t = t0; t < t1; ++t)
                    window.push_back({ static_cast<int>(t), tr.odometry[t], tr.scans[t] });
                submaps.push_back(build_submap(r.id, index++, window, mWorld.resolution()));
            }
        }

        Rng rng(derive_seed(mConfig.seed, seed_stream::kClosures));
        const ClosureReport report = propose_and_score_closures(submaps, sc.lambda, truth,
                                                                sc.closure_noise, mWorld, rng);
        const PoseGraph graph = build_pose_graph(odometry, report.accepted);

        MappingResult out;
        out.submaps = submaps.size();
        out.closures_scored = report.scored.size();
        out.closures_accepted = report.accepted.size();
        out.pairs_gated = report.pairs_gated;
        out.initial_objective = graph_objective(graph, graph.vertices);

        std::map<PoseId, Pose2> estimates;
        if (sc.solver == SolverKind::Centralized) {
            SolverOptions opt;
            opt.gauge = GaugeMode::EachRobotStart;
            auto res = optimize_centralized(graph, opt);
            estimates = std::move(res.estimates);
        } else {
            DistributedOptions opt;
            opt.gauge = GaugeMode::EachRobotStart;
            auto res = optimize_distributed(graph, opt);
            estimates = std::move(res.estimates);
        }
        out.final_objective = graph_objective(graph, estimates);

        out.optimized_map = merge_global_map(estimates, submaps, mWorld);
        out.dead_reckoned_map = merge_global_map(graph.vertices, submaps, mWorld);
        out.ssim_optimized = map_ssim(mWorld, out.optimized_map);
        out.ssim_dead_reckoned = map_ssim(mWorld, out.dead_reckoned_map);
        return out;
    }

private:
    double coverage_fraction(std::int64_t cells) const
    {
        return mExplorableCells > 0 ? static_cast<double>(cells) / mExplorableCells : 1.0;
    }

    void finish(const char* why)
    {
        mDone = true;
        mResult.termination = why;
    }

    void sense()
    {
        for (RobotState& r : mRobots) {
            RangeNoise rn { mConfig.range_noise, &r.range_rng };
            const Scan scan = raycast_scan(mWorld, r.true_pose, mConfig.params.d_s, mConfig.n_beams, rn);
            const auto touched = integrate_scan(r.belief, r.true_pose, scan);
            for (const std::size_t idx : touched) {
                if (!mExplorable[idx] || r.belief.at(idx) != CellState::Free)
                    continue;
                if (!r.own_seen[idx]) {
                    r.own_seen[idx] = 1;
                    ++r.own_cells;
                }
                if (!mUnionSeen[idx]) {
                    mUnionSeen[idx] = 1;
                    ++mUnionCells;
                }
            }
            r.trajectory.truth.push_back(r.true_pose);
            r.trajectory.odometry.push_back(r.odom_pose);
            r.trajectory.scans.push_back(scan);
        }
    }

    bool in_comm(const Pose2& a, const Pose2& b) const
    {
        return mConfig.comm == CommModel::AlwaysOn || a.distance_to(b) <= mConfig.comm_radius;
    }

    void exchange(const std::vector<Pose2>& poses)
    {
        if (mRobots.size() < 2)
            return;
        if (mConfig.comm == CommModel::AlwaysOn) {
            OccupancyGrid shared = merged_belief();
            for (RobotState& r : mRobots)
                r.belief = shared;
            return;
        }
        std::vector<OccupancyGrid> snapshot;
        for (const RobotState& r : mRobots)
            snapshot.push_back(r.belief);
        for (std::size_t i = 0; i < mRobots.size(); ++i)
            for (std::size_t j = 0; j < mRobots.size(); ++j)
                if (i != j && in_comm(poses[i], poses[j]))
                    merge_into(mRobots[i].belief, snapshot[j]);
    }

    double noise_value(const RobotState& r) const
    {
        return mConfig.params.noise_term == NoiseTerm::Chi ? r.noise_gen.chi() : r.noise_gen.last_delta();
    }

    /* Goal still worth pursuing: some member of its cluster is a frontier */
    bool goal_open(const RobotState& r) const
    {
        if (!r.goal)
            return false;
        for (const Cell& c : r.goal->members)
            if (is_frontier(r.belief, c, mConfig.frontier_rule))
                return true;
        return false;
    }

    void plan(RobotState& r, const std::vector<Pose2>& poses)
    {
        const auto t0 = std::chrono::steady_clock::now();

        /* the planner sees itself plus the peers it can hear */
        std::vector<Pose2> visible;
        std::vector<double> noise;
        std::vector<int> ids;
        int self = 0;
        for (const RobotState& o : mRobots) {
            const auto oi = static_cast<std::size_t>(o.id);
            if (o.id != r.id && !in_comm(poses[static_cast<std::size_t>(r.id)], poses[oi]))
                continue;
            if (o.id == r.id)
                self = static_cast<int>(visible.size());
            visible.push_back(poses[oi]);
            noise.push_back(mConfig.strategy == StrategyKind::MwfCn ? noise_value(o) : 0.0);
            ids.push_back(o.id);
        }

        const auto clusters = cluster_frontiers(detect_frontiers(r.belief, mConfig.frontier_rule),
                                                mConfig.params.min_cluster_size);
        GoalDecision decision;
        if (mConfig.strategy == StrategyKind::MwfCn) {
            NoiseSampler sampler;
            if (mConfig.per_point_noise) {
                const double sd = std::sqrt(mConfig.params.sigma_d);
                sampler = [&](std::size_t n) { return noise[n] + r.point_rng.normal(0.0, sd); };
            }
            decision = select_goal(self, r.belief, clusters, visible, noise, mConfig.params, sampler);
        } else {
            decision = mmpf_select_goal(self, r.belief, clusters, visible, mConfig.params);
        }

        r.goal.reset();
        r.path.clear();
        if (decision.chosen) {
            const FrontierCluster& goal = clusters[*decision.chosen];
            const Cell here = r.belief.world_to_cell(r.true_pose);
            if (auto path = plan_path(r.belief, here, goal.centroid)) {
                r.goal = goal;
                r.path.assign(path->cells.begin() + 1, path->cells.end());
            }
        }

        const auto t1 = std::chrono::steady_clock::now();
        mResult.timing.push_back({ mCycle, r.id,
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() });

        if (mConfig.decision_log) {
            const double own_noise = mConfig.strategy == StrategyKind::MwfCn ? noise_value(r) : 0.0;
            for (std::size_t i = 0; i < decision.candidates.size(); ++i)
                mResult.decisions.push_back({ mCycle, r.id, own_noise, decision.candidates[i],
                                              decision.chosen && *decision.chosen == i });
        }
    }

    void move(RobotState& r, const std::vector<Pose2>& poses)
    {
        if (!r.goal) {
            update_stuck(r, r.true_pose);
            return;
        }

        std::optional<Cell> next;
        if (mConfig.navigation == NavigationMode::Steer) {
            std::vector<double> noise;
            for (const RobotState& o : mRobots)
                noise.push_back(mConfig.strategy == StrategyKind::MwfCn ? noise_value(o) : 0.0);
            const DistanceField goal_field = mwf_field(r.belief, r.goal->centroid);
            next = steer_step(r.id, r.belief, *r.goal, goal_field, poses, noise, mConfig.params);
        } else if (!r.path.empty()) {
            next = r.path.front();
        }

        const Pose2 before = r.true_pose;
        if (next && mWorld.is_free(*next)) {
            const Pose2 c = mWorld.cell_center(*next);
            const Pose2 after(c.x, c.y, std::atan2(c.y - before.y, c.x - before.x));
            r.true_pose = after;
            if (!r.path.empty() && r.path.front() == *next)
                r.path.erase(r.path.begin());

            Pose2 rel = before.between(after);
            if (mConfig.odom_drift > 0.0) {
                const double sd = mConfig.odom_drift * before.distance_to(after);
                rel = rel * Pose2(r.odom_rng.normal(0.0, sd), r.odom_rng.normal(0.0, sd),
                                  r.odom_rng.normal(0.0, sd));
            }
            r.odom_pose = r.odom_pose * rel;
        } else if (next) {
            /* belief said free, the world disagrees: record the obstacle and replan */
            r.belief.set(*next, CellState::Occupied);
            r.path.clear();
        }

        if (r.goal && r.belief.world_to_cell(r.true_pose) == r.goal->centroid)
            r.path.clear();
        update_stuck(r, before);
    }

    void update_stuck(RobotState& r, const Pose2& before)
    {
        if (mWorld.world_to_cell(before) != mWorld.world_to_cell(r.true_pose))
            r.stuck_since = mCycle;
    }

    SimConfig mConfig;
    OccupancyGrid mWorld;
    std::vector<std::uint8_t> mExplorable;
    std::int64_t mExplorableCells = 0;
    std::vector<std::uint8_t> mUnionSeen;
    std::int64_t mUnionCells = 0;
    std::int64_t mPrevUnion = 0;
    std::vector<RobotState> mRobots;
    int mCycle = 0;
    bool mDone = false;
    SimResult mResult;
};

} /* namespace dmpf */

#endif /* DMPF_SIM_HPP */
