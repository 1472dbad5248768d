/* pose_graph.hpp */

#ifndef DMPF_POSE_GRAPH_HPP
#define DMPF_POSE_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "dmpf/errors.hpp"
#include "dmpf/geometry.hpp"

namespace dmpf {

/* Vertex key: robot index and time (cycle) index */
struct PoseId
{
    int robot = 0;
    int time = 0;

    constexpr auto operator<=>(const PoseId&) const = default;
};

inline std::string to_string(const PoseId& id)
{
    return "(" + std::to_string(id.robot) + "," + std::to_string(id.time) + ")";
}

struct OdometryEdge
{
    int robot = 0;
    int t_from = 0;
    int t_to = 0;
    Pose2 rel;   /* x_i^{t-1,t}: dR as rel.theta, dp as (rel.x, rel.y) */
};

enum class ClosureKind { Intra, Inter };

inline const char* to_string(ClosureKind k) { return k == ClosureKind::Intra ? "intra" : "inter"; }

struct SubmapRef
{
    int robot = 0;
    int index = 0;

    constexpr auto operator<=>(const SubmapRef&) const = default;
};

/* Loop closures strictly above this confidence are accepted */
inline constexpr double kClosureConfidenceThreshold = 0.5;

inline bool closure_accepted(double confidence) { return confidence > kClosureConfidenceThreshold; }

/*
 * Relative-pose constraint between two submaps, bound to the vertices at
 * the submaps' anchor times.
 */
struct LoopClosure
{
    SubmapRef from;
    SubmapRef to;
    PoseId from_vertex;
    PoseId to_vertex;
    Pose2 rel;                 /* pose of `to` expressed in the frame of `from` */
    double confidence = 0.0;
    ClosureKind kind = ClosureKind::Intra;
};

inline ClosureKind closure_kind(int robot_from, int robot_to)
{
    return robot_from == robot_to ? ClosureKind::Intra : ClosureKind::Inter;
}

struct PoseGraph
{
    std::map<PoseId, Pose2> vertices;
    std::vector<OdometryEdge> odom_edges;
    std::vector<LoopClosure> loop_edges;

    std::set<int> robots() const
    {
        std::set<int> r;
        for (const auto& [id, pose] : vertices)
            r.insert(id.robot);
        return r;
    }

    void check_integrity() const
    {
        auto need = [&](const PoseId& id, const char* what) {
            if (!vertices.contains(id))
                throw IntegrityError(std::string(what) + " references missing vertex " + to_string(id));
        };
        for (const auto& e : odom_edges) {
            need({ e.robot, e.t_from }, "odometry edge");
            need({ e.robot, e.t_to }, "odometry edge");
        }
        for (const auto& l : loop_edges) {
            need(l.from_vertex, "loop closure");
            need(l.to_vertex, "loop closure");
        }
    }
};

/*
 * Builds the graph from per-robot odometry chains (odometry[r][t] is the
 * odometry reading of robot r at time t) and a list of scored closures.
 * Vertices are initialized by composing the relative odometry from each
 * robot's first reading; closures at or below the confidence threshold are
 * dropped.
 */
inline PoseGraph build_pose_graph(const std::vector<std::vector<Pose2>>& odometry,
                                  const std::vector<LoopClosure>& closures)
{
    PoseGraph graph;
    for (std::size_t r = 0; r < odometry.size(); ++r) {
        const auto& chain = odometry[r];
        if (chain.empty())
            throw ValidationError("odometry", "robot " + std::to_string(r) + " has an empty chain");
        const int robot = static_cast<int>(r);
        Pose2 estimate = chain.front();
        graph.vertices[{ robot, 0 }] = estimate;
        for (std::size_t t = 1; t < chain.size(); ++t) {
            const Pose2 rel = chain[t - 1].between(chain[t]);
            estimate = estimate * rel;
            graph.vertices[{ robot, static_cast<int>(t) }] = estimate;
            graph.odom_edges.push_back({ robot, static_cast<int>(t) - 1, static_cast<int>(t), rel });
        }
    }
    for (const LoopClosure& c : closures) {
        if (!closure_accepted(c.confidence))
            continue;
        if (!graph.vertices.contains(c.from_vertex) || !graph.vertices.contains(c.to_vertex))
            throw IntegrityError("loop closure " + to_string(c.from_vertex) + " -> "
                + to_string(c.to_vertex) + " references a missing vertex");
        graph.loop_edges.push_back(c);
    }
    return graph;
}

enum class GaugeMode
{
    FirstPose,        /* anchor the first pose of the lowest robot; disconnection is an error */
    EachComponent,    /* anchor the first pose of every connected component */
    EachRobotStart    /* anchor every robot's first pose (known initial poses) */
};

struct SolverOptions
{
    int max_iterations = 100;
    double tolerance = 1e-10;       /* on the infinity norm of the update */
    GaugeMode gauge = GaugeMode::FirstPose;
};

struct OptimizationResult
{
    std::map<PoseId, Pose2> estimates;
    std::vector<double> residual_trace;   /* cost before the first and after every iteration */
    double final_residual = 0.0;
    int iterations = 0;
};

namespace detail {

/* Edge in index form used by the solver */
struct IndexedEdge
{
    std::size_t a = 0;
    std::size_t b = 0;
    Pose2 rel;
};

struct IndexedGraph
{
    std::vector<PoseId> ids;
    std::map<PoseId, std::size_t> index;
    std::vector<IndexedEdge> edges;
};

inline IndexedGraph index_graph(const PoseGraph& graph)
{
    graph.check_integrity();
    IndexedGraph g;
    for (const auto& [id, pose] : graph.vertices) {
        g.index[id] = g.ids.size();
        g.ids.push_back(id);
    }
    for (const auto& e : graph.odom_edges)
        g.edges.push_back({ g.index.at({ e.robot, e.t_from }), g.index.at({ e.robot, e.t_to }), e.rel });
    for (const auto& l : graph.loop_edges)
        g.edges.push_back({ g.index.at(l.from_vertex), g.index.at(l.to_vertex), l.rel });
    return g;
}

/*
 * Residual of one relative constraint, with rotations compared as 2x2
 * matrices (chordal distance):
 *   r = [vec(R_b - R_a dR); p_b - p_a - R_a dp]
 */
struct EdgeLinearization
{
    double r[6];
    double ja[6][3];
    double jb[6][3];
};

inline double edge_cost(const Pose2& a, const Pose2& b, const Pose2& rel)
{
    const double phi = a.theta + rel.theta;
    const double cb = std::cos(b.theta);
    const double sb = std::sin(b.theta);
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const double ca = std::cos(a.theta);
    const double sa = std::sin(a.theta);
    const double dc = cb - cp;
    const double ds = sb - sp;
    const double tx = b.x - a.x - (ca * rel.x - sa * rel.y);
    const double ty = b.y - a.y - (sa * rel.x + ca * rel.y);
    return 2.0 * (dc * dc + ds * ds) + tx * tx + ty * ty;
}

inline EdgeLinearization linearize_edge(const Pose2& a, const Pose2& b, const Pose2& rel)
{
    EdgeLinearization lin {};
    const double phi = a.theta + rel.theta;
    const double cb = std::cos(b.theta);
    const double sb = std::sin(b.theta);
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const double ca = std::cos(a.theta);
    const double sa = std::sin(a.theta);

    /* column-major vec of the 2x2 rotation difference */
    lin.r[0] = cb - cp;
    lin.r[1] = sb - sp;
    lin.r[2] = -sb + sp;
    lin.r[3] = cb - cp;
    lin.r[4] = b.x - a.x - (ca * rel.x - sa * rel.y);
    lin.r[5] = b.y - a.y - (sa * rel.x + ca * rel.y);

    lin.jb[0][2] = -sb;
    lin.jb[1][2] = cb;
    lin.jb[2][2] = -cb;
    lin.jb[3][2] = -sb;
    lin.ja[0][2] = sp;
    lin.ja[1][2] = -cp;
    lin.ja[2][2] = cp;
    lin.ja[3][2] = sp;

    lin.jb[4][0] = 1.0;
    lin.jb[5][1] = 1.0;
    lin.ja[4][0] = -1.0;
    lin.ja[5][1] = -1.0;
    lin.ja[4][2] = sa * rel.x + ca * rel.y;
    lin.ja[5][2] = -ca * rel.x + sa * rel.y;
    return lin;
}

inline double total_cost(const std::vector<Pose2>& x, const std::vector<IndexedEdge>& edges)
{
    double cost = 0.0;
    for (const auto& e : edges)
        cost += edge_cost(x[e.a], x[e.b], e.rel);
    return cost;
}

/* Union-find component labels over vertices linked by edges */
inline std::vector<std::size_t> components(std::size_t n, const std::vector<IndexedEdge>& edges)
{
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t { 0 });
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& e : edges) {
        const std::size_t ra = find(e.a);
        const std::size_t rb = find(e.b);
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<std::size_t> label(n);
    for (std::size_t v = 0; v < n; ++v)
        label[v] = find(v);
    return label;
}

/* Marks anchored vertices according to the gauge mode */
inline std::vector<bool> gauge_anchors(const IndexedGraph& g, GaugeMode mode)
{
    std::vector<bool> fixed(g.ids.size(), false);
    if (g.ids.empty())
        return fixed;

    if (mode == GaugeMode::EachRobotStart) {
        int last_robot = -1;
        for (std::size_t i = 0; i < g.ids.size(); ++i) {
            if (g.ids[i].robot != last_robot) {
                fixed[i] = true;
                last_robot = g.ids[i].robot;
            }
        }
    } else {
        /* ids are sorted, so the component root (smallest index) is its first pose */
        const auto label = components(g.ids.size(), g.edges);
        if (mode == GaugeMode::FirstPose) {
            fixed[0] = true;
            std::map<std::size_t, std::vector<PoseId>> loose;
            for (std::size_t v = 0; v < label.size(); ++v)
                if (label[v] != label[0])
                    loose[label[v]].push_back(g.ids[v]);
            if (!loose.empty()) {
                const auto& [root, members] = *loose.begin();
                std::set<int> robots;
                for (const auto& id : members)
                    robots.insert(id.robot);
                std::string names;
                for (int r : robots)
                    names += (names.empty() ? "" : ",") + std::to_string(r);
                throw RankDeficiencyError("pose graph is not connected to the anchor "
                    + to_string(g.ids[0]) + ": component rooted at " + to_string(g.ids[root])
                    + " (" + std::to_string(members.size()) + " vertices, robots {" + names
                    + "}) has no gauge reference");
            }
        } else {
            for (std::size_t v = 0; v < label.size(); ++v)
                if (label[v] == v)
                    fixed[v] = true;
        }
    }
    return fixed;
}

/*
 * Damped Gauss-Newton over the non-fixed vertices, using only `edges`.
 * A step is halved until the cost does not increase, so the recorded trace
 * is non-increasing. Stops when the infinity norm of the accepted update is
 * below tolerance, when no non-increasing step exists, or at max_iterations.
 */
inline OptimizationResult gauss_newton(std::vector<Pose2>& x, const std::vector<bool>& fixed,
                                       const std::vector<IndexedEdge>& edges, const IndexedGraph& g,
                                       const SolverOptions& options)
{
    OptimizationResult result;

    std::vector<std::ptrdiff_t> column(x.size(), -1);
    std::ptrdiff_t n_free = 0;
    for (std::size_t v = 0; v < x.size(); ++v)
        if (!fixed[v])
            column[v] = n_free++;

    double cost = total_cost(x, edges);
    result.residual_trace.push_back(cost);

    if (n_free == 0) {
        result.final_residual = cost;
        return result;
    }

    const Eigen::Index dim = 3 * n_free;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        std::vector<Eigen::Triplet<double>> triplets;
        triplets.reserve(edges.size() * 36);
        Eigen::VectorXd gradient = Eigen::VectorXd::Zero(dim);

        for (const auto& e : edges) {
            const auto lin = linearize_edge(x[e.a], x[e.b], e.rel);
            const std::ptrdiff_t ca = column[e.a];
            const std::ptrdiff_t cb = column[e.b];
            if (ca < 0 && cb < 0)
                continue;
            const double (*jacs[2])[3] = { lin.ja, lin.jb };
            const std::ptrdiff_t cols[2] = { ca, cb };
            for (int s = 0; s < 2; ++s) {
                if (cols[s] < 0)
                    continue;
                for (int i = 0; i < 3; ++i) {
                    double gi = 0.0;
                    for (int k = 0; k < 6; ++k)
                        gi += jacs[s][k][i] * lin.r[k];
                    gradient[3 * cols[s] + i] += gi;
                }
                for (int t = 0; t < 2; ++t) {
                    if (cols[t] < 0)
                        continue;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) {
                            double h = 0.0;
                            for (int k = 0; k < 6; ++k)
                                h += jacs[s][k][i] * jacs[t][k][j];
                            if (h != 0.0)
                                triplets.emplace_back(3 * cols[s] + i, 3 * cols[t] + j, h);
                        }
                }
            }
        }

        Eigen::SparseMatrix<double> hessian(dim, dim);
        hessian.setFromTriplets(triplets.begin(), triplets.end());
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(hessian);
        if (solver.info() != Eigen::Success)
            throw RankDeficiencyError("normal equations are singular");
        const Eigen::VectorXd step = solver.solve(-gradient);
        if (solver.info() != Eigen::Success || !step.allFinite())
            throw RankDeficiencyError("normal equations are singular");
        for (Eigen::Index i = 0; i < solver.vectorD().size(); ++i) {
            if (std::abs(solver.vectorD()[i]) > 1e-12)
                continue;
            /* D is in fill-reducing order; map back to the original column */
            std::string vertex = "?";
            for (std::size_t v = 0; v < column.size(); ++v)
                if (column[v] == solver.permutationPinv().indices()[i] / 3)
                    vertex = to_string(g.ids[v]);
            throw RankDeficiencyError("normal equations are rank deficient near vertex " + vertex);
        }

        double scale = 1.0;
        std::vector<Pose2> trial(x);
        double trial_cost = cost;
        bool accepted = false;
        for (int halving = 0; halving < 40; ++halving) {
            for (std::size_t v = 0; v < x.size(); ++v) {
                if (column[v] < 0)
                    continue;
                const auto c = column[v];
                trial[v] = Pose2(x[v].x + scale * step[3 * c],
                                 x[v].y + scale * step[3 * c + 1],
                                 x[v].theta + scale * step[3 * c + 2]);
            }
            trial_cost = total_cost(trial, edges);
            if (trial_cost <= cost) {
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if (!accepted)
            break;

        x.swap(trial);
        cost = trial_cost;
        result.residual_trace.push_back(cost);
        result.iterations = iter + 1;
        if (scale * step.lpNorm<Eigen::Infinity>() < options.tolerance)
            break;
    }
    result.final_residual = cost;
    return result;
}

} /* namespace detail */

/* Value of the summed squared residual for a set of vertex estimates */
inline double graph_objective(const PoseGraph& graph, const std::map<PoseId, Pose2>& estimates)
{
    double cost = 0.0;
    for (const auto& e : graph.odom_edges)
        cost += detail::edge_cost(estimates.at({ e.robot, e.t_from }), estimates.at({ e.robot, e.t_to }), e.rel);
    for (const auto& l : graph.loop_edges)
        cost += detail::edge_cost(estimates.at(l.from_vertex), estimates.at(l.to_vertex), l.rel);
    return cost;
}

/*
 * Centralized minimization of the summed odometry and loop-closure
 * residuals over all vertices by Gauss-Newton, starting from the graph's
 * current vertex values.
 */
inline OptimizationResult optimize_centralized(const PoseGraph& graph, const SolverOptions& options = {})
{
    const auto g = detail::index_graph(graph);
    const auto fixed = detail::gauge_anchors(g, options.gauge);

    std::vector<Pose2> x;
    x.reserve(g.ids.size());
    for (const auto& id : g.ids)
        x.push_back(graph.vertices.at(id));

    auto result = detail::gauss_newton(x, fixed, g.edges, g, options);
    for (std::size_t v = 0; v < g.ids.size(); ++v)
        result.estimates[g.ids[v]] = x[v];
    return result;
}

struct DistributedOptions
{
    int max_rounds = 1000;
    int inner_iterations = 20;
    bool momentum = true;        /* extrapolate between rounds, kept only when the objective drops */
    double tolerance = 1e-10;    /* relative round-over-round objective improvement */
    GaugeMode gauge = GaugeMode::EachComponent;
};

struct DistributedResult
{
    std::map<PoseId, Pose2> estimates;
    std::vector<double> objective_trace;   /* initial objective, then one value per round */
    int rounds = 0;
    int messages = 0;                      /* separator-pose messages sent */
};

/*
 * Block-coordinate descent: each robot owns its poses and minimizes the
 * residual terms that touch them while holding the separator poses it last
 * received from neighbors fixed. Robots update in id order within a round
 * and publish their separator poses to their neighbors after each update.
 */
inline DistributedResult optimize_distributed(const PoseGraph& graph,
                                              const DistributedOptions& options = {})
{
    const auto g = detail::index_graph(graph);
    const auto anchors = detail::gauge_anchors(g, options.gauge);
    const std::size_t n = g.ids.size();

    std::vector<int> owner(n);
    std::set<int> robots;
    for (std::size_t v = 0; v < n; ++v) {
        owner[v] = g.ids[v].robot;
        robots.insert(owner[v]);
    }

    /* per-robot view of every vertex: own poses plus last received separators */
    std::map<int, std::vector<Pose2>> view;
    std::vector<Pose2> initial;
    for (const auto& id : g.ids)
        initial.push_back(graph.vertices.at(id));
    for (int r : robots)
        view[r] = initial;

    std::map<int, std::vector<detail::IndexedEdge>> block_edges;
    /* separator vertices of robot r that some neighbor s needs: sends[r][s] */
    std::map<int, std::map<int, std::set<std::size_t>>> sends;
    for (const auto& e : g.edges) {
        const int ra = owner[e.a];
        const int rb = owner[e.b];
        block_edges[ra].push_back(e);
        if (rb != ra) {
            block_edges[rb].push_back(e);
            sends[ra][rb].insert(e.a);
            sends[rb][ra].insert(e.b);
        }
    }

    auto assemble = [&]() {
        std::vector<Pose2> x(n);
        for (std::size_t v = 0; v < n; ++v)
            x[v] = view[owner[v]][v];
        return x;
    };

    DistributedResult result;
    double objective = detail::total_cost(assemble(), g.edges);
    result.objective_trace.push_back(objective);

    SolverOptions inner;
    inner.max_iterations = options.inner_iterations;
    inner.tolerance = 1e-12;

    std::vector<Pose2> x_prev = initial;
    double t_k = 1.0;
    for (int round = 0; round < options.max_rounds; ++round) {
        for (int r : robots) {
            std::vector<bool> fixed(n, true);
            for (std::size_t v = 0; v < n; ++v)
                if (owner[v] == r && !anchors[v])
                    fixed[v] = false;
            detail::gauss_newton(view[r], fixed, block_edges[r], g, inner);

            for (const auto& [neighbor, verts] : sends[r]) {
                for (const std::size_t v : verts)
                    view[neighbor][v] = view[r][v];
                ++result.messages;
            }
        }

        auto x_next = assemble();
        double next = detail::total_cost(x_next, g.edges);
        if (options.momentum) {
            /* Nesterov-style extrapolation of every robot's own poses, restarted when it does not pay */
            const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_k * t_k));
            const double beta = (t_k - 1.0) / t_next;
            std::vector<Pose2> y = x_next;
            for (std::size_t v = 0; v < n; ++v)
                if (!anchors[v])
                    y[v] = Pose2(x_next[v].x + beta * (x_next[v].x - x_prev[v].x),
                                 x_next[v].y + beta * (x_next[v].y - x_prev[v].y),
                                 x_next[v].theta + beta * normalize_angle(x_next[v].theta - x_prev[v].theta));
            const double cy = detail::total_cost(y, g.edges);
            x_prev = x_next;
            if (cy <= next) {
                next = cy;
                t_k = t_next;
                for (int r : robots)
                    view[r] = y;
            } else {
                t_k = 1.0;
            }
        }
        result.objective_trace.push_back(next);
        result.rounds = round + 1;
        const double improvement = objective - next;
        objective = next;
        if (improvement <= options.tolerance * std::max(objective, 1e-300))
            break;
    }

    const auto x = assemble();
    for (std::size_t v = 0; v < n; ++v)
        result.estimates[g.ids[v]] = x[v];
    return result;
}

/*
 * Plain-text graph exchange using VERTEX_SE2 / EDGE_SE2 records. Vertex ids
 * encode (robot, time) as robot * kG2oRobotStride + time; information
 * matrices are written as identity (the residual is unweighted).
 */
inline constexpr int kG2oRobotStride = 1000000;

inline int g2o_vertex_id(const PoseId& id) { return id.robot * kG2oRobotStride + id.time; }

inline PoseId g2o_pose_id(long long v)
{
    return { static_cast<int>(v / kG2oRobotStride), static_cast<int>(v % kG2oRobotStride) };
}

inline void write_g2o(const PoseGraph& graph, std::ostream& out)
{
    out.precision(17);
    for (const auto& [id, p] : graph.vertices)
        out << "VERTEX_SE2 " << g2o_vertex_id(id) << " " << p.x << " " << p.y << " " << p.theta << "\n";
    auto edge = [&](const PoseId& a, const PoseId& b, const Pose2& rel) {
        out << "EDGE_SE2 " << g2o_vertex_id(a) << " " << g2o_vertex_id(b) << " " << rel.x << " "
            << rel.y << " " << rel.theta << " 1 0 0 1 0 1\n";
    };
    for (const auto& e : graph.odom_edges)
        edge({ e.robot, e.t_from }, { e.robot, e.t_to }, e.rel);
    for (const auto& l : graph.loop_edges)
        edge(l.from_vertex, l.to_vertex, l.rel);
}

/*
 * Reads VERTEX_SE2 / EDGE_SE2 records. An edge between consecutive times
 * of one robot becomes an odometry edge; any other edge becomes a loop
 * closure with confidence 1 bound to the vertices it names.
 */
inline PoseGraph read_g2o(std::istream& in)
{
    PoseGraph graph;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "VERTEX_SE2") {
            long long id = 0;
            double x = 0, y = 0, th = 0;
            if (!(ls >> id >> x >> y >> th))
                throw ParseError("line " + std::to_string(line_no) + ": malformed VERTEX_SE2");
            graph.vertices[g2o_pose_id(id)] = Pose2(x, y, th);
        } else if (tag == "EDGE_SE2") {
            long long a = 0, b = 0;
            double x = 0, y = 0, th = 0;
            if (!(ls >> a >> b >> x >> y >> th))
                throw ParseError("line " + std::to_string(line_no) + ": malformed EDGE_SE2");
            const PoseId ia = g2o_pose_id(a);
            const PoseId ib = g2o_pose_id(b);
            const Pose2 rel(x, y, th);
            if (ia.robot == ib.robot && ib.time == ia.time + 1) {
                graph.odom_edges.push_back({ ia.robot, ia.time, ib.time, rel });
            } else {
                LoopClosure c;
                c.from = { ia.robot, ia.time };
                c.to = { ib.robot, ib.time };
                c.from_vertex = ia;
                c.to_vertex = ib;
                c.rel = rel;
                c.confidence = 1.0;
                c.kind = closure_kind(ia.robot, ib.robot);
                graph.loop_edges.push_back(c);
            }
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unsupported record '" + tag + "'");
        }
    }
    graph.check_integrity();
    return graph;
}

} /* namespace dmpf */

#endif /* DMPF_POSE_GRAPH_HPP */
