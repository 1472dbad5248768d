/* scenario.hpp */

#ifndef DMPF_SCENARIO_HPP
#define DMPF_SCENARIO_HPP

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/metrics.hpp"
#include "dmpf/sim.hpp"

namespace dmpf {

/*
 * A scenario file is `key = value` lines; `#` starts a comment. Unknown
 * keys are rejected. A relative world path is resolved against the
 * directory of the scenario file.
 */
struct Scenario
{
    SimConfig sim;
    OverlapForm overlap_form = OverlapForm::InclusionExclusion;
    std::string output_dir;
};

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/* shortest text that parses back to the same double */
inline std::string fmt_g(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline double parse_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return d;
    } catch (const std::logic_error&) {
        throw ValidationError(key, "expected a number, got '" + v + "'");
    }
}

inline long long parse_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const long long i = std::stoll(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return i;
    } catch (const std::logic_error&) {
        throw ValidationError(key, "expected an integer, got '" + v + "'");
    }
}

inline unsigned long long parse_uint(const std::string& key, const std::string& v)
{
    if (!v.empty() && v[0] == '-')
        throw ValidationError(key, "expected a non-negative integer, got '" + v + "'");
    try {
        std::size_t used = 0;
        const unsigned long long i = std::stoull(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return i;
    } catch (const std::logic_error&) {
        throw ValidationError(key, "expected a non-negative integer, got '" + v + "'");
    }
}

inline bool parse_bool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "on" || v == "1")
        return true;
    if (v == "false" || v == "off" || v == "0")
        return false;
    throw ValidationError(key, "expected true/false, got '" + v + "'");
}

template <typename E>
E parse_enum(const std::string& key, const std::string& v,
             const std::vector<std::pair<const char*, E>>& options)
{
    std::string names;
    for (const auto& [name, value] : options) {
        if (v == name)
            return value;
        names += names.empty() ? name : std::string("|") + name;
    }
    throw ValidationError(key, "expected one of " + names + ", got '" + v + "'");
}

template <typename E>
const char* enum_name(E v, const std::vector<std::pair<const char*, E>>& options)
{
    for (const auto& [name, value] : options)
        if (v == value)
            return name;
    return "?";
}

inline const std::vector<std::pair<const char*, StrategyKind>> kStrategyNames {
    { "mwf_cn", StrategyKind::MwfCn }, { "mmpf", StrategyKind::Mmpf } };
inline const std::vector<std::pair<const char*, RepulsionSign>> kRepulsionNames {
    { "literal", RepulsionSign::Literal }, { "inverted", RepulsionSign::Inverted } };
inline const std::vector<std::pair<const char*, AttractiveForm>> kAttractiveNames {
    { "size", AttractiveForm::Size }, { "size_squared", AttractiveForm::SizeSquared } };
inline const std::vector<std::pair<const char*, NoiseTerm>> kNoiseTermNames {
    { "chi", NoiseTerm::Chi }, { "delta_chi", NoiseTerm::DeltaChi } };
inline const std::vector<std::pair<const char*, RepulsionPoint>> kRepulsionPointNames {
    { "centroid", RepulsionPoint::Centroid }, { "robot_cell", RepulsionPoint::RobotCell } };
inline const std::vector<std::pair<const char*, CommModel>> kCommNames {
    { "always_on", CommModel::AlwaysOn }, { "radius", CommModel::Radius } };
inline const std::vector<std::pair<const char*, NavigationMode>> kNavigationNames {
    { "astar", NavigationMode::AStar }, { "steer", NavigationMode::Steer } };
inline const std::vector<std::pair<const char*, FrontierRule>> kFrontierRuleNames {
    { "strict", FrontierRule::Strict }, { "accessible", FrontierRule::Accessible } };
inline const std::vector<std::pair<const char*, SolverKind>> kSolverNames {
    { "centralized", SolverKind::Centralized }, { "distributed", SolverKind::Distributed } };
inline const std::vector<std::pair<const char*, OverlapForm>> kOverlapNames {
    { "inclusion_exclusion", OverlapForm::InclusionExclusion }, { "literal", OverlapForm::Literal } };

/* "x,y[,theta];x,y[,theta]" */
inline std::vector<Pose2> parse_starts(const std::string& key, const std::string& v)
{
    std::vector<Pose2> out;
    if (v.empty())
        return out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        std::vector<double> xs;
        std::stringstream is(item);
        std::string num;
        while (std::getline(is, num, ','))
            xs.push_back(parse_double(key, trim(num)));
        if (xs.size() != 2 && xs.size() != 3)
            throw ValidationError(key, "each start needs x,y or x,y,theta; got '" + item + "'");
        out.emplace_back(xs[0], xs[1], xs.size() == 3 ? xs[2] : 0.0);
    }
    return out;
}

inline std::string format_starts(const std::vector<Pose2>& starts)
{
    std::string s;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (i)
            s += ';';
        s += fmt_g(starts[i].x) + ',' + fmt_g(starts[i].y) + ',' + fmt_g(starts[i].theta);
    }
    return s;
}

/* Key table: setter and printer for every recognized key */
struct KeyDef
{
    const char* key;
    std::function<void(Scenario&, const std::string&)> set;
    std::function<std::string(const Scenario&)> get;
};

inline const std::vector<KeyDef>& key_table()
{
    static const std::vector<KeyDef> table = [] {
        std::vector<KeyDef> t;
        auto dbl = [&t](const char* k, auto member) {
            t.push_back({ k,
                [k, member](Scenario& s, const std::string& v) { member(s) = parse_double(k, v); },
                [member](const Scenario& s) { Scenario c = s; return fmt_g(member(c)); } });
        };
        auto integer = [&t](const char* k, auto member) {
            t.push_back({ k,
                [k, member](Scenario& s, const std::string& v) {
                    member(s) = static_cast<std::remove_reference_t<decltype(member(s))>>(parse_int(k, v));
                },
                [member](const Scenario& s) { Scenario c = s; return std::to_string(member(c)); } });
        };
        auto boolean = [&t](const char* k, auto member) {
            t.push_back({ k,
                [k, member](Scenario& s, const std::string& v) { member(s) = parse_bool(k, v); },
                [member](const Scenario& s) {
                    Scenario c = s;
                    return std::string(member(c) ? "true" : "false");
                } });
        };
        auto enumerated = [&t](const char* k, auto member, const auto& names) {
            t.push_back({ k,
                [k, member, &names](Scenario& s, const std::string& v) { member(s) = parse_enum(k, v, names); },
                [member, &names](const Scenario& s) {
                    Scenario c = s;
                    return std::string(enum_name(member(c), names));
                } });
        };

        t.push_back({ "world",
            [](Scenario& s, const std::string& v) { s.sim.world_path = v; },
            [](const Scenario& s) { return s.sim.world_path; } });
        dbl("resolution", [](Scenario& s) -> double& { return s.sim.resolution; });
        integer("n_robots", [](Scenario& s) -> int& { return s.sim.n_robots; });
        t.push_back({ "starts",
            [](Scenario& s, const std::string& v) { s.sim.starts = parse_starts("starts", v); },
            [](const Scenario& s) { return format_starts(s.sim.starts); } });
        integer("n_beams", [](Scenario& s) -> int& { return s.sim.n_beams; });
        dbl("cycle_period", [](Scenario& s) -> double& { return s.sim.cycle_period; });
        dbl("odom_drift", [](Scenario& s) -> double& { return s.sim.odom_drift; });
        dbl("range_noise", [](Scenario& s) -> double& { return s.sim.range_noise; });
        enumerated("strategy", [](Scenario& s) -> StrategyKind& { return s.sim.strategy; }, kStrategyNames);
        dbl("k_a", [](Scenario& s) -> double& { return s.sim.params.k_a; });
        dbl("k_r", [](Scenario& s) -> double& { return s.sim.params.k_r; });
        dbl("sigma_r", [](Scenario& s) -> double& { return s.sim.params.sigma_r; });
        dbl("d_s", [](Scenario& s) -> double& { return s.sim.params.d_s; });
        dbl("alpha", [](Scenario& s) -> double& { return s.sim.params.alpha; });
        dbl("sigma_d", [](Scenario& s) -> double& { return s.sim.params.sigma_d; });
        enumerated("repulsion_sign", [](Scenario& s) -> RepulsionSign& { return s.sim.params.repulsion_sign; },
                   kRepulsionNames);
        enumerated("attractive_form", [](Scenario& s) -> AttractiveForm& { return s.sim.params.attractive_form; },
                   kAttractiveNames);
        enumerated("noise_term", [](Scenario& s) -> NoiseTerm& { return s.sim.params.noise_term; },
                   kNoiseTermNames);
        enumerated("repulsion_point", [](Scenario& s) -> RepulsionPoint& { return s.sim.params.repulsion_point; },
                   kRepulsionPointNames);
        integer("min_cluster_size", [](Scenario& s) -> int& { return s.sim.params.min_cluster_size; });
        dbl("stuck_window", [](Scenario& s) -> double& { return s.sim.stuck_window; });
        enumerated("comm", [](Scenario& s) -> CommModel& { return s.sim.comm; }, kCommNames);
        dbl("comm_radius", [](Scenario& s) -> double& { return s.sim.comm_radius; });
        t.push_back({ "seed",
            [](Scenario& s, const std::string& v) { s.sim.seed = parse_uint("seed", v); },
            [](const Scenario& s) { return std::to_string(s.sim.seed); } });
        integer("max_cycles", [](Scenario& s) -> int& { return s.sim.max_cycles; });
        integer("replan_interval", [](Scenario& s) -> int& { return s.sim.replan_interval; });
        boolean("goal_commitment", [](Scenario& s) -> bool& { return s.sim.goal_commitment; });
        enumerated("navigation", [](Scenario& s) -> NavigationMode& { return s.sim.navigation; },
                   kNavigationNames);
        boolean("per_point_noise", [](Scenario& s) -> bool& { return s.sim.per_point_noise; });
        t.push_back({ "noise_window",
            [](Scenario& s, const std::string& v) { s.sim.noise_window = parse_uint("noise_window", v); },
            [](const Scenario& s) { return std::to_string(s.sim.noise_window); } });
        enumerated("frontier_rule", [](Scenario& s) -> FrontierRule& { return s.sim.frontier_rule; },
                   kFrontierRuleNames);
        dbl("coverage_goal", [](Scenario& s) -> double& { return s.sim.coverage_goal; });
        boolean("slam", [](Scenario& s) -> bool& { return s.sim.slam.enabled; });
        integer("slam.submap_window", [](Scenario& s) -> int& { return s.sim.slam.submap_window; });
        dbl("slam.lambda", [](Scenario& s) -> double& { return s.sim.slam.lambda; });
        dbl("slam.sigma_xy", [](Scenario& s) -> double& { return s.sim.slam.closure_noise.sigma_xy; });
        dbl("slam.sigma_theta", [](Scenario& s) -> double& { return s.sim.slam.closure_noise.sigma_theta; });
        dbl("slam.outlier_rate", [](Scenario& s) -> double& { return s.sim.slam.closure_noise.outlier_rate; });
        enumerated("slam.solver", [](Scenario& s) -> SolverKind& { return s.sim.slam.solver; }, kSolverNames);
        integer("snapshot_every", [](Scenario& s) -> int& { return s.sim.snapshot_every; });
        boolean("decision_log", [](Scenario& s) -> bool& { return s.sim.decision_log; });
        enumerated("overlap_form", [](Scenario& s) -> OverlapForm& { return s.overlap_form; }, kOverlapNames);
        t.push_back({ "output_dir",
            [](Scenario& s, const std::string& v) { s.output_dir = v; },
            [](const Scenario& s) { return s.output_dir; } });
        return t;
    }();
    return table;
}

} /* namespace detail */

/* Parses scenario text; `base_dir` anchors a relative world path */
inline Scenario parse_scenario(const std::string& text, const std::string& base_dir = "")
{
    Scenario sc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        const auto& table = detail::key_table();
        const auto it = std::find_if(table.begin(), table.end(),
                                     [&](const detail::KeyDef& d) { return key == d.key; });
        if (it == table.end())
            throw ValidationError(key, "unknown key (line " + std::to_string(line_no) + ")");
        it->set(sc, value);
    }
    if (!base_dir.empty() && !sc.sim.world_path.empty()
        && std::filesystem::path(sc.sim.world_path).is_relative())
        sc.sim.world_path = (std::filesystem::path(base_dir) / sc.sim.world_path).lexically_normal().string();
    return sc;
}

inline Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scenario file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), std::filesystem::path(path).parent_path().string());
}

/* Every key with its current value, in a form parse_scenario reads back */
inline std::string format_scenario(const Scenario& sc)
{
    std::string out;
    for (const auto& d : detail::key_table())
        out += std::string(d.key) + " = " + d.get(sc) + '\n';
    return out;
}

inline bool operator==(const Scenario& a, const Scenario& b)
{
    return format_scenario(a) == format_scenario(b);
}

/* Validates the config and the world it names; returns the loaded world */
inline OccupancyGrid validate_scenario(const Scenario& sc)
{
    sc.sim.validate();
    if (sc.sim.world_path.empty())
        throw ValidationError("world", "no world file given");
    if (!std::filesystem::exists(sc.sim.world_path))
        throw ValidationError("world", "file not found: " + sc.sim.world_path);
    OccupancyGrid world = load_world(sc.sim.world_path, sc.sim.resolution);
    for (int r = 0; r < sc.sim.n_robots; ++r) {
        const Cell c = world.world_to_cell(sc.sim.starts[static_cast<std::size_t>(r)]);
        if (!world.is_free(c))
            throw ValidationError("starts", "start of robot " + std::to_string(r) + " is not in a free cell");
    }
    return world;
}

} /* namespace dmpf */

#endif /* DMPF_SCENARIO_HPP */
