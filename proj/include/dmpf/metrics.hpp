/* metrics.hpp */

#ifndef DMPF_METRICS_HPP
#define DMPF_METRICS_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/grid.hpp"

namespace dmpf {

/* ---- per-cycle event log ------------------------------------------------ */

inline constexpr int kEventLogVersion = 1;

/*
 * Header fields needed to recompute every run metric from the log alone.
 * Areas in the body are cell counts; multiply by resolution^2 for m^2.
 */
struct EventLogHeader
{
    int n_robots = 0;
    double resolution = 0.0;
    double cycle_period = 1.0;
    std::int64_t explorable_cells = 0;
    std::uint64_t seed = 0;
    std::string strategy;
};

/* One row per robot per cycle */
struct EventRecord
{
    int cycle = 0;
    int robot = 0;
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    int goal_x = -1;                   /* -1 when the robot has no goal */
    int goal_y = -1;
    double coverage = 0.0;             /* union coverage fraction of the explorable area */
    std::int64_t own_cells = 0;        /* S_i in cells */
    std::int64_t union_cells = 0;      /* S_total in cells */
    std::int64_t overlap_cells = 0;    /* sum S_i - S_total */
    bool stuck = false;
    std::string event = "-";           /* coverage90 / coverage99 on the crossing cycle */

    bool operator==(const EventRecord&) const = default;
};

struct EventLog
{
    EventLogHeader header;
    std::vector<EventRecord> records;
};

namespace detail {

inline std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} /* namespace detail */

inline constexpr const char* kEventLogColumns =
    "cycle,robot,x,y,theta,goal_x,goal_y,coverage,own_cells,union_cells,overlap_cells,stuck,event";

inline void write_event_log_header(const EventLogHeader& h, std::ostream& out)
{
    out << "# dmpf-event-log v" << kEventLogVersion << '\n'
        << "# n_robots=" << h.n_robots << " resolution=" << detail::fmt_double(h.resolution)
        << " cycle_period=" << detail::fmt_double(h.cycle_period)
        << " explorable_cells=" << h.explorable_cells << " seed=" << h.seed
        << " strategy=" << h.strategy << '\n'
        << kEventLogColumns << '\n';
}

inline void write_event_record(const EventRecord& r, std::ostream& out)
{
    out << r.cycle << ',' << r.robot << ',' << detail::fmt_double(r.x) << ','
        << detail::fmt_double(r.y) << ',' << detail::fmt_double(r.theta) << ','
        << r.goal_x << ',' << r.goal_y << ',' << detail::fmt_double(r.coverage) << ','
        << r.own_cells << ',' << r.union_cells << ',' << r.overlap_cells << ','
        << (r.stuck ? 1 : 0) << ',' << r.event << '\n';
}

inline EventLog read_event_log(std::istream& in)
{
    EventLog log;
    std::string line;
    int line_no = 0;
    bool saw_version = false;
    bool saw_columns = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (line.rfind("# dmpf-event-log v", 0) == 0) {
                const int v = std::atoi(line.c_str() + 18);
                if (v != kEventLogVersion)
                    throw ParseError("line " + std::to_string(line_no)
                        + ": unsupported event log version " + std::to_string(v));
                saw_version = true;
                continue;
            }
            std::istringstream kv(line.substr(1));
            std::string tok;
            while (kv >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "n_robots") log.header.n_robots = std::stoi(val);
                else if (key == "resolution") log.header.resolution = std::stod(val);
                else if (key == "cycle_period") log.header.cycle_period = std::stod(val);
                else if (key == "explorable_cells") log.header.explorable_cells = std::stoll(val);
                else if (key == "seed") log.header.seed = std::stoull(val);
                else if (key == "strategy") log.header.strategy = val;
            }
            continue;
        }
        if (!saw_columns) {
            if (line != kEventLogColumns)
                throw ParseError("line " + std::to_string(line_no) + ": unexpected column header");
            saw_columns = true;
            continue;
        }
        const auto f = detail::split_csv(line);
        if (f.size() != 13)
            throw ParseError("line " + std::to_string(line_no) + ": expected 13 fields, got "
                + std::to_string(f.size()));
        try {
            EventRecord r;
            r.cycle = std::stoi(f[0]);
            r.robot = std::stoi(f[1]);
            r.x = std::stod(f[2]);
            r.y = std::stod(f[3]);
            r.theta = std::stod(f[4]);
            r.goal_x = std::stoi(f[5]);
            r.goal_y = std::stoi(f[6]);
            r.coverage = std::stod(f[7]);
            r.own_cells = std::stoll(f[8]);
            r.union_cells = std::stoll(f[9]);
            r.overlap_cells = std::stoll(f[10]);
            r.stuck = f[11] == "1";
            r.event = f[12];
            log.records.push_back(std::move(r));
        } catch (const std::logic_error&) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed number");
        }
    }
    if (!saw_version)
        throw ParseError("missing event log version line");
    return log;
}

/* ---- scalar metrics ----------------------------------------------------- */

struct CoverageTimes
{
    std::optional<double> t_topo;    /* 90% */
    std::optional<double> t_total;   /* 99% */
};

struct CoveragePoint
{
    int cycle = 0;
    double covered_area = 0.0;
};

/* First cycle times at which covered area reaches 90% and 99% of the explorable area */
inline CoverageTimes coverage_times(const std::vector<CoveragePoint>& series, double explorable_area,
                                    double cycle_period)
{
    if (!(explorable_area > 0.0))
        throw ValidationError("explorable_area", "must be positive");
    CoverageTimes out;
    for (const CoveragePoint& p : series) {
        const double frac = p.covered_area / explorable_area;
        if (!out.t_topo && frac >= 0.90)
            out.t_topo = p.cycle * cycle_period;
        if (!out.t_total && frac >= 0.99)
            out.t_total = p.cycle * cycle_period;
    }
    return out;
}

inline CoverageTimes coverage_times(const EventLog& log)
{
    std::map<int, std::int64_t> per_cycle;
    for (const EventRecord& r : log.records)
        per_cycle[r.cycle] = r.union_cells;
    std::vector<CoveragePoint> series;
    const double cell_area = log.header.resolution * log.header.resolution;
    for (const auto& [cycle, cells] : per_cycle)
        series.push_back({ cycle, static_cast<double>(cells) * cell_area });
    return coverage_times(series, static_cast<double>(log.header.explorable_cells) * cell_area,
                          log.header.cycle_period);
}

/* Population standard deviation of per-robot areas */
inline double sigma_ind(const std::vector<double>& areas)
{
    if (areas.empty())
        throw ValidationError("areas", "sigma_ind needs at least one robot");
    const double n = static_cast<double>(areas.size());
    const double mean = std::accumulate(areas.begin(), areas.end(), 0.0) / n;
    double ss = 0.0;
    for (const double a : areas)
        ss += (a - mean) * (a - mean);
    return std::sqrt(ss / n);
}

enum class OverlapForm
{
    InclusionExclusion,   /* 100 (sum S_i - S_total) / S_total */
    Literal               /* 100 sum (S_i - S_total) / S_total; 0 for two robots with full overlap */
};

inline double r_overlap(const std::vector<double>& areas, double total,
                        OverlapForm form = OverlapForm::InclusionExclusion)
{
    if (!(total > 0.0))
        throw ValidationError("total", "S_total must be positive");
    double sum = 0.0;
    for (const double a : areas)
        sum += a;
    if (form == OverlapForm::Literal)
        return 100.0 * (sum - static_cast<double>(areas.size()) * total) / total;
    return 100.0 * (sum - total) / total;
}

inline double success_rate(const std::vector<bool>& successes)
{
    if (successes.empty())
        throw ValidationError("runs", "success_rate needs at least one run");
    std::size_t ok = 0;
    for (const bool s : successes)
        ok += s ? 1 : 0;
    return 100.0 * static_cast<double>(ok) / static_cast<double>(successes.size());
}

/* ---- map similarity ----------------------------------------------------- */

/* Nearest-neighbour resampling of `grid` onto the cell centers of `target` */
inline OccupancyGrid resample_like(const OccupancyGrid& grid, const OccupancyGrid& target)
{
    if (grid.same_geometry(target))
        return grid;
    OccupancyGrid out = OccupancyGrid::like(target, CellState::Unknown);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Pose2 c = target.cell_center(target.cell_at(i));
        out.set(i, grid.get_or_unknown(grid.world_to_cell(c)));
    }
    return out;
}

inline constexpr int kSsimWindow = 7;

/*
 * Mean SSIM over all 7x7 windows lying fully inside the image, with sample
 * (N-1) window covariances and the usual constants for an 8-bit range.
 * Grids are rendered Free=255, Occupied=0, Unknown=128; `result` is first
 * resampled onto the reference geometry.
 */
inline double map_ssim(const OccupancyGrid& reference, const OccupancyGrid& result)
{
    const OccupancyGrid res = resample_like(result, reference);
    const int w = reference.width();
    const int h = reference.height();
    if (res.width() != w || res.height() != h)
        throw ValidationError("result", "dimension mismatch after resampling");
    if (w < kSsimWindow || h < kSsimWindow)
        throw ValidationError("reference", "grid smaller than the 7x7 SSIM window");

    /* integer summed-area tables keep the window sums exact */
    const std::size_t sw = static_cast<std::size_t>(w) + 1;
    std::vector<std::int64_t> sx(sw * (h + 1), 0);
    std::vector<std::int64_t> sy(sx.size(), 0);
    std::vector<std::int64_t> sxx(sx.size(), 0);
    std::vector<std::int64_t> syy(sx.size(), 0);
    std::vector<std::int64_t> sxy(sx.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::int64_t a = cell_intensity(reference.at(Cell { x, y }));
            const std::int64_t b = cell_intensity(res.at(Cell { x, y }));
            const std::size_t i = (y + 1) * sw + (x + 1);
            const std::size_t up = y * sw + (x + 1);
            const std::size_t left = (y + 1) * sw + x;
            const std::size_t diag = y * sw + x;
            sx[i] = a + sx[up] + sx[left] - sx[diag];
            sy[i] = b + sy[up] + sy[left] - sy[diag];
            sxx[i] = a * a + sxx[up] + sxx[left] - sxx[diag];
            syy[i] = b * b + syy[up] + syy[left] - syy[diag];
            sxy[i] = a * b + sxy[up] + sxy[left] - sxy[diag];
        }
    }
    auto box = [&](const std::vector<std::int64_t>& s, int x0, int y0) {
        const int x1 = x0 + kSsimWindow;
        const int y1 = y0 + kSsimWindow;
        return s[y1 * sw + x1] - s[y0 * sw + x1] - s[y1 * sw + x0] + s[y0 * sw + x0];
    };

    constexpr double kNp = kSsimWindow * kSsimWindow;
    constexpr double kCovNorm = kNp / (kNp - 1.0);
    constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

    double total = 0.0;
    std::size_t count = 0;
    for (int y0 = 0; y0 + kSsimWindow <= h; ++y0) {
        for (int x0 = 0; x0 + kSsimWindow <= w; ++x0) {
            const double ux = static_cast<double>(box(sx, x0, y0)) / kNp;
            const double uy = static_cast<double>(box(sy, x0, y0)) / kNp;
            const double vx = kCovNorm * (static_cast<double>(box(sxx, x0, y0)) / kNp - ux * ux);
            const double vy = kCovNorm * (static_cast<double>(box(syy, x0, y0)) / kNp - uy * uy);
            const double vxy = kCovNorm * (static_cast<double>(box(sxy, x0, y0)) / kNp - ux * uy);
            const double num = (2.0 * ux * uy + kC1) * (2.0 * vxy + kC2);
            const double den = (ux * ux + uy * uy + kC1) * (vx + vy + kC2);
            total += num / den;
            ++count;
        }
    }
    return total / static_cast<double>(count);
}

/* ---- run summary -------------------------------------------------------- */

struct RunMetrics
{
    std::optional<double> t_topo;       /* seconds */
    std::optional<double> t_total;      /* seconds */
    double sigma_ind = 0.0;             /* m^2 */
    double r_overlap = 0.0;             /* percent */
    bool success = false;
    std::optional<double> ssim;         /* merged map vs ground truth */
    std::optional<double> ssim_dead_reckoned;
    std::vector<double> per_robot_areas;   /* m^2 */
    double total_area = 0.0;            /* m^2 */
    int cycles = 0;
};

/*
 * Everything the event log alone determines. Areas come from the last
 * cycle's rows. A run succeeds when it reaches 99% coverage with no robot
 * flagged stuck at or before that time.
 */
inline RunMetrics metrics_from_log(const EventLog& log,
                                   OverlapForm form = OverlapForm::InclusionExclusion)
{
    RunMetrics m;
    const auto times = coverage_times(log);
    m.t_topo = times.t_topo;
    m.t_total = times.t_total;
    if (log.records.empty())
        return m;

    const double cell_area = log.header.resolution * log.header.resolution;
    const int last_cycle = log.records.back().cycle;
    m.cycles = last_cycle;
    m.per_robot_areas.assign(static_cast<std::size_t>(log.header.n_robots), 0.0);
    bool stuck_early = false;
    for (const EventRecord& r : log.records) {
        if (r.stuck && (!m.t_total || r.cycle * log.header.cycle_period <= *m.t_total))
            stuck_early = true;
        if (r.cycle == last_cycle) {
            if (r.robot < 0 || r.robot >= log.header.n_robots)
                throw ParseError("event log robot id " + std::to_string(r.robot) + " out of range");
            m.per_robot_areas[static_cast<std::size_t>(r.robot)] = static_cast<double>(r.own_cells) * cell_area;
            m.total_area = static_cast<double>(r.union_cells) * cell_area;
        }
    }
    m.sigma_ind = sigma_ind(m.per_robot_areas);
    m.r_overlap = m.total_area > 0.0 ? r_overlap(m.per_robot_areas, m.total_area, form) : 0.0;
    m.success = m.t_total.has_value() && !stuck_early;
    return m;
}

} /* namespace dmpf */

#endif /* DMPF_METRICS_HPP */
