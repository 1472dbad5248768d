/* batch.hpp */

#ifndef DMPF_BATCH_HPP
#define DMPF_BATCH_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/metrics.hpp"
#include "dmpf/noise.hpp"
#include "dmpf/scenario.hpp"
#include "dmpf/sim.hpp"

namespace dmpf {

inline constexpr int kBatchCsvVersion = 1;
inline constexpr int kMetricsCsvVersion = 1;

/* One finished run as it appears in batch output */
struct RunRow
{
    std::string strategy;
    std::string param;          /* swept parameter, empty otherwise */
    double value = 0.0;
    std::uint64_t seed = 0;
    RunMetrics metrics;
    std::string termination;
};

/*
 * Runs `count` independent jobs on `workers` threads and returns their
 * results in job order, so output never depends on scheduling. The first
 * exception thrown by a job is rethrown after all workers stop.
 */
template <typename T>
std::vector<T> run_pool(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& job)
{
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next { 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                slots[i] = job(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

/* One run of a scenario with the given seed, metrics recomputed with its overlap form */
inline SimResult run_scenario(const Scenario& sc, const OccupancyGrid& world, std::uint64_t seed)
{
    SimConfig cfg = sc.sim;
    cfg.seed = seed;
    Simulator sim(cfg, world);
    SimResult res = sim.run();
    if (sc.overlap_form != OverlapForm::InclusionExclusion) {
        const auto ssim = res.metrics.ssim;
        const auto ssim_dr = res.metrics.ssim_dead_reckoned;
        res.metrics = metrics_from_log(res.log, sc.overlap_form);
        res.metrics.ssim = ssim;
        res.metrics.ssim_dead_reckoned = ssim_dr;
    }
    return res;
}

inline const std::vector<std::string>& sweepable_params()
{
    static const std::vector<std::string> names { "alpha", "sigma_d", "sigma_r", "k_a", "k_r" };
    return names;
}

inline void set_sweep_param(StrategyParams& p, const std::string& name, double v)
{
    if (name == "alpha") p.alpha = v;
    else if (name == "sigma_d") p.sigma_d = v;
    else if (name == "sigma_r") p.sigma_r = v;
    else if (name == "k_a") p.k_a = v;
    else if (name == "k_r") p.k_r = v;
    else
        throw ValidationError("param", "'" + name + "' is not sweepable (alpha, sigma_d, sigma_r, k_a, k_r)");
}

/* ---- aggregation -------------------------------------------------------- */

struct Stat
{
    std::optional<double> mean;
    std::optional<double> std;   /* population */
    std::size_t n = 0;
};

inline Stat stat_of(const std::vector<std::optional<double>>& xs)
{
    Stat s;
    double sum = 0.0;
    for (const auto& x : xs)
        if (x) {
            sum += *x;
            ++s.n;
        }
    if (s.n == 0)
        return s;
    s.mean = sum / static_cast<double>(s.n);
    double ss = 0.0;
    for (const auto& x : xs)
        if (x)
            ss += (*x - *s.mean) * (*x - *s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.n));
    return s;
}

struct AggregateRow
{
    std::string strategy;
    std::string param;
    double value = 0.0;
    std::size_t runs = 0;
    Stat t_topo;
    Stat t_total;
    Stat sigma_ind;
    Stat r_overlap;
    Stat ssim;
    double success_rate = 0.0;
    std::optional<double> delta_t_total;
    std::optional<double> delta_r_overlap;
    std::optional<double> delta_sigma_ind;
};

inline AggregateRow aggregate(const std::vector<RunRow>& rows)
{
    AggregateRow a;
    if (rows.empty())
        return a;
    a.strategy = rows.front().strategy;
    a.param = rows.front().param;
    a.value = rows.front().value;
    a.runs = rows.size();
    std::vector<std::optional<double>> topo, total, sig, ovl, ssim;
    std::vector<bool> ok;
    for (const RunRow& r : rows) {
        topo.push_back(r.metrics.t_topo);
        total.push_back(r.metrics.t_total);
        sig.push_back(r.metrics.sigma_ind);
        ovl.push_back(r.metrics.r_overlap);
        ssim.push_back(r.metrics.ssim);
        ok.push_back(r.metrics.success);
    }
    a.t_topo = stat_of(topo);
    a.t_total = stat_of(total);
    a.sigma_ind = stat_of(sig);
    a.r_overlap = stat_of(ovl);
    a.ssim = stat_of(ssim);
    a.success_rate = success_rate(ok);
    return a;
}

/* ---- CSV output --------------------------------------------------------- */

namespace detail {

inline std::string opt_str(const std::optional<double>& v)
{
    return v ? fmt_double(*v) : std::string();
}

} /* namespace detail */

inline constexpr const char* kBatchColumns =
    "kind,strategy,param,value,seed,runs,t_topo,t_total,sigma_ind,r_overlap,ssim,success,"
    "termination,t_topo_std,t_total_std,sigma_ind_std,r_overlap_std,success_rate,"
    "delta_t_total,delta_r_overlap,delta_sigma_ind";

inline void write_batch_header(std::ostream& out)
{
    out << "# dmpf-batch v" << kBatchCsvVersion << '\n' << kBatchColumns << '\n';
}

inline void write_run_row(const RunRow& r, std::ostream& out)
{
    using detail::fmt_double;
    using detail::opt_str;
    const RunMetrics& m = r.metrics;
    out << "run," << r.strategy << ',' << r.param << ','
        << (r.param.empty() ? std::string() : fmt_double(r.value)) << ',' << r.seed << ",1,"
        << opt_str(m.t_topo) << ',' << opt_str(m.t_total) << ',' << fmt_double(m.sigma_ind) << ','
        << fmt_double(m.r_overlap) << ',' << opt_str(m.ssim) << ',' << (m.success ? 1 : 0) << ','
        << r.termination << ",,,,,,,,\n";
}

inline void write_aggregate_row(const AggregateRow& a, std::ostream& out)
{
    using detail::fmt_double;
    using detail::opt_str;
    out << "aggregate," << a.strategy << ',' << a.param << ','
        << (a.param.empty() ? std::string() : fmt_double(a.value)) << ",," << a.runs << ','
        << opt_str(a.t_topo.mean) << ',' << opt_str(a.t_total.mean) << ','
        << opt_str(a.sigma_ind.mean) << ',' << opt_str(a.r_overlap.mean) << ','
        << opt_str(a.ssim.mean) << ",,," << opt_str(a.t_topo.std) << ',' << opt_str(a.t_total.std) << ','
        << opt_str(a.sigma_ind.std) << ',' << opt_str(a.r_overlap.std) << ','
        << fmt_double(a.success_rate) << ',' << opt_str(a.delta_t_total) << ','
        << opt_str(a.delta_r_overlap) << ',' << opt_str(a.delta_sigma_ind) << '\n';
}

/* Single-run metrics file */
inline void write_metrics_csv(const RunRow& r, const RunMetrics& m, std::ostream& out)
{
    using detail::fmt_double;
    using detail::opt_str;
    out << "# dmpf-metrics v" << kMetricsCsvVersion << '\n'
        << "seed,strategy,t_topo,t_total,sigma_ind,r_overlap,success,ssim,ssim_dead_reckoned,"
           "total_area,cycles,termination,per_robot_areas\n"
        << r.seed << ',' << r.strategy << ',' << opt_str(m.t_topo) << ',' << opt_str(m.t_total) << ','
        << fmt_double(m.sigma_ind) << ',' << fmt_double(m.r_overlap) << ',' << (m.success ? 1 : 0) << ','
        << opt_str(m.ssim) << ',' << opt_str(m.ssim_dead_reckoned) << ',' << fmt_double(m.total_area) << ','
        << m.cycles << ',' << r.termination << ',';
    for (std::size_t i = 0; i < m.per_robot_areas.size(); ++i)
        out << (i ? ";" : "") << fmt_double(m.per_robot_areas[i]);
    out << '\n';
}

/* ---- sweep and compare -------------------------------------------------- */

struct BatchResult
{
    std::vector<RunRow> runs;
    std::vector<AggregateRow> aggregates;
};

inline void write_batch(const BatchResult& b, std::ostream& out)
{
    write_batch_header(out);
    for (const RunRow& r : b.runs)
        write_run_row(r, out);
    for (const AggregateRow& a : b.aggregates)
        write_aggregate_row(a, out);
}

/* runs_per_value seeded runs (seed = base + index) for every value of `param` */
inline BatchResult sweep(const Scenario& sc, const OccupancyGrid& world, const std::string& param,
                         const std::vector<double>& values, int runs_per_value, unsigned workers = 1)
{
    {
        StrategyParams probe = sc.sim.params;
        set_sweep_param(probe, param, 0.0);
    }
    if (values.empty())
        throw ValidationError("values", "need at least one value");
    if (runs_per_value < 1)
        throw ValidationError("runs", "must be >= 1");
    for (const double v : values) {
        SimConfig cfg = sc.sim;
        set_sweep_param(cfg.params, param, v);
        cfg.params.validate();
    }

    const std::size_t per = static_cast<std::size_t>(runs_per_value);
    BatchResult out;
    out.runs = run_pool<RunRow>(values.size() * per, workers, [&](std::size_t job) {
        Scenario s = sc;
        const double v = values[job / per];
        set_sweep_param(s.sim.params, param, v);
        const std::uint64_t seed = sc.sim.seed + job % per;
        SimResult res = run_scenario(s, world, seed);
        return RunRow { to_string(s.sim.strategy), param, v, seed, res.metrics, res.termination };
    });
    for (std::size_t i = 0; i < values.size(); ++i)
        out.aggregates.push_back(aggregate({ out.runs.begin() + static_cast<std::ptrdiff_t>(i * per),
                                             out.runs.begin() + static_cast<std::ptrdiff_t>((i + 1) * per) }));
    return out;
}

/*
 * Paired-seed comparison: run i of every strategy uses seed base + i.
 * Aggregate rows carry (this strategy - other strategy) deltas of the means.
 */
inline BatchResult compare(const Scenario& sc, const OccupancyGrid& world,
                           const std::vector<StrategyKind>& strategies, int runs, unsigned workers = 1)
{
    if (runs < 1)
        throw ValidationError("runs", "must be >= 1");
    if (strategies.empty())
        throw ValidationError("strategies", "need at least one strategy");
    const std::size_t per = static_cast<std::size_t>(runs);

    BatchResult out;
    out.runs = run_pool<RunRow>(strategies.size() * per, workers, [&](std::size_t job) {
        Scenario s = sc;
        s.sim.strategy = strategies[job / per];
        const std::uint64_t seed = sc.sim.seed + job % per;
        SimResult res = run_scenario(s, world, seed);
        return RunRow { to_string(s.sim.strategy), "", 0.0, seed, res.metrics, res.termination };
    });
    for (std::size_t i = 0; i < strategies.size(); ++i)
        out.aggregates.push_back(aggregate({ out.runs.begin() + static_cast<std::ptrdiff_t>(i * per),
                                             out.runs.begin() + static_cast<std::ptrdiff_t>((i + 1) * per) }));

    if (out.aggregates.size() == 2) {
        auto delta = [](const Stat& a, const Stat& b) -> std::optional<double> {
            if (a.mean && b.mean)
                return *a.mean - *b.mean;
            return std::nullopt;
        };
        AggregateRow& a = out.aggregates[0];
        AggregateRow& b = out.aggregates[1];
        a.delta_t_total = delta(a.t_total, b.t_total);
        a.delta_r_overlap = delta(a.r_overlap, b.r_overlap);
        a.delta_sigma_ind = delta(a.sigma_ind, b.sigma_ind);
        b.delta_t_total = delta(b.t_total, a.t_total);
        b.delta_r_overlap = delta(b.r_overlap, a.r_overlap);
        b.delta_sigma_ind = delta(b.sigma_ind, a.sigma_ind);
    }
    return out;
}

/* ---- noise dump --------------------------------------------------------- */

inline void write_noise_csv(double alpha, double sigma_d, std::uint64_t seed, std::size_t n, std::ostream& out)
{
    ColoredNoiseGen gen(alpha, sigma_d, seed);
    out << "# dmpf-noise v1 alpha=" << detail::fmt_g(alpha) << " sigma_d=" << detail::fmt_g(sigma_d)
        << " seed=" << seed << '\n'
        << "k,w_next,delta_chi,chi\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double d = gen.next_sample();
        out << gen.k() - 1 << ',' << detail::fmt_g(gen.w_history().back()) << ',' << detail::fmt_g(d) << ','
            << detail::fmt_g(gen.chi()) << '\n';
    }
}

} /* namespace dmpf */

#endif /* DMPF_BATCH_HPP */
