// Command-line front end: run, sweep, compare, noise, defaults, validate.
//
// Exit codes: 0 success, 2 invalid scenario or arguments, 3 runtime failure.
// Output files go under $DMPF_OUTPUT_ROOT (default ./out) unless the
// scenario or --out names a directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dmpf/batch.hpp"
#include "dmpf/scenario.hpp"
#include "dmpf/sim.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitRuntime = 3;

fs::path output_root()
{
    const char* env = std::getenv("DMPF_OUTPUT_ROOT");
    return env && *env ? fs::path(env) : fs::path("out");
}

fs::path resolve_out_dir(const dmpf::Scenario& sc, const std::string& flag, const std::string& scenario_path,
                         const std::string& suffix)
{
    if (!flag.empty())
        return flag;
    if (!sc.output_dir.empty())
        return fs::path(sc.output_dir).is_absolute() ? fs::path(sc.output_dir) : output_root() / sc.output_dir;
    return output_root() / (fs::path(scenario_path).stem().string() + suffix);
}

std::ofstream open_out(const fs::path& p)
{
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
    return out;
}

std::vector<double> parse_values(const std::string& csv)
{
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(dmpf::detail::parse_double("values", dmpf::detail::trim(item)));
    return out;
}

void print_summary(const dmpf::RunRow& row, const dmpf::RunMetrics& m)
{
    auto opt = [](const std::optional<double>& v) { return v ? dmpf::detail::fmt_double(*v) : std::string("n/a"); };
    std::cout << "seed " << row.seed << " strategy " << row.strategy << " termination " << row.termination << '\n'
              << "  T_topo    " << opt(m.t_topo) << " s\n"
              << "  T_total   " << opt(m.t_total) << " s\n"
              << "  sigma_ind " << dmpf::detail::fmt_double(m.sigma_ind) << " m^2\n"
              << "  r_overlap " << dmpf::detail::fmt_double(m.r_overlap) << " %\n"
              << "  success   " << (m.success ? "yes" : "no") << '\n'
              << "  ssim      " << opt(m.ssim) << '\n';
    if (m.ssim_dead_reckoned)
        std::cout << "  ssim (dead reckoned) " << opt(m.ssim_dead_reckoned) << '\n';
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed, const std::string& out_flag)
{
    dmpf::Scenario sc = dmpf::load_scenario(scenario_path);
    if (seed)
        sc.sim.seed = *seed;
    const dmpf::OccupancyGrid world = dmpf::validate_scenario(sc);

    const fs::path dir = resolve_out_dir(sc, out_flag, scenario_path, "-seed" + std::to_string(sc.sim.seed));
    fs::create_directories(dir);

    dmpf::Simulator sim(sc.sim, world);
    const int every = sc.sim.snapshot_every;
    dmpf::SimResult res = sim.run([&](const dmpf::Simulator& s) {
        if (every > 0 && (s.cycle() % every == 0 || s.done())) {
            char name[64];
            std::snprintf(name, sizeof name, "snapshot_%06d.pgm", s.cycle());
            dmpf::save_pgm(s.merged_belief(), (dir / name).string());
        }
    });
    if (sc.overlap_form != dmpf::OverlapForm::InclusionExclusion) {
        const auto ssim = res.metrics.ssim;
        const auto dr = res.metrics.ssim_dead_reckoned;
        res.metrics = dmpf::metrics_from_log(res.log, sc.overlap_form);
        res.metrics.ssim = ssim;
        res.metrics.ssim_dead_reckoned = dr;
    }

    {
        auto out = open_out(dir / "events.csv");
        dmpf::write_event_log_header(res.log.header, out);
        for (const auto& r : res.log.records)
            dmpf::write_event_record(r, out);
    }
    {
        auto out = open_out(dir / "timing.csv");
        out << "# dmpf-timing v1\ncycle,robot,plan_us\n";
        for (const auto& t : res.timing)
            out << t.cycle << ',' << t.robot << ',' << t.plan_us << '\n';
    }
    if (sc.sim.decision_log) {
        auto out = open_out(dir / "decisions.csv");
        out << "# dmpf-decisions v1\ncycle,robot,noise,centroid_x,centroid_y,size,distance,p_a,p_r,p_total,eligible,chosen\n";
        for (const auto& d : res.decisions) {
            const auto& c = d.candidate;
            out << d.cycle << ',' << d.robot << ',' << dmpf::detail::fmt_g(d.noise) << ',' << c.centroid.x << ','
                << c.centroid.y << ',' << c.size << ','
                << (c.distance == dmpf::DistanceField::kUnreachable ? std::string() : std::to_string(c.distance)) << ','
                << dmpf::detail::fmt_g(c.p_a) << ',' << dmpf::detail::fmt_g(c.p_r) << ','
                << (c.eligible ? dmpf::detail::fmt_g(c.p_total) : std::string()) << ',' << (c.eligible ? 1 : 0) << ','
                << (d.chosen ? 1 : 0) << '\n';
        }
    }
    dmpf::save_pgm(res.final_map, (dir / "final_map.pgm").string());
    if (res.mapping) {
        dmpf::save_pgm(res.mapping->optimized_map, (dir / "merged_optimized.pgm").string());
        dmpf::save_pgm(res.mapping->dead_reckoned_map, (dir / "merged_dead_reckoned.pgm").string());
    }

    const dmpf::RunRow row { dmpf::to_string(sc.sim.strategy), "", 0.0, sc.sim.seed, res.metrics, res.termination };
    {
        auto out = open_out(dir / "metrics.csv");
        dmpf::write_metrics_csv(row, res.metrics, out);
    }
    print_summary(row, res.metrics);
    std::cout << "artifacts in " << dir.string() << '\n';
    return kExitOk;
}

unsigned default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_sweep(const std::string& scenario_path, const std::string& param, const std::string& values,
              int runs, unsigned jobs, const std::string& out_flag)
{
    const dmpf::Scenario sc = dmpf::load_scenario(scenario_path);
    const dmpf::OccupancyGrid world = dmpf::validate_scenario(sc);
    const auto vals = parse_values(values);
    const dmpf::BatchResult b = dmpf::sweep(sc, world, param, vals, runs, jobs);

    const fs::path dir = resolve_out_dir(sc, out_flag, scenario_path, "-sweep-" + param);
    fs::create_directories(dir);
    auto out = open_out(dir / "sweep.csv");
    dmpf::write_batch(b, out);
    dmpf::write_batch(b, std::cout);
    return kExitOk;
}

int cmd_compare(const std::string& scenario_path, const std::vector<std::string>& names, int runs,
                unsigned jobs, const std::string& out_flag)
{
    const dmpf::Scenario sc = dmpf::load_scenario(scenario_path);
    const dmpf::OccupancyGrid world = dmpf::validate_scenario(sc);
    std::vector<dmpf::StrategyKind> strategies;
    for (const auto& n : names)
        strategies.push_back(dmpf::detail::parse_enum("strategies", n, dmpf::detail::kStrategyNames));
    const dmpf::BatchResult b = dmpf::compare(sc, world, strategies, runs, jobs);

    const fs::path dir = resolve_out_dir(sc, out_flag, scenario_path, "-compare");
    fs::create_directories(dir);
    auto out = open_out(dir / "compare.csv");
    dmpf::write_batch(b, out);
    dmpf::write_batch(b, std::cout);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Multi-robot potential-field exploration simulator" };
    app.require_subcommand(1);

    std::string scenario;
    std::string out_dir;
    std::uint64_t seed = 0;
    unsigned jobs = default_jobs();

    auto* run = app.add_subcommand("run", "Execute one scenario");
    run->add_option("scenario", scenario, "Scenario file")->required();
    auto* seed_opt = run->add_option("--seed", seed, "Override the scenario seed");
    run->add_option("--out", out_dir, "Output directory");

    std::string param;
    std::string values;
    int runs = 1;
    auto* sweep = app.add_subcommand("sweep", "Sweep one strategy parameter");
    sweep->add_option("scenario", scenario, "Scenario file")->required();
    sweep->add_option("--param", param, "alpha, sigma_d, sigma_r, k_a or k_r")->required();
    sweep->add_option("--values", values, "Comma-separated values")->required();
    sweep->add_option("--runs", runs, "Seeded runs per value");
    sweep->add_option("--jobs", jobs, "Worker threads");
    sweep->add_option("--out", out_dir, "Output directory");

    std::vector<std::string> strategies { "mwf_cn", "mmpf" };
    auto* compare = app.add_subcommand("compare", "Paired-seed strategy comparison");
    compare->add_option("scenario", scenario, "Scenario file")->required();
    compare->add_option("--strategies", strategies, "Strategies to compare")->delimiter(',');
    compare->add_option("--runs", runs, "Runs per strategy");
    compare->add_option("--jobs", jobs, "Worker threads");
    compare->add_option("--out", out_dir, "Output directory");

    double alpha = 2.0;
    double sigma = 0.095;
    std::uint64_t noise_seed = 1;
    std::size_t n = 100;
    std::string noise_out;
    auto* noise = app.add_subcommand("noise", "Dump a colored-noise sequence as CSV");
    noise->add_option("--alpha", alpha, "Noise color in [0, 2]");
    noise->add_option("--sigma", sigma, "White-noise variance");
    noise->add_option("--seed", noise_seed, "Seed");
    noise->add_option("--n", n, "Number of samples");
    noise->add_option("--out", noise_out, "Output file (default stdout)");

    auto* defaults = app.add_subcommand("defaults", "Print every scenario key with its default");

    auto* validate = app.add_subcommand("validate", "Check a scenario without running it");
    validate->add_option("scenario", scenario, "Scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (run->parsed())
            return cmd_run(scenario, seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt, out_dir);
        if (sweep->parsed())
            return cmd_sweep(scenario, param, values, runs, jobs, out_dir);
        if (compare->parsed())
            return cmd_compare(scenario, strategies, runs, jobs, out_dir);
        if (noise->parsed()) {
            if (noise_out.empty()) {
                dmpf::write_noise_csv(alpha, sigma, noise_seed, n, std::cout);
            } else {
                auto out = open_out(noise_out);
                dmpf::write_noise_csv(alpha, sigma, noise_seed, n, out);
            }
            return kExitOk;
        }
        if (defaults->parsed()) {
            std::cout << dmpf::format_scenario(dmpf::Scenario {});
            return kExitOk;
        }
        if (validate->parsed()) {
            const dmpf::Scenario sc = dmpf::load_scenario(scenario);
            dmpf::validate_scenario(sc);
            std::cout << "ok\n";
            return kExitOk;
        }
    } catch (const dmpf::ValidationError& e) {
        std::cerr << "invalid " << e.what() << '\n';
        return kExitInvalid;
    } catch (const dmpf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const dmpf::ParameterError& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitInvalid;
}
