// Experiment driver: converge / bubble / coarsen benchmarks plus a generic
// run mode. Configuration comes from a flat key=value file, with command-line
// flags taking precedence.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ac/experiments.hpp"
#include "ac/sim.hpp"

namespace fs = std::filesystem;
using namespace ac;

namespace {

// ---------------------------------------------------------------- config

struct RunConfig {
    int m = 128;
    double side_length = 1.0;
    double epsilon = 0.01;
    std::string mobility = "constant";  // constant | degenerate
    double mobility_value = 1.0;
    std::string stabilizer = "auto";  // "auto" or a number
    std::string mbp = "guaranteed";   // guaranteed | free
    double gamma_star = 1.0;

    std::string mode = "uniform";  // uniform | perturbed | adaptive
    int n_steps = 100;
    double horizon = 1.0;
    double amplitude = 0.25;
    std::uint64_t seed = 2024;
    double tau_min = 1e-5;
    double tau_max = 0.0;  // <= 0: guaranteed-mode step cap
    double alpha = 1e5;
    double gamma_max = 1.5;

    std::string init = "cosine";  // cosine | bubble | random | file
    double radius0 = 0.2;
    double center_x = 0.5;
    double center_y = 0.5;
    double init_lo = -0.1;
    double init_hi = 0.1;
    std::string init_file;

    std::string out = "out";
    double snapshot_dt = 0.0;  // simulated-time cadence; 0 disables
    double tol = 1e-12;
    std::string levels = "10,20,40,80,160,320";
};

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    return kv;
}

void apply_config_file(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    const auto num = [](const std::string& v) { return std::stod(v); };
    for (const auto& [key, value] : kv) {
        if (key == "m") cfg.m = std::stoi(value);
        else if (key == "L") cfg.side_length = num(value);
        else if (key == "epsilon") cfg.epsilon = num(value);
        else if (key == "mobility") cfg.mobility = value;
        else if (key == "mobility_value") cfg.mobility_value = num(value);
        else if (key == "stabilizer") cfg.stabilizer = value;
        else if (key == "mbp") cfg.mbp = value;
        else if (key == "gamma_star") cfg.gamma_star = num(value);
        else if (key == "mode") cfg.mode = value;
        else if (key == "N") cfg.n_steps = std::stoi(value);
        else if (key == "T") cfg.horizon = num(value);
        else if (key == "amplitude") cfg.amplitude = num(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "tau_min") cfg.tau_min = num(value);
        else if (key == "tau_max") cfg.tau_max = num(value);
        else if (key == "alpha") cfg.alpha = num(value);
        else if (key == "gamma_max") cfg.gamma_max = num(value);
        else if (key == "init") cfg.init = value;
        else if (key == "radius0") cfg.radius0 = num(value);
        else if (key == "center_x") cfg.center_x = num(value);
        else if (key == "center_y") cfg.center_y = num(value);
        else if (key == "init_lo") cfg.init_lo = num(value);
        else if (key == "init_hi") cfg.init_hi = num(value);
        else if (key == "init_file") cfg.init_file = value;
        else if (key == "out") cfg.out = value;
        else if (key == "snapshot_dt") cfg.snapshot_dt = num(value);
        else if (key == "tol") cfg.tol = num(value);
        else if (key == "levels") cfg.levels = value;
        else throw std::runtime_error("unknown config key: " + key);
    }
}

Mobility make_mobility(const RunConfig& cfg) {
    if (cfg.mobility == "constant") return Mobility::constant(cfg.mobility_value);
    if (cfg.mobility == "degenerate") return Mobility::degenerate();
    throw std::runtime_error("mobility must be constant or degenerate, got: " + cfg.mobility);
}

double make_stabilizer(const RunConfig& cfg, const Mobility& mob) {
    if (cfg.stabilizer == "auto") return std::max(stabilizer_bound(mob), 2.0);
    return std::stod(cfg.stabilizer);
}

MbpMode make_mbp(const RunConfig& cfg) {
    if (cfg.mbp == "guaranteed") return MbpMode::Guaranteed;
    if (cfg.mbp == "free") return MbpMode::Free;
    throw std::runtime_error("mbp must be guaranteed or free, got: " + cfg.mbp);
}

std::vector<int> parse_levels(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    if (out.empty()) throw std::runtime_error("levels list is empty");
    return out;
}

Field make_initial(const RunConfig& cfg, const Grid& grid) {
    if (cfg.init == "cosine") return sample(grid, cosine_profile);
    if (cfg.init == "bubble")
        return bubble_profile(grid, cfg.radius0, cfg.center_x, cfg.center_y);
    if (cfg.init == "random") return random_profile(grid, cfg.init_lo, cfg.init_hi, cfg.seed);
    if (cfg.init == "file") {
        if (cfg.init_file.empty()) throw std::runtime_error("init=file needs init_file=<path>");
        Field f = read_snapshot(cfg.init_file);
        if (!(f.grid() == grid))
            throw std::runtime_error("initial snapshot grid does not match the configured grid");
        return f;
    }
    throw std::runtime_error("init must be cosine, bubble, random, or file; got: " + cfg.init);
}

// --------------------------------------------------------------- outputs

std::string format_time_tag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

// Writes field_t<time>.csv whenever the run crosses the next cadence mark.
class SnapshotWriter {
public:
    SnapshotWriter(const fs::path& dir, double cadence) : dir_(dir), cadence_(cadence) {}

    void observe(const Field& phi, double t) {
        if (cadence_ <= 0.0) return;
        if (t == 0.0 || t >= next_ * (1.0 - 1e-12)) {
            write_snapshot((dir_ / ("field_t" + format_time_tag(t) + ".csv")).string(), phi, t);
            while (next_ <= t * (1.0 + 1e-12)) next_ += cadence_;
        }
    }

private:
    fs::path dir_;
    double cadence_;
    double next_ = 0.0;
};

struct Summary {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, const std::string& value) {
        entries.emplace_back(key, value);
    }
    void add(const std::string& key, double value) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        entries.emplace_back(key, buf);
    }
    void add(const std::string& key, long long value) {
        entries.emplace_back(key, std::to_string(value));
    }

    std::string line() const {
        std::string s = "{";
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (k) s += ", ";
            const std::string& v = entries[k].second;
            const bool numeric = !v.empty() && (std::isdigit(v[0]) || v[0] == '-');
            s += "\"" + entries[k].first + "\": ";
            s += numeric ? v : "\"" + v + "\"";
        }
        return s + "}";
    }

    void emit(const fs::path& dir) const {
        const std::string text = line();
        std::ofstream out(dir / "summary.txt");
        out << text << "\n";
        std::printf("%s\n", text.c_str());
    }
};

void series_stats(const RunSeries& series, Summary& summary) {
    double sup_max = 0.0;
    for (const auto& r : series.rows) sup_max = std::max(sup_max, r.sup_norm);
    summary.add("steps", static_cast<long long>(series.rows.size()) - 1);
    summary.add("final_time", series.rows.back().t);
    summary.add("sup_norm_max", sup_max);
    summary.add("energy_initial", series.rows.front().energy);
    summary.add("energy_final", series.rows.back().energy);
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ------------------------------------------------------------- commands

int cmd_converge(const RunConfig& cfg, bool paper_scale) {
    Stopwatch clock;
    ConvergeSetup setup;
    setup.m = paper_scale ? 1024 : cfg.m;
    setup.side_length = cfg.side_length;
    setup.epsilon = cfg.epsilon;
    setup.mobility = make_mobility(cfg);
    setup.stabilizer = make_stabilizer(cfg, setup.mobility);
    setup.horizon = cfg.horizon;
    setup.levels = parse_levels(cfg.levels);
    setup.perturbed = cfg.mode == "perturbed";
    setup.amplitude = cfg.amplitude;
    setup.seed = cfg.seed;
    setup.step.tol = cfg.tol;

    ConvergenceTable table = run_convergence(setup);
    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    table.write_csv((dir / "table.csv").string());

    Summary summary;
    summary.add("command", std::string("converge"));
    summary.add("m", static_cast<long long>(setup.m));
    summary.add("epsilon", setup.epsilon);
    summary.add("mobility", cfg.mobility);
    summary.add("mode", setup.perturbed ? std::string("perturbed") : std::string("uniform"));
    summary.add("levels", static_cast<long long>(table.rows.size()));
    summary.add("final_order_inf", table.rows.back().order_inf);
    summary.add("final_order_h1", table.rows.back().order_h1);
    summary.add("wall_seconds", clock.seconds());
    summary.emit(dir);
    return 0;
}

int cmd_bubble(const RunConfig& cfg, bool paper_scale) {
    Stopwatch clock;
    const int m = paper_scale ? 512 : cfg.m;
    const Grid grid(m, cfg.side_length);
    const Mobility mob = Mobility::constant(cfg.mobility_value);
    const Problem problem(cfg.epsilon, mob, make_stabilizer(cfg, mob), grid);
    const Field phi0 = bubble_profile(grid, cfg.radius0, cfg.center_x, cfg.center_y);

    const double cap = max_stable_step(cfg.gamma_star, problem);
    const double horizon = cfg.horizon;
    const int n_steps = static_cast<int>(std::ceil(horizon / cap));
    const std::vector<double> taus = uniform_mesh(n_steps, horizon);

    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    SnapshotWriter snaps(dir, cfg.snapshot_dt);

    std::vector<std::pair<double, double>> radius;
    double extinction = -1.0;
    RunOptions options;
    options.mbp = make_mbp(cfg);
    options.gamma_star = cfg.gamma_star;
    options.step.tol = cfg.tol;
    options.observer = [&](const Field& phi, double t, int) {
        const double r = bubble_radius(phi);
        radius.emplace_back(t, r);
        if (r == 0.0 && extinction < 0.0) extinction = t;
        snaps.observe(phi, t);
    };
    RunSeries series = run_on_mesh(phi0, taus, problem, options);

    series.write_csv((dir / "series.csv").string());
    write_mesh_csv((dir / "mesh.csv").string(), taus);
    {
        std::FILE* f = std::fopen((dir / "radius.csv").string().c_str(), "w");
        if (!f) throw std::runtime_error("cannot open radius.csv for writing");
        std::fprintf(f, "t,radius\n");
        for (const auto& [t, r] : radius) std::fprintf(f, "%.17g,%.17g\n", t, r);
        std::fclose(f);
    }

    Summary summary;
    summary.add("command", std::string("bubble"));
    summary.add("m", static_cast<long long>(m));
    summary.add("epsilon", cfg.epsilon);
    summary.add("tau", taus.front());
    series_stats(series, summary);
    summary.add("extinction_time", extinction);
    summary.add("wall_seconds", clock.seconds());
    summary.emit(dir);
    return 0;
}

int cmd_coarsen(const RunConfig& cfg, bool paper_scale) {
    Stopwatch clock;
    const int m = paper_scale ? 256 : cfg.m;
    const Grid grid(m, cfg.side_length);
    const Mobility mob = Mobility::degenerate();
    const Problem problem(cfg.epsilon, mob, make_stabilizer(cfg, mob), grid);
    const Field phi0 = random_profile(grid, cfg.init_lo, cfg.init_hi, cfg.seed);

    AdaptiveParams params;
    params.tau_min = cfg.tau_min;
    params.tau_max =
        cfg.tau_max > 0.0 ? cfg.tau_max : max_stable_step(cfg.gamma_max, problem);
    params.alpha = cfg.alpha;
    params.gamma_max = cfg.gamma_max;

    const double horizon = cfg.horizon;
    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    SnapshotWriter snaps(dir, cfg.snapshot_dt);

    RunOptions options;
    options.mbp = make_mbp(cfg);
    options.gamma_star = cfg.gamma_max;
    options.step.tol = cfg.tol;
    options.observer = [&](const Field& phi, double t, int) { snaps.observe(phi, t); };
    AdaptiveRun run = run_adaptive(phi0, params, horizon, problem, options);

    run.series.write_csv((dir / "series.csv").string());
    write_mesh_csv((dir / "mesh.csv").string(), run.taus);

    Summary summary;
    summary.add("command", std::string("coarsen"));
    summary.add("m", static_cast<long long>(m));
    summary.add("epsilon", cfg.epsilon);
    summary.add("tau_max", params.tau_max);
    series_stats(run.series, summary);
    summary.add("tau_peak", *std::max_element(run.taus.begin(), run.taus.end()));
    summary.add("wall_seconds", clock.seconds());
    summary.emit(dir);
    return 0;
}

int cmd_run(const RunConfig& cfg) {
    Stopwatch clock;
    const Grid grid(cfg.m, cfg.side_length);
    const Mobility mob = make_mobility(cfg);
    const Problem problem(cfg.epsilon, mob, make_stabilizer(cfg, mob), grid);
    const Field phi0 = make_initial(cfg, grid);

    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    SnapshotWriter snaps(dir, cfg.snapshot_dt);

    RunOptions options;
    options.mbp = make_mbp(cfg);
    options.step.tol = cfg.tol;
    options.observer = [&](const Field& phi, double t, int) { snaps.observe(phi, t); };

    RunSeries series;
    std::vector<double> taus;
    if (cfg.mode == "adaptive") {
        AdaptiveParams params;
        params.tau_min = cfg.tau_min;
        params.tau_max =
            cfg.tau_max > 0.0 ? cfg.tau_max : max_stable_step(cfg.gamma_max, problem);
        params.alpha = cfg.alpha;
        params.gamma_max = cfg.gamma_max;
        options.gamma_star = cfg.gamma_max;
        AdaptiveRun run = run_adaptive(phi0, params, cfg.horizon, problem, options);
        series = std::move(run.series);
        taus = std::move(run.taus);
    } else {
        options.gamma_star = cfg.gamma_star;
        taus = cfg.mode == "perturbed"
                   ? perturbed_mesh(cfg.n_steps, cfg.horizon, cfg.seed, cfg.amplitude)
                   : uniform_mesh(cfg.n_steps, cfg.horizon);
        series = run_on_mesh(phi0, taus, problem, options);
    }

    series.write_csv((dir / "series.csv").string());
    write_mesh_csv((dir / "mesh.csv").string(), taus);

    Summary summary;
    summary.add("command", std::string("run"));
    summary.add("m", static_cast<long long>(cfg.m));
    summary.add("epsilon", cfg.epsilon);
    summary.add("mobility", cfg.mobility);
    summary.add("mode", cfg.mode);
    summary.add("mbp", cfg.mbp);
    series_stats(series, summary);
    summary.add("wall_seconds", clock.seconds());
    summary.emit(dir);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-preserving variable-step BDF2 solver for the Allen-Cahn equation"};
    app.require_subcommand(1);

    std::string config_path, out_dir, mbp_mode, mode, mobility, init, levels, stabilizer;
    std::uint64_t seed = 0;
    bool paper_scale = false;
    int m = 0, n_steps = 0;
    double horizon = 0.0, epsilon_flag = 0.0, snapshot_dt = -1.0;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--mbp", mbp_mode, "guaranteed | free");
        sub->add_flag("--paper-scale", paper_scale, "use the full-resolution grids");
        sub->add_option("--m", m, "cells per axis");
        sub->add_option("--epsilon", epsilon_flag, "interface width parameter");
        sub->add_option("--T", horizon, "time horizon");
        sub->add_option("--N", n_steps, "number of time steps");
        sub->add_option("--mode", mode, "uniform | perturbed | adaptive");
        sub->add_option("--mobility", mobility, "constant | degenerate");
        sub->add_option("--init", init, "cosine | bubble | random | file");
        sub->add_option("--levels", levels, "comma-separated step counts (converge)");
        sub->add_option("--stabilizer", stabilizer, "auto or a number");
        sub->add_option("--snap-dt", snapshot_dt, "snapshot cadence in simulated time");
    };

    CLI::App* converge = app.add_subcommand("converge", "temporal convergence study");
    CLI::App* bubble = app.add_subcommand("bubble", "shrinking-bubble benchmark");
    CLI::App* coarsen = app.add_subcommand("coarsen", "adaptive coarsening benchmark");
    CLI::App* run = app.add_subcommand("run", "generic configured run");
    for (CLI::App* sub : {converge, bubble, coarsen, run}) add_common(sub);

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    try {
        RunConfig cfg;
        // per-command defaults before file/flag overrides
        if (sub == converge) {
            cfg.m = 256;
            cfg.epsilon = 0.1;
            cfg.mbp = "free";
            cfg.mode = "uniform";
        } else if (sub == bubble) {
            cfg.horizon = 230.0;
            cfg.init = "bubble";
        } else if (sub == coarsen) {
            cfg.horizon = 100.0;
            cfg.mobility = "degenerate";
            cfg.mode = "adaptive";
            cfg.init = "random";
            cfg.seed = 7;
        }

        if (sub->count("--config")) apply_config_file(cfg, read_config_file(config_path));
        if (sub->count("--out")) cfg.out = out_dir;
        if (sub->count("--seed")) cfg.seed = seed;
        if (sub->count("--mbp")) cfg.mbp = mbp_mode;
        if (sub->count("--m")) cfg.m = m;
        if (sub->count("--epsilon")) cfg.epsilon = epsilon_flag;
        if (sub->count("--T")) cfg.horizon = horizon;
        if (sub->count("--N")) cfg.n_steps = n_steps;
        if (sub->count("--mode")) cfg.mode = mode;
        if (sub->count("--mobility")) cfg.mobility = mobility;
        if (sub->count("--init")) cfg.init = init;
        if (sub->count("--levels")) cfg.levels = levels;
        if (sub->count("--stabilizer")) cfg.stabilizer = stabilizer;
        if (sub->count("--snap-dt")) cfg.snapshot_dt = snapshot_dt;

        if (paper_scale)
            std::fprintf(stderr,
                         "warning: --paper-scale runs the full-resolution grids; "
                         "expect a long wall time\n");

        if (sub == converge) return cmd_converge(cfg, paper_scale);
        if (sub == bubble) return cmd_bubble(cfg, paper_scale);
        if (sub == coarsen) return cmd_coarsen(cfg, paper_scale);
        return cmd_run(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
