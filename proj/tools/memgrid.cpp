// memgrid: command-line front end for the memristive array simulator.
//
// Exit codes: 0 success, 1 configuration/usage error, 2 runtime error.

#include "memgrid/config.hpp"
#include "memgrid/csv.hpp"
#include "memgrid/experiments.hpp"
#include "memgrid/format.hpp"
#include "memgrid/network_json.hpp"
#include "memgrid/solver.hpp"
#include "memgrid/spice.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace memgrid;

namespace {

struct CommonOptions {
    std::string config;
    std::string out = "out";
    std::optional<std::uint64_t> seed;
    std::optional<double> dt;
};

// File-name friendly: 500000 rather than 5e+05.
std::string tag_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    return {buf, res.ptr};
}

RunConfig resolve(const CommonOptions& opt, std::optional<Experiment> experiment) {
    RunConfig cfg = opt.config.empty() ? parse_config("") : load_config(opt.config);
    if (opt.seed) cfg.array.seed = *opt.seed;
    if (opt.dt) cfg.run.dt = *opt.dt;
    if (experiment) cfg.experiment = *experiment;
    validate(cfg);
    return cfg;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    return f;
}

void write_text(const fs::path& path, const std::string& text) { open_out(path) << text; }

template <typename Fn>
void write_with(const fs::path& path, Fn&& fn) {
    auto f = open_out(path);
    fn(f);
}

fs::path prepare(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

int cmd_device(const RunConfig& base, const fs::path& dir, std::vector<double> amplitudes,
               std::vector<double> betas, std::optional<int> cycles) {
    if (amplitudes.empty()) amplitudes.push_back(base.source.amplitude);
    if (betas.empty()) betas.push_back(base.device.beta);
    for (double beta : betas) {
        for (double a : amplitudes) {
            RunConfig cfg = base;
            cfg.source.amplitude = a;
            cfg.device.beta = beta;
            if (cycles) cfg.source.cycles = *cycles;
            validate(cfg);
            const auto res = run_single_device(cfg.device, cfg.source, cfg.run);
            const std::string tag = "A" + tag_number(a) + "_beta" + tag_number(beta);
            write_with(dir / ("iv_" + tag + ".csv"), [&](std::ostream& o) { csv::write_iv(o, res.iv); });
            write_with(dir / ("remnant_" + tag + ".csv"), [&](std::ostream& o) { csv::write_remnant(o, res.remnant); });
            write_text(dir / ("config_" + tag + ".ini"), serialize_config(cfg));
            std::cout << tag << ": final x = " << format_number(res.iv.back().x) << " ohm\n";
        }
    }
    return 0;
}

int cmd_run(const RunConfig& cfg, const fs::path& dir, bool allow_disconnected) {
    const auto net = build_grid(cfg.array, cfg.device);
    write_text(dir / "config.ini", serialize_config(cfg));
    write_text(dir / "network.json", nlohmann::json(net).dump(2) + "\n");
    if (!is_connected(net)) {
        if (!allow_disconnected) throw DisconnectedNetwork();
        write_with(dir / "remnant.csv", [&](std::ostream& o) {
            csv::write_remnant(o, {{0, 0.0, infinite_resistance, infinite_resistance, 0}});
        });
        std::cout << "network disconnected: R_global = inf\n";
        return 0;
    }
    const auto res = run_array(net, cfg.source, cfg.run);
    write_with(dir / "trace.csv", [&](std::ostream& o) { csv::write_trace(o, res.trace); });
    write_with(dir / "remnant.csv", [&](std::ostream& o) { csv::write_remnant(o, res.remnant); });
    for (std::size_t k = 0; k < res.maps.size(); ++k)
        write_with(dir / ("map_" + std::to_string(k) + ".csv"), [&](std::ostream& o) { csv::write_map(o, res.maps[k]); });
    for (const auto& p : res.remnant)
        std::cout << p.crossing_index << "  t=" << format_number(p.t) << "  R_global=" << format_number(p.r_fit)
                  << "\n";
    return 0;
}

int cmd_sense(RunConfig cfg, const fs::path& dir, std::optional<double> vts, bool ratio_sweep, int jobs) {
    if (vts) cfg.v_t_s = *vts;
    validate(cfg);
    write_text(dir / "config.ini", serialize_config(cfg));

    auto run_one = [&](double v_t_s, const std::string& suffix) {
        const auto run = run_sensitization(cfg.device, v_t_s, cfg.array.n, cfg.source, cfg.run,
                                           cfg.deviation_threshold, jobs);
        write_with(dir / ("sensitization" + suffix + ".csv"),
                   [&](std::ostream& o) { csv::write_sensitization(o, run.result); });
        write_with(dir / ("flags" + suffix + ".csv"), [&](std::ostream& o) { csv::write_flags(o, run.result); });
        return run.result.max_relative_deviation();
    };

    if (!ratio_sweep) {
        const double worst = run_one(cfg.v_t_s, "");
        std::cout << "max relative deviation: " << format_number(worst) << "\n";
        return 0;
    }
    std::ofstream summary = open_out(dir / "ratio_sweep.csv");
    summary << "ratio,v_t_s,max_relative_deviation\n";
    for (double ratio : {1.2, 5.0, 10.0}) {
        const double v_t_s = cfg.device.v_t / ratio;
        const double worst = run_one(v_t_s, "_r" + tag_number(ratio));
        summary << format_number(ratio) << ',' << format_number(v_t_s) << ',' << format_number(worst) << '\n';
        std::cout << "ratio " << format_number(ratio) << ": max relative deviation " << format_number(worst) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transient simulator for threshold-memristor lattices"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions common;
    app.add_option("--config", common.config, "INI configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", common.out, "output directory");
    app.add_option("--seed", common.seed, "override [array].seed");
    app.add_option("--dt", common.dt, "override [run].dt (s)");

    auto* device = app.add_subcommand("device", "single-device I-V sweeps");
    std::vector<double> amplitudes;
    std::vector<double> betas;
    std::optional<int> cycles;
    device->add_option("--amplitude", amplitudes, "source amplitude (V), repeatable");
    device->add_option("--beta", betas, "switching rate (ohm/(V s)), repeatable");
    device->add_option("--cycles", cycles, "override [source].cycles");

    auto* run = app.add_subcommand("run", "array cycling with remnant R_global and resistance maps");
    bool allow_disconnected = false;
    run->add_flag("--allow-disconnected", allow_disconnected, "report R_global = inf instead of failing");

    auto* sense = app.add_subcommand("sense", "per-unit sensitization raster");
    std::optional<double> vts;
    bool ratio_sweep = false;
    int jobs = 1;
    sense->add_option("--vts", vts, "sensitized threshold (V)");
    sense->add_flag("--ratio-sweep", ratio_sweep, "run V_t/V_t^S in {1.2, 5, 10}");
    sense->add_option("--jobs", jobs, "parallel simulations")->check(CLI::PositiveNumber);

    auto* spice = app.add_subcommand("export-spice", "write an NGSPICE netlist of the configured array");
    auto* check = app.add_subcommand("validate-config", "parse, validate and print the resolved configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (check->parsed()) {
            std::cout << serialize_config(resolve(common, std::nullopt));
            return 0;
        }
        if (device->parsed()) {
            const auto cfg = resolve(common, Experiment::device);
            return cmd_device(cfg, prepare(common.out), amplitudes, betas, cycles);
        }
        if (run->parsed()) {
            const auto cfg = resolve(common, Experiment::run);
            return cmd_run(cfg, prepare(common.out), allow_disconnected);
        }
        if (sense->parsed()) {
            const auto cfg = resolve(common, Experiment::sense);
            return cmd_sense(cfg, prepare(common.out), vts, ratio_sweep, jobs);
        }
        if (spice->parsed()) {
            const auto cfg = resolve(common, Experiment::run);
            const auto dir = prepare(common.out);
            const auto net = build_grid(cfg.array, cfg.device);
            write_text(dir / "netlist.cir", export_spice(net, cfg.source, cfg.run.dt));
            std::cout << (dir / "netlist.cir").string() << "\n";
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
