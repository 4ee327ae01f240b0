#include "memgrid/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace memgrid {

GridNetwork single_device_network(const Params& params) {
    GridSpec spec;
    spec.n = 2;
    spec.p_r = 1.0;
    spec.source = {0, 0};
    spec.ground = {0, 1};
    return build_grid(spec, params);
}

SingleDeviceResult run_single_device(const Params& params, const Waveform& w, const SimConfig& cfg) {
    const auto net = single_device_network(params);
    SingleDeviceResult out;
    out.trace = simulate(net, w, cfg);
    out.iv.reserve(out.trace.samples.size());
    for (const auto& s : out.trace.samples) out.iv.push_back({s.t, s.v_src, s.i_src, s.x.front()});
    out.remnant = remnant_series(out.trace, net, cfg.fit_window);
    return out;
}

ArrayResult run_array(const GridNetwork& network, const Waveform& w, const SimConfig& cfg) {
    ArrayResult out;
    out.network = network;
    out.trace = simulate(network, w, cfg);
    out.remnant = remnant_series(out.trace, network, cfg.fit_window);
    out.maps.reserve(out.remnant.size());
    for (const auto& p : out.remnant) out.maps.push_back(resistance_map(out.trace, network, p.t));
    return out;
}

ArrayResult run_uniform_array(int n, const Params& params, const Waveform& w, const SimConfig& cfg) {
    GridSpec spec;
    spec.n = n;
    spec.source = {0, 0};
    spec.ground = {n - 1, 0};
    return run_array(build_grid(spec, params), w, cfg);
}

double SensitizationResult::relative_deviation(std::size_t label, std::size_t condition) const {
    const double base = baseline.at(condition).r_fit;
    return std::abs(matrix.at(label).at(condition) - base) / base;
}

double SensitizationResult::max_relative_deviation() const {
    double worst = 0.0;
    for (std::size_t l = 0; l < matrix.size(); ++l)
        for (std::size_t c = 0; c < matrix[l].size(); ++c) worst = std::max(worst, relative_deviation(l, c));
    return worst;
}

std::set<int> SensitizationResult::flagged(std::size_t condition) const {
    std::set<int> out;
    for (std::size_t l = 0; l < flags.size(); ++l)
        if (flags[l].at(condition)) out.insert(static_cast<int>(l));
    return out;
}

double sensitization_window(double fit_window, double v_t_s) {
    return std::min(fit_window, 0.5 * v_t_s);
}

SensitizationRun run_sensitization(const Params& base, double v_t_s, int n, const Waveform& w,
                                   const SimConfig& cfg, double deviation_threshold, int jobs) {
    if (!(v_t_s > 0) || !(v_t_s <= base.v_t))
        throw std::invalid_argument("run_sensitization: require 0 < v_t_s <= v_t");
    if (!(deviation_threshold >= 0))
        throw std::invalid_argument("run_sensitization: deviation threshold must be >= 0");

    // Every run, baseline included, is fitted inside the sensitized deadband.
    SimConfig run_cfg = cfg;
    run_cfg.fit_window = sensitization_window(cfg.fit_window, v_t_s);

    SensitizationRun run;
    run.uniform = run_uniform_array(n, base, w, run_cfg);
    const GridNetwork& grid = run.uniform.network;
    const std::size_t devices = grid.edges.size();

    auto& res = run.result;
    res.baseline = run.uniform.remnant;
    res.v_t_s = v_t_s;
    res.deviation_threshold = deviation_threshold;
    res.matrix.assign(devices, {});

    std::vector<std::exception_ptr> errors(devices);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t label = next++; label < devices; label = next++) {
            try {
                const auto net = with_threshold(grid, static_cast<int>(label), v_t_s);
                const auto trace = simulate(net, w, run_cfg);
                const auto points = remnant_series(trace, net, run_cfg.fit_window);
                auto& row = res.matrix[label];
                row.reserve(points.size());
                for (const auto& p : points) row.push_back(p.r_fit);
            } catch (...) {
                errors[label] = std::current_exception();
            }
        }
    };

    const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(devices, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    res.flags.assign(devices, std::vector<bool>(res.baseline.size(), false));
    for (std::size_t l = 0; l < devices; ++l) {
        if (res.matrix[l].size() != res.baseline.size())
            throw std::runtime_error("run_sensitization: remnant count differs from baseline");
        for (std::size_t c = 0; c < res.baseline.size(); ++c)
            res.flags[l][c] = res.relative_deviation(l, c) > deviation_threshold;
    }
    return run;
}

std::vector<std::set<int>> exceedance_sets(const Trace& trace, double v_threshold) {
    const auto crossings = find_zero_crossings(trace);
    std::vector<std::set<int>> out(crossings.size());
    std::size_t begin = 0;
    for (std::size_t j = 0; j < crossings.size(); ++j) {
        const std::size_t end = crossings[j].sample;
        for (std::size_t k = begin; k <= end && k < trace.samples.size(); ++k) {
            const auto& v_m = trace.samples[k].v_m;
            for (std::size_t l = 0; l < v_m.size(); ++l)
                if (std::abs(v_m[l]) >= v_threshold) out[j].insert(static_cast<int>(l));
        }
        begin = end;
    }
    return out;
}

}  // namespace memgrid
