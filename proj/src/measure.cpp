#include "memgrid/measure.hpp"

#include "memgrid/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace memgrid {

namespace {

int classify(double v, double tol) {
    if (v > tol) return 1;
    if (v < -tol) return -1;
    return 0;
}

std::vector<State> states_at(const Sample& s) {
    std::vector<State> states;
    states.reserve(s.x.size());
    for (double x : s.x) states.push_back({x});
    return states;
}

std::vector<RemnantPoint> series(const Trace& trace, const GridNetwork& network, double window) {
    if (trace.samples.empty()) throw std::invalid_argument("remnant_series: empty trace");
    std::vector<RemnantPoint> out;
    const auto& first = trace.samples.front();
    const double r0 = effective_resistance(network, states_at(first));
    out.push_back({0, first.t, r0, r0, 0});

    int index = 1;
    for (const auto& c : find_zero_crossings(trace)) {
        const auto fit = fit_global_resistance(trace, c, window);
        const double r_th = effective_resistance(network, states_at(trace.samples[c.sample]));
        out.push_back({index++, c.t, fit.r_fit, r_th, fit.n_samples});
    }
    return out;
}

}  // namespace

std::vector<Crossing> find_zero_crossings(const Trace& trace) {
    std::vector<Crossing> out;
    double peak = 0.0;
    for (const auto& s : trace.samples) peak = std::max(peak, std::abs(s.v_src));
    if (peak == 0.0) return out;
    const double tol = 1e-12 * peak;

    int last = 0;  // sign of the last nonzero sample, 0 once a zero was taken as crossing
    bool seen_nonzero = false;
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
        const auto& s = trace.samples[k];
        const int sg = classify(s.v_src, tol);
        if (sg == 0) {
            if (seen_nonzero && last != 0) {
                out.push_back({k, s.t});
                last = 0;
            }
            continue;
        }
        if (seen_nonzero && last != 0 && sg != last) {
            const auto& p = trace.samples[k - 1];
            const double frac = p.v_src / (p.v_src - s.v_src);
            const double t = p.t + frac * (s.t - p.t);
            out.push_back({frac < 0.5 ? k - 1 : k, t});
        }
        last = sg;
        seen_nonzero = true;
    }
    return out;
}

double slope_through_origin(const std::vector<double>& v, const std::vector<double>& i) {
    double vi = 0.0;
    double ii = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        vi += v[k] * i[k];
        ii += i[k] * i[k];
    }
    if (ii == 0.0) return infinite_resistance;
    return vi / ii;
}

GlobalFit fit_global_resistance(const Trace& trace, const Crossing& crossing, double window) {
    const auto& s = trace.samples;
    if (crossing.sample >= s.size()) throw std::out_of_range("fit_global_resistance: crossing outside trace");

    // Expand from the crossing sample over the contiguous in-window run.
    std::size_t lo = crossing.sample;
    std::size_t hi = crossing.sample;
    const auto inside = [&](std::size_t k) { return std::abs(s[k].v_src) <= window; };
    if (!inside(lo)) {
        if (lo + 1 < s.size() && inside(lo + 1)) {
            lo = hi = lo + 1;
        } else if (lo > 0 && inside(lo - 1)) {
            lo = hi = lo - 1;
        } else {
            throw InsufficientSamples("no sample within the fit window; dt too coarse");
        }
    }
    while (lo > 0 && inside(lo - 1)) --lo;
    while (hi + 1 < s.size() && inside(hi + 1)) ++hi;

    const std::size_t count = hi - lo + 1;
    if (count < 2) throw InsufficientSamples("fewer than 2 samples within the fit window; dt too coarse");

    std::vector<double> v;
    std::vector<double> i;
    v.reserve(count);
    i.reserve(count);
    for (std::size_t k = lo; k <= hi; ++k) {
        v.push_back(s[k].v_src);
        i.push_back(s[k].i_src);
    }
    return {slope_through_origin(v, i), count};
}

double min_threshold(const GridNetwork& network) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& e : network.edges) m = std::min(m, e.params.v_t);
    return m;
}

std::vector<RemnantPoint> remnant_series(const Trace& trace, const GridNetwork& network, double window) {
    if (!(window < min_threshold(network)))
        throw std::invalid_argument("remnant_series: fit window must be below every device threshold");
    return series(trace, network, window);
}

ResistanceMap resistance_map(const Trace& trace, const GridNetwork& network, double t) {
    if (trace.samples.empty()) throw std::invalid_argument("resistance_map: empty trace");
    const auto it = std::min_element(trace.samples.begin(), trace.samples.end(),
                                     [t](const Sample& a, const Sample& b) {
                                         return std::abs(a.t - t) < std::abs(b.t - t);
                                     });
    ResistanceMap map;
    map.t = it->t;
    map.entries.reserve(network.edges.size());
    for (const auto& e : network.edges)
        map.entries.push_back({e.label, e.node_a, e.node_b, e.orientation, e.polarity, it->x[e.label]});
    return map;
}

}  // namespace memgrid
