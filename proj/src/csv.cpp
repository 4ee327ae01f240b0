#include "memgrid/csv.hpp"

#include "memgrid/format.hpp"

namespace memgrid::csv {

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) out += ',';
        out += fields[k];
    }
    return out;
}

std::vector<std::string> trace_header(std::size_t devices) {
    std::vector<std::string> h{"t", "v_src", "i_src"};
    for (std::size_t l = 0; l < devices; ++l) {
        h.push_back("v_m_" + std::to_string(l));
        h.push_back("x_" + std::to_string(l));
    }
    return h;
}

void write_trace(std::ostream& out, const Trace& trace) {
    out << join(trace_header(trace.device_count())) << '\n';
    for (const auto& s : trace.samples) {
        out << format_number(s.t) << ',' << format_number(s.v_src) << ',' << format_number(s.i_src);
        for (std::size_t l = 0; l < s.x.size(); ++l)
            out << ',' << format_number(s.v_m[l]) << ',' << format_number(s.x[l]);
        out << '\n';
    }
}

void write_remnant(std::ostream& out, const std::vector<RemnantPoint>& points) {
    out << join(remnant_header) << '\n';
    for (const auto& p : points)
        out << p.crossing_index << ',' << format_number(p.t) << ',' << format_number(p.r_fit) << ','
            << format_number(p.r_thevenin) << ',' << p.n_samples << '\n';
}

void write_map(std::ostream& out, const ResistanceMap& map) {
    out << join(map_header) << '\n';
    for (const auto& e : map.entries)
        out << e.label << ',' << e.node_a.row << ',' << e.node_a.col << ',' << e.node_b.row << ','
            << e.node_b.col << ',' << (e.orientation == Orientation::horizontal ? "horizontal" : "vertical")
            << ',' << sign(e.polarity) << ',' << format_number(e.x) << '\n';
}

void write_iv(std::ostream& out, const std::vector<IvPoint>& iv) {
    out << join(iv_header) << '\n';
    for (const auto& p : iv)
        out << format_number(p.t) << ',' << format_number(p.v) << ',' << format_number(p.i) << ','
            << format_number(p.x) << '\n';
}

std::vector<std::string> sensitization_header(std::size_t conditions) {
    std::vector<std::string> h{"label"};
    for (std::size_t c = 0; c < conditions; ++c) h.push_back("c" + std::to_string(c));
    return h;
}

void write_sensitization(std::ostream& out, const SensitizationResult& r) {
    out << join(sensitization_header(r.baseline.size())) << '\n';
    out << -1;
    for (const auto& p : r.baseline) out << ',' << format_number(p.r_fit);
    out << '\n';
    for (std::size_t l = 0; l < r.matrix.size(); ++l) {
        out << l;
        for (double v : r.matrix[l]) out << ',' << format_number(v);
        out << '\n';
    }
}

void write_flags(std::ostream& out, const SensitizationResult& r) {
    out << join(sensitization_header(r.baseline.size())) << '\n';
    out << -1;
    for (std::size_t c = 0; c < r.baseline.size(); ++c) out << ",0";
    out << '\n';
    for (std::size_t l = 0; l < r.flags.size(); ++l) {
        out << l;
        for (bool f : r.flags[l]) out << ',' << (f ? 1 : 0);
        out << '\n';
    }
}

}  // namespace memgrid::csv
