#include "memgrid/config.hpp"

#include "memgrid/format.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace memgrid {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"device", {"r_on", "r_off", "ratio", "v_t", "beta", "r_init"}},
        {"array", {"n", "p_r", "p_i", "seed", "source", "ground"}},
        {"source", {"kind", "amplitude", "frequency", "cycles", "phase"}},
        {"run", {"dt", "record_stride", "fit_window", "deviation_threshold", "v_t_s", "experiment"}},
    };
    return keys;
}

[[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& what) {
    throw ConfigError("[" + section + "]." + key + ": " + what);
}

class Reader {
public:
    explicit Reader(const pt::ptree& tree) : tree_(tree) {}

    std::optional<std::string> raw(const std::string& section, const std::string& key) const {
        const auto sec = tree_.get_child_optional(section);
        if (!sec) return std::nullopt;
        const auto value = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
        if (!value) return std::nullopt;
        return trim(*value);
    }

    double number(const std::string& section, const std::string& key, double fallback) const {
        const auto text = raw(section, key);
        if (!text) return fallback;
        double v = 0.0;
        if (!parse_number(*text, v)) fail(section, key, "not a number: '" + *text + "'");
        return v;
    }

    template <typename Int>
    Int integer(const std::string& section, const std::string& key, Int fallback) const {
        const auto text = raw(section, key);
        if (!text) return fallback;
        Int v{};
        const auto* last = text->data() + text->size();
        const auto res = std::from_chars(text->data(), last, v);
        if (res.ec != std::errc() || res.ptr != last || text->empty())
            fail(section, key, "not an integer: '" + *text + "'");
        return v;
    }

    NodeId node(const std::string& section, const std::string& key, NodeId fallback) const {
        auto text = raw(section, key);
        if (!text) return fallback;
        std::string s;
        for (char c : *text)
            if (c != '(' && c != ')' && c != ' ') s.push_back(c);
        const auto comma = s.find(',');
        NodeId id;
        auto parse = [&](std::string_view part, int& out) {
            const auto res = std::from_chars(part.data(), part.data() + part.size(), out);
            return res.ec == std::errc() && res.ptr == part.data() + part.size() && !part.empty();
        };
        if (comma == std::string::npos || !parse(std::string_view(s).substr(0, comma), id.row) ||
            !parse(std::string_view(s).substr(comma + 1), id.col))
            fail(section, key, "expected 'row,col', got '" + *text + "'");
        return id;
    }

private:
    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return {};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    const pt::ptree& tree_;
};

void check_structure(const pt::ptree& tree) {
    const auto& keys = known_keys();
    for (const auto& [section, child] : tree) {
        const auto it = keys.find(section);
        if (!child.data().empty()) throw ConfigError("key '" + section + "' outside of any section");
        if (it == keys.end()) throw ConfigError("unknown section [" + section + "]");
        for (const auto& [key, value] : child) {
            if (!it->second.contains(key)) fail(section, key, "unknown key");
        }
    }
}

std::string strip_hash_comments(std::string_view text) {
    std::string out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        const auto b = line.find_first_not_of(" \t");
        if (b != std::string::npos && line[b] == '#') continue;
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::device: return "device";
        case Experiment::run: return "run";
        case Experiment::sense: return "sense";
    }
    return "run";
}

void validate(const RunConfig& c) {
    const auto& d = c.device;
    if (!(d.r_on > 0)) fail("device", "r_on", "must be > 0");
    if (!(d.r_off > d.r_on)) fail("device", "r_off", "must exceed r_on");
    if (!(d.v_t > 0)) fail("device", "v_t", "must be > 0");
    if (!(d.beta > 0)) fail("device", "beta", "must be > 0");
    if (!(d.r_init >= d.r_on && d.r_init <= d.r_off)) fail("device", "r_init", "must lie in [r_on, r_off]");

    const auto& a = c.array;
    if (a.n < 2) fail("array", "n", "must be >= 2");
    if (!(a.p_r >= 0 && a.p_r <= 1)) fail("array", "p_r", "must be in [0, 1]");
    if (!(a.p_i >= 0 && a.p_i <= 1)) fail("array", "p_i", "must be in [0, 1]");
    auto inside = [&](NodeId id) { return id.row >= 0 && id.col >= 0 && id.row < a.n && id.col < a.n; };
    if (!inside(a.source)) fail("array", "source", "outside the lattice");
    if (!inside(a.ground)) fail("array", "ground", "outside the lattice");
    if (a.source == a.ground) fail("array", "ground", "must differ from source");

    const auto& s = c.source;
    if (!(s.amplitude > 0)) fail("source", "amplitude", "must be > 0");
    if (!(s.frequency > 0)) fail("source", "frequency", "must be > 0");
    if (s.cycles < 1) fail("source", "cycles", "must be >= 1");
    if (!std::isfinite(s.phase)) fail("source", "phase", "must be finite");

    const auto& r = c.run;
    if (!(r.dt > 0)) fail("run", "dt", "must be > 0");
    if (r.record_stride < 1) fail("run", "record_stride", "must be >= 1");
    if (!(r.fit_window > 0)) fail("run", "fit_window", "must be > 0");
    if (!(r.fit_window < d.v_t)) fail("run", "fit_window", "must be below [device].v_t");
    if (!(c.deviation_threshold > 0)) fail("run", "deviation_threshold", "must be > 0");
    if (!(c.v_t_s > 0 && c.v_t_s <= d.v_t)) fail("run", "v_t_s", "must be in (0, [device].v_t]");
}

RunConfig parse_config(std::string_view text) {
    pt::ptree tree;
    try {
        std::istringstream in(strip_hash_comments(text));
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    check_structure(tree);
    const Reader rd(tree);

    RunConfig c;
    auto& d = c.device;
    d.r_on = rd.number("device", "r_on", d.r_on);
    const bool has_off = rd.raw("device", "r_off").has_value();
    const bool has_ratio = rd.raw("device", "ratio").has_value();
    if (has_off && has_ratio) fail("device", "ratio", "give either r_off or ratio, not both");
    if (has_ratio) {
        const double ratio = rd.number("device", "ratio", 0.0);
        if (!(ratio > 1)) fail("device", "ratio", "must be > 1");
        d.r_off = ratio * d.r_on;
    } else {
        d.r_off = rd.number("device", "r_off", d.r_off);
    }
    d.v_t = rd.number("device", "v_t", d.v_t);
    d.beta = rd.number("device", "beta", d.beta);
    d.r_init = rd.number("device", "r_init", d.r_off);

    auto& a = c.array;
    a.n = rd.integer("array", "n", a.n);
    a.p_r = rd.number("array", "p_r", a.p_r);
    a.p_i = rd.number("array", "p_i", a.p_i);
    a.seed = rd.integer("array", "seed", a.seed);
    a.source = rd.node("array", "source", {0, 0});
    a.ground = rd.node("array", "ground", {a.n - 1, 0});

    auto& s = c.source;
    if (const auto kind = rd.raw("source", "kind"); kind && *kind != "sine")
        fail("source", "kind", "only 'sine' is supported");
    s.amplitude = rd.number("source", "amplitude", s.amplitude);
    s.frequency = rd.number("source", "frequency", s.frequency);
    s.cycles = rd.integer("source", "cycles", s.cycles);
    s.phase = rd.number("source", "phase", s.phase);

    auto& r = c.run;
    r.dt = rd.number("run", "dt", r.dt);
    r.record_stride = rd.integer("run", "record_stride", r.record_stride);
    r.fit_window = rd.number("run", "fit_window", r.fit_window);
    c.deviation_threshold = rd.number("run", "deviation_threshold", c.deviation_threshold);
    c.v_t_s = rd.number("run", "v_t_s", c.v_t_s);
    if (const auto e = rd.raw("run", "experiment")) {
        if (*e == "device") c.experiment = Experiment::device;
        else if (*e == "run") c.experiment = Experiment::run;
        else if (*e == "sense") c.experiment = Experiment::sense;
        else fail("run", "experiment", "expected device, run or sense");
    }

    validate(c);
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    auto node = [](NodeId id) { return std::to_string(id.row) + "," + std::to_string(id.col); };
    const auto& n = format_number;
    out << "[device]\n"
        << "r_on = " << n(c.device.r_on) << "\n"
        << "r_off = " << n(c.device.r_off) << "\n"
        << "v_t = " << n(c.device.v_t) << "\n"
        << "beta = " << n(c.device.beta) << "\n"
        << "r_init = " << n(c.device.r_init) << "\n\n"
        << "[array]\n"
        << "n = " << c.array.n << "\n"
        << "p_r = " << n(c.array.p_r) << "\n"
        << "p_i = " << n(c.array.p_i) << "\n"
        << "seed = " << c.array.seed << "\n"
        << "source = " << node(c.array.source) << "\n"
        << "ground = " << node(c.array.ground) << "\n\n"
        << "[source]\n"
        << "kind = sine\n"
        << "amplitude = " << n(c.source.amplitude) << "\n"
        << "frequency = " << n(c.source.frequency) << "\n"
        << "cycles = " << c.source.cycles << "\n"
        << "phase = " << n(c.source.phase) << "\n\n"
        << "[run]\n"
        << "dt = " << n(c.run.dt) << "\n"
        << "record_stride = " << c.run.record_stride << "\n"
        << "fit_window = " << n(c.run.fit_window) << "\n"
        << "deviation_threshold = " << n(c.deviation_threshold) << "\n"
        << "v_t_s = " << n(c.v_t_s) << "\n"
        << "experiment = " << to_string(c.experiment) << "\n";
    return out.str();
}

}  // namespace memgrid
