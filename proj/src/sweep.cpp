#include "ptsim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ptsim {

std::vector<double>& SweepTable::add_column(const std::string& name) {
    columns.emplace_back(name, std::vector<double>{});
    return columns.back().second;
}

const std::vector<double>& SweepTable::column(const std::string& name) const {
    for (const auto& [n, v] : columns) {
        if (n == name) return v;
    }
    throw std::out_of_range("SweepTable: no column named '" + name + "'");
}

bool SweepTable::has_column(const std::string& name) const {
    return std::any_of(columns.begin(), columns.end(),
                       [&](const auto& c) { return c.first == name; });
}

std::size_t SweepTable::n_rows() const {
    return columns.empty() ? 0 : columns.front().second.size();
}

void SweepTable::add_meta(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n == 0) return {};
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = a;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

void apply_normalization(Normalization norm, TwoPhotonProbs& indist,
                         TwoPhotonProbs& dist) {
    switch (norm) {
        case Normalization::none:
            return;
        case Normalization::survivors: {
            const double si = indist.sum();
            const double sd = dist.sum();
            if (si > 0.0) {
                indist.p20 /= si;
                indist.p11 /= si;
                indist.p02 /= si;
            }
            if (sd > 0.0) {
                dist.p20 /= sd;
                dist.p11 /= sd;
                dist.p02 /= sd;
            }
            return;
        }
        case Normalization::dist_rate: {
            const double r = dist.p11;
            if (r <= 0.0) {
                throw std::domain_error(
                    "normalization dist-rate: p11_dist vanishes");
            }
            indist.p20 /= r;
            indist.p11 /= r;
            indist.p02 /= r;
            dist.p20 /= r;
            dist.p11 /= r;
            dist.p02 /= r;
            return;
        }
    }
}

SweepSpec default_spec(GeometryMode mode) {
    SweepSpec spec;
    spec.kind = SystemKind::bare;
    spec.kappa = 0.26;
    spec.length = mode == GeometryMode::idealized ? idealized_length(spec.kappa) : 2.1;
    // Eight loss samples, mirroring the device series with sine amplitudes
    // 0..3.5 um in 0.5 um steps; the per-sample gamma values are not
    // published, so a uniform grid stands in and stays configurable.
    spec.gamma_grid = linspace(0.0, 0.63, 8);
    spec.delay_grid = linspace(-0.8, 0.8, 161);
    spec.source = SourceModel{0.15, 0.95};
    spec.normalization = Normalization::none;
    return spec;
}

SweepSpec default_spec_for(FigureId figure, GeometryMode mode) {
    SweepSpec spec = default_spec(mode);
    spec.figure = figure;
    switch (figure) {
        case FigureId::fig2b:
        case FigureId::fig4c:
            // Continuous ratio grid gamma/kappa in [0, 2.4].
            spec.gamma_grid = linspace(0.0, 2.4 * spec.kappa, 201);
            break;
        case FigureId::fig3bcd:
        case FigureId::fig3e:
            break;
        case FigureId::fig4b:
            spec.kind = SystemKind::sandwiched;
            break;
    }
    return spec;
}

void validate_spec(const SweepSpec& spec) {
    if (!(std::isfinite(spec.kappa) && spec.kappa > 0.0)) {
        throw std::domain_error("SweepSpec: kappa must be finite and > 0");
    }
    if (!(std::isfinite(spec.length) && spec.length > 0.0)) {
        throw std::domain_error("SweepSpec: length must be finite and > 0");
    }
    if (spec.gamma_grid.empty()) {
        throw std::domain_error("SweepSpec: gamma_grid is empty");
    }
    if (spec.delay_grid.empty()) {
        throw std::domain_error("SweepSpec: delay_grid is empty");
    }
    if (!std::is_sorted(spec.gamma_grid.begin(), spec.gamma_grid.end())) {
        throw std::domain_error("SweepSpec: gamma_grid must be sorted ascending");
    }
    if (!std::is_sorted(spec.delay_grid.begin(), spec.delay_grid.end())) {
        throw std::domain_error("SweepSpec: delay_grid must be sorted ascending");
    }
    for (double g : spec.gamma_grid) {
        if (!(std::isfinite(g) && g >= 0.0)) {
            throw std::domain_error("SweepSpec: gamma values must be finite and >= 0");
        }
    }
    for (double d : spec.delay_grid) {
        if (!std::isfinite(d)) {
            throw std::domain_error("SweepSpec: delay values must be finite");
        }
    }
}

const char* to_string(Normalization n) {
    switch (n) {
        case Normalization::none: return "none";
        case Normalization::survivors: return "survivors";
        case Normalization::dist_rate: return "dist-rate";
    }
    return "?";
}

const char* to_string(SystemKind k) {
    return k == SystemKind::bare ? "bare" : "sandwiched";
}

const char* to_string(FigureId f) {
    switch (f) {
        case FigureId::fig2b: return "fig2b";
        case FigureId::fig3bcd: return "fig3bcd";
        case FigureId::fig3e: return "fig3e";
        case FigureId::fig4b: return "fig4b";
        case FigureId::fig4c: return "fig4c";
    }
    return "?";
}

std::optional<Normalization> normalization_from_string(const std::string& s) {
    if (s == "none") return Normalization::none;
    if (s == "survivors") return Normalization::survivors;
    if (s == "dist-rate" || s == "dist_rate") return Normalization::dist_rate;
    return std::nullopt;
}

std::optional<SystemKind> kind_from_string(const std::string& s) {
    if (s == "bare") return SystemKind::bare;
    if (s == "sandwiched") return SystemKind::sandwiched;
    return std::nullopt;
}

std::optional<FigureId> figure_from_string(const std::string& s) {
    if (s == "fig2b") return FigureId::fig2b;
    if (s == "fig3bcd") return FigureId::fig3bcd;
    if (s == "fig3e") return FigureId::fig3e;
    if (s == "fig4b") return FigureId::fig4b;
    if (s == "fig4c") return FigureId::fig4c;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad numeric value for '" + key + "': " + value);
    }
    if (used != value.size()) {
        throw std::runtime_error("config: trailing junk in value for '" + key + "': " + value);
    }
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            throw std::runtime_error("config: empty list element for '" + key + "'");
        }
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) {
        throw std::runtime_error("config: empty list for '" + key + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::runtime_error("config: bad boolean for '" + key + "': " + value);
}

}  // namespace

ConfigOverrides parse_config(std::istream& in) {
    ConfigOverrides o;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " is not of the form key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " has an empty key or value");
        }

        if (key == "kind") {
            const auto k = kind_from_string(value);
            if (!k) throw std::runtime_error("config: unknown kind '" + value + "'");
            o.kind = *k;
        } else if (key == "kappa") {
            o.kappa = parse_double(key, value);
        } else if (key == "length") {
            o.length = parse_double(key, value);
        } else if (key == "gamma_grid") {
            o.gamma_grid = parse_list(key, value);
        } else if (key == "delay_grid") {
            o.delay_grid = parse_list(key, value);
        } else if (key == "tau_c") {
            o.tau_c = parse_double(key, value);
        } else if (key == "v_max") {
            o.v_max = parse_double(key, value);
        } else if (key == "normalization") {
            const auto n = normalization_from_string(value);
            if (!n) throw std::runtime_error("config: unknown normalization '" + value + "'");
            o.normalization = *n;
        } else if (key == "figure") {
            const auto f = figure_from_string(value);
            if (!f) throw std::runtime_error("config: unknown figure '" + value + "'");
            o.figure = *f;
        } else if (key == "idealized") {
            o.idealized = parse_bool(key, value);
        } else {
            throw std::runtime_error("config: unknown key '" + key + "'");
        }
    }
    return o;
}

ConfigOverrides parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot open '" + path + "'");
    }
    return parse_config(in);
}

void apply_overrides(SweepSpec& spec, const ConfigOverrides& o) {
    if (o.kind) spec.kind = *o.kind;
    if (o.kappa) spec.kappa = *o.kappa;
    if (o.length) spec.length = *o.length;
    if (o.gamma_grid) spec.gamma_grid = *o.gamma_grid;
    if (o.delay_grid) spec.delay_grid = *o.delay_grid;
    if (o.tau_c || o.v_max) {
        spec.source = SourceModel{o.tau_c.value_or(spec.source.tau_c_ps),
                                  o.v_max.value_or(spec.source.v_max)};
    }
    if (o.normalization) spec.normalization = *o.normalization;
    if (o.figure) spec.figure = *o.figure;
}

}  // namespace ptsim
