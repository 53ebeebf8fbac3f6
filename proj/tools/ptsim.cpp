// ptsim: two-photon quantum interference in lossy PT-symmetric
// directional couplers: single-point queries, sweeps and figure-style
// datasets from the analytic model.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptsim/figures.hpp"
#include "ptsim/table_io.hpp"
#include "ptsim/version.hpp"

namespace {

using namespace ptsim;

constexpr const char* kSynopsis =
    "usage: ptsim <spectrum|probs|hom|visibility|figure> [options]\n"
    "Run 'ptsim --help' or 'ptsim <command> --help' for details.\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flag values for one subcommand; presence is tracked through the
// CLI11 option pointers so config-file values only fill the gaps.
struct CommonFlags {
    double kappa = 0.26;
    double gamma = 0.0;
    double length = 2.1;
    double tau_c = 0.15;
    double v_max = 0.95;
    bool sandwiched = false;
    bool idealized = false;
    std::string normalization = "none";
    std::string format = "csv";
    std::string output;
    std::string config_path;

    CLI::Option* kappa_opt = nullptr;
    CLI::Option* length_opt = nullptr;
    CLI::Option* tau_c_opt = nullptr;
    CLI::Option* v_max_opt = nullptr;
    CLI::Option* sandwiched_opt = nullptr;
    CLI::Option* idealized_opt = nullptr;
    CLI::Option* normalization_opt = nullptr;
};

ConfigOverrides load_config(const CommonFlags& f) {
    if (f.config_path.empty()) return {};
    return parse_config_file(f.config_path);
}

// spectrum/probs/hom/visibility address one concrete device, so kappa has
// to come from somewhere explicit; figure falls back to the built-in
// defaults instead.
void require_kappa(const CommonFlags& f, const ConfigOverrides& cfg) {
    if ((!f.kappa_opt || !f.kappa_opt->count()) && !cfg.kappa) {
        throw UsageError("--kappa is required (flag or config)");
    }
}

// Flags beat config values; --idealized (from either source) beats an
// explicit length and pins kappa*z = pi/4.
void resolve_into_spec(SweepSpec& spec, const CommonFlags& f, const ConfigOverrides& cfg) {
    apply_overrides(spec, cfg);
    if (f.kappa_opt && f.kappa_opt->count()) spec.kappa = f.kappa;
    if (f.length_opt && f.length_opt->count()) spec.length = f.length;
    if (f.tau_c_opt && f.tau_c_opt->count()) {
        spec.source = SourceModel{f.tau_c, spec.source.v_max};
    }
    if (f.v_max_opt && f.v_max_opt->count()) {
        spec.source = SourceModel{spec.source.tau_c_ps, f.v_max};
    }
    if (f.normalization_opt && f.normalization_opt->count()) {
        spec.normalization = *normalization_from_string(f.normalization);
    }
    if (f.sandwiched_opt && f.sandwiched_opt->count()) {
        spec.kind = SystemKind::sandwiched;
    }
    const bool idealized =
        (f.idealized_opt && f.idealized_opt->count()) || cfg.idealized.value_or(false);
    if (idealized) spec.length = idealized_length(spec.kappa);
}

void emit_table(const SweepTable& table, const CommonFlags& f) {
    const auto fmt = format_from_string(f.format);
    if (!fmt) throw UsageError("unknown format '" + f.format + "'");
    if (f.output.empty()) {
        write_table(table, *fmt, std::cout);
    } else {
        write_table_file(table, *fmt, f.output);
    }
}

void add_device_flags(CLI::App* cmd, CommonFlags& f) {
    f.kappa_opt = cmd->add_option("--kappa", f.kappa, "coupling rate kappa (1/cm)")
                      ->check(CLI::PositiveNumber);
    f.length_opt = cmd->add_option("--length", f.length,
                                   "coupler length z (cm), default 2.1")
                       ->check(CLI::PositiveNumber);
    f.sandwiched_opt = cmd->add_flag(
        "--sandwiched", f.sandwiched,
        "lossy coupler sandwiched between two 50/50 couplers (default: bare)");
    f.idealized_opt = cmd->add_flag(
        "--idealized", f.idealized,
        "force the 50/50 geometry kappa*z = pi/4 (overrides --length)");
    cmd->add_option("--config", f.config_path,
                    "key=value config file; flags override its values");
}

void add_source_flags(CLI::App* cmd, CommonFlags& f) {
    f.tau_c_opt = cmd->add_option("--tau-c", f.tau_c,
                                  "photon coherence time tau_c (ps), default 0.15")
                      ->check(CLI::PositiveNumber);
    f.v_max_opt = cmd->add_option("--vmax", f.v_max,
                                  "peak indistinguishability in [0,1], default 0.95")
                      ->check(CLI::Range(0.0, 1.0));
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "output format: csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", f.output, "output path (default: stdout)");
}

nlohmann::ordered_json params_json(const SweepSpec& spec, double gamma) {
    nlohmann::ordered_json j;
    j["kappa_per_cm"] = spec.kappa;
    j["gamma_per_cm"] = gamma;
    j["length_cm"] = spec.length;
    j["kind"] = to_string(spec.kind);
    return j;
}

int run_spectrum(const CommonFlags& f, double gamma_min, double gamma_max,
                 std::size_t points) {
    if (gamma_max <= gamma_min) {
        throw UsageError("--gamma-max must exceed --gamma-min");
    }
    const ConfigOverrides cfg = load_config(f);
    require_kappa(f, cfg);
    SweepSpec spec = default_spec();
    resolve_into_spec(spec, f, cfg);
    const auto grid = linspace(gamma_min, gamma_max, points);
    emit_table(run_fig2b(spec.kappa, grid), f);
    return 0;
}

int run_probs(const CommonFlags& f) {
    const ConfigOverrides cfg = load_config(f);
    require_kappa(f, cfg);
    SweepSpec spec = default_spec();
    resolve_into_spec(spec, f, cfg);
    const CouplerParams p{spec.kappa, f.gamma, spec.length};
    const Mat2 u = propagator(p, spec.kind);

    TwoPhotonProbs indist = two_photon_probs_indist(u);
    TwoPhotonProbs dist = two_photon_probs_dist(u);
    const double j_term = interference_term(u);
    apply_normalization(spec.normalization, indist, dist);

    nlohmann::ordered_json j = params_json(spec, f.gamma);
    j["normalization"] = to_string(spec.normalization);
    j["p20_indist"] = indist.p20;
    j["p11_indist"] = indist.p11;
    j["p02_indist"] = indist.p02;
    j["p20_dist"] = dist.p20;
    j["p11_dist"] = dist.p11;
    j["p02_dist"] = dist.p02;
    j["interference_term"] = j_term;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_hom(const CommonFlags& f, double delay_max, std::size_t points) {
    const ConfigOverrides cfg = load_config(f);
    require_kappa(f, cfg);
    SweepSpec spec = default_spec();
    resolve_into_spec(spec, f, cfg);
    spec.gamma_grid = {f.gamma};
    spec.delay_grid = linspace(-delay_max, delay_max, points);
    const SweepTable table =
        spec.kind == SystemKind::bare ? run_fig3e(spec) : run_fig4b(spec);
    emit_table(table, f);
    return 0;
}

int run_visibility(const CommonFlags& f) {
    const ConfigOverrides cfg = load_config(f);
    require_kappa(f, cfg);
    SweepSpec spec = default_spec();
    resolve_into_spec(spec, f, cfg);
    const CouplerParams p{spec.kappa, f.gamma, spec.length};
    const Mat2 u = propagator(p, spec.kind);

    nlohmann::ordered_json j = params_json(spec, f.gamma);
    j["v_max"] = spec.source.v_max;
    j["p11_dist"] = two_photon_probs_dist(u).p11;
    j["interference_term"] = interference_term(u);
    j["visibility"] = visibility(u, spec.source.v_max);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_figure_cmd(const CommonFlags& f, const std::string& id_arg,
                   CLI::Option* gamma_max_opt, double gamma_max,
                   CLI::Option* points_opt, std::size_t points) {
    const ConfigOverrides cfg = load_config(f);

    std::optional<FigureId> figure;
    if (!id_arg.empty()) {
        figure = figure_from_string(id_arg);
        if (!figure) throw UsageError("unknown figure '" + id_arg + "'");
    } else if (cfg.figure) {
        figure = cfg.figure;
    } else {
        throw UsageError("figure: no figure id given (argument or config)");
    }

    const bool idealized =
        (f.idealized_opt && f.idealized_opt->count()) || cfg.idealized.value_or(false);
    SweepSpec spec = default_spec_for(
        *figure, idealized ? GeometryMode::idealized : GeometryMode::nominal);
    resolve_into_spec(spec, f, cfg);

    // Grid overrides: --points resizes the figure's primary grid
    // (gamma grid; delay grid for the HOM families), --gamma-max rescales
    // the loss range.
    const bool delay_figure = *figure == FigureId::fig3e || *figure == FigureId::fig4b;
    if (gamma_max_opt->count()) {
        spec.gamma_grid =
            linspace(0.0, gamma_max, spec.gamma_grid.size());
    }
    if (points_opt->count()) {
        if (delay_figure) {
            spec.delay_grid = linspace(spec.delay_grid.front(),
                                       spec.delay_grid.back(), points);
        } else {
            spec.gamma_grid = linspace(spec.gamma_grid.front(),
                                       spec.gamma_grid.back(), points);
        }
    }

    emit_table(run_figure(*figure, spec), f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ptsim: two-photon interference in lossy PT-symmetric directional "
        "couplers.\nMode 1 is the lossless waveguide, mode 2 the lossy one; "
        "units are 1/cm for rates, cm for lengths, ps for delays."};
    app.set_version_flag("--version", ptsim::kVersion);
    app.require_subcommand(0, 1);

    CommonFlags spectrum_f, probs_f, hom_f, vis_f, fig_f;
    double gamma_min = 0.0, gamma_max = 0.63;
    std::size_t spectrum_points = 201;
    double hom_delay_max = 0.8;
    std::size_t hom_points = 161;
    double fig_gamma_max = 0.63;
    std::size_t fig_points = 0;
    std::string figure_id;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "eigenvalue spectrum of the bare lossy coupler vs loss");
    add_device_flags(spectrum, spectrum_f);
    spectrum->add_option("--gamma-min", gamma_min, "sweep start (1/cm), default 0")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--gamma-max", gamma_max, "sweep end (1/cm), default 0.63")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--points", spectrum_points, "grid points, default 201")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    add_output_flags(spectrum, spectrum_f);

    CLI::App* probs = app.add_subcommand(
        "probs", "post-selected two-photon output probabilities (JSON to stdout)");
    add_device_flags(probs, probs_f);
    probs->add_option("--gamma", probs_f.gamma, "loss rate gamma (1/cm)")
        ->check(CLI::NonNegativeNumber)
        ->required();
    probs_f.normalization_opt =
        probs->add_option("--normalization", probs_f.normalization,
                          "none | survivors | dist-rate (default none)")
            ->check(CLI::IsMember({"none", "survivors", "dist-rate"}));

    CLI::App* hom = app.add_subcommand(
        "hom", "Hong-Ou-Mandel delay scan, rates normalized to the "
               "distinguishable-photon rate");
    add_device_flags(hom, hom_f);
    hom->add_option("--gamma", hom_f.gamma, "loss rate gamma (1/cm)")
        ->check(CLI::NonNegativeNumber)
        ->required();
    add_source_flags(hom, hom_f);
    hom->add_option("--delay-max", hom_delay_max,
                    "scan range +-delay-max (ps), default 0.8")
        ->check(CLI::PositiveNumber);
    hom->add_option("--points", hom_points, "delay grid points, default 161")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    add_output_flags(hom, hom_f);

    CLI::App* vis = app.add_subcommand(
        "visibility", "HOM visibility (positive: dip, negative: peak; JSON)");
    add_device_flags(vis, vis_f);
    vis->add_option("--gamma", vis_f.gamma, "loss rate gamma (1/cm)")
        ->check(CLI::NonNegativeNumber)
        ->required();
    add_source_flags(vis, vis_f);

    CLI::App* fig = app.add_subcommand(
        "figure", "emit a full plot-ready dataset "
                  "(fig2b, fig3bcd, fig3e, fig4b, fig4c)");
    fig->add_option("id", figure_id, "dataset: fig2b | fig3bcd | fig3e | fig4b | fig4c");
    add_device_flags(fig, fig_f);
    add_source_flags(fig, fig_f);
    fig_f.normalization_opt =
        fig->add_option("--normalization", fig_f.normalization,
                        "none | survivors | dist-rate (default none)")
            ->check(CLI::IsMember({"none", "survivors", "dist-rate"}));
    CLI::Option* fig_gamma_max_opt =
        fig->add_option("--gamma-max", fig_gamma_max, "loss range end (1/cm)")
            ->check(CLI::NonNegativeNumber);
    CLI::Option* fig_points_opt =
        fig->add_option("--points", fig_points, "primary grid size")
            ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    add_output_flags(fig, fig_f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ptsim: " << e.what() << "\n" << kSynopsis;
        return 2;
    }

    try {
        if (spectrum->parsed()) {
            return run_spectrum(spectrum_f, gamma_min, gamma_max, spectrum_points);
        }
        if (probs->parsed()) return run_probs(probs_f);
        if (hom->parsed()) return run_hom(hom_f, hom_delay_max, hom_points);
        if (vis->parsed()) return run_visibility(vis_f);
        if (fig->parsed()) {
            return run_figure_cmd(fig_f, figure_id, fig_gamma_max_opt, fig_gamma_max,
                                  fig_points_opt, fig_points);
        }
        std::cerr << "ptsim: no command given\n" << kSynopsis;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "ptsim: " << e.what() << "\n" << kSynopsis;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ptsim: error: " << e.what() << "\n";
        return 1;
    }
}
