#pragma once

#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptsim/coupler.hpp"
#include "ptsim/fock.hpp"

namespace ptsim {

/// How probability tables are reported.
enum class Normalization {
    none,       // post-selected against the full input (default)
    survivors,  // per surviving pair: divide each triple by its sum
    dist_rate,  // per distinguishable rate: divide by p11_dist of the row
};

enum class FigureId { fig2b, fig3bcd, fig3e, fig4b, fig4c };

/// Device geometry presets. Nominal mode uses the fabricated-device
/// parameters (kappa = 0.26 /cm, z = 2.1 cm, which is not an exact 50/50
/// splitter at zero loss); idealized mode forces kappa*z = pi/4 so the
/// lossless reference is a textbook 50/50 coupler.
enum class GeometryMode { nominal, idealized };

/// Full description of one parameter sweep. Carries everything needed to
/// reproduce the output bit-identically.
struct SweepSpec {
    SystemKind kind = SystemKind::bare;
    double kappa = 0.26;            // 1/cm
    double length = 2.1;            // cm
    std::vector<double> gamma_grid; // 1/cm, sorted ascending
    std::vector<double> delay_grid; // ps, sorted ascending
    SourceModel source{0.15, 0.95};
    Normalization normalization = Normalization::none;
    std::optional<FigureId> figure;
};

/// Columnar sweep result. Column order is meaningful and preserved by
/// the writers; metadata echoes the generating spec plus the convention
/// notes (sign convention, mode indexing, normalization) and the tool
/// version.
struct SweepTable {
    // deque keeps references from add_column valid as more columns arrive
    std::deque<std::pair<std::string, std::vector<double>>> columns;
    std::vector<std::pair<std::string, std::string>> metadata;

    std::vector<double>& add_column(const std::string& name);
    const std::vector<double>& column(const std::string& name) const;
    bool has_column(const std::string& name) const;
    std::size_t n_rows() const;
    void add_meta(const std::string& key, const std::string& value);
};

/// n uniformly spaced points from a to b inclusive; n = 1 gives {a}.
std::vector<double> linspace(double a, double b, std::size_t n);

/// Rescales one row of output statistics in place. `survivors` divides
/// each triple by its own sum; `dist_rate` divides everything by the
/// distinguishable coincidence rate and throws std::domain_error when
/// that rate vanishes.
void apply_normalization(Normalization norm, TwoPhotonProbs& indist,
                         TwoPhotonProbs& dist);

/// Defaults mirroring the experiment: 8 loss samples on [0, 0.63] /cm,
/// 161 delays on [-0.8, 0.8] ps, kappa = 0.26 /cm with the mode's length
/// rule. The fig4c ratio grid (201 points on gamma/kappa in [0, 2.4]) is
/// substituted by default_spec_for().
SweepSpec default_spec(GeometryMode mode = GeometryMode::nominal);

/// Per-figure default spec (kind, grids) for the given geometry.
SweepSpec default_spec_for(FigureId figure, GeometryMode mode = GeometryMode::nominal);

/// Validates grids and physical parameters; throws std::domain_error.
void validate_spec(const SweepSpec& spec);

const char* to_string(Normalization n);
const char* to_string(SystemKind k);
const char* to_string(FigureId f);
std::optional<Normalization> normalization_from_string(const std::string& s);
std::optional<SystemKind> kind_from_string(const std::string& s);
std::optional<FigureId> figure_from_string(const std::string& s);

/// Parsed key=value config file. Keys are the SweepSpec fields
/// (kind, kappa, length, gamma_grid, delay_grid, tau_c, v_max,
/// normalization, figure) plus the geometry switch `idealized`.
/// '#' starts a comment, one key per line. Unknown keys are rejected.
struct ConfigOverrides {
    std::optional<SystemKind> kind;
    std::optional<double> kappa;
    std::optional<double> length;
    std::optional<std::vector<double>> gamma_grid;
    std::optional<std::vector<double>> delay_grid;
    std::optional<double> tau_c;
    std::optional<double> v_max;
    std::optional<Normalization> normalization;
    std::optional<FigureId> figure;
    std::optional<bool> idealized;
};

ConfigOverrides parse_config(std::istream& in);
ConfigOverrides parse_config_file(const std::string& path);

/// Applies overrides on top of a spec (grids replaced wholesale).
/// The `idealized` key is resolved by the caller, which knows whether an
/// explicit length was also given.
void apply_overrides(SweepSpec& spec, const ConfigOverrides& o);

}  // namespace ptsim
