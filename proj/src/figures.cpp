#include "ptsim/figures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ptsim/table_io.hpp"
#include "ptsim/version.hpp"

namespace ptsim {

namespace {

std::string grid_to_string(std::span<const double> grid) {
    std::string s;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i) s += ',';
        s += format_real(grid[i]);
    }
    return s;
}

void add_common_meta(SweepTable& t, const SweepSpec& spec, const char* figure) {
    t.add_meta("tool_version", kVersion);
    t.add_meta("figure", figure);
    t.add_meta("kind", to_string(spec.kind));
    t.add_meta("kappa_per_cm", format_real(spec.kappa));
    t.add_meta("length_cm", format_real(spec.length));
    t.add_meta("gamma_grid_per_cm", grid_to_string(spec.gamma_grid));
    t.add_meta("delay_grid_ps", grid_to_string(spec.delay_grid));
    t.add_meta("tau_c_ps", format_real(spec.source.tau_c_ps));
    t.add_meta("v_max", format_real(spec.source.v_max));
    t.add_meta("normalization", to_string(spec.normalization));
    t.add_meta("sign_convention", "U = exp(-i H z); lossy mode damps as exp(-gamma z)");
    t.add_meta("mode_indexing", "mode 1 = lossless waveguide, mode 2 = lossy waveguide");
}

// Delay grid must reach the distinguishable plateau on both sides.
void require_delay_span(const SweepSpec& spec, const char* who) {
    const double span = 5.0 * spec.source.tau_c_ps;
    if (spec.delay_grid.front() > -span || spec.delay_grid.back() < span) {
        throw std::domain_error(std::string(who) +
                                ": delay grid must span at least +-5*tau_c");
    }
}

SweepTable hom_family(const SweepSpec& spec, SystemKind kind, const char* figure,
                      Exec exec) {
    validate_spec(spec);
    require_delay_span(spec, figure);

    SweepSpec effective = spec;
    effective.kind = kind;
    effective.normalization = Normalization::dist_rate;

    const std::size_t n_gamma = effective.gamma_grid.size();
    const std::size_t n_delay = effective.delay_grid.size();

    SweepTable t;
    add_common_meta(t, effective, figure);
    t.add_meta("normalization_note",
               "rates are coincidences relative to the distinguishable-photon rate");

    t.add_column("delay_ps").assign(effective.delay_grid.begin(),
                                    effective.delay_grid.end());
    std::vector<std::vector<double>*> rate_cols(n_gamma);
    for (std::size_t gi = 0; gi < n_gamma; ++gi) {
        char name[64];
        std::snprintf(name, sizeof(name), "rate%zu_gamma%.6g", gi,
                      effective.gamma_grid[gi]);
        auto& col = t.add_column(name);
        col.resize(n_delay);
        rate_cols[gi] = &col;
    }

    for_each_index(n_gamma, exec, [&](std::size_t gi) {
        const CouplerParams p{effective.kappa, effective.gamma_grid[gi],
                              effective.length};
        const HomCurve curve =
            hom_curve(propagator(p, kind), effective.source, effective.delay_grid);
        *rate_cols[gi] = curve.rates;
    });
    return t;
}

}  // namespace

SweepTable run_fig2b(double kappa, std::span<const double> gamma_grid,
                     [[maybe_unused]] Exec exec) {
    // eigen_spectrum validates the grid and kappa and does the branch
    // sorting; rows are cheap, so the sweep itself stays sequential.
    const std::vector<SpectrumRow> rows = eigen_spectrum(gamma_grid, kappa);

    SweepTable t;
    t.add_meta("tool_version", kVersion);
    t.add_meta("figure", "fig2b");
    t.add_meta("kind", "bare");
    t.add_meta("kappa_per_cm", format_real(kappa));
    t.add_meta("gamma_grid_per_cm", grid_to_string(gamma_grid));
    t.add_meta("units", "eigenvalues normalized by kappa");
    t.add_meta("sign_convention", "U = exp(-i H z); lossy mode damps as exp(-gamma z)");

    auto& ratio = t.add_column("gamma_over_kappa");
    auto& re1 = t.add_column("re_l1");
    auto& re2 = t.add_column("re_l2");
    auto& im1 = t.add_column("im_l1");
    auto& im2 = t.add_column("im_l2");
    for (const SpectrumRow& r : rows) {
        ratio.push_back(r.gamma_over_kappa);
        re1.push_back(std::real(r.lambda1) / kappa);
        re2.push_back(std::real(r.lambda2) / kappa);
        im1.push_back(std::imag(r.lambda1) / kappa);
        im2.push_back(std::imag(r.lambda2) / kappa);
    }
    return t;
}

SweepTable run_fig3bcd(const SweepSpec& spec, Exec exec) {
    validate_spec(spec);
    if (spec.kind != SystemKind::bare) {
        throw std::domain_error("run_fig3bcd: requires kind = bare");
    }

    const std::size_t n = spec.gamma_grid.size();
    SweepTable t;
    add_common_meta(t, spec, "fig3bcd");

    auto& g = t.add_column("gamma");
    g.assign(spec.gamma_grid.begin(), spec.gamma_grid.end());
    auto& p20i = t.add_column("p20_indist");
    auto& p11i = t.add_column("p11_indist");
    auto& p02i = t.add_column("p02_indist");
    auto& p20d = t.add_column("p20_dist");
    auto& p11d = t.add_column("p11_dist");
    auto& p02d = t.add_column("p02_dist");
    for (auto* col : {&p20i, &p11i, &p02i, &p20d, &p11d, &p02d}) col->resize(n);

    for_each_index(n, exec, [&](std::size_t i) {
        const CouplerParams p{spec.kappa, spec.gamma_grid[i], spec.length};
        const Mat2 u = propagator(p, SystemKind::bare);
        TwoPhotonProbs indist = two_photon_probs_indist(u);
        TwoPhotonProbs dist = two_photon_probs_dist(u);
        apply_normalization(spec.normalization, indist, dist);
        p20i[i] = indist.p20;
        p11i[i] = indist.p11;
        p02i[i] = indist.p02;
        p20d[i] = dist.p20;
        p11d[i] = dist.p11;
        p02d[i] = dist.p02;
    });
    return t;
}

SweepTable run_fig3e(const SweepSpec& spec, Exec exec) {
    return hom_family(spec, SystemKind::bare, "fig3e", exec);
}

SweepTable run_fig4b(const SweepSpec& spec, Exec exec) {
    return hom_family(spec, SystemKind::sandwiched, "fig4b", exec);
}

SweepTable run_fig4c(const SweepSpec& spec, Exec exec) {
    validate_spec(spec);
    if (spec.gamma_grid.front() >= spec.kappa || spec.gamma_grid.back() <= spec.kappa) {
        throw std::domain_error("run_fig4c: gamma grid must cross gamma = kappa");
    }

    const std::size_t n = spec.gamma_grid.size();
    SweepTable t;
    add_common_meta(t, spec, "fig4c");

    auto& ratio = t.add_column("gamma_over_kappa");
    auto& vb = t.add_column("visibility_bare");
    auto& vs = t.add_column("visibility_sandwiched");
    ratio.resize(n);
    vb.resize(n);
    vs.resize(n);

    for_each_index(n, exec, [&](std::size_t i) {
        const double gamma = spec.gamma_grid[i];
        ratio[i] = gamma / spec.kappa;
        const CouplerParams p{spec.kappa, gamma, spec.length};
        vb[i] = visibility(propagator(p, SystemKind::bare), spec.source.v_max);
        vs[i] = visibility(propagator(p, SystemKind::sandwiched), spec.source.v_max);
    });
    return t;
}

SweepTable run_figure(FigureId figure, const SweepSpec& spec, Exec exec) {
    switch (figure) {
        case FigureId::fig2b:
            return run_fig2b(spec.kappa, spec.gamma_grid, exec);
        case FigureId::fig3bcd:
            return run_fig3bcd(spec, exec);
        case FigureId::fig3e:
            return run_fig3e(spec, exec);
        case FigureId::fig4b:
            return run_fig4b(spec, exec);
        case FigureId::fig4c:
            return run_fig4c(spec, exec);
    }
    throw std::domain_error("run_figure: unknown figure id");
}

}  // namespace ptsim
