#pragma once

// Command-line front end. Every command writes CSV files plus a manifest.json
// recording the resolved configuration; `rerun --manifest` replays it.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage or configuration error.

#include <lightscope/apparatus.hpp>
#include <lightscope/config_io.hpp>
#include <lightscope/entanglement.hpp>
#include <lightscope/errors.hpp>
#include <lightscope/patterns.hpp>
#include <lightscope/photon_modes.hpp>
#include <lightscope/report.hpp>
#include <lightscope/semiclassical.hpp>
#include <lightscope/version.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace lightscope::cli {

struct Options {
    std::string command;
    std::optional<std::string> config_path;
    /// Set by `rerun`; takes precedence over config_path.
    std::optional<FileConfig> resolved;
    std::string out_dir = ".";
    std::vector<double> lambdas;
    std::vector<double> kappas;
    std::vector<double> xgammas;
    std::optional<std::size_t> grid_points;
    std::optional<double> grid_span;
    bool svg = false;
    bool override_regime = false;
    QuadratureSettings quadrature;
};

namespace detail {

using nlohmann::json;

inline std::string lambda_tag(double lambda) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "lambda_%g", lambda);
    return buf;
}

struct Run {
    Options options;
    FileConfig file;
    std::vector<std::string> outputs;

    std::string path(const std::string& name) {
        outputs.push_back(name);
        return (std::filesystem::path(options.out_dir) / name).string();
    }

    void csv(const std::string& name, const std::vector<CsvColumn>& columns) {
        write_csv(path(name), columns);
    }

    void svg(const std::string& name, const std::vector<CsvColumn>& columns,
             const std::string& title) {
        if (options.svg) {
            write_text(path(name), svg_plot(columns, title));
        }
    }

    /// Wavelengths to run: --lambda values, else the config's.
    std::vector<double> lambdas() const {
        return options.lambdas.empty() ? std::vector<double>{file.apparatus.photon_wavelength}
                                       : options.lambdas;
    }

    ValidatedConfig config(double lambda) const {
        ApparatusConfig c = file.apparatus;
        c.photon_wavelength = lambda;
        return validate(c, {options.override_regime});
    }

    DetectorGrid grid(const ValidatedConfig& c) const {
        const auto points = options.grid_points ? options.grid_points : file.grid_points;
        const auto span = options.grid_span ? options.grid_span : file.grid_span;
        if (!points && !span) {
            return full_grid(c);
        }
        const double half = span.value_or(kMaxHalfSpan * c->slit_separation);
        if (points) {
            return make_grid(c, half, *points);
        }
        return default_grid(c, half / c->fringe_period());
    }
};

inline json config_json(const FileConfig& f) {
    json j = {{"slit_separation", f.apparatus.slit_separation},
              {"slit_width", f.apparatus.slit_width},
              {"screen_distance", f.apparatus.screen_distance},
              {"photon_wavelength", f.apparatus.photon_wavelength},
              {"atom_de_broglie", f.apparatus.atom_de_broglie}};
    if (f.grid_span) {
        j["grid_span"] = *f.grid_span;
    }
    if (f.grid_points) {
        j["grid_points"] = *f.grid_points;
    }
    return j;
}

inline FileConfig config_from_json(const json& j) {
    FileConfig f;
    f.apparatus.slit_separation = j.at("slit_separation").get<double>();
    f.apparatus.slit_width = j.at("slit_width").get<double>();
    f.apparatus.screen_distance = j.at("screen_distance").get<double>();
    f.apparatus.photon_wavelength = j.at("photon_wavelength").get<double>();
    f.apparatus.atom_de_broglie = j.at("atom_de_broglie").get<double>();
    if (j.contains("grid_span")) {
        f.grid_span = j.at("grid_span").get<double>();
    }
    if (j.contains("grid_points")) {
        f.grid_points = j.at("grid_points").get<std::size_t>();
    }
    return f;
}

inline json manifest_json(const Run& run, double wall_seconds) {
    const auto& o = run.options;
    json j;
    j["command"] = o.command;
    j["config"] = config_json(run.file);
    j["lambdas"] = o.lambdas;
    j["kappas"] = o.kappas;
    j["xgammas"] = o.xgammas;
    if (o.grid_points) {
        j["grid_points"] = *o.grid_points;
    }
    if (o.grid_span) {
        j["grid_span"] = *o.grid_span;
    }
    j["svg"] = o.svg;
    j["override_regime"] = o.override_regime;
    j["quadrature"] = {{"slit_rule_order", o.quadrature.slit_rule_order},
                       {"recoil_samples", o.quadrature.recoil_samples},
                       {"workers", o.quadrature.workers}};
    j["outputs"] = run.outputs;
    j["tool_version"] = kVersion;
    j["wall_time_seconds"] = wall_seconds;
    return j;
}

inline Options options_from_manifest(const json& j) {
    Options o;
    o.command = j.at("command").get<std::string>();
    o.resolved = config_from_json(j.at("config"));
    o.lambdas = j.value("lambdas", std::vector<double>{});
    o.kappas = j.value("kappas", std::vector<double>{});
    o.xgammas = j.value("xgammas", std::vector<double>{});
    if (j.contains("grid_points")) {
        o.grid_points = j.at("grid_points").get<std::size_t>();
    }
    if (j.contains("grid_span")) {
        o.grid_span = j.at("grid_span").get<double>();
    }
    o.svg = j.value("svg", false);
    o.override_regime = j.value("override_regime", false);
    const auto& q = j.at("quadrature");
    o.quadrature.slit_rule_order = q.at("slit_rule_order").get<int>();
    o.quadrature.recoil_samples = q.at("recoil_samples").get<int>();
    o.quadrature.workers = q.at("workers").get<unsigned>();
    return o;
}

/// Unit-integral normalisation over the grid span, independent of grid density.
struct Normalizer {
    SpanRule span;
    unsigned workers;

    Normalizer(const SlitField& field, const DetectorGrid& grid)
        : span(field, Interval{grid.x_min(), grid.x_max()}), workers(field.settings().workers) {}

    template <class Density>
    std::vector<double> apply(const AtomPattern& p, Density&& density) const {
        const double integral = span.integral(density, workers);
        return normalized(p, integral).values;
    }
};

inline const std::string kXHeader = "x (units of d)";

inline void cmd_pattern(Run& run) {
    const auto config = run.config(run.lambdas().front());
    const auto grid = run.grid(config);
    if (grid.size() < 2) {
        throw ConfigError("pattern needs a grid with at least two points");
    }
    const SlitField field(config, run.options.quadrature);
    const Normalizer norm(field, grid);
    const auto w = run.options.quadrature.workers;

    auto emit = [&](const DetectorGrid& g, const std::string& stem) {
        const auto amps = sample_amplitudes(field, g);
        const auto p = no_photon_patterns(amps, w);
        std::vector<CsvColumn> cols{
            {kXHeader, g.positions},
            {"single_L (1/d)",
             norm.apply(p.single_left, [](const AmplitudePair& a) { return std::norm(a.left); })},
            {"single_R (1/d)",
             norm.apply(p.single_right, [](const AmplitudePair& a) { return std::norm(a.right); })},
            {"coherent (1/d)", norm.apply(p.coherent, coherent_density)},
            {"incoherent (1/d)", norm.apply(p.incoherent, incoherent_density)},
        };
        run.csv(stem + ".csv", cols);
        run.svg(stem + ".svg", cols, "atom probability, no photon");
    };
    emit(grid, "pattern");
    emit(default_grid(config, 3.0), "pattern_zoom");
}

inline void cmd_decohere(Run& run) {
    const auto w = run.options.quadrature.workers;
    std::optional<SlitAmplitudes> amps;
    std::optional<Normalizer> norm;
    for (double lambda : run.lambdas()) {
        const auto config = run.config(lambda);
        if (!amps) {
            const auto grid = run.grid(config);
            const SlitField field(config, run.options.quadrature);
            amps = sample_amplitudes(field, grid);
            norm.emplace(field, grid);
        }
        const auto& c = config.get();
        const auto rule = make_recoil_rule(c.photon_wavenumber(),
                                           run.options.quadrature.recoil_samples_for(c));
        const auto dec = decohered_pattern(*amps, config, run.options.quadrature);
        const auto p = no_photon_patterns(*amps, w);
        std::vector<CsvColumn> cols{
            {kXHeader, amps->grid.positions},
            {"decohered (1/d)",
             norm->apply(dec,
                         [&](const AmplitudePair& a) {
                             return decohered_density(a, rule, c.slit_separation);
                         })},
            {"coherent (1/d)", norm->apply(p.coherent, coherent_density)},
            {"incoherent (1/d)", norm->apply(p.incoherent, incoherent_density)},
        };
        const auto stem = "decohered_" + lambda_tag(lambda);
        run.csv(stem + ".csv", cols);
        run.svg(stem + ".svg", cols, "no photon detection, " + lambda_tag(lambda));
    }
}

/// Simpson intervals for the recoil average: >= 400 and >= 200 per cycle of
/// exp(i kappa d).
inline int average_intervals(const ApparatusConfig& c) {
    const double cycles =
        2.0 * c.photon_wavenumber() * c.slit_separation / (2.0 * std::numbers::pi);
    const int n = std::max(400, static_cast<int>(std::ceil(200.0 * cycles)));
    return n + (n % 2);
}

inline std::vector<double> default_kappas(const ApparatusConfig& c) {
    const double k = c.photon_wavenumber();
    return {0.0, 0.5 * k, k, 1.5 * k, 2.0 * k};
}

inline void cmd_farfield(Run& run) {
    const auto w = run.options.quadrature.workers;
    std::optional<SlitAmplitudes> amps;
    std::optional<Normalizer> norm;
    for (double lambda : run.lambdas()) {
        const auto config = run.config(lambda);
        const auto& c = config.get();
        const auto kappas = run.options.kappas.empty() ? default_kappas(c) : run.options.kappas;
        for (double kappa : kappas) {
            check_recoil(kappa, c);
        }
        if (!amps) {
            const auto grid = run.grid(config);
            const SlitField field(config, run.options.quadrature);
            amps = sample_amplitudes(field, grid);
            norm.emplace(field, grid);
        }
        const auto stem = "farfield_" + lambda_tag(lambda);
        std::vector<CsvColumn> overlay{{kXHeader, amps->grid.positions}};
        for (std::size_t i = 0; i < kappas.size(); ++i) {
            const auto jp = farfield_partial_pattern(kappas[i], *amps, config, w);
            const auto f = photon_factors(PhotonMode{FarField{kappas[i]}}, c);
            auto values = norm->apply(jp.atom_pattern,
                                      [&](const AmplitudePair& a) { return photon_density(a, f); });
            std::vector<CsvColumn> cols{
                {kXHeader, amps->grid.positions},
                {"conditional (1/d)", values},
                {"kappa (1/d)", std::vector<double>(values.size(), kappas[i])},
                {"joint_scale (1/d^2)", std::vector<double>(values.size(), jp.joint_scale)},
            };
            run.csv(stem + "_kappa" + std::to_string(i) + ".csv", cols);
            overlay.push_back({"kappa=" + format_number(kappas[i]), std::move(values)});
        }
        const int intervals = average_intervals(c);
        const auto avg = farfield_average_pattern(*amps, config, intervals, w);
        auto avg_values = norm->apply(avg, FarFieldAverageDensity(c, intervals));
        run.csv(stem + "_average.csv",
                {{kXHeader, amps->grid.positions}, {"average (1/d)", avg_values}});
        overlay.push_back({"average", std::move(avg_values)});
        run.svg(stem + ".svg", overlay, "far-field photon detection, " + lambda_tag(lambda));
    }
}

inline void cmd_imaging(Run& run) {
    const auto w = run.options.quadrature.workers;
    std::optional<SlitAmplitudes> amps;
    std::optional<Normalizer> norm;
    for (double lambda : run.lambdas()) {
        const auto config = run.config(lambda);
        const auto& c = config.get();
        const auto xgammas = run.options.xgammas.empty()
                                 ? std::vector<double>{0.0, 0.5 * c.slit_separation}
                                 : run.options.xgammas;
        if (!amps) {
            const auto grid = run.grid(config);
            const SlitField field(config, run.options.quadrature);
            amps = sample_amplitudes(field, grid);
            norm.emplace(field, grid);
        }
        const auto stem = "imaging_" + lambda_tag(lambda);
        std::vector<CsvColumn> overlay{{kXHeader, amps->grid.positions}};
        for (std::size_t i = 0; i < xgammas.size(); ++i) {
            const auto jp = imaging_partial_pattern(xgammas[i], *amps, config, w);
            const auto f = photon_factors(PhotonMode{ImagePoint{xgammas[i]}}, c);
            auto values = norm->apply(jp.atom_pattern,
                                      [&](const AmplitudePair& a) { return photon_density(a, f); });
            std::vector<CsvColumn> cols{
                {kXHeader, amps->grid.positions},
                {"conditional (1/d)", values},
                {"x_gamma (units of d)", std::vector<double>(values.size(), xgammas[i])},
                {"joint_scale (units of d)", std::vector<double>(values.size(), jp.joint_scale)},
            };
            run.csv(stem + "_xgamma" + std::to_string(i) + ".csv", cols);
            overlay.push_back({"x_gamma=" + format_number(xgammas[i]), std::move(values)});
        }
        run.svg(stem + ".svg", overlay, "imaging photon detection, " + lambda_tag(lambda));
    }
}

inline std::vector<double> default_sweep() {
    std::vector<double> out;
    for (int i = 0; i <= 80; ++i) {
        out.push_back(std::pow(10.0, -2.0 + 4.0 * i / 80.0));
    }
    return out;
}

inline void cmd_overlap(Run& run) {
    const double d = run.file.apparatus.slit_separation;
    const auto sweep = run.options.lambdas.empty() ? default_sweep() : run.options.lambdas;
    std::vector<CsvColumn> cols{{"lambda (units of d)", {}}, {"re_gamma", {}},
                                {"im_gamma", {}},          {"abs_gamma", {}},
                                {"purity", {}},            {"visibility_prediction", {}}};
    auto row = [&](double ratio, cplx g) {
        const double purity_value = lightscope::purity(reduce_to_atom(joint_density(g)));
        const double values[] = {ratio, g.real(), g.imag(), std::abs(g), purity_value, std::abs(g)};
        for (std::size_t i = 0; i < 6; ++i) {
            cols[i].values.push_back(values[i]);
        }
    };
    for (double lambda : sweep) {
        if (!(lambda > 0.0)) {
            throw ConfigError("sweep wavelengths must be positive");
        }
        row(lambda / d, slit_overlap(lambda, d, run.options.quadrature.recoil_samples).value());
    }
    // Separation -> 0 limit.
    row(INFINITY, slit_overlap(sweep.back(), 0.0, run.options.quadrature.recoil_samples).value());
    run.csv("overlap.csv", cols);
}

inline void cmd_density(Run& run) {
    for (double lambda : run.lambdas()) {
        const auto config = run.config(lambda);
        const auto g = slit_overlap(lambda, config->slit_separation,
                                    run.options.quadrature.recoil_samples);
        const auto joint = joint_density(g);
        const auto atom = reduce_to_atom(joint);
        std::string csv = "matrix,row,col,re,im\n";
        std::string text = "Gamma = " + format_sci(g.value().real()) + " + " +
                           format_sci(g.value().imag()) + " i\n";
        auto dump = [&](const char* name, const DensityMatrix& m) {
            text += std::string(name) + " (" + std::to_string(m.dimension()) + "x" +
                    std::to_string(m.dimension()) + "):\n";
            for (Eigen::Index r = 0; r < m.dimension(); ++r) {
                for (Eigen::Index c = 0; c < m.dimension(); ++c) {
                    csv += std::string(name) + "," + std::to_string(r) + "," + std::to_string(c) +
                           "," + format_sci(m(r, c).real()) + "," + format_sci(m(r, c).imag()) +
                           "\n";
                    char buf[80];
                    std::snprintf(buf, sizeof buf, "  %+.6f%+.6fi", m(r, c).real(), m(r, c).imag());
                    text += buf;
                }
                text += "\n";
            }
            text += "  purity = " + format_sci(purity(m)) + "\n";
        };
        dump("joint", joint);
        dump("atom", atom);
        text += "basis: joint (L e1, L e2, R e1, R e2); atom (L, R)\n";
        const auto stem = "density_" + lambda_tag(lambda);
        write_text(run.path(stem + ".csv"), csv);
        write_text(run.path(stem + ".txt"), text);
    }
}

inline void cmd_branch(Run& run) {
    CsvColumn lam{"lambda (units of d)", {}};
    CsvColumn n{"n_photons", {}};
    CsvColumn dist{"distinguishability", {}};
    CsvColumn plam{"lambda (units of d)", {}};
    CsvColumn xg{"x_gamma (units of d)", {}};
    CsvColumn pl{"p_L", {}};
    CsvColumn pr{"p_R", {}};
    for (double lambda : run.lambdas()) {
        const auto config = run.config(lambda);
        const double d = config->slit_separation;
        const auto g = slit_overlap(lambda, d, run.options.quadrature.recoil_samples).value();
        for (int photons = 0; photons <= 10; ++photons) {
            lam.values.push_back(lambda / d);
            n.values.push_back(photons);
            dist.values.push_back(branch_distinguishability(photons, g));
        }
        const auto xgammas = run.options.xgammas.empty()
                                 ? std::vector<double>{-0.5 * d, 0.0, 0.25 * d, 0.5 * d}
                                 : run.options.xgammas;
        for (double x : xgammas) {
            const auto post = which_path_posterior(x, lambda, config);
            plam.values.push_back(lambda / d);
            xg.values.push_back(x);
            pl.values.push_back(post.left);
            pr.values.push_back(post.right);
        }
    }
    run.csv("branch.csv", {lam, n, dist});
    run.csv("posterior.csv", {plam, xg, pl, pr});
}

inline void cmd_semiclassical(Run& run) {
    for (double lambda : run.lambdas()) {
        const auto config = run.config(lambda);
        const auto& c = config.get();
        std::vector<CsvColumn> cols{{kXHeader, {}},
                                    {"kappa (1/d)", {}},
                                    {"phase_before (rad)", {}},
                                    {"phase_after (rad)", {}},
                                    {"deflection (units of d)", {}},
                                    {"carry_residual (rad)", {}}};
        const auto kappas = run.options.kappas.empty() ? default_kappas(c) : run.options.kappas;
        for (double kappa : kappas) {
            check_recoil(kappa, c);
            for (int i = 0; i <= 24; ++i) {
                const double x = -kMaxHalfSpan + i * 0.5;
                const auto r = phase_report(x, kappa, c);
                const double values[] = {r.x,          r.kappa,      r.phase_before,
                                         r.phase_after, r.deflection, r.carry_residual};
                for (std::size_t j = 0; j < 6; ++j) {
                    cols[j].values.push_back(values[j]);
                }
            }
        }
        run.csv("semiclassical_" + lambda_tag(lambda) + ".csv", cols);
    }
}

inline void dispatch(Run& run) {
    const auto& cmd = run.options.command;
    if (cmd == "pattern") {
        cmd_pattern(run);
    } else if (cmd == "decohere") {
        cmd_decohere(run);
    } else if (cmd == "farfield") {
        cmd_farfield(run);
    } else if (cmd == "imaging") {
        cmd_imaging(run);
    } else if (cmd == "overlap") {
        cmd_overlap(run);
    } else if (cmd == "density") {
        cmd_density(run);
    } else if (cmd == "branch") {
        cmd_branch(run);
    } else if (cmd == "semiclassical") {
        cmd_semiclassical(run);
    } else {
        throw ConfigError("unknown command '" + cmd + "'");
    }
}

}  // namespace detail

/// Runs one command; throws lightscope errors.
inline void execute(const Options& options) {
    const auto start = std::chrono::steady_clock::now();
    detail::Run run{options, {}, {}};
    if (options.resolved) {
        run.file = *options.resolved;
    } else if (options.config_path) {
        run.file = load_config(*options.config_path);
    }
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + options.out_dir + "'");
    }
    if (options.command != "overlap") {
        for (double lambda : run.lambdas()) {
            const auto config = run.config(lambda);
            for (const auto& v : config.waived()) {
                std::cerr << "warning: regime check overridden: " << v.describe() << "\n";
            }
        }
    }
    detail::dispatch(run);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    run.outputs.push_back("manifest.json");
    write_text((std::filesystem::path(options.out_dir) / "manifest.json").string(),
               detail::manifest_json(run, seconds).dump(2) + "\n");
}

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const WindowTooNarrow*>(&e)) {
        return 2;
    }
    return 1;
}

inline int run(int argc, const char* const* argv) {
    CLI::App app{"Two-slit light-microscope simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Options o;
    std::string config_path;
    std::size_t grid_points = 0;
    double grid_span = 0.0;
    std::string manifest_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--out", o.out_dir, "output directory");
        sub->add_option("--lambda", o.lambdas, "photon wavelength(s) in units of d (repeatable)");
        sub->add_option("--grid-points", grid_points, "number of detector grid points");
        sub->add_option("--grid-span", grid_span, "half-width of the detector grid");
        sub->add_flag("--svg", o.svg, "also write SVG plots");
        sub->add_flag("--override-regime", o.override_regime,
                      "downgrade point-source and high-momentum checks to warnings");
        sub->add_option("--workers", o.quadrature.workers, "worker threads")
            ->check(CLI::PositiveNumber);
        sub->add_option("--rule-order", o.quadrature.slit_rule_order,
                        "Gauss-Legendre order per aperture panel")
            ->check(CLI::Range(2, 256));
        sub->add_option("--recoil-samples", o.quadrature.recoil_samples,
                        "recoil quadrature samples (0 = automatic)")
            ->check(CLI::NonNegativeNumber);
    };
    const std::pair<const char*, const char*> commands[] = {
        {"pattern", "no-photon single, coherent and incoherent patterns"},
        {"decohere", "pattern averaged over undetected photons"},
        {"farfield", "patterns conditioned on far-field photon recoil"},
        {"imaging", "patterns conditioned on imaging-detector photon position"},
        {"overlap", "sweep of Gamma = <gamma_R|gamma_L> against wavelength"},
        {"density", "joint and reduced density matrices"},
        {"branch", "branch distinguishability and which-path posteriors"},
        {"semiclassical", "narrow-slit phase report with phase-carry residuals"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        if (std::string(name) == "farfield" || std::string(name) == "semiclassical") {
            sub->add_option("--kappa", o.kappas, "recoil kappa_x in 1/d (repeatable)");
        }
        if (std::string(name) == "imaging" || std::string(name) == "branch") {
            sub->add_option("--xgamma", o.xgammas, "photon image position in units of d (repeatable)");
        }
    }
    auto* rerun = app.add_subcommand("rerun", "replay a manifest.json");
    rerun->add_option("--manifest", manifest_path, "manifest to replay")->required();
    rerun->add_option("--out", o.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto* sub = app.get_subcommands().front();
        if (sub->get_name() == "rerun") {
            std::ifstream in(manifest_path);
            if (!in) {
                throw ConfigError("cannot open manifest '" + manifest_path + "'");
            }
            Options replay;
            try {
                replay = detail::options_from_manifest(nlohmann::json::parse(in));
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("malformed manifest: ") + e.what());
            }
            if (rerun->count("--out") > 0) {
                replay.out_dir = o.out_dir;
            } else {
                replay.out_dir = std::filesystem::path(manifest_path).parent_path().string();
                if (replay.out_dir.empty()) {
                    replay.out_dir = ".";
                }
            }
            execute(replay);
            return 0;
        }
        o.command = sub->get_name();
        if (!config_path.empty()) {
            o.config_path = config_path;
        }
        if (sub->count("--grid-points") > 0) {
            o.grid_points = grid_points;
        }
        if (sub->count("--grid-span") > 0) {
            o.grid_span = grid_span;
        }
        execute(o);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace lightscope::cli
