#include "ramanoam/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ramanoam/beam.hpp"
#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"
#include "ramanoam/interferometry.hpp"
#include "ramanoam/io.hpp"
#include "ramanoam/pulse.hpp"
#include "ramanoam/raman.hpp"

namespace ramanoam::cli {

namespace fs = std::filesystem;

namespace {

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot create output directory " + dir.string());
}

std::string time_series_csv(const TimeGrid& grid, const std::vector<double>& values) {
    std::string out = "t_seconds,intensity\n";
    out.reserve(values.size() * 36);
    for (int i = 0; i < grid.nt; ++i) {
        out += io::format_scientific(grid.t(i), 9);
        out += ',';
        out += io::format_scientific(values[static_cast<std::size_t>(i)], 9);
        out += '\n';
    }
    return out;
}

std::optional<std::array<double, 2>> parse_hint(const std::string& hint) {
    if (hint == "auto") return std::nullopt;
    if (hint == "+x") return std::array<double, 2>{1.0, 0.0};
    if (hint == "-x") return std::array<double, 2>{-1.0, 0.0};
    if (hint == "+y") return std::array<double, 2>{0.0, 1.0};
    if (hint == "-y") return std::array<double, 2>{0.0, -1.0};
    throw ConfigError("carrier-hint", 0, "must be auto, +x, -x, +y or -y");
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config", 0, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int cmd_comb(const RunConfig& cfg, const fs::path& out_dir, std::ostream& log) {
    const auto raman = cfg.raman(cfg.comb_max_as, cfg.comb_max_s);
    const auto comb = build_comb(raman, cfg.amplitude());
    for (const auto& w : raman.warnings()) log << "warning: " << w << '\n';

    std::string csv = "label,k,wavelength_nm,frequency_THz,ell\n";
    for (const auto& ch : comb.channels) {
        csv += io::csv_field(ch.label.name()) + ',' + std::to_string(ch.k) + ',' +
               io::format_fixed(angular_to_wavelength(ch.omega) * 1e9, 4) + ',' +
               io::format_fixed(ch.omega / kTwoPi * 1e-12, 4) + ',' + std::to_string(ch.ell) + '\n';
    }
    prepare_dir(out_dir);
    io::write_text_file(out_dir / "comb.csv", csv);
    log << "comb: " << comb.channels.size() << " channels, ell_p=" << raman.ell_p << " ell_s=" << raman.ell_s
        << " -> " << (out_dir / "comb.csv").string() << '\n';
    return kExitOk;
}

int cmd_figure3(const RunConfig& cfg, const fs::path& out_dir, std::ostream& log) {
    const auto orders = cfg.order_labels();
    int max_as = 0;
    int max_s = 0;
    for (const auto& l : orders) {
        max_as = std::max(max_as, l.ladder_index() - 1);
        max_s = std::max(max_s, -l.ladder_index());
    }
    const auto raman = cfg.raman(max_as, max_s);

    PanelOptions opt;
    const double pitch = cfg.grid_pitch_um * 1e-6;
    opt.grid = GridSpec{cfg.grid_n, cfg.grid_n, pitch, pitch};
    opt.waist = cfg.waist_m();
    opt.tilt = cfg.tilt_deg * kPi / 180.0;
    opt.observation_distance =
        cfg.observation_zr * BeamParams{opt.waist, angular_to_wavelength(raman.omega_p)}.rayleigh_range();
    opt.noise = cfg.noise;
    opt.seed = cfg.seed;

    const auto entries = analyze_fig3_panel(raman, opt, orders);

    prepare_dir(out_dir);
    std::string csv = "label,ell,confidence,method,status\n";
    int failures = 0;
    for (const auto& e : entries) {
        const std::string name = e.label.name();
        if (!e.vortex_intensity.empty())
            io::write_pgm16(out_dir / ("intensity_" + name + ".pgm"), e.vortex_intensity, cfg.grid_n, cfg.grid_n);
        if (e.interferogram)
            io::write_pgm16(out_dir / ("interferogram_" + name + ".pgm"), e.interferogram->intensity, cfg.grid_n,
                            cfg.grid_n);
        if (e.reading && e.error.empty()) {
            const auto& r = *e.reading;
            const std::string status = r.flagged ? "flagged" : "ok";
            csv += io::csv_field(name) + ',' + std::to_string(r.ell) + ',' + io::format_fixed(r.confidence, 4) + ',' +
                   to_string(r.method) + ',' + status + '\n';
            log << name << ": ell=" << r.ell << " (expected " << e.expected_ell << ") confidence "
                << io::format_fixed(r.confidence, 3) << (r.flagged ? " flagged" : "") << '\n';
        } else {
            ++failures;
            csv += io::csv_field(name) + ",,,," + io::csv_field("error: " + e.error) + '\n';
            log << name << ": failed: " << e.error << '\n';
        }
    }
    io::write_text_file(out_dir / "readings.csv", csv);
    return (!entries.empty() && failures == static_cast<int>(entries.size())) ? kExitRuntime : kExitOk;
}

int cmd_pulse(const RunConfig& cfg, const fs::path& out_dir, std::ostream& log) {
    const auto raman = cfg.raman(cfg.pulse_max_as, cfg.pulse_max_s);
    const TimeGrid grid{cfg.pulse_nt, cfg.pulse_dt_fs * 1e-15};
    grid.validate();

    ChirpedPulsePair pair;
    pair.tau = cfg.tau_fs * 1e-15;
    pair.omega_0 = raman.omega_p;
    if (cfg.match && cfg.chirp_b) {
        pair.b = *cfg.chirp_b;
        pair.t_d = std::abs(matching_delay(raman.omega_R, pair.b));
    } else if (cfg.match) {
        pair.t_d = cfg.delay_fs * 1e-15;
        pair.b = pair.t_d > 0.0 ? raman.omega_R / pair.t_d : 0.0;
    } else {
        pair.b = *cfg.chirp_b;
        pair.t_d = cfg.delay_fs * 1e-15;
    }

    const auto beat = intensity_of(chirped_pair_field(pair, grid));
    const auto comb = build_comb(raman, cfg.amplitude());
    const auto waveform = synthesize_waveform(comb, grid);

    prepare_dir(out_dir);
    io::write_text_file(out_dir / "beat.csv", time_series_csv(grid, beat));
    io::write_text_file(out_dir / "waveform.csv", time_series_csv(grid, waveform));

    const double target_fs = oscillation_period(raman.omega_R) * 1e15;
    log << "target Raman period: " << io::format_fixed(target_fs, 3) << " fs\n";
    try {
        const double measured_fs = oscillation_period(envelope_modulation_frequency(beat, grid)) * 1e15;
        log << "beat: measured period " << io::format_fixed(measured_fs, 3) << " fs, relative error "
            << io::format_scientific(std::abs(measured_fs - target_fs) / target_fs, 3) << '\n';
    } catch (const NoPeriodicStructureError&) {
        log << "beat: no periodic structure\n";
    }
    try {
        const double train_fs = train_period(waveform, grid.dt) * 1e15;
        log << "comb train (" << comb.channels.size() << " channels): measured period "
            << io::format_fixed(train_fs, 3) << " fs, relative error "
            << io::format_scientific(std::abs(train_fs - target_fs) / target_fs, 3) << '\n';
    } catch (const NoPeriodicStructureError&) {
        log << "comb train: no periodic structure\n";
    }
    return kExitOk;
}

int cmd_analyze(const fs::path& image, const std::string& hint, const std::optional<fs::path>& out_dir,
                std::ostream& log) {
    ExtractOptions options;
    options.carrier_direction = parse_hint(hint);
    const auto img = io::read_pgm(image);

    Interferogram gram;
    gram.spec = GridSpec{img.width, img.height, 1.0, 1.0};
    gram.spec.validate();
    gram.intensity = img.values;
    const auto reading = extract_charge(gram, options);

    log << "ell=" << reading.ell << " confidence=" << io::format_fixed(reading.confidence, 4)
        << " method=" << to_string(reading.method) << (reading.flagged ? " flagged" : "") << '\n';
    if (out_dir) {
        prepare_dir(*out_dir);
        io::write_text_file(*out_dir / "analysis.csv",
                            "label,ell,confidence,method\n" + io::csv_field(image.stem().string()) + ',' +
                                std::to_string(reading.ell) + ',' + io::format_fixed(reading.confidence, 4) + ',' +
                                to_string(reading.method) + '\n');
    }
    return kExitOk;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Raman sideband generation with optical vortices"};
    app.require_subcommand(1);

    struct Common {
        std::string config;
        std::string out = ".";
        std::optional<std::uint64_t> seed;
        std::vector<std::string> sets;
    };
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "key = value configuration file");
        sub->add_option("--out", common.out, "output directory");
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--set", common.sets, "override, key=value (repeatable)");
    };
    auto* comb = app.add_subcommand("comb", "write the sideband ladder to comb.csv");
    auto* figure3 = app.add_subcommand("figure3", "simulate sideband profiles and interferograms");
    auto* pulse = app.add_subcommand("pulse", "chirped-pulse beat and comb waveform");
    for (auto* s : {comb, figure3, pulse}) add_common(s);

    auto* analyze = app.add_subcommand("analyze", "read the topological charge from a PGM interferogram");
    std::string image;
    std::string hint = "auto";
    std::string analyze_out;
    analyze->add_option("image", image, "P5 PGM file")->required();
    analyze->add_option("--carrier-hint", hint, "auto, +x, -x, +y or -y");
    analyze->add_option("--out", analyze_out, "directory for analysis.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (analyze->parsed()) {
            std::optional<fs::path> dir;
            if (!analyze_out.empty()) dir = analyze_out;
            return cmd_analyze(image, hint, dir, out);
        }
        RunConfig cfg;
        if (!common.config.empty()) apply_config_text(cfg, slurp(common.config));
        for (const auto& s : common.sets) apply_override(cfg, s);
        if (common.seed) cfg.seed = *common.seed;
        validate(cfg);

        if (comb->parsed()) return cmd_comb(cfg, common.out, out);
        if (figure3->parsed()) return cmd_figure3(cfg, common.out, out);
        return cmd_pulse(cfg, common.out, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const io::ImageFormatError& e) {
        err << "image error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const GridMismatchError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace ramanoam::cli
