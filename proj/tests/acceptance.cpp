// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramanoam/beam.hpp"
#include "ramanoam/cli/commands.hpp"
#include "ramanoam/cli/config.hpp"
#include "ramanoam/constants.hpp"
#include "ramanoam/interferometry.hpp"
#include "ramanoam/io.hpp"
#include "ramanoam/optics.hpp"
#include "ramanoam/pulse.hpp"
#include "ramanoam/raman.hpp"

using namespace ramanoam;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const char* id, const std::function<Outcome()>& check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
}

RamanConfig spectroscopy(int ell_p, int ell_s, int max_as = 2, int max_s = 2) {
    return RamanConfig::from_spectroscopy(800e-9, 320.0, ell_p, ell_s, max_as, max_s);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t n = 0; n < v.size(); ++n) s += (n ? "," : "") + std::to_string(v[n]);
    return s;
}

// Panel options as the figure3 command builds them from default settings.
PanelOptions default_panel(const cli::RunConfig& run) {
    PanelOptions opt;
    const double pitch = run.grid_pitch_um * 1e-6;
    opt.grid = GridSpec{run.grid_n, run.grid_n, pitch, pitch};
    opt.waist = run.waist_m();
    opt.tilt = run.tilt_deg * kPi / 180.0;
    opt.observation_distance = run.observation_zr * BeamParams{opt.waist, run.pump_wavelength_nm * 1e-9}.rayleigh_range();
    return opt;
}

const std::vector<SidebandLabel> kFigureOrders = {SidebandLabel::anti_stokes(2), SidebandLabel::anti_stokes(1),
                                                  SidebandLabel::pump(),         SidebandLabel::stokes(),
                                                  SidebandLabel::stokes_order(1), SidebandLabel::stokes_order(2)};

Outcome ac1() {
    const auto t0 = Clock::now();
    long checked = 0;
    for (int ell_p = -10; ell_p <= 10; ++ell_p)
        for (int ell_s = -10; ell_s <= 10; ++ell_s) {
            const auto cfg = spectroscopy(ell_p, ell_s, 25, 25);
            for (int k = -25; k <= 25; ++k) {
                const auto label = SidebandLabel::from_ladder_index(k);
                const auto r = cascade_phase_recursion(cfg, label);
                const auto closed = closed_form_phase(label);
                if (!(r.phase == closed) || r.ell != sideband_charge(cfg, label) ||
                    r.ell != closed.pump_weight * ell_p + closed.stokes_weight * ell_s)
                    return {false, "mismatch at " + label.name()};
                if (std::abs(r.omega - sideband_frequency(cfg, label)) > 1e-12 * r.omega)
                    return {false, "frequency mismatch at " + label.name()};
                ++checked;
            }
        }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << checked << " cases identical in " << s << " s (limit 1 s)";
    return {s < 1.0, d.str()};
}

Outcome ac2() {
    const auto t0 = Clock::now();
    cli::RunConfig run;  // 512 x 512 grid
    const auto opt = default_panel(run);
    auto readings = [&](int lp, int ls) {
        std::vector<int> out;
        for (const auto& e : analyze_fig3_panel(spectroscopy(lp, ls), opt, kFigureOrders))
            out.push_back(e.reading && e.error.empty() ? e.reading->ell : 999);
        return out;
    };
    const auto opposite = readings(1, -1);
    const auto same = readings(1, 1);
    const double s = seconds_since(t0);
    const bool ok = opposite == std::vector<int>{5, 3, 1, -1, -3, -5} && same == std::vector<int>(6, 1) && s < 60.0;
    std::ostringstream d;
    d << "AS2..S2 (1,-1): " << join(opposite) << "; (1,1): " << join(same) << "; grid " << run.grid_n << "^2 in " << s
      << " s (limit 60 s)";
    return {ok, d.str()};
}

Outcome ac3() {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> charge(-10, 10), order(1, 25);
    for (int trial = 0; trial < 10000; ++trial) {
        const int lp = charge(rng), ls = charge(rng), n = order(rng);
        const auto cfg = spectroscopy(lp, ls, 25, 25);
        const int sum = sideband_charge(cfg, SidebandLabel::stokes_order(n)) + sideband_charge(cfg, SidebandLabel::anti_stokes(n));
        if (sum != lp + ls || !conservation_check(cfg, n)) return {false, "violated at trial " + std::to_string(trial)};
    }
    return {true, "10000 random (ell_p, ell_s, n) triples conserve ell_s + ell_p"};
}

Outcome ac4() {
    const auto cfg = spectroscopy(1, -1, 20, 20);
    const double pump_cm = 1e7 / 800.0;
    const double as1 = angular_to_wavelength(sideband_frequency(cfg, SidebandLabel::anti_stokes(1))) * 1e9;
    const double s1 = angular_to_wavelength(sideband_frequency(cfg, SidebandLabel::stokes_order(1))) * 1e9;
    const double as1_oracle = 1e7 / (pump_cm + 320.0);
    const double s1_oracle = 1e7 / (pump_cm - 640.0);
    const auto comb = build_comb(cfg);
    int as_count = 0;
    bool positive = true;
    for (const auto& c : comb.channels) {
        positive = positive && c.omega > 0.0;
        as_count += c.label.kind() == SidebandLabel::Kind::AntiStokes;
    }
    const bool ok = std::abs(as1 - as1_oracle) < 0.1 && std::abs(s1 - s1_oracle) < 0.1 && std::abs(as1 - 780.0) < 0.1 &&
                    std::abs(s1 - 843.2) < 0.1 && as_count == 20 && positive;
    std::ostringstream d;
    d.precision(6);
    d << "AS1 " << as1 << " nm (oracle " << as1_oracle << "), S1 " << s1 << " nm (oracle " << s1_oracle << "), "
      << as_count << " AS lines up to AS20 at "
      << angular_to_wavelength(comb.find(SidebandLabel::anti_stokes(20))->omega) * 1e9 << " nm, all positive";
    return {ok, d.str()};
}

Outcome ac5() {
    const auto g = GridSpec::square(256, 40e-6);
    const BeamParams beam{1e-3, 800e-9};
    std::vector<double> lx, ly;
    for (int ell : {1, 2, 3, 4, 6, 9}) {
        lx.push_back(std::log(static_cast<double>(ell)));
        ly.push_back(std::log(ring_radius(lg_mode_field({0, ell}, beam, g))));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    // Sidebands of ell_p = -ell_s = 1, seen one pump Rayleigh range from the crystal.
    cli::RunConfig run;
    const auto opt = default_panel(run);
    const BeamParams pump{opt.waist, 800e-9};
    const auto cfg = spectroscopy(1, -1);
    const BeamParams stokes{opt.waist, angular_to_wavelength(cfg.omega_s)};
    const auto up = lg_mode_field({0, 1}, pump, opt.grid);
    const auto us = lg_mode_field({0, -1}, stokes, opt.grid);
    bool grows = true;
    std::ostringstream radii;
    for (bool anti : {true, false}) {
        double prev = 0.0;
        radii << (anti ? " AS side" : " S side");
        for (int order = 0; order <= 2; ++order) {
            const auto label = anti ? (order ? SidebandLabel::anti_stokes(order) : SidebandLabel::pump())
                                    : (order ? SidebandLabel::stokes_order(order) : SidebandLabel::stokes());
            const double r = ring_radius(propagate(spatial_sideband(up, us, label), *opt.observation_distance));
            radii << " " << label.name() << "=" << r * 1e6 << "um";
            grows = grows && r > prev;
            prev = r;
        }
    }
    std::ostringstream d;
    d << "slope " << slope << " (0.50 +- 0.05); sideband rings strictly increasing:" << radii.str();
    return {std::abs(slope - 0.5) <= 0.05 && grows, d.str()};
}

Outcome ac6() {
    const auto g = GridSpec::square(512, 2e-6);
    const double lambda = 800e-9;
    auto tilt_for = [&](double fringes) { return std::asin(fringes * lambda / (g.nx * g.dx)); };
    std::vector<ComplexFieldGrid> vortices, references;
    for (int ell = -5; ell <= 5; ++ell) {
        auto v = lg_mode_field({0, ell}, {120e-6, lambda}, g);
        const auto ref = lg_mode_field({0, 0}, {360e-6, lambda}, g);
        const double r = ring_radius(v);
        references.push_back(ref * (std::abs(v.sample(r, 0.0)) / std::abs(ref.sample(r, 0.0))));
        vortices.push_back(std::move(v));
    }
    auto through_file = [&](const Interferogram& gram) {
        const auto img = io::decode_pgm(io::encode_pgm16(gram.intensity, g.nx, g.ny));
        Interferogram loaded = gram;
        loaded.intensity = img.values;
        return loaded;
    };

    // Exact round trip, both carrier signs, with and without the file boundary.
    int exact_fail = 0;
    for (int ell = -5; ell <= 5; ++ell)
        for (double sign : {1.0, -1.0}) {
            const auto gram = synthesize_interferogram(vortices[ell + 5], references[ell + 5], sign * tilt_for(24));
            exact_fail += extract_charge(gram).ell != ell;
            exact_fail += extract_charge(through_file(gram)).ell != ell;
        }

    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> pick(-5, 5);
    std::uniform_real_distribution<double> fringes(12.0, 40.0);
    int ok = 0;
    const int trials = 500;
    for (int trial = 0; trial < trials; ++trial) {
        const int ell = pick(rng);
        const double sign = (rng() & 1u) ? 1.0 : -1.0;
        const auto gram = synthesize_interferogram(vortices[ell + 5], references[ell + 5], sign * tilt_for(fringes(rng)));
        const auto noisy = with_intensity_noise(gram, 0.05, 1000 + static_cast<std::uint64_t>(trial));
        ok += extract_charge(through_file(noisy)).ell == ell;
    }
    const double rate = static_cast<double>(ok) / trials;
    std::ostringstream d;
    d << "noise-free mismatches " << exact_fail << "/44; 5% noise + PGM: " << ok << "/" << trials << " exact ("
      << 100.0 * rate << "%, need >= 99%)";
    return {exact_fail == 0 && rate >= 0.99, d.str()};
}

Outcome ac7() {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{24e-6, 800e-9};
    const auto in = lg_mode_field({0, 0}, beam, g);
    auto fraction = [&](std::optional<int> steps) {
        const auto out = apply_spp(in, SppSpec{1, steps, 800e-9});
        return decompose(out, beam, 0, 1, 1).column_power(1) / out.power();
    };
    const double ratio_2d = fraction(16) / fraction(std::nullopt);

    // 1-D oracle: |(1/2pi) int exp(i q(theta)) exp(-i theta) dtheta|^2, staircase over continuous.
    auto coefficient = [](int steps) {
        const int n = 1 << 18;
        Complex s{};
        for (int q = 0; q < n; ++q) {
            const double t = kTwoPi * (q + 0.5) / n;
            const double phase = steps ? std::floor(t * steps / kTwoPi) * kTwoPi / steps : t;
            s += std::polar(1.0, phase - t);
        }
        return std::norm(s / static_cast<double>(n));
    };
    const double ratio_1d = coefficient(16) / coefficient(0);
    const bool agree = std::abs(ratio_2d - ratio_1d) < 1e-3;
    const bool retained = ratio_2d >= 0.99;
    std::ostringstream d;
    d.precision(6);
    d << "2-D ratio " << ratio_2d << ", 1-D oracle " << ratio_1d << " (agree within 1e-3: " << (agree ? "yes" : "no")
      << "); >= 0.99: " << (retained ? "yes" : "no") << ". The power ratio is sinc^2(pi/16) = 0.98722; 0.9936 is sinc(pi/16)";
    return {agree && retained, d.str()};
}

Outcome ac8() {
    const double omega_r = wavenumber_to_angular(320.0);
    const double oracle = 1.0 / (kSpeedOfLight * 100.0 * 320.0);
    const TimeGrid grid{16384, 0.5e-15};
    const double t_d = 300e-15;
    const ChirpedPulsePair pair{1e-12, omega_r / t_d, t_d, wavelength_to_angular(800e-9)};
    const auto beat = intensity_of(chirped_pair_field(pair, grid));
    const double measured = oscillation_period(envelope_modulation_frequency(beat, grid));

    const auto comb = build_comb(spectroscopy(0, 0, 2, 1), UniformAmplitude{});
    const double train = train_period(synthesize_waveform(comb, grid), grid.dt);
    const bool ok = std::abs(measured - oracle) <= 0.01 * oracle && comb.channels.size() == 5 &&
                    std::abs(train - oracle) <= grid.dt;
    std::ostringstream d;
    d.precision(6);
    d << "envelope period " << measured * 1e15 << " fs vs " << oracle * 1e15 << " fs (+-1%); 5-channel train "
      << train * 1e15 << " fs (within dt = " << grid.dt * 1e15 << " fs)";
    return {ok, d.str()};
}

Outcome ac9() {
    const fs::path root = fs::temp_directory_path() / ("ramanoam_acceptance_" + std::to_string(std::random_device{}()));
    const fs::path a = root / "a", b = root / "b";
    cli::RunConfig run;
    run.noise = 0.05;
    run.seed = 2024;
    std::ostringstream log;
    cli::cmd_figure3(run, a, log);
    cli::cmd_figure3(run, b, log);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    int files = 0, differ = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        ++files;
        const auto other = b / entry.path().filename();
        differ += !fs::exists(other) || slurp(entry.path()) != slurp(other);
    }
    int files_b = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(b)) ++files_b;
    fs::remove_all(root);
    std::ostringstream d;
    d << files << " files (PGM + CSV) compared, " << differ << " differ";
    return {files == 13 && files_b == files && differ == 0, d.str()};
}

}  // namespace

int main() {
    report("AC1", ac1);
    report("AC2", ac2);
    report("AC3", ac3);
    report("AC4", ac4);
    report("AC5", ac5);
    report("AC6", ac6);
    report("AC7", ac7);
    report("AC8", ac8);
    report("AC9", ac9);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
