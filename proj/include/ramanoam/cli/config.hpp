#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanoam/beam.hpp"
#include "ramanoam/raman.hpp"

namespace ramanoam::cli {

// Invalid configuration; `key` names the offending setting, `line` is 0 when
// the value did not come from a file.
struct ConfigError : std::runtime_error {
    ConfigError(std::string key, int line, const std::string& message);
    std::string key;
    int line;
};

// Flat `key = value` settings. Defaults follow the experiment: 800 nm pump,
// 320 cm^-1 Raman shift, 23 cm focusing lens, ~3 degree crossing.
struct RunConfig {
    double pump_wavelength_nm = 800.0;
    double raman_shift_cm1 = 320.0;

    int spp_charge = 1;
    int michelson_reflections = 1;
    bool m5_in = false;
    std::optional<int> ell_p;
    std::optional<int> ell_s;

    int grid_n = 512;
    double grid_pitch_um = 2.0;
    std::optional<double> waist_um;  // default: focal spot of input_beam_mm through lens_focal_m
    double input_beam_mm = 1.5;
    double lens_focal_m = 0.23;
    double tilt_deg = 1.5;
    double observation_zr = 1.0;
    double noise = 0.0;
    std::string orders = "S2:AS2";

    int comb_max_as = 20;
    int comb_max_s = 20;
    std::string amplitude_model = "geometric";
    double amplitude_ratio = 0.6;

    bool match = true;
    std::optional<double> chirp_b;  // rad/s^2
    double delay_fs = 300.0;
    double tau_fs = 1000.0;
    double pulse_dt_fs = 0.5;
    int pulse_nt = 16384;
    int pulse_max_as = 2;
    int pulse_max_s = 1;

    std::uint64_t seed = 0;

    // Charges at the crystal: explicit ell_p/ell_s if both are given, otherwise
    // the mirror-parity bookkeeping of the beam-crossing setup.
    int pump_charge() const;
    int stokes_charge() const;
    double waist_m() const;
    RamanConfig raman(int max_as, int max_s) const;
    AmplitudeModel amplitude() const;
    // Parsed `orders`, highest ladder index first.
    std::vector<SidebandLabel> order_labels() const;
};

// Applies `key = value` lines (with # comments) on top of `cfg`.
void apply_config_text(RunConfig& cfg, const std::string& text);
// Applies a single `key=value` override.
void apply_override(RunConfig& cfg, const std::string& assignment);
// Throws ConfigError naming the first offending key.
void validate(const RunConfig& cfg);

}  // namespace ramanoam::cli
