#include "ramanoam/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string_view>

#include "ramanoam/constants.hpp"
#include "ramanoam/optics.hpp"

namespace ramanoam::cli {

ConfigError::ConfigError(std::string key_, int line_, const std::string& message)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + key_ + ": " + message
                                   : key_ + ": " + message),
      key(std::move(key_)),
      line(line_) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Throws std::invalid_argument with a short reason; the caller attaches key and line.
double parse_double(std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
        throw std::invalid_argument("expected a number, got '" + std::string(v) + "'");
    return out;
}

long long parse_integer(std::string_view v) {
    long long out = 0;
    const char* first = v.data();
    if (!v.empty() && v.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || first == v.data() + v.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(v) + "'");
    return out;
}

int parse_int(std::string_view v) {
    const long long x = parse_integer(v);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw std::invalid_argument("integer out of range");
    return static_cast<int>(x);
}

bool parse_bool(std::string_view v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument("expected true or false, got '" + std::string(v) + "'");
}

std::uint64_t parse_u64(std::string_view v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw std::invalid_argument("expected an unsigned integer, got '" + std::string(v) + "'");
    return out;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"pump_wavelength_nm", [](RunConfig& c, std::string_view v) { c.pump_wavelength_nm = parse_double(v); }},
        {"raman_shift_cm1", [](RunConfig& c, std::string_view v) { c.raman_shift_cm1 = parse_double(v); }},
        {"spp_charge", [](RunConfig& c, std::string_view v) { c.spp_charge = parse_int(v); }},
        {"michelson_reflections", [](RunConfig& c, std::string_view v) { c.michelson_reflections = parse_int(v); }},
        {"m5_in", [](RunConfig& c, std::string_view v) { c.m5_in = parse_bool(v); }},
        {"ell_p", [](RunConfig& c, std::string_view v) { c.ell_p = parse_int(v); }},
        {"ell_s", [](RunConfig& c, std::string_view v) { c.ell_s = parse_int(v); }},
        {"grid_n", [](RunConfig& c, std::string_view v) { c.grid_n = parse_int(v); }},
        {"grid_pitch_um", [](RunConfig& c, std::string_view v) { c.grid_pitch_um = parse_double(v); }},
        {"waist_um", [](RunConfig& c, std::string_view v) { c.waist_um = parse_double(v); }},
        {"input_beam_mm", [](RunConfig& c, std::string_view v) { c.input_beam_mm = parse_double(v); }},
        {"lens_focal_m", [](RunConfig& c, std::string_view v) { c.lens_focal_m = parse_double(v); }},
        {"tilt_deg", [](RunConfig& c, std::string_view v) { c.tilt_deg = parse_double(v); }},
        {"observation_zr", [](RunConfig& c, std::string_view v) { c.observation_zr = parse_double(v); }},
        {"noise", [](RunConfig& c, std::string_view v) { c.noise = parse_double(v); }},
        {"orders", [](RunConfig& c, std::string_view v) { c.orders = std::string(v); }},
        {"comb_max_as", [](RunConfig& c, std::string_view v) { c.comb_max_as = parse_int(v); }},
        {"comb_max_s", [](RunConfig& c, std::string_view v) { c.comb_max_s = parse_int(v); }},
        {"amplitude_model", [](RunConfig& c, std::string_view v) { c.amplitude_model = std::string(v); }},
        {"amplitude_ratio", [](RunConfig& c, std::string_view v) { c.amplitude_ratio = parse_double(v); }},
        {"match", [](RunConfig& c, std::string_view v) { c.match = parse_bool(v); }},
        {"chirp_b", [](RunConfig& c, std::string_view v) { c.chirp_b = parse_double(v); }},
        {"delay_fs", [](RunConfig& c, std::string_view v) { c.delay_fs = parse_double(v); }},
        {"tau_fs", [](RunConfig& c, std::string_view v) { c.tau_fs = parse_double(v); }},
        {"pulse_dt_fs", [](RunConfig& c, std::string_view v) { c.pulse_dt_fs = parse_double(v); }},
        {"pulse_nt", [](RunConfig& c, std::string_view v) { c.pulse_nt = parse_int(v); }},
        {"pulse_max_as", [](RunConfig& c, std::string_view v) { c.pulse_max_as = parse_int(v); }},
        {"pulse_max_s", [](RunConfig& c, std::string_view v) { c.pulse_max_s = parse_int(v); }},
        {"seed", [](RunConfig& c, std::string_view v) { c.seed = parse_u64(v); }},
    };
    return table;
}

void assign(RunConfig& cfg, std::string_view key, std::string_view value, int line) {
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError(std::string(key), line, "unknown key");
    try {
        it->second(cfg, value);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(key), line, e.what());
    }
}

std::vector<SidebandLabel> parse_orders(const std::string& text) {
    const auto colon = text.find(':');
    std::vector<SidebandLabel> out;
    if (colon != std::string::npos) {
        const int a = SidebandLabel::parse(trim(std::string_view(text).substr(0, colon))).ladder_index();
        const int b = SidebandLabel::parse(trim(std::string_view(text).substr(colon + 1))).ladder_index();
        for (int k = std::max(a, b); k >= std::min(a, b); --k) out.push_back(SidebandLabel::from_ladder_index(k));
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto t = trim(item);
        if (!t.empty()) out.push_back(SidebandLabel::parse(t));
    }
    if (out.empty()) throw std::invalid_argument("no orders given");
    return out;
}

}  // namespace

int RunConfig::pump_charge() const {
    if (ell_p && ell_s) return *ell_p;
    return BeamCrossingSetup{spp_charge, ReflectionParity{michelson_reflections}, m5_in}.pump_charge();
}

int RunConfig::stokes_charge() const {
    if (ell_p && ell_s) return *ell_s;
    return BeamCrossingSetup{spp_charge, ReflectionParity{michelson_reflections}, m5_in}.stokes_charge();
}

double RunConfig::waist_m() const {
    if (waist_um) return *waist_um * 1e-6;
    // Gaussian focal spot w = lambda f / (pi W) for input radius W.
    return pump_wavelength_nm * 1e-9 * lens_focal_m / (kPi * input_beam_mm * 1e-3);
}

RamanConfig RunConfig::raman(int max_as, int max_s) const {
    return RamanConfig::from_spectroscopy(pump_wavelength_nm * 1e-9, raman_shift_cm1, pump_charge(), stokes_charge(),
                                          max_as, max_s);
}

AmplitudeModel RunConfig::amplitude() const {
    if (amplitude_model == "uniform") return UniformAmplitude{};
    return GeometricAmplitude{amplitude_ratio};
}

std::vector<SidebandLabel> RunConfig::order_labels() const { return parse_orders(orders); }

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) throw ConfigError(std::string(s), line, "expected key = value");
        const auto key = trim(s.substr(0, eq));
        const auto value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("", line, "missing key");
        if (value.empty()) throw ConfigError(std::string(key), line, "missing value");
        assign(cfg, key, value, line);
    }
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError(assignment, 0, "expected key=value");
    const auto key = trim(std::string_view(assignment).substr(0, eq));
    const auto value = trim(std::string_view(assignment).substr(eq + 1));
    if (value.empty()) throw ConfigError(std::string(key), 0, "missing value");
    assign(cfg, key, value, 0);
}

void validate(const RunConfig& c) {
    auto positive = [](const char* key, double v) {
        if (!(v > 0.0)) throw ConfigError(key, 0, "must be positive");
    };
    positive("pump_wavelength_nm", c.pump_wavelength_nm);
    positive("raman_shift_cm1", c.raman_shift_cm1);
    // The Stokes line must stay at a positive frequency.
    if (c.raman_shift_cm1 >= 1e7 / c.pump_wavelength_nm)
        throw ConfigError("raman_shift_cm1", 0, "shift exceeds the pump wavenumber");
    if (c.michelson_reflections < 0) throw ConfigError("michelson_reflections", 0, "must be non-negative");
    if (c.ell_p.has_value() != c.ell_s.has_value())
        throw ConfigError(c.ell_p ? "ell_s" : "ell_p", 0, "ell_p and ell_s must be given together");
    if (c.grid_n < 32 || c.grid_n > 8192) throw ConfigError("grid_n", 0, "must be in [32, 8192]");
    positive("grid_pitch_um", c.grid_pitch_um);
    if (c.waist_um) positive("waist_um", *c.waist_um);
    positive("input_beam_mm", c.input_beam_mm);
    positive("lens_focal_m", c.lens_focal_m);
    if (!(c.tilt_deg > 0.0 && c.tilt_deg < 45.0)) throw ConfigError("tilt_deg", 0, "must be in (0, 45)");
    if (!(c.observation_zr >= 0.0)) throw ConfigError("observation_zr", 0, "must be non-negative");
    if (!(c.noise >= 0.0 && c.noise < 1.0)) throw ConfigError("noise", 0, "must be in [0, 1)");
    try {
        (void)c.order_labels();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("orders", 0, e.what());
    }
    if (c.comb_max_as < 0) throw ConfigError("comb_max_as", 0, "must be non-negative");
    if (c.comb_max_s < 0) throw ConfigError("comb_max_s", 0, "must be non-negative");
    if (c.amplitude_model != "geometric" && c.amplitude_model != "uniform")
        throw ConfigError("amplitude_model", 0, "must be geometric or uniform");
    if (!(c.amplitude_ratio > 0.0 && c.amplitude_ratio <= 1.0))
        throw ConfigError("amplitude_ratio", 0, "must be in (0, 1]");
    if (c.chirp_b && !(*c.chirp_b != 0.0)) throw ConfigError("chirp_b", 0, "must be nonzero");
    if (!c.match && !c.chirp_b) throw ConfigError("chirp_b", 0, "required when match = false");
    if (!(c.delay_fs >= 0.0)) throw ConfigError("delay_fs", 0, "must be non-negative");
    positive("tau_fs", c.tau_fs);
    positive("pulse_dt_fs", c.pulse_dt_fs);
    if (c.pulse_nt < 64) throw ConfigError("pulse_nt", 0, "must be at least 64");
    if (c.pulse_max_as < 0) throw ConfigError("pulse_max_as", 0, "must be non-negative");
    if (c.pulse_max_s < 0) throw ConfigError("pulse_max_s", 0, "must be non-negative");
}

}  // namespace ramanoam::cli
