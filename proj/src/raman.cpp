#include "ramanoam/raman.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"

namespace ramanoam {

SidebandLabel SidebandLabel::anti_stokes(int n) {
    if (n < 1) throw std::invalid_argument("anti-Stokes order must be >= 1");
    return SidebandLabel(Kind::AntiStokes, n);
}

SidebandLabel SidebandLabel::stokes_order(int n) {
    if (n < 1) throw std::invalid_argument("Stokes order must be >= 1");
    return SidebandLabel(Kind::StokesOrder, n);
}

SidebandLabel SidebandLabel::from_ladder_index(int k) {
    if (k == 0) return stokes();
    if (k == 1) return pump();
    if (k > 1) return anti_stokes(k - 1);
    return stokes_order(-k);
}

int SidebandLabel::ladder_index() const {
    switch (kind_) {
        case Kind::Stokes: return 0;
        case Kind::Pump: return 1;
        case Kind::AntiStokes: return order_ + 1;
        case Kind::StokesOrder: return -order_;
    }
    return 0;
}

std::string SidebandLabel::name() const {
    switch (kind_) {
        case Kind::Pump: return "P";
        case Kind::Stokes: return "S";
        case Kind::AntiStokes: return "AS" + std::to_string(order_);
        case Kind::StokesOrder: return "S" + std::to_string(order_);
    }
    return {};
}

SidebandLabel SidebandLabel::parse(std::string_view text) {
    auto parse_order = [&](std::string_view digits) {
        int n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1)
            throw std::invalid_argument("bad sideband label '" + std::string(text) + "'");
        return n;
    };
    if (text == "P") return pump();
    if (text == "S") return stokes();
    if (text.starts_with("AS")) return anti_stokes(parse_order(text.substr(2)));
    if (text.starts_with("S")) return stokes_order(parse_order(text.substr(1)));
    throw std::invalid_argument("bad sideband label '" + std::string(text) + "'");
}

RamanConfig RamanConfig::from_spectroscopy(double pump_wavelength, double shift_cm, int ell_p, int ell_s,
                                           int max_as, int max_s) {
    RamanConfig cfg;
    cfg.omega_p = wavelength_to_angular(pump_wavelength);
    cfg.omega_R = wavenumber_to_angular(shift_cm);
    cfg.omega_s = cfg.omega_p - cfg.omega_R;
    cfg.ell_p = ell_p;
    cfg.ell_s = ell_s;
    cfg.max_as = max_as;
    cfg.max_s = max_s;
    cfg.validate();
    return cfg;
}

void RamanConfig::validate() const {
    if (!(omega_s > 0.0) || !(omega_p > omega_s))
        throw std::invalid_argument("Raman config requires omega_p > omega_s > 0");
    if (!(omega_R > 0.0)) throw std::invalid_argument("Raman mode frequency must be positive");
    if (max_as < 0 || max_s < 0) throw std::invalid_argument("highest generated orders must be non-negative");
}

double RamanConfig::detuning() const { return std::abs((omega_p - omega_s) - omega_R) / omega_R; }

std::vector<std::string> RamanConfig::warnings() const {
    std::vector<std::string> out;
    if (detuning() > detuning_tolerance) {
        std::ostringstream msg;
        msg << "pump-Stokes spacing is detuned from the Raman mode by " << 100.0 * detuning() << "%";
        out.push_back(msg.str());
    }
    return out;
}

double sideband_frequency(const RamanConfig& cfg, SidebandLabel label) {
    const int k = label.ladder_index();
    const double omega = cfg.omega_s + k * (cfg.omega_p - cfg.omega_s);
    if (!(omega > 0.0))
        throw UnphysicalLadderError("sideband " + label.name() + " would have non-positive frequency");
    return omega;
}

int sideband_charge(const RamanConfig& cfg, SidebandLabel label) {
    return cfg.ell_s + label.ladder_index() * (cfg.ell_p - cfg.ell_s);
}

RecursionResult cascade_phase_recursion(const RamanConfig& cfg, SidebandLabel label) {
    const PhaseCombination phi_p{1, 0};
    const PhaseCombination phi_s{0, 1};
    auto add = [](PhaseCombination a, PhaseCombination b) {
        return PhaseCombination{a.pump_weight + b.pump_weight, a.stokes_weight + b.stokes_weight};
    };
    auto sub = [](PhaseCombination a, PhaseCombination b) {
        return PhaseCombination{a.pump_weight - b.pump_weight, a.stokes_weight - b.stokes_weight};
    };

    PhaseCombination phi;
    switch (label.kind()) {
        case SidebandLabel::Kind::Pump: phi = phi_p; break;
        case SidebandLabel::Kind::Stokes: phi = phi_s; break;
        case SidebandLabel::Kind::AntiStokes:
            phi = phi_p;
            for (int n = 1; n <= label.order(); ++n) phi = sub(add(phi_p, phi), phi_s);
            break;
        case SidebandLabel::Kind::StokesOrder:
            phi = phi_s;
            for (int n = 1; n <= label.order(); ++n) phi = sub(add(phi_s, phi), phi_p);
            break;
    }
    return {phi, phi.pump_weight * cfg.omega_p + phi.stokes_weight * cfg.omega_s,
            phi.pump_weight * cfg.ell_p + phi.stokes_weight * cfg.ell_s};
}

PhaseCombination closed_form_phase(SidebandLabel label) {
    switch (label.kind()) {
        case SidebandLabel::Kind::Pump: return {1, 0};
        case SidebandLabel::Kind::Stokes: return {0, 1};
        case SidebandLabel::Kind::AntiStokes: return {label.order() + 1, -label.order()};
        case SidebandLabel::Kind::StokesOrder: return {-label.order(), label.order() + 1};
    }
    return {};
}

bool conservation_check(const RamanConfig& cfg, int n) {
    if (n < 1) throw std::invalid_argument("conservation check needs order n >= 1");
    return sideband_charge(cfg, SidebandLabel::stokes_order(n)) + sideband_charge(cfg, SidebandLabel::anti_stokes(n)) ==
           cfg.ell_s + cfg.ell_p;
}

namespace {

std::vector<Complex> unit_peak(const ComplexFieldGrid& f) {
    double peak = 0.0;
    for (const auto& v : f.values()) peak = std::max(peak, std::abs(v));
    if (!(peak > 0.0)) throw DegenerateOverlapError("spatial sideband: input field is identically zero");
    std::vector<Complex> out(f.values());
    for (auto& v : out) v /= peak;
    return out;
}

Complex ipow(Complex base, int exponent) {
    Complex out{1.0, 0.0};
    for (int e = 0; e < exponent; ++e) out *= base;
    return out;
}

}  // namespace

ComplexFieldGrid spatial_sideband(const ComplexFieldGrid& pump, const ComplexFieldGrid& stokes, SidebandLabel label) {
    require_same_grid(pump.spec(), stokes.spec(), "spatial sideband");
    const int k = label.ladder_index();
    const double omega_p = wavelength_to_angular(pump.wavelength());
    const double omega_s = wavelength_to_angular(stokes.wavelength());
    const double omega = omega_s + k * (omega_p - omega_s);
    if (!(omega > 0.0))
        throw UnphysicalLadderError("sideband " + label.name() + " would have non-positive frequency");

    // k >= 1: u_p^k (u_s*)^(k-1); k <= 0: u_s^(1-k) (u_p*)^(-k).
    const auto up = unit_peak(pump);
    const auto us = unit_peak(stokes);
    std::vector<Complex> prod(up.size());
    double peak2 = 0.0;
    for (std::size_t n = 0; n < prod.size(); ++n) {
        prod[n] = k >= 1 ? ipow(up[n], k) * ipow(std::conj(us[n]), k - 1)
                         : ipow(us[n], 1 - k) * ipow(std::conj(up[n]), -k);
        peak2 = std::max(peak2, std::norm(prod[n]));
    }
    if (peak2 < 1e-12)
        throw DegenerateOverlapError("spatial sideband " + label.name() + ": pump and Stokes barely overlap");
    return ComplexFieldGrid(pump.spec(), angular_to_wavelength(omega), std::move(prod)).normalized();
}

const CombChannel* SpectralComb::find(SidebandLabel label) const {
    for (const auto& c : channels)
        if (c.label == label) return &c;
    return nullptr;
}

SpectralComb build_comb(const RamanConfig& cfg, const AmplitudeModel& model) {
    cfg.validate();
    SpectralComb comb;
    for (int k = -cfg.max_s; k <= cfg.max_as + 1; ++k) {
        const auto label = SidebandLabel::from_ladder_index(k);
        // Steps away from the nearer input line: Stokes for k <= 0, pump for k >= 1.
        const int steps = k >= 1 ? k - 1 : -k;
        double amp = 1.0;
        if (const auto* g = std::get_if<GeometricAmplitude>(&model)) amp = std::pow(g->ratio, steps);
        comb.channels.push_back({label, k, sideband_frequency(cfg, label), sideband_charge(cfg, label), Complex(amp)});
    }
    return comb;
}

}  // namespace ramanoam
