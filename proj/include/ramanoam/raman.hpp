#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramanoam/field.hpp"

namespace ramanoam {

// Identity of one comb line. Order n >= 1 for the AntiStokes and StokesOrder kinds.
class SidebandLabel {
public:
    enum class Kind { Pump, Stokes, AntiStokes, StokesOrder };

    static SidebandLabel pump() { return SidebandLabel(Kind::Pump, 0); }
    static SidebandLabel stokes() { return SidebandLabel(Kind::Stokes, 0); }
    static SidebandLabel anti_stokes(int n);
    static SidebandLabel stokes_order(int n);

    // Ladder index: Stokes 0, Pump 1, AS_n n+1, S_n -n.
    static SidebandLabel from_ladder_index(int k);
    int ladder_index() const;

    // "P", "S", "AS<n>", "S<n>"; parse() throws std::invalid_argument on anything else.
    std::string name() const;
    static SidebandLabel parse(std::string_view text);

    Kind kind() const { return kind_; }
    int order() const { return order_; }

    bool operator==(const SidebandLabel&) const = default;

private:
    SidebandLabel(Kind kind, int order) : kind_(kind), order_(order) {}
    Kind kind_;
    int order_;
};

// Pump/Stokes pair driving the cascade. Frequencies are angular (rad/s).
struct RamanConfig {
    double omega_p = 0.0;
    double omega_s = 0.0;
    int ell_p = 0;
    int ell_s = 0;
    double omega_R = 0.0;
    int max_as = 2;
    int max_s = 2;
    double detuning_tolerance = 0.1;

    // Pump at `pump_wavelength`, Stokes red-shifted by `shift_cm` wavenumbers,
    // Raman mode at the same shift.
    static RamanConfig from_spectroscopy(double pump_wavelength, double shift_cm, int ell_p, int ell_s,
                                         int max_as = 2, int max_s = 2);

    // Throws std::invalid_argument unless omega_p > omega_s > 0 and omega_R > 0.
    void validate() const;
    double detuning() const;  // |(omega_p - omega_s) - omega_R| / omega_R
    // Non-fatal findings, e.g. pump-Stokes spacing detuned from the Raman mode.
    std::vector<std::string> warnings() const;
};

// Throws UnphysicalLadderError if the ladder reaches zero or negative frequency.
double sideband_frequency(const RamanConfig& cfg, SidebandLabel label);
int sideband_charge(const RamanConfig& cfg, SidebandLabel label);

// A phase a*phi_p + b*phi_s with integer weights; every comb line is one.
struct PhaseCombination {
    int pump_weight = 0;
    int stokes_weight = 0;
    bool operator==(const PhaseCombination&) const = default;
};

struct RecursionResult {
    PhaseCombination phase;
    double omega = 0.0;
    int ell = 0;
};

// Builds the channel phase by iterating phi_AS(n) = phi_p + phi_AS(n-1) - phi_s
// from phi_AS(0) = phi_p (and phi_S(n) = phi_s + phi_S(n-1) - phi_p from
// phi_S(0) = phi_s), then reads off frequency and charge.
RecursionResult cascade_phase_recursion(const RamanConfig& cfg, SidebandLabel label);

// Closed-form phase weights: AS_n -> (n+1, -n), S_n -> (-n, n+1).
PhaseCombination closed_form_phase(SidebandLabel label);

// ell(S_n) + ell(AS_n) == ell_s + ell_p.
bool conservation_check(const RamanConfig& cfg, int n);

// Lowest-order parametric source field for a channel: u_s (u_p u_s*)^k for
// ladder index k, i.e. u_p^(n+1) (u_s*)^n for AS_n, normalized to unit power.
// The output wavelength follows the ladder built from the input wavelengths.
// Throws GridMismatchError, DegenerateOverlapError, or UnphysicalLadderError.
ComplexFieldGrid spatial_sideband(const ComplexFieldGrid& pump, const ComplexFieldGrid& stokes, SidebandLabel label);

struct UniformAmplitude {};
// |A| falls by `ratio` per step away from the pump (AS side) or Stokes (S side).
struct GeometricAmplitude {
    double ratio = 0.6;
};
using AmplitudeModel = std::variant<UniformAmplitude, GeometricAmplitude>;

struct CombChannel {
    SidebandLabel label;
    int k = 0;
    double omega = 0.0;
    int ell = 0;
    Complex amplitude;
};

// Channels sorted by ladder index.
struct SpectralComb {
    std::vector<CombChannel> channels;

    const CombChannel* find(SidebandLabel label) const;
};

// S_{max_s} .. AS_{max_as}.
SpectralComb build_comb(const RamanConfig& cfg, const AmplitudeModel& model = GeometricAmplitude{});

}  // namespace ramanoam
