#pragma once

#include <optional>

#include "ramanoam/field.hpp"

namespace ramanoam {

// Spiral phase plate. An empty n_steps is the continuous (ideal) ramp; otherwise
// the ramp is a staircase of n_steps equal steps with boundaries at
// theta = 2 pi k / n_steps, k = 0 on the +x axis. The etch depth is cut for
// design_wavelength, so at another wavelength the imprinted phase scales by
// design_wavelength / wavelength.
struct SppSpec {
    int design_charge = 1;
    std::optional<int> n_steps;
    double design_wavelength = 800e-9;

    void validate() const;
};

// Number of mirror reflections along a path; only its parity is observable.
struct ReflectionParity {
    int count = 0;

    bool odd() const { return count % 2 != 0; }
    ReflectionParity operator+(ReflectionParity other) const { return {count + other.count}; }
};

// Staircase (or continuous) phase profile of the plate, before wavelength scaling.
double spp_phase_profile(double theta, const SppSpec& spp);

ComplexFieldGrid apply_spp(const ComplexFieldGrid& field, const SppSpec& spp);

// Reflection as the x -> -x flip of the sampled field. Sample columns are
// permuted i -> (nx - i) mod nx, so the operation is an exact involution.
ComplexFieldGrid apply_mirror(const ComplexFieldGrid& field);

// Charge after `parity.count` reflections: input * (-1)^count.
int path_charge(int input_charge, ReflectionParity parity);

// Thin lens, phase -k r^2 / (2 f). Throws AliasingError if the phase gradient
// at the grid edge exceeds pi per sample.
ComplexFieldGrid apply_lens(const ComplexFieldGrid& field, double focal_length);

// Plane-wave tilt, phase k (x sin(angle_x) + y sin(angle_y)). Throws
// AliasingError unless sin|angle| < lambda / (2 pitch) on both axes.
ComplexFieldGrid apply_tilt(const ComplexFieldGrid& field, double angle_x, double angle_y = 0.0);

// Charges (ell_p, ell_s) reaching the crystal in the two-arm beam-crossing
// setup. Both beams leave the four-port interferometer carrying
// path_charge(spp_charge, michelson). The pump arm reflects off the three
// mirrors of the variable arm; the Stokes arm takes the beam-splitter
// reflection plus three fixed mirrors, and a fourth when the extra mirror
// (M5) is inserted. With it inserted both arms are odd and the charges match;
// without it they are opposite.
struct BeamCrossingSetup {
    int spp_charge = 1;
    ReflectionParity michelson{1};
    bool m5_in = false;

    ReflectionParity pump_arm() const { return michelson + ReflectionParity{3}; }
    ReflectionParity stokes_arm() const { return michelson + ReflectionParity{m5_in ? 5 : 4}; }
    int pump_charge() const { return path_charge(spp_charge, pump_arm()); }
    int stokes_charge() const { return path_charge(spp_charge, stokes_arm()); }
};

}  // namespace ramanoam
