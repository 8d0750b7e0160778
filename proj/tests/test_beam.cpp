#include <doctest.h>

#include <cmath>

#include "ramanoam/beam.hpp"
#include "ramanoam/errors.hpp"
#include "support.hpp"

using namespace ramanoam;
using testsupport::inner;
using testsupport::kPi;

namespace {

constexpr double kLambda = 800e-9;

// LG_0^ell written out directly: sqrt(2/(pi |ell|!)) / w (sqrt2 r/w)^|ell| e^{-r^2/w^2} e^{i ell theta}.
Complex lg0_reference(int ell, double w, double x, double y) {
    const int m = std::abs(ell);
    const double r = std::hypot(x, y);
    const double norm = std::sqrt(2.0 / (kPi * std::tgamma(m + 1.0))) / w;
    return norm * std::pow(std::sqrt(2.0) * r / w, m) * std::exp(-r * r / (w * w)) *
           std::polar(1.0, ell * std::atan2(y, x));
}

}  // namespace

TEST_SUITE("beam_core") {

TEST_CASE("LG_0^ell samples match the closed form") {
    const auto g = GridSpec::square(128, 1e-6);
    const BeamParams beam{12e-6, kLambda};
    for (int ell : {-3, 0, 1, 4}) {
        const auto f = lg_mode_field({0, ell}, beam, g);
        double worst = 0.0;
        for (int j = 0; j < g.ny; j += 7)
            for (int i = 0; i < g.nx; i += 5)
                worst = std::max(worst, std::abs(f.at(i, j) - lg0_reference(ell, beam.waist_w0, g.x(i), g.y(j))));
        CHECK(worst < 1e-9 * std::abs(lg0_reference(0, beam.waist_w0, 0, 0)));
    }
}

TEST_CASE("fundamental mode peaks on axis with no winding") {
    const auto g = GridSpec::square(128, 1e-6);
    const auto f = lg_mode_field({0, 0}, {16e-6, kLambda}, g);
    const auto I = f.intensity();
    CHECK(std::max_element(I.begin(), I.end()) - I.begin() == static_cast<long>(g.index(64, 64)));
    CHECK(measure_charge_circulation(f, 10e-6) == 0);
    CHECK(ring_radius(f) == 0.0);
}

TEST_CASE("LG_0^1 is annular with unit circulation") {
    const auto g = GridSpec::square(128, 1e-6);
    const auto f = lg_mode_field({0, 1}, {16e-6, kLambda}, g);
    CHECK(std::abs(f.at(64, 64)) == doctest::Approx(0.0));
    CHECK(phase_winding(f, 11e-6) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("coarse sampling is rejected") {
    const auto g = GridSpec::square(64, 1e-6);
    CHECK_THROWS_AS(lg_mode_field({0, 1}, {3.9e-6, kLambda}, g), ResolutionError);
    CHECK_NOTHROW(lg_mode_field({0, 1}, {4e-6, kLambda}, g));
}

TEST_CASE("Gram matrix is the identity for p <= 3, |ell| <= 5") {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{8e-6, kLambda};
    std::vector<ComplexFieldGrid> modes;
    for (int p = 0; p <= 3; ++p)
        for (int ell = -5; ell <= 5; ++ell) modes.push_back(lg_mode_field({p, ell}, beam, g));
    double worst = 0.0;
    for (std::size_t a = 0; a < modes.size(); ++a)
        for (std::size_t b = a; b < modes.size(); ++b)
            worst = std::max(worst, std::abs(inner(modes[a], modes[b]) - (a == b ? 1.0 : 0.0)));
    CHECK(worst < 1e-6);
}

TEST_CASE("decompose of a pure mode") {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{10e-6, kLambda};
    const auto d = decompose(lg_mode_field({0, 1}, beam, g), beam, 3, -3, 3);
    for (const auto& [idx, c] : d.coefficients) {
        const double expected = (idx.p == 0 && idx.ell == 1) ? 1.0 : 0.0;
        CHECK(std::abs(c - expected) < 1e-6);
    }
    CHECK_FALSE(d.truncated());
}

TEST_CASE("decompose is linear") {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{10e-6, kLambda};
    auto f = lg_mode_field({0, 1}, beam, g) + lg_mode_field({0, -1}, beam, g);
    f *= 1.0 / std::sqrt(2.0);
    const auto d = decompose(f, beam, 2, -2, 2);
    CHECK(std::norm(d.coefficient(0, 1)) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(std::norm(d.coefficient(0, -1)) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("vortex phase on a Gaussian: overlap with LG_0^1 matches radial quadrature") {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{12e-6, kLambda};
    auto f = lg_mode_field({0, 0}, beam, g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f.at(i, j) *= std::polar(1.0, std::atan2(g.y(j), g.x(i)));
    f.at(g.nx / 2, g.ny / 2) = 0.0;  // the phase is undefined on axis

    // c = int LG_0^1(r) G(r) 2 pi r dr, with both profiles real and radial.
    const double w = beam.waist_w0;
    double c = 0.0;
    const int n = 200000;
    const double h = 8.0 * w / n;
    for (int q = 0; q < n; ++q) {
        const double r = (q + 0.5) * h;
        const double gauss = std::sqrt(2.0 / kPi) / w * std::exp(-r * r / (w * w));
        c += gauss * (std::sqrt(2.0) * r / w) * gauss * 2.0 * kPi * r * h;
    }
    CHECK(c * c == doctest::Approx(kPi / 4.0).epsilon(1e-6));

    const auto d = decompose(f, beam, 30, -1, 1);
    CHECK(std::norm(d.coefficient(0, 1)) == doctest::Approx(c * c).epsilon(2e-3));
    CHECK(d.column_power(1) > c * c);
    CHECK(d.column_power(1) < 1.0);
    CHECK(d.column_power(0) < 1e-6);
}

TEST_CASE("Parseval on a well-captured superposition") {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{10e-6, kLambda};
    auto f = lg_mode_field({0, 2}, beam, g) * Complex{0.6, 0.2} + lg_mode_field({1, -1}, beam, g) * Complex{0.0, 0.9};
    f += lg_mode_field({2, 0}, beam, g) * 0.3;
    const auto d = decompose(f, beam, 4, -4, 4);
    CHECK(d.captured_power >= 0.99 * d.field_power);
    CHECK(d.captured_power == doctest::Approx(f.power()).epsilon(0.01));
}

TEST_CASE("ring radius of LG_0^1 at 1 mm waist") {
    const auto g = GridSpec::square(256, 31.25e-6);
    const auto f = lg_mode_field({0, 1}, {1e-3, kLambda}, g);
    CHECK(ring_radius(f) == doctest::Approx(1e-3 * std::sqrt(0.5)).epsilon(0.02));
}

TEST_CASE("ring radius scales as sqrt(|ell|)") {
    const auto g = GridSpec::square(256, 40e-6);
    const BeamParams beam{1e-3, kLambda};
    const double r1 = ring_radius(lg_mode_field({0, 1}, beam, g));
    for (int ell : {2, 4, 9, -4})
        CHECK(ring_radius(lg_mode_field({0, ell}, beam, g)) / r1 == doctest::Approx(std::sqrt(std::abs(ell))).epsilon(0.05));
}

TEST_CASE("circulation recovers ell for p <= 2, |ell| <= 5") {
    const auto g = GridSpec::square(256, 1e-6);
    const BeamParams beam{12e-6, kLambda};
    for (int p = 0; p <= 2; ++p)
        for (int ell = -5; ell <= 5; ++ell) {
            const auto f = lg_mode_field({p, ell}, beam, g);
            const double loop = std::max(ring_radius(f), 0.3 * beam.waist_w0);
            CHECK_MESSAGE(measure_charge_circulation(f, loop) == ell, "p=" << p << " ell=" << ell);
        }
}

TEST_CASE("charges of a product add") {
    const auto g = GridSpec::square(128, 1e-6);
    const BeamParams beam{12e-6, kLambda};
    const auto f = pointwise_product(lg_mode_field({0, 1}, beam, g), lg_mode_field({0, 2}, beam, g));
    CHECK(measure_charge_circulation(f, 10e-6) == 3);
}

TEST_CASE("circulation loop must stay on the grid") {
    const auto g = GridSpec::square(128, 1e-6);
    const auto f = lg_mode_field({0, 1}, {16e-6, kLambda}, g);
    CHECK_THROWS_AS(measure_charge_circulation(f, 70e-6), std::invalid_argument);
    CHECK_THROWS_AS(measure_charge_circulation(f, 0.0), std::invalid_argument);
}

TEST_CASE("propagation by zero is the identity") {
    const auto g = GridSpec::square(64, 1e-6);
    const auto f = lg_mode_field({1, 2}, {8e-6, kLambda}, g);
    CHECK(testsupport::max_abs_diff(propagate(f, 0.0).values(), f.values()) == 0.0);
}

TEST_CASE("Gaussian width grows by sqrt2 over one Rayleigh range") {
    const auto g = GridSpec::square(256, 2e-6);
    const BeamParams beam{20e-6, kLambda};
    const auto f = lg_mode_field({0, 0}, beam, g);
    const double zr = beam.rayleigh_range();
    const auto out = propagate(f, zr);
    CHECK(testsupport::second_moment_width(out) == doctest::Approx(beam.width_at(zr)).epsilon(1e-3));
    CHECK(beam.width_at(zr) == doctest::Approx(std::sqrt(2.0) * beam.waist_w0));
    // Back-propagation returns the waist.
    CHECK(testsupport::max_abs_diff(propagate(out, -zr).values(), f.values()) < 1e-9 * std::abs(f.at(128, 128)));
}

TEST_CASE("propagated mode matches the analytic mode at z") {
    const auto g = GridSpec::square(256, 2e-6);
    const BeamParams beam{20e-6, kLambda};
    const double z = 0.7 * beam.rayleigh_range();
    const auto num = propagate(lg_mode_field({1, 2}, beam, g), z);
    const auto ana = lg_mode_field({1, 2}, beam, g, z);
    CHECK(std::abs(inner(ana, num)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("propagation conserves power and charge") {
    const auto g = GridSpec::square(256, 2e-6);
    const BeamParams beam{20e-6, kLambda};
    for (int ell = -5; ell <= 5; ++ell) {
        const auto f = lg_mode_field({0, ell}, beam, g);
        const auto out = propagate(f, 1.3 * beam.rayleigh_range());
        CHECK(out.power() == doctest::Approx(f.power()).epsilon(1e-6));
        if (ell != 0) {
            CHECK(measure_charge_circulation(out, ring_radius(out)) == ell);
            const auto d = decompose(out, beam, 3, ell, ell, 1.3 * beam.rayleigh_range());
            CHECK(d.column_power(ell) == doctest::Approx(out.power()).epsilon(1e-6));
        }
    }
}

TEST_CASE("under-sampled transfer function trips the alias guard") {
    const auto g = GridSpec::square(64, 2e-6);
    const auto f = lg_mode_field({0, 3}, {8e-6, kLambda}, g);
    CHECK_THROWS_AS(propagate(f, 1.0), AliasingError);
}

TEST_CASE("wavelength mismatch is rejected by decompose") {
    const auto g = GridSpec::square(64, 1e-6);
    const auto f = lg_mode_field({0, 0}, {8e-6, kLambda}, g);
    CHECK_THROWS_AS(decompose(f, {8e-6, 821e-9}, 1, 0, 0), std::invalid_argument);
}

}
