#pragma once

#include <complex>
#include <vector>

namespace ramanoam {

using Complex = std::complex<double>;

// Sampling of the transverse plane. Sample (i, j) sits at
// x = (i - nx/2) dx, y = (j - ny/2) dy; storage is row-major in j.
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;  // m
    double dy = 0.0;  // m

    static GridSpec square(int n, double pitch) { return {n, n, pitch, pitch}; }

    // Throws std::invalid_argument unless nx, ny >= 8 and dx, dy > 0.
    void validate() const;

    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
    }
    double x(int i) const { return (i - nx / 2) * dx; }
    double y(int j) const { return (j - ny / 2) * dy; }
    double cell_area() const { return dx * dy; }

    bool operator==(const GridSpec&) const = default;
};

// Sampled complex amplitude of a monochromatic beam. Power = sum |u|^2 dx dy.
class ComplexFieldGrid {
public:
    ComplexFieldGrid(GridSpec spec, double wavelength);
    ComplexFieldGrid(GridSpec spec, double wavelength, std::vector<Complex> values);

    const GridSpec& spec() const { return spec_; }
    double wavelength() const { return wavelength_; }
    double wavenumber() const;

    const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }

    Complex at(int i, int j) const { return values_[spec_.index(i, j)]; }
    Complex& at(int i, int j) { return values_[spec_.index(i, j)]; }

    double power() const;
    std::vector<double> intensity() const;

    // Copy scaled to unit power. Throws std::domain_error for an all-zero field.
    ComplexFieldGrid normalized() const;
    ComplexFieldGrid with_wavelength(double wavelength) const;

    // Bilinear interpolation at physical coordinates; zero outside the grid.
    Complex sample(double x, double y) const;

    ComplexFieldGrid& operator+=(const ComplexFieldGrid& other);
    ComplexFieldGrid& operator*=(Complex scale);

private:
    GridSpec spec_;
    double wavelength_;
    std::vector<Complex> values_;
};

ComplexFieldGrid operator+(ComplexFieldGrid a, const ComplexFieldGrid& b);
ComplexFieldGrid operator*(ComplexFieldGrid a, Complex scale);

// Pointwise product; both fields must share a grid. Wavelength of `a` is kept.
ComplexFieldGrid pointwise_product(const ComplexFieldGrid& a, const ComplexFieldGrid& b);

// Throws GridMismatchError if the two grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace ramanoam
