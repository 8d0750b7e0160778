#include "ramanoam/field.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"

namespace ramanoam {

void GridSpec::validate() const {
    if (nx < 8 || ny < 8)
        throw std::invalid_argument("grid must be at least 8x8, got " + std::to_string(nx) + "x" +
                                    std::to_string(ny));
    if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("grid pitch must be positive");
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) throw GridMismatchError(std::string(what) + ": fields are sampled on different grids");
}

ComplexFieldGrid::ComplexFieldGrid(GridSpec spec, double wavelength)
    : ComplexFieldGrid(spec, wavelength, std::vector<Complex>(spec.size())) {}

ComplexFieldGrid::ComplexFieldGrid(GridSpec spec, double wavelength, std::vector<Complex> values)
    : spec_(spec), wavelength_(wavelength), values_(std::move(values)) {
    spec_.validate();
    if (!(wavelength_ > 0.0)) throw std::invalid_argument("wavelength must be positive");
    if (values_.size() != spec_.size()) throw std::invalid_argument("field values do not match grid size");
}

double ComplexFieldGrid::wavenumber() const { return kTwoPi / wavelength_; }

double ComplexFieldGrid::power() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return s * spec_.cell_area();
}

std::vector<double> ComplexFieldGrid::intensity() const {
    std::vector<double> out(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) out[k] = std::norm(values_[k]);
    return out;
}

ComplexFieldGrid ComplexFieldGrid::normalized() const {
    const double p = power();
    if (!(p > 0.0) || !std::isfinite(p)) throw std::domain_error("cannot normalize a field with zero power");
    ComplexFieldGrid out = *this;
    out *= 1.0 / std::sqrt(p);
    return out;
}

ComplexFieldGrid ComplexFieldGrid::with_wavelength(double wavelength) const {
    return ComplexFieldGrid(spec_, wavelength, values_);
}

Complex ComplexFieldGrid::sample(double x, double y) const {
    const double fi = x / spec_.dx + spec_.nx / 2;
    const double fj = y / spec_.dy + spec_.ny / 2;
    const int i0 = static_cast<int>(std::floor(fi));
    const int j0 = static_cast<int>(std::floor(fj));
    if (i0 < 0 || j0 < 0 || i0 + 1 >= spec_.nx || j0 + 1 >= spec_.ny) return {};
    const double tx = fi - i0;
    const double ty = fj - j0;
    return (1 - tx) * (1 - ty) * at(i0, j0) + tx * (1 - ty) * at(i0 + 1, j0) + (1 - tx) * ty * at(i0, j0 + 1) +
           tx * ty * at(i0 + 1, j0 + 1);
}

ComplexFieldGrid& ComplexFieldGrid::operator+=(const ComplexFieldGrid& other) {
    require_same_grid(spec_, other.spec_, "field sum");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
    return *this;
}

ComplexFieldGrid& ComplexFieldGrid::operator*=(Complex scale) {
    for (auto& v : values_) v *= scale;
    return *this;
}

ComplexFieldGrid operator+(ComplexFieldGrid a, const ComplexFieldGrid& b) {
    a += b;
    return a;
}

ComplexFieldGrid operator*(ComplexFieldGrid a, Complex scale) {
    a *= scale;
    return a;
}

ComplexFieldGrid pointwise_product(const ComplexFieldGrid& a, const ComplexFieldGrid& b) {
    require_same_grid(a.spec(), b.spec(), "pointwise product");
    ComplexFieldGrid out = a;
    auto& v = out.values();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] *= b.values()[k];
    return out;
}

}  // namespace ramanoam
