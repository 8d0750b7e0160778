#include "ramanoam/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ramanoam::fft {

namespace {

// The FFTW planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n) : ptr(fftw_alloc_complex(n)) {
        if (!ptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(ptr); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* ptr;
};

void run(std::span<std::complex<double>> data, int rank, const int* dims, Direction dir) {
    const std::size_t n = data.size();
    if (n == 0) return;
    // Aligned scratch keeps the chosen codelets (and therefore the bits) identical run to run.
    FftwBuffer buf(n);
    auto* raw = reinterpret_cast<std::complex<double>*>(buf.ptr);
    std::copy(data.begin(), data.end(), raw);

    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft(rank, dims, buf.ptr, buf.ptr, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fftw: plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    if (dir == Direction::Inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        std::transform(raw, raw + n, data.begin(), [scale](std::complex<double> v) { return v * scale; });
    } else {
        std::copy(raw, raw + n, data.begin());
    }
}

}  // namespace

void transform_2d(std::span<std::complex<double>> data, int nx, int ny, Direction dir) {
    if (static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) != data.size())
        throw std::invalid_argument("fft: buffer size does not match nx*ny");
    const int dims[2] = {ny, nx};
    run(data, 2, dims, dir);
}

void transform_1d(std::span<std::complex<double>> data, Direction dir) {
    const int dims[1] = {static_cast<int>(data.size())};
    run(data, 1, dims, dir);
}

}  // namespace ramanoam::fft
