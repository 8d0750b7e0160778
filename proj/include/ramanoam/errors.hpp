#pragma once

#include <stdexcept>
#include <string>

namespace ramanoam {

// Grid too coarse for the requested beam.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sampled phase or transfer function would alias on the current grid.
struct AliasingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Phase circulation not close enough to an integer.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateOverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ladder extended past zero frequency.
struct UnphysicalLadderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NyquistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegionTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoPeriodicStructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ramanoam
