#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanoam/field.hpp"

namespace ramanoam::io {

struct ImageFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grayscale raster in grid orientation: values[j * width + i] with row j = 0 at
// the bottom (most negative y). PGM rows run top to bottom.
struct GrayImage {
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::vector<double> values;
};

// Binary 16-bit P5, big-endian samples, linearly scaled so the global maximum
// maps to 65535. An all-zero image is written as zeros.
std::string encode_pgm16(std::span<const double> values, int width, int height);
void write_pgm16(const std::filesystem::path& path, std::span<const double> values, int width, int height);

// Accepts P5 with maxval 1..65535 and header comments. Throws ImageFormatError.
GrayImage decode_pgm(const std::string& bytes);
GrayImage read_pgm(const std::filesystem::path& path);

// RFC 4180 field quoting.
std::string csv_field(const std::string& text);
// Fixed-point number formatting independent of the global locale.
std::string format_fixed(double value, int decimals);
std::string format_scientific(double value, int digits);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ramanoam::io
