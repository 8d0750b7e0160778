#include "ramanoam/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ramanoam::io {

std::string encode_pgm16(std::span<const double> values, int width, int height) {
    if (width <= 0 || height <= 0 || values.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("pgm: image dimensions do not match data");
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, v);

    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
    const std::size_t header = out.size();
    out.resize(header + 2 * values.size());
    std::size_t pos = header;
    for (int r = 0; r < height; ++r) {
        const int j = height - 1 - r;
        for (int i = 0; i < width; ++i) {
            const double v = values[static_cast<std::size_t>(j) * width + i];
            const double scaled = peak > 0.0 ? std::clamp(v / peak, 0.0, 1.0) * 65535.0 : 0.0;
            const auto q = static_cast<std::uint16_t>(std::lround(scaled));
            out[pos++] = static_cast<char>(q >> 8);
            out[pos++] = static_cast<char>(q & 0xff);
        }
    }
    return out;
}

void write_pgm16(const std::filesystem::path& path, std::span<const double> values, int width, int height) {
    write_text_file(path, encode_pgm16(values, width, height));
}

GrayImage decode_pgm(const std::string& bytes) {
    std::size_t pos = 0;
    auto skip_space_and_comments = [&] {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_int = [&](const char* what) {
        skip_space_and_comments();
        int v = 0;
        auto [ptr, ec] = std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), v);
        if (ec != std::errc{}) throw ImageFormatError(std::string("pgm: cannot read ") + what);
        pos = static_cast<std::size_t>(ptr - bytes.data());
        return v;
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw ImageFormatError("not a binary PGM (P5) file");
    pos = 2;
    GrayImage img;
    img.width = read_int("width");
    img.height = read_int("height");
    img.maxval = read_int("maxval");
    if (img.width <= 0 || img.height <= 0) throw ImageFormatError("pgm: non-positive dimensions");
    if (img.maxval < 1 || img.maxval > 65535) throw ImageFormatError("pgm: maxval out of range");
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
        throw ImageFormatError("pgm: malformed header");
    ++pos;

    const int bpp = img.maxval > 255 ? 2 : 1;
    const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
    if (bytes.size() - pos < count * bpp) throw ImageFormatError("pgm: truncated pixel data");
    img.values.resize(count);
    for (int r = 0; r < img.height; ++r) {
        const int j = img.height - 1 - r;
        for (int i = 0; i < img.width; ++i) {
            unsigned v = static_cast<unsigned char>(bytes[pos++]);
            if (bpp == 2) v = (v << 8) | static_cast<unsigned char>(bytes[pos++]);
            img.values[static_cast<std::size_t>(j) * img.width + i] = static_cast<double>(v);
        }
    }
    return img;
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ImageFormatError("cannot open image " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_pgm(ss.str());
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, ptr);
    if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);  // no "-0.000"
    return s;
}

std::string format_scientific(double value, int digits) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, digits);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace ramanoam::io
