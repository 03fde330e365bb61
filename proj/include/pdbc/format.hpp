#pragma once

// Locale-free number formatting and CSV emission.

#include "pdbc/banded_system.hpp"
#include "pdbc/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace pdbc {

/// Scientific notation with 17 significant digits ("1.2500000000000000e+00").
inline std::string format_double(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 16);
    if (res.ec != std::errc{}) {
        throw NumericalError("number formatting failed");
    }
    return std::string(buf, res.ptr);
}

/// Comma-separated line terminated by '\n'.
inline std::string csv_line(const std::vector<std::string>& cells)
{
    std::string line;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k > 0) {
            line += ',';
        }
        line += cells[k];
    }
    line += '\n';
    return line;
}

/// Dense matrix dump, one row per line.
inline std::string matrix_csv(const BandedSystem& sys)
{
    const std::size_t n = sys.size();
    std::string out;
    std::vector<std::string> cells(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cells[j] = format_double(sys(i, j));
        }
        out += csv_line(cells);
    }
    return out;
}

/// Writes `content` to `path` in binary mode, creating parent directories.
inline void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace pdbc
