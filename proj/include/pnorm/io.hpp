#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pnorm/core.hpp"

// Matrix files.
//
// JSON: {"rows": n, "cols": m, "entries": [[re, im], ...]} in row-major
// order. Doubles are written with round-trip precision, so write-then-read
// is bit-exact.
//
// CSV: one matrix row per line, comma-separated complex tokens of the form
// "a", "a+bi", "a-bi", "bi". Lines starting with '#' are ignored.
namespace pnorm::io {

enum class Format { json, csv };

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

complex parse_complex(std::string_view token);
std::string format_complex(complex z);
/// Comma-separated complex tokens.
std::vector<complex> parse_complex_list(std::string_view text);

std::string to_json(const CMatrix& a);
CMatrix from_json(std::string_view text);
std::string to_csv(const CMatrix& a);
CMatrix from_csv(std::string_view text);

/// Format from the extension; unknown extensions are sniffed from content.
CMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const CMatrix& a);
void write_matrix(const std::filesystem::path& path, const CMatrix& a, Format format);

}  // namespace pnorm::io
