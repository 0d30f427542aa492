#include "pnorm/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pnorm::io {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

double parse_real(std::string_view s, std::string_view token) {
    if (s == "" || s == "+") return 1.0;
    if (s == "-") return -1.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw parse_error("cannot parse complex token '" + std::string(token) + "'");
    return v;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

complex parse_complex(std::string_view token) {
    const std::string t = strip(token);
    if (t.empty()) throw parse_error("empty complex token");
    if (t.back() != 'i' && t.back() != 'j') return {parse_real(t, token), 0.0};

    const std::string_view body(t.data(), t.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    if (split == std::string_view::npos) return {0.0, parse_real(body, token)};
    return {parse_real(body.substr(0, split), token), parse_real(body.substr(split), token)};
}

std::string format_complex(complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return format_double(z.real());
    std::string s = format_double(z.real());
    const std::string im = format_double(z.imag());
    if (im.front() != '-') s += '+';
    return s + im + "i";
}

std::vector<complex> parse_complex_list(std::string_view text) {
    std::vector<complex> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_complex(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_json(const CMatrix& a) {
    nlohmann::json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    auto entries = nlohmann::json::array();
    for (const auto& z : a.entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    return j.dump() + "\n";
}

CMatrix from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows * cols)
            throw parse_error("entries length does not match rows * cols");
        std::vector<complex> data;
        data.reserve(entries.size());
        for (const auto& e : entries) {
            if (e.is_number()) {
                data.emplace_back(e.get<double>(), 0.0);
            } else {
                if (!e.is_array() || e.size() != 2) throw parse_error("each entry must be [re, im]");
                data.emplace_back(e[0].get<double>(), e[1].get<double>());
            }
        }
        return CMatrix(rows, cols, std::move(data));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed matrix JSON: ") + e.what());
    } catch (const dimension_error& e) {
        throw parse_error(std::string("malformed matrix JSON: ") + e.what());
    }
}

std::string to_csv(const CMatrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ',';
            out += format_complex(a(i, j));
        }
        out += '\n';
    }
    return out;
}

CMatrix from_csv(std::string_view text) {
    std::vector<complex> data;
    std::size_t rows = 0, cols = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::string s = strip(line);
        if (s.empty() || s.front() == '#') continue;
        auto row = parse_complex_list(s);
        if (rows == 0) cols = row.size();
        else if (row.size() != cols) throw parse_error("ragged CSV matrix");
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0) throw parse_error("CSV matrix has no rows");
    return CMatrix(rows, cols, std::move(data));
}

CMatrix read_matrix(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const auto ext = path.extension().string();
    if (ext == ".json") return from_json(text);
    if (ext == ".csv") return from_csv(text);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return from_json(text);
    return from_csv(text);
}

void write_matrix(const std::filesystem::path& path, const CMatrix& a, Format format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out << (format == Format::json ? to_json(a) : to_csv(a));
    if (!out) throw io_error("write to '" + path.string() + "' failed");
}

void write_matrix(const std::filesystem::path& path, const CMatrix& a) {
    write_matrix(path, a, path.extension() == ".csv" ? Format::csv : Format::json);
}

}  // namespace pnorm::io
