#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "pnorm/core.hpp"

// Shared fixtures and test-side oracles. Nothing here calls into the
// library's norm code, so the helpers can serve as independent references.
namespace pnorm::testing {

inline CMatrix magic3() { return CMatrix{{8, 1, 6}, {3, 5, 7}, {4, 9, 2}}; }

inline CMatrix magic4() { return CMatrix{{1, 2, 15, 16}, {13, 14, 3, 4}, {12, 7, 10, 5}, {8, 11, 6, 9}}; }

inline CMatrix core2() { return CMatrix{{1, 3}, {3, 1}}; }

// The 4x4 tensor example exactly as printed.
inline CMatrix tensor_first_printed() {
    return CMatrix{{1, 3, 2, 6}, {3, 1, 6, 2}, {-1, -3, -2, -6}, {-3, -1, -6, -2}};
}

// The 6x6 tensor example rebuilt from alpha = (1, i, 0), beta = (1, -1, i)
// with block (i, j) = alpha_i conj(beta_j) A. The printed display has "i"
// at row 0, column 4; the definition gives -i.
inline CMatrix tensor_second() {
    const complex I{0, 1};
    const complex a[3] = {1.0, I, 0.0};
    const complex b[3] = {1.0, -1.0, I};
    const CMatrix c = core2();
    CMatrix out(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 2; ++s) out(2 * i + r, 2 * j + s) = a[i] * std::conj(b[j]) * c(r, s);
    return out;
}

inline double tensor_second_closed_form(double p) {
    const double t = std::isinf(p) ? 0.0 : 1.0 / p;
    return 4.0 * std::pow(2.0, t) * std::pow(3.0, 1.0 - t);
}

inline CMatrix random_complex(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
    return a;
}

inline CMatrix random_real(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = g(rng);
    return a;
}

inline CVector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = {g(rng), g(rng)};
    return x;
}

inline std::vector<complex> random_coeffs(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<complex> c(n);
    for (auto& z : c) z = {g(rng), g(rng)};
    return c;
}

// Largest singular value by plain power iteration on A*A, independent of the
// library's Jacobi solver.
inline double power_two_norm(const CMatrix& a, int iterations = 2000) {
    const std::size_t n = a.cols();
    std::vector<complex> x(n, 1.0), y(a.rows());
    for (std::size_t i = 0; i < n; ++i) x[i] += complex(0.01 * static_cast<double>(i), 0.003 * static_cast<double>(i * i));
    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            y[i] = 0.0;
            for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
        }
        std::vector<complex> z(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < a.rows(); ++i) z[j] += std::conj(a(i, j)) * y[i];
        double nz = 0.0;
        for (auto v : z) nz += std::norm(v);
        nz = std::sqrt(nz);
        if (nz == 0.0) return 0.0;
        for (std::size_t j = 0; j < n; ++j) x[j] = z[j] / nz;
        sigma = std::sqrt(nz);
    }
    return sigma;
}

inline std::filesystem::path temp_dir() {
    const char* env = std::getenv("PNORM_TEST_TMP");
    std::filesystem::path dir = env ? env : std::filesystem::temp_directory_path() / "pnorm_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace pnorm::testing
