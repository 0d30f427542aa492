#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pnorm/core.hpp"
#include "pnorm/exact.hpp"

// Interpolation upper bounds, the logarithmic-affine test and the sampled
// norm profile p -> ||A||_{p,p}.
namespace pnorm::interp {

enum class LowerProvenance { ones_vector, eigen_certificate, boyd, oracle, anchor, structured };
enum class UpperProvenance { anchor, riesz_thorin, two_norm_scaled, self_adjoint, structured };

std::string_view to_string(LowerProvenance p) noexcept;
std::string_view to_string(UpperProvenance p) noexcept;

/// Certified interval lower <= ||A||_{p,p} <= upper.
struct NormBound {
    Exponent p = Exponent::infinity();
    double lower = 0.0;
    double upper = 0.0;
    LowerProvenance lower_provenance = LowerProvenance::anchor;
    UpperProvenance upper_provenance = UpperProvenance::anchor;

    double width() const noexcept { return upper - lower; }
    /// (upper - lower) / upper, zero for a zero matrix.
    double relative_width() const noexcept { return upper > 0.0 ? (upper - lower) / upper : 0.0; }
};

struct UpperSide {
    double value = 0.0;
    UpperProvenance provenance = UpperProvenance::anchor;
};

/// v1^(1-theta) * v2^theta where 1/p = (1-theta)/p1 + theta/p2. Throws
/// range_error if p is not between p1 and p2.
double riesz_thorin_bound(Exponent p, Exponent p1, double v1, Exponent p2, double v2);

/// n1^(1/p) * ninf^(1 - 1/p).
double la_envelope(const exact::AnchorNorms& anchors, Exponent p);

/// Smallest of the (1, inf) envelope, the two-segment bound through p = 2,
/// and n^|1/2 - 1/p| * n2.
UpperSide upper_bound(const CMatrix& a, Exponent p);
UpperSide upper_bound(const exact::AnchorNorms& anchors, std::size_t n, Exponent p, bool self_adjoint = false);

struct LAReport {
    bool is_la = false;
    bool degenerate = false;
    exact::AnchorNorms anchors;
    /// n2 / sqrt(n1 * ninf); 1 for the zero matrix.
    double ratio = 1.0;
};

/// Logarithmic-affine iff n2 >= (1 - tol) sqrt(n1 * ninf). Matrices within
/// the tolerance band are classified LA.
LAReport is_log_affine(const CMatrix& a, double tol = 1e-9);
LAReport is_log_affine(const exact::AnchorNorms& anchors, double tol = 1e-9);

/// Checks f(q0)^(1/p-1/r) = f(p)^(1/q0-1/r) f(r)^(1/p-1/q0) to 1e-9 relative.
bool three_point_log_affinity(double f_p, double f_q0, double f_r, Exponent p, Exponent q0, Exponent r);

/// {1, 1.25, 1.5, 2, 3, 4, 8, inf} closed under the dual exponent, ascending.
std::vector<Exponent> default_grid();

struct PNormProfile {
    std::vector<Exponent> grid;
    std::vector<NormBound> bounds;
    /// (1/p, log upper), ascending in 1/p.
    std::vector<std::pair<double, double>> g_values;
    std::vector<double> envelope;
    bool log_convex = false;
    bool unimodal = false;
    /// Grid argmin of the upper envelope and the neighbouring grid points
    /// that bracket it.
    std::size_t p0_index = 0;
    Exponent p0_low = Exponent::infinity();
    Exponent p0_high = Exponent::infinity();
};

/// Chord test on (t, g) points sorted by t; slack is absolute in log space.
bool discrete_convex(std::span<const std::pair<double, double>> points, double slack = 1e-9);

/// Throws argument_error if the grid is not strictly ascending or misses
/// one of 1, 2, inf.
PNormProfile profile(const CMatrix& a, std::span<const Exponent> grid, std::uint64_t seed = 0);

}  // namespace pnorm::interp
