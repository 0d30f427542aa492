#include "pnorm/interp.hpp"

#include <algorithm>
#include <cmath>

#include "pnorm/estimator.hpp"

namespace pnorm::interp {

namespace {

constexpr double kEndpointTol = 1e-14;
constexpr double kProfileTol = 1e-9;

bool is_self_adjoint(const CMatrix& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (a(i, j) != std::conj(a(j, i))) return false;
    return true;
}

}  // namespace

std::string_view to_string(LowerProvenance p) noexcept {
    switch (p) {
        case LowerProvenance::ones_vector: return "ones-vector";
        case LowerProvenance::eigen_certificate: return "eigen-certificate";
        case LowerProvenance::boyd: return "boyd";
        case LowerProvenance::oracle: return "oracle";
        case LowerProvenance::anchor: return "anchor";
        case LowerProvenance::structured: return "structured";
    }
    return "unknown";
}

std::string_view to_string(UpperProvenance p) noexcept {
    switch (p) {
        case UpperProvenance::anchor: return "anchor";
        case UpperProvenance::riesz_thorin: return "riesz-thorin";
        case UpperProvenance::two_norm_scaled: return "two-norm-scaled";
        case UpperProvenance::self_adjoint: return "self-adjoint";
        case UpperProvenance::structured: return "structured";
    }
    return "unknown";
}

double riesz_thorin_bound(Exponent p, Exponent p1, double v1, Exponent p2, double v2) {
    if (v1 < 0.0 || v2 < 0.0) throw domain_error("interpolated norms must be nonnegative");
    const double t = p.reciprocal(), t1 = p1.reciprocal(), t2 = p2.reciprocal();
    const double lo = std::min(t1, t2), hi = std::max(t1, t2);
    if (t < lo - kEndpointTol || t > hi + kEndpointTol)
        throw range_error("exponent " + p.to_string() + " lies outside [" + p1.to_string() + ", " + p2.to_string() + "]");
    if (p == p1 || t1 == t2) return v1;
    if (p == p2) return v2;
    const double theta = std::clamp((t1 - t) / (t1 - t2), 0.0, 1.0);
    if (theta == 0.0) return v1;
    if (theta == 1.0) return v2;
    return std::pow(v1, 1.0 - theta) * std::pow(v2, theta);
}

double la_envelope(const exact::AnchorNorms& anchors, Exponent p) {
    if (p.is_one()) return anchors.n1;
    if (p.is_infinite()) return anchors.ninf;
    const double t = p.reciprocal();
    return std::pow(anchors.n1, t) * std::pow(anchors.ninf, 1.0 - t);
}

UpperSide upper_bound(const exact::AnchorNorms& anchors, std::size_t n, Exponent p, bool self_adjoint) {
    if (p.is_one()) return {anchors.n1, UpperProvenance::anchor};
    if (p.is_infinite()) return {anchors.ninf, UpperProvenance::anchor};
    if (p.is_two()) return {anchors.n2, UpperProvenance::anchor};

    const Exponent two = Exponent::finite(2.0);
    const double segment = p < two ? riesz_thorin_bound(p, Exponent::finite(1.0), anchors.n1, two, anchors.n2)
                                   : riesz_thorin_bound(p, two, anchors.n2, Exponent::infinity(), anchors.ninf);
    UpperSide best{segment, self_adjoint ? UpperProvenance::self_adjoint : UpperProvenance::riesz_thorin};

    const double scaled = std::pow(static_cast<double>(n), std::abs(0.5 - p.reciprocal())) * anchors.n2;
    if (scaled < best.value) best = {scaled, UpperProvenance::two_norm_scaled};

    const double envelope = la_envelope(anchors, p);
    if (envelope < best.value) best = {envelope, UpperProvenance::riesz_thorin};
    return best;
}

UpperSide upper_bound(const CMatrix& a, Exponent p) {
    return upper_bound(exact::anchor_norms(a), a.rows(), p, is_self_adjoint(a));
}

LAReport is_log_affine(const exact::AnchorNorms& anchors, double tol) {
    if (tol <= 0.0) throw argument_error("LA tolerance must be positive");
    LAReport r;
    r.anchors = anchors;
    const double geo = std::sqrt(anchors.n1 * anchors.ninf);
    if (geo == 0.0) {
        r.is_la = true;
        r.degenerate = true;
        r.ratio = 1.0;
        return r;
    }
    r.ratio = anchors.n2 / geo;
    r.is_la = anchors.n2 >= (1.0 - tol) * geo;
    return r;
}

LAReport is_log_affine(const CMatrix& a, double tol) { return is_log_affine(exact::anchor_norms(a), tol); }

bool three_point_log_affinity(double f_p, double f_q0, double f_r, Exponent p, Exponent q0, Exponent r) {
    if (!(p < q0 && q0 < r)) throw argument_error("three_point_log_affinity needs p < q0 < r");
    if (f_p <= 0.0 || f_q0 <= 0.0 || f_r <= 0.0) throw domain_error("profile values must be positive");
    const double tp = p.reciprocal(), tq = q0.reciprocal(), tr = r.reciprocal();
    // log f(q0) against the log-linear interpolant of the endpoints.
    const double predicted = ((tq - tr) * std::log(f_p) + (tp - tq) * std::log(f_r)) / (tp - tr);
    return std::abs(std::log(f_q0) - predicted) <= 1e-9;
}

std::vector<Exponent> default_grid() {
    const double base[] = {1.25, 1.5, 3.0, 4.0, 8.0};
    std::vector<Exponent> grid{Exponent::finite(1.0), Exponent::finite(2.0), Exponent::infinity()};
    for (double v : base) {
        const Exponent e = Exponent::finite(v);
        grid.push_back(e);
        grid.push_back(dual_exponent(e));
    }
    std::sort(grid.begin(), grid.end());
    std::vector<Exponent> out;
    for (const auto& e : grid)
        if (out.empty() || !(out.back() == e || (e.is_finite() && approx_equal(out.back().value(), e.value(), 1e-12))))
            out.push_back(e);
    return out;
}

bool discrete_convex(std::span<const std::pair<double, double>> pts, double slack) {
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const auto [t0, g0] = pts[i - 1];
        const auto [t1, g1] = pts[i];
        const auto [t2, g2] = pts[i + 1];
        if (std::isinf(g0) || std::isinf(g1) || std::isinf(g2)) {
            if (std::isinf(g1) && g1 < 0) continue;
            if (std::isinf(g0) || std::isinf(g2)) return false;
        }
        const double chord = g0 + (g2 - g0) * (t1 - t0) / (t2 - t0);
        if (g1 > chord + slack) return false;
    }
    return true;
}

PNormProfile profile(const CMatrix& a, std::span<const Exponent> grid, std::uint64_t seed) {
    if (!a.is_square()) throw dimension_error("profile needs a square matrix");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i])) throw argument_error("profile grid must be strictly ascending");
    const auto contains = [&](Exponent e) { return std::find(grid.begin(), grid.end(), e) != grid.end(); };
    if (!contains(Exponent::finite(1.0)) || !contains(Exponent::finite(2.0)) || !contains(Exponent::infinity()))
        throw argument_error("profile grid must contain 1, 2 and inf");

    PNormProfile out;
    out.grid.assign(grid.begin(), grid.end());
    const auto anchors = exact::anchor_norms(a);
    for (const auto& p : grid) {
        out.bounds.push_back(estimator::certified_bound(a, p, seed));
        out.envelope.push_back(la_envelope(anchors, p));
        out.g_values.emplace_back(p.reciprocal(), std::log(out.bounds.back().upper));
    }
    std::sort(out.g_values.begin(), out.g_values.end());
    out.log_convex = discrete_convex(out.g_values);

    const std::size_t n = grid.size();
    std::vector<double> upper(n);
    for (std::size_t i = 0; i < n; ++i) upper[i] = out.bounds[i].upper;
    const double lowest = *std::min_element(upper.begin(), upper.end());
    const auto tied = [&](std::size_t i) { return upper[i] <= lowest * (1.0 + kProfileTol); };

    std::size_t first = 0;
    while (!tied(first)) ++first;
    std::size_t last = n - 1;
    while (!tied(last)) --last;

    // Plateau point nearest the plateau's midpoint in 1/p.
    const double mid_t = 0.5 * (grid[first].reciprocal() + grid[last].reciprocal());
    out.p0_index = first;
    for (std::size_t i = first; i <= last; ++i)
        if (std::abs(grid[i].reciprocal() - mid_t) < std::abs(grid[out.p0_index].reciprocal() - mid_t) - 1e-15)
            out.p0_index = i;
    out.p0_low = grid[first > 0 ? first - 1 : 0];
    out.p0_high = grid[last + 1 < n ? last + 1 : n - 1];

    out.unimodal = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i + 1 <= out.p0_index && upper[i + 1] > upper[i] * (1.0 + kProfileTol)) out.unimodal = false;
        if (i >= out.p0_index && upper[i + 1] < upper[i] * (1.0 - kProfileTol)) out.unimodal = false;
    }
    return out;
}

}  // namespace pnorm::interp
