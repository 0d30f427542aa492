#include "pnorm/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pnorm/exact.hpp"

namespace pnorm::estimator {

using interp::LowerProvenance;
using interp::NormBound;
using interp::UpperProvenance;

namespace {

constexpr double kCertificateTol = 1e-9;
constexpr double kIntervalSlack = 1e-9;

complex unit_sign(complex z) {
    const double m = std::abs(z);
    return m == 0.0 ? complex{} : z / m;
}

// Componentwise |y|^(r-1) sign(y), scaled by max |y| so large r cannot
// overflow. Only the direction is meaningful.
CVector duality_map(const CVector& y, double r) {
    double m = 0.0;
    for (const auto& z : y.entries()) m = std::max(m, std::abs(z));
    CVector w(y.size());
    if (m == 0.0) return w;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double a = std::abs(y[i]);
        if (a == 0.0) continue;
        w[i] = std::pow(a / m, r - 1.0) * (y[i] / a);
    }
    return w;
}

bool normalize(CVector& x, Exponent p) {
    const double s = vec_norm(x, p);
    if (s == 0.0 || !std::isfinite(s)) return false;
    x *= 1.0 / s;
    return true;
}

double ratio(const CMatrix& a, const CVector& x, Exponent p) {
    const double d = vec_norm(x, p);
    return d == 0.0 ? 0.0 : vec_norm(a * x, p) / d;
}

struct Climb {
    CVector x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Monotone fixed-point ascent for finite 1 < p < inf starting at x0.
Climb climb(const CMatrix& a, const CMatrix& a_adj, Exponent p, CVector x0, const AscentOptions& opt, int start) {
    const double pv = p.value();
    const double qv = dual_exponent(p).value();
    Climb c{std::move(x0)};
    if (!normalize(c.x, p)) return c;
    c.value = vec_norm(a * c.x, p);
    if (opt.observer) opt.observer(start, 0, c.value);
    for (int it = 1; it <= opt.max_iterations; ++it) {
        if (c.value == 0.0) {
            c.converged = true;
            break;
        }
        CVector next = duality_map(a_adj * duality_map(a * c.x, pv), qv);
        if (!normalize(next, p)) {
            c.converged = true;
            break;
        }
        const double v = vec_norm(a * next, p);
        c.iterations = it;
        if (v < c.value) {
            // Rounding-level decrease: the iteration has stalled.
            c.converged = true;
            break;
        }
        const double gain = (v - c.value) / c.value;
        c.x = std::move(next);
        c.value = v;
        if (opt.observer) opt.observer(start, it, c.value);
        if (gain < opt.gain_tolerance) {
            c.converged = true;
            break;
        }
    }
    return c;
}

std::vector<CVector> starting_vectors(const CMatrix& m, Exponent p, const AscentOptions& opt) {
    const std::size_t n = m.cols();
    std::vector<CVector> starts;
    starts.push_back(CVector::ones(n));
    if (opt.restarts >= 2) {
        std::size_t best_col = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = vec_norm(m * CVector::unit(n, j), p);
            if (v > best) best = v, best_col = j;
        }
        starts.push_back(CVector::unit(n, best_col));
    }
    for (int r = 2; r < opt.restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss;
        CVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = {gauss(rng), gauss(rng)};
        starts.push_back(std::move(x));
    }
    return starts;
}

Climb multistart(const CMatrix& m, Exponent p, const AscentOptions& opt) {
    const CMatrix m_adj = adjoint(m);
    const auto starts = starting_vectors(m, p, opt);
    Climb best{CVector(m.cols())};
    bool have = false;
    int agreeing = 0;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        Climb c = climb(m, m_adj, p, starts[s], opt, static_cast<int>(s));
        if (!have || c.value > best.value) {
            if (have && approx_equal(c.value, best.value, opt.agreement_tolerance)) ++agreeing;
            best = std::move(c);
            have = true;
        } else if (approx_equal(c.value, best.value, opt.agreement_tolerance)) {
            ++agreeing;
        }
        if (opt.stop_on_agreement && agreeing >= 1) break;
    }
    return best;
}

AscentResult finish(const CMatrix& a, CVector x, Exponent p, int iterations, bool converged) {
    normalize(x, p);
    AscentResult r;
    r.value = ratio(a, x, p);
    r.maximizer = std::move(x);
    r.iterations = iterations;
    r.converged = converged;
    return r;
}

// Objective over the real unit sphere, parametrised by angles.
CVector sphere_point(std::size_t n, double theta, double phi) {
    if (n == 2) return CVector{std::cos(theta), std::sin(theta)};
    return CVector{std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)};
}

template <class F>
double golden_max(F&& f, double lo, double hi, double tol, double& arg) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc >= fd) {
            hi = d, d = c, fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c, c = d, fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    arg = fc >= fd ? c : d;
    return std::max(fc, fd);
}

NormBound point_bound(Exponent p, double v, LowerProvenance lp, UpperProvenance up) {
    return NormBound{p, v, v, lp, up};
}

bool has_symmetric_profile(const CMatrix& a) {
    // ||A||_p = ||A^T||_q, so A = A^T, A = A^* and circulants (C^T = J C J
    // for the index reversal J) all have p <-> q symmetric profiles.
    bool sym = true, herm = true;
    for (std::size_t i = 0; i < a.rows() && (sym || herm); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (a(i, j) != a(j, i)) sym = false;
            if (a(i, j) != std::conj(a(j, i))) herm = false;
        }
    return sym || herm || structured::recognize_circulant(a).has_value();
}

bool is_self_adjoint(const CMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (a(i, j) != std::conj(a(j, i))) return false;
    return true;
}

NormBound generic_bound(const CMatrix& a, Exponent p, const exact::AnchorNorms& anchors, const CertifyOptions& opt) {
    if (p.is_one()) return point_bound(p, anchors.n1, LowerProvenance::anchor, UpperProvenance::anchor);
    if (p.is_infinite()) return point_bound(p, anchors.ninf, LowerProvenance::anchor, UpperProvenance::anchor);
    if (p.is_two()) return point_bound(p, anchors.n2, LowerProvenance::anchor, UpperProvenance::anchor);

    const Exponent pe = (p < Exponent::finite(2.0) && has_symmetric_profile(a)) ? dual_exponent(p) : p;
    const auto up = interp::upper_bound(anchors, a.rows(), pe, is_self_adjoint(a));

    NormBound b{p, ratio(a, CVector::ones(a.rows()), pe), up.value, LowerProvenance::ones_vector, up.provenance};
    for (const auto& cert : opt.certificates) {
        const double v = eigen_lower_bound(a, cert.x, cert.s, cert.lambda);
        if (v > b.lower) b.lower = v, b.lower_provenance = LowerProvenance::eigen_certificate;
    }
    AscentOptions ao;
    ao.restarts = opt.restarts;
    ao.seed = opt.seed;
    const auto asc = ascent_lower_bound(a, pe, ao);
    if (asc.value > b.lower) b.lower = asc.value, b.lower_provenance = LowerProvenance::boyd;

    if (b.lower > b.upper) {
        if (b.lower > b.upper * (1.0 + kIntervalSlack))
            throw std::logic_error("lower bound exceeds upper bound beyond rounding");
        b.lower = b.upper;
    }
    return b;
}

}  // namespace

double eigen_lower_bound(const CMatrix& a, const CVector& x, const structured::UnitaryPermutation& s, complex lambda) {
    if (!a.is_square() || a.rows() != x.size() || s.size() != x.size())
        throw dimension_error("eigen certificate dimensions do not match");
    const double xn = vec_norm(x, Exponent::finite(2.0));
    if (xn == 0.0) throw certificate_rejected("certificate vector is zero");
    const CVector ax = a * x;
    const CVector sx = structured::densify(s) * x;
    double resid = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) resid += std::norm(ax[i] - lambda * sx[i]);
    resid = std::sqrt(resid);
    const double scale = std::max(vec_norm(ax, Exponent::finite(2.0)), std::abs(lambda) * xn);
    if (resid > kCertificateTol * std::max(scale, xn * 1e-300))
        throw certificate_rejected("A x differs from lambda S x (residual " + std::to_string(resid) + ")");
    return std::abs(lambda);
}

AscentResult ascent_lower_bound(const CMatrix& a, Exponent p, int restarts, std::uint64_t seed) {
    AscentOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    return ascent_lower_bound(a, p, opt);
}

AscentResult ascent_lower_bound(const CMatrix& a, Exponent p, const AscentOptions& opt) {
    if (!a.is_square()) throw dimension_error("ascent_lower_bound needs a square matrix");
    if (opt.restarts < 1) throw argument_error("restarts must be >= 1");
    const std::size_t n = a.rows();

    if (p.is_one()) {
        return finish(a, CVector::unit(n, exact::norm_one(a).index), p, 0, true);
    }
    if (p.is_infinite()) {
        const std::size_t row = exact::norm_inf(a).index;
        CVector x(n);
        for (std::size_t j = 0; j < n; ++j) {
            const complex s = unit_sign(std::conj(a(row, j)));
            x[j] = s == complex{} ? complex{1.0} : s;
        }
        return finish(a, std::move(x), p, 0, true);
    }

    if (p < Exponent::finite(2.0)) {
        // Ascend on A* in l^q, then map the dual maximizer back: with
        // z = A* eta, x = dual(z) satisfies ||A x||_p / ||x||_p >= ||z||_q.
        const Exponent q = dual_exponent(p);
        const CMatrix a_adj = adjoint(a);
        const Climb dual = multistart(a_adj, q, opt);
        CVector x0 = duality_map(a_adj * dual.x, q.value());
        if (vec_norm(x0, p) == 0.0) x0 = CVector::ones(n);
        const Climb polished = climb(a, a_adj, p, std::move(x0), opt, opt.restarts);
        return finish(a, polished.x, p, dual.iterations + polished.iterations, dual.converged && polished.converged);
    }

    const Climb best = multistart(a, p, opt);
    return finish(a, best.x, p, best.iterations, best.converged);
}

OracleResult oracle_norm(const CMatrix& a, Exponent p, int resolution) {
    if (!a.is_square()) throw dimension_error("oracle_norm needs a square matrix");
    const std::size_t n = a.rows();
    if (n < 2 || n > 3) throw unsupported_size("oracle_norm supports only n = 2 or 3");
    if (!a.is_real()) throw unsupported_size("oracle_norm supports only real matrices");
    if (resolution < 360) throw argument_error("oracle resolution must be >= 360");

    const double pi = std::numbers::pi;
    auto f = [&](double theta, double phi) { return ratio(a, sphere_point(n, theta, phi), p); };

    OracleResult out;
    double best_theta = 0.0, best_phi = 0.0, best = -1.0, h = 0.0;
    if (n == 2) {
        h = pi / resolution;
        for (int k = 0; k < resolution; ++k) {
            const double th = k * h;
            const double v = f(th, 0.0);
            if (v > best) best = v, best_theta = th;
        }
        double arg = best_theta;
        const double v = golden_max([&](double t) { return f(t, 0.0); }, best_theta - h, best_theta + h, 1e-10, arg);
        if (v > best) best = v, best_theta = arg;
        out.angles = {best_theta};
    } else {
        h = 2.0 * pi / resolution;
        const int phi_steps = resolution / 4;
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j <= phi_steps; ++j) {
                const double th = i * h, ph = j * (0.5 * pi / phi_steps);
                const double v = f(th, ph);
                if (v > best) best = v, best_theta = th, best_phi = ph;
            }
        for (double w = h; w > 1e-8; w *= 0.5) {
            double arg = best_theta;
            double v = golden_max([&](double t) { return f(t, best_phi); }, best_theta - w, best_theta + w, 1e-10, arg);
            if (v > best) best = v, best_theta = arg;
            arg = best_phi;
            v = golden_max([&](double s) { return f(best_theta, s); }, best_phi - w, best_phi + w, 1e-10, arg);
            if (v > best) best = v, best_phi = arg;
        }
        out.angles = {best_theta, best_phi};
    }
    out.value = best;
    out.maximizer = sphere_point(n, best_theta, best_phi);
    return out;
}

NormBound certified_bound(const CMatrix& a, Exponent p, std::uint64_t seed) {
    CertifyOptions opt;
    opt.seed = seed;
    return certified_bound(a, p, opt);
}

NormBound certified_bound(const CMatrix& a, Exponent p, const CertifyOptions& opt) {
    if (!a.is_square()) throw dimension_error("certified_bound needs a square matrix");
    if (!opt.use_structure) return generic_bound(a, p, exact::anchor_norms(a), opt);

    const auto parts = structured::split_block_diagonal(a);
    if (parts.size() > 1) {
        NormBound out{p, -1.0, -1.0};
        for (const auto& part : parts) {
            const auto b = certified_bound(part, p, opt);
            if (b.lower > out.lower) out.lower = b.lower, out.lower_provenance = b.lower_provenance;
            if (b.upper > out.upper) out.upper = b.upper, out.upper_provenance = b.upper_provenance;
        }
        return out;
    }

    if (auto alpha = structured::doubly_balanced_norm(a))
        return point_bound(p, *alpha, LowerProvenance::eigen_certificate, UpperProvenance::anchor);

    const auto anchors = exact::anchor_norms(a);
    if (interp::is_log_affine(anchors).is_la)
        return point_bound(p, interp::la_envelope(anchors, p), LowerProvenance::anchor, UpperProvenance::anchor);

    if (!structured::recognize_circulant(a)) {
        if (auto h = structured::recognize_hankel(a)) {
            // ||P C||_p = ||C||_p for the unitary permutation P.
            auto b = certified_bound(structured::densify(structured::hankel_factor(*h).circulant), p, opt);
            b.p = p;
            return b;
        }
    }

    const auto tensors = structured::recognize_tensors(a);
    if (!tensors.empty()) {
        const auto& t = tensors.front();
        const auto core = certified_bound(t.core, p, opt);
        const auto iv = structured::tensor_norm(t, p, structured::Interval{core.lower, core.upper});
        const bool point = core.lower == core.upper;
        return NormBound{p, iv.lower, iv.upper, point ? LowerProvenance::structured : core.lower_provenance,
                         point ? UpperProvenance::structured : core.upper_provenance};
    }

    return generic_bound(a, p, anchors, opt);
}

}  // namespace pnorm::estimator
