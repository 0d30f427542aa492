#include "pnorm/exact.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pnorm::exact {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kSweepTolerance = 1e-14;
constexpr double kUnitModulusTol = 1e-12;

CMatrix gram(const CMatrix& a) {
    const std::size_t n = a.cols();
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            complex s{};
            for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(a(k, i)) * a(k, j);
            h(i, j) = s;
            h(j, i) = std::conj(s);
        }
    for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
    return h;
}

}  // namespace

IndexedNorm norm_one(const CMatrix& a) {
    IndexedNorm best{-1.0, 0};
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        if (s > best.value) best = {s, j};
    }
    return best;
}

IndexedNorm norm_inf(const CMatrix& a) {
    IndexedNorm best{-1.0, 0};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        if (s > best.value) best = {s, i};
    }
    return best;
}

std::vector<double> hermitian_eigenvalues(CMatrix h) {
    if (!h.is_square()) throw dimension_error("hermitian_eigenvalues needs a square matrix");
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) h(j, i) = std::conj(h(i, j));
    }

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diag += std::norm(h(i, i));
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(h(i, j));
        }
        if (std::sqrt(off) <= kSweepTolerance * std::sqrt(diag) || off == 0.0) break;

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const complex b = h(p, q);
                const double mag = std::abs(b);
                if (mag == 0.0) continue;
                // Phase the (p,q) entry to a real value, then apply a real rotation.
                const complex phase = std::conj(b) / mag;  // e^{-i phi}
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
                const complex upp = c, upq = s, uqp = -s * phase, uqq = c * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const complex hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = hkp * upp + hkq * uqp;
                    h(k, q) = hkp * upq + hkq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complex hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = std::conj(upp) * hpk + std::conj(uqp) * hqk;
                    h(q, k) = std::conj(upq) * hpk + std::conj(uqq) * hqk;
                }
                h(p, q) = h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double norm_two(const CMatrix& a) {
    if (a.max_abs() == 0.0) return 0.0;
    const auto ev = hermitian_eigenvalues(gram(a));
    return std::sqrt(std::max(0.0, ev.back()));
}

AnchorNorms anchor_norms(const CMatrix& a) {
    if (!a.is_square()) throw dimension_error("anchor_norms needs a square matrix");
    return {norm_one(a).value, norm_two(a), norm_inf(a).value};
}

bool is_p_isometry(const CMatrix& s, Exponent p, int trials, std::uint64_t seed) {
    if (!s.is_square()) throw dimension_error("is_p_isometry needs a square matrix");
    if (trials < 1) throw argument_error("trials must be >= 1");
    const std::size_t n = s.rows();
    std::vector<int> col_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row_count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const double m = std::abs(s(i, j));
            if (m <= kUnitModulusTol) continue;
            if (std::abs(m - 1.0) > kUnitModulusTol) return false;
            ++row_count;
            ++col_count[j];
        }
        if (row_count != 1) return false;
    }
    if (std::any_of(col_count.begin(), col_count.end(), [](int c) { return c != 1; })) return false;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < trials; ++t) {
        CVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = {gauss(rng), gauss(rng)};
        if (!approx_equal(vec_norm(s * x, p), vec_norm(x, p), 1e-12))
            throw std::logic_error("unitary permutation failed the isometry self-check");
    }
    return true;
}

}  // namespace pnorm::exact
