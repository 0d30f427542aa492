#include "pnorm/structured.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pnorm::structured {

namespace {

constexpr double kEntryTol = 1e-12;
constexpr double kBalanceTol = 1e-9;
constexpr double kWitnessTol = 1e-9;

complex root_of_unity(std::size_t n, std::size_t k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n));
}

double frobenius2(const CMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.entries()) s += std::norm(z);
    return s;
}

CMatrix block_of(const CMatrix& a, std::size_t bi, std::size_t bj, std::size_t n) {
    CMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(bi * n + i, bj * n + j);
    return b;
}

// Least-squares scalar c with b ~ c * pivot, and whether the fit is within tol.
std::optional<complex> scalar_multiple(const CMatrix& b, const CMatrix& pivot, double pivot_norm2, double tol) {
    complex num{};
    for (std::size_t i = 0; i < b.entries().size(); ++i) num += std::conj(pivot.entries()[i]) * b.entries()[i];
    const complex c = num / pivot_norm2;
    for (std::size_t i = 0; i < b.entries().size(); ++i)
        if (std::abs(b.entries()[i] - c * pivot.entries()[i]) > tol) return std::nullopt;
    return c;
}

}  // namespace

UnitaryPermutation::UnitaryPermutation(std::vector<std::size_t> sigma, std::vector<complex> phases)
    : sigma_(std::move(sigma)), phases_(std::move(phases)) {
    const std::size_t n = sigma_.size();
    if (n == 0) throw dimension_error("unitary permutation of size 0");
    if (phases_.size() != n) throw dimension_error("phase count does not match permutation size");
    std::vector<bool> seen(n, false);
    for (auto s : sigma_) {
        if (s >= n || seen[s]) throw argument_error("sigma is not a permutation");
        seen[s] = true;
    }
    for (const auto& a : phases_)
        if (std::abs(std::abs(a) - 1.0) > kEntryTol) throw argument_error("phase modulus differs from 1");
}

UnitaryPermutation UnitaryPermutation::identity(std::size_t n) {
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
    return UnitaryPermutation(std::move(sigma), std::vector<complex>(n, 1.0));
}

Circulant::Circulant(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw dimension_error("circulant needs at least one coefficient");
}

HankelMod::HankelMod(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw dimension_error("Hankel-mod matrix needs at least one coefficient");
}

TensorRankOne::TensorRankOne(CVector a, CVector b, CMatrix c)
    : alpha(std::move(a)), beta(std::move(b)), core(std::move(c)) {
    if (alpha.size() != beta.size()) throw dimension_error("alpha and beta must have equal length");
    if (!core.is_square()) throw dimension_error("tensor core must be square");
}

CMatrix densify(const UnitaryPermutation& s) {
    CMatrix m(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) m(i, s.sigma()[i]) = s.phases()[i];
    return m;
}

CMatrix densify(const Circulant& c) {
    const std::size_t n = c.size();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c.coeffs()[(j + n - i) % n];
    return m;
}

CMatrix densify(const HankelMod& h) {
    const std::size_t n = h.size();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = h.coeffs()[(i + j) % n];
    return m;
}

CMatrix densify(const TensorRankOne& t) {
    const std::size_t k = t.alpha.size();
    const std::size_t n = t.core.rows();
    CMatrix m(k * n, k * n);
    for (std::size_t bi = 0; bi < k; ++bi)
        for (std::size_t bj = 0; bj < k; ++bj) {
            const complex s = t.alpha[bi] * std::conj(t.beta[bj]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = s * t.core(i, j);
        }
    return m;
}

std::optional<Circulant> recognize_circulant(const CMatrix& a) {
    if (!a.is_square()) return std::nullopt;
    const std::size_t n = a.rows();
    const double tol = kEntryTol * a.max_abs();
    std::vector<complex> coeffs(a.entries().begin(), a.entries().begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(a(i, j) - coeffs[(j + n - i) % n]) > tol) return std::nullopt;
    return Circulant(std::move(coeffs));
}

std::optional<HankelMod> recognize_hankel(const CMatrix& a) {
    if (!a.is_square()) return std::nullopt;
    const std::size_t n = a.rows();
    const double tol = kEntryTol * a.max_abs();
    std::vector<complex> coeffs(a.entries().begin(), a.entries().begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(a(i, j) - coeffs[(i + j) % n]) > tol) return std::nullopt;
    return HankelMod(std::move(coeffs));
}

std::optional<UnitaryPermutation> recognize_unitary_permutation(const CMatrix& a) {
    if (!a.is_square()) return std::nullopt;
    const std::size_t n = a.rows();
    std::vector<std::size_t> sigma(n);
    std::vector<complex> phases(n);
    std::vector<int> col_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const double m = std::abs(a(i, j));
            if (m <= kEntryTol) continue;
            if (std::abs(m - 1.0) > kEntryTol) return std::nullopt;
            ++count;
            ++col_count[j];
            sigma[i] = j;
            phases[i] = a(i, j);
        }
        if (count != 1) return std::nullopt;
    }
    for (int c : col_count)
        if (c != 1) return std::nullopt;
    return UnitaryPermutation(std::move(sigma), std::move(phases));
}

std::vector<TensorRankOne> recognize_tensors(const CMatrix& a) {
    std::vector<TensorRankOne> found;
    if (!a.is_square()) return found;
    const std::size_t total = a.rows();
    const double scale = a.max_abs();
    if (scale == 0.0) return found;
    const double tol = kEntryTol * scale;

    for (std::size_t n = 1; n < total; ++n) {
        if (total % n != 0) continue;
        const std::size_t k = total / n;

        std::size_t pi = 0, pj = 0;
        double best = -1.0;
        for (std::size_t bi = 0; bi < k; ++bi)
            for (std::size_t bj = 0; bj < k; ++bj) {
                const double f = frobenius2(block_of(a, bi, bj, n));
                if (f > best) best = f, pi = bi, pj = bj;
            }
        const CMatrix pivot = block_of(a, pi, pj, n);

        std::vector<complex> coef(k * k);
        bool ok = true;
        for (std::size_t bi = 0; bi < k && ok; ++bi)
            for (std::size_t bj = 0; bj < k && ok; ++bj) {
                auto c = scalar_multiple(block_of(a, bi, bj, n), pivot, best, tol);
                if (!c) ok = false;
                else coef[bi * k + bj] = *c;
            }
        if (!ok) continue;

        // coef[pi][pj] == 1; factor coef = alpha * beta^* through the pivot.
        CVector alpha(k), beta(k);
        for (std::size_t i = 0; i < k; ++i) alpha[i] = coef[i * k + pj];
        for (std::size_t j = 0; j < k; ++j) beta[j] = std::conj(coef[pi * k + j]);
        TensorRankOne t(std::move(alpha), std::move(beta), pivot);
        const CMatrix dense = densify(t);
        bool matches = true;
        for (std::size_t i = 0; i < dense.entries().size() && matches; ++i)
            matches = std::abs(dense.entries()[i] - a.entries()[i]) <= tol;
        if (matches) found.push_back(std::move(t));
    }
    return found;
}

std::optional<double> doubly_balanced_norm(const CMatrix& a) {
    if (!a.is_square()) throw dimension_error("doubly_balanced_norm needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<double> row(n, 0.0), col(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const complex z = a(i, j);
            if (std::abs(z.imag()) > kEntryTol || z.real() < -kEntryTol) return std::nullopt;
            const double v = std::max(0.0, z.real());
            row[i] += v;
            col[j] += v;
        }
    double total = 0.0;
    for (double r : row) total += r;
    const double mean = total / static_cast<double>(n);
    if (mean == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(row[i] - mean) > kBalanceTol * mean || std::abs(col[i] - mean) > kBalanceTol * mean)
            return std::nullopt;
    return mean;
}

double circulant_two_norm(const Circulant& c) {
    const std::size_t n = c.size();
    double best = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        complex s{};
        for (std::size_t i = 0; i < n; ++i) s += c.coeffs()[i] * root_of_unity(n, k * i);
        best = std::max(best, std::abs(s));
    }
    return best;
}

LAWitness classify_circulant_la(const Circulant& c) {
    const auto coeffs = c.coeffs();
    const std::size_t n = coeffs.size();
    double total = 0.0, biggest = 0.0;
    for (const auto& a : coeffs) total += std::abs(a), biggest = std::max(biggest, std::abs(a));

    LAWitness w;
    if (biggest == 0.0) {
        w.is_la = true;
        w.degenerate = true;
        w.beta = 1.0;
        w.omega = 1.0;
        w.norm = 0.0;
        return w;
    }
    std::size_t i0 = 0;
    while (std::abs(coeffs[i0]) <= kEntryTol * biggest) ++i0;

    for (std::size_t k = 0; k < n; ++k) {
        const complex beta = coeffs[i0] * root_of_unity(n, k * i0) / std::abs(coeffs[i0]);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = std::abs(coeffs[i] * root_of_unity(n, k * i) - beta * std::abs(coeffs[i])) <= kWitnessTol * total;
        if (ok) {
            w.is_la = true;
            w.beta = beta;
            w.omega = root_of_unity(n, k);
            w.norm = total;
            return w;
        }
    }
    return w;
}

HankelFactors hankel_factor(const HankelMod& h) {
    const std::size_t n = h.size();
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = (n - i) % n;
    return {UnitaryPermutation(std::move(sigma), std::vector<complex>(n, 1.0)),
            Circulant(std::vector<complex>(h.coeffs().begin(), h.coeffs().end()))};
}

CMatrix pad_embed(const CMatrix& a, std::size_t m) {
    if (!a.is_square()) throw dimension_error("pad_embed needs a square matrix");
    if (m < a.rows()) throw dimension_error("pad_embed target smaller than the matrix");
    CMatrix out(m, m);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

CMatrix direct_sum(std::span<const CMatrix> parts) {
    if (parts.empty()) throw argument_error("direct_sum of no parts");
    std::size_t n = 0;
    for (const auto& p : parts) {
        if (!p.is_square()) throw dimension_error("direct_sum parts must be square");
        n += p.rows();
    }
    CMatrix out(n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) out(off + i, off + j) = p(i, j);
        off += p.rows();
    }
    return out;
}

std::vector<CMatrix> split_block_diagonal(const CMatrix& a) {
    if (!a.is_square()) throw dimension_error("split_block_diagonal needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<std::size_t> row_reach(n, 0), col_reach(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != complex{}) {
                row_reach[i] = std::max(row_reach[i], j);
                col_reach[j] = std::max(col_reach[j], i);
            }

    std::vector<CMatrix> parts;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        for (std::size_t i = start; i < end; ++i) end = std::max({end, row_reach[i] + 1, col_reach[i] + 1});
        CMatrix part(end - start, end - start);
        for (std::size_t i = start; i < end; ++i)
            for (std::size_t j = start; j < end; ++j) part(i - start, j - start) = a(i, j);
        parts.push_back(std::move(part));
        start = end;
    }
    return parts;
}

double direct_sum_norm(std::span<const double> part_norms) {
    if (part_norms.empty()) throw argument_error("direct_sum_norm of no parts");
    return *std::max_element(part_norms.begin(), part_norms.end());
}

Interval direct_sum_norm(std::span<const Interval> part_norms) {
    if (part_norms.empty()) throw argument_error("direct_sum_norm of no parts");
    Interval out{part_norms[0].lower, part_norms[0].upper};
    for (const auto& iv : part_norms) {
        out.lower = std::max(out.lower, iv.lower);
        out.upper = std::max(out.upper, iv.upper);
    }
    return out;
}

double lp_combine(std::span<const double> values, Exponent r) {
    if (values.empty()) return 0.0;
    double m = 0.0;
    for (double v : values) {
        if (v < 0.0) throw domain_error("block norms must be nonnegative");
        m = std::max(m, v);
    }
    if (r.is_infinite() || m == 0.0) return m;
    const double rv = r.value();
    double s = 0.0;
    for (double v : values) s += std::pow(v / m, rv);
    return m * std::pow(s, 1.0 / rv);
}

BlockBound block_column_bound(std::span<const double> block_norms, Exponent p, bool exact) {
    return {lp_combine(block_norms, p), exact};
}

BlockBound block_row_bound(std::span<const double> block_norms, Exponent p, bool exact) {
    return {lp_combine(block_norms, dual_exponent(p)), exact};
}

double block_grid_bound(std::span<const std::vector<double>> block_norms, Exponent p) {
    if (block_norms.empty() || block_norms.front().empty()) throw argument_error("empty block grid");
    const std::size_t k = block_norms.size();
    const std::size_t l = block_norms.front().size();
    for (const auto& r : block_norms)
        if (r.size() != l) throw dimension_error("ragged block grid");
    const Exponent q = dual_exponent(p);

    std::vector<double> inner(k);
    for (std::size_t i = 0; i < k; ++i) inner[i] = lp_combine(block_norms[i], q);
    const double rows_first = lp_combine(inner, p);

    std::vector<double> col(k), outer(l);
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t i = 0; i < k; ++i) col[i] = block_norms[i][j];
        outer[j] = lp_combine(col, p);
    }
    const double cols_first = lp_combine(outer, q);
    return std::min(rows_first, cols_first);
}

bool blocks_are_scalar_multiples(std::span<const CMatrix> blocks) {
    if (blocks.empty()) return true;
    std::size_t pivot = 0;
    double best = -1.0, scale = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].rows() != blocks[0].rows() || blocks[i].cols() != blocks[0].cols()) return false;
        const double f = frobenius2(blocks[i]);
        if (f > best) best = f, pivot = i;
        scale = std::max(scale, blocks[i].max_abs());
    }
    if (best == 0.0) return true;
    for (const auto& b : blocks)
        if (!scalar_multiple(b, blocks[pivot], best, kEntryTol * scale)) return false;
    return true;
}

CMatrix column_embed(const CVector& x) {
    const std::size_t n = x.size();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, 0) = x[i];
    return m;
}

CMatrix row_embed(const CVector& x) {
    const std::size_t n = x.size();
    CMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = std::conj(x[j]);
    return m;
}

double column_embed_norm(const CVector& x, Exponent p) { return vec_norm(x, p); }

double row_embed_norm(const CVector& x, Exponent p) { return vec_norm(x, dual_exponent(p)); }

EmbedLA embed_is_la(const CVector& x) {
    double lo = HUGE_VAL, hi = 0.0;
    for (const auto& z : x.entries()) {
        const double m = std::abs(z);
        if (m == 0.0) continue;
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    if (hi == 0.0) return {true, true};
    return {hi - lo <= 1e-9 * hi, false};
}

double tensor_norm(const TensorRankOne& t, Exponent p, double core_norm) {
    return vec_norm(t.alpha, p) * vec_norm(t.beta, dual_exponent(p)) * core_norm;
}

Interval tensor_norm(const TensorRankOne& t, Exponent p, Interval core_norm) {
    const double f = vec_norm(t.alpha, p) * vec_norm(t.beta, dual_exponent(p));
    return {f * core_norm.lower, f * core_norm.upper};
}

bool tensor_is_la(const TensorRankOne& t, bool core_is_la) {
    return embed_is_la(t.alpha).is_la && embed_is_la(t.beta).is_la && core_is_la;
}

}  // namespace pnorm::structured
