#include "pnorm/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace pnorm {

namespace {

// Above this exponent the p-norm and the max-norm agree to double precision
// whenever n^(1/p) - 1 is below 1e-12.
constexpr double kLargeExponent = 1e6;

}  // namespace

Exponent Exponent::finite(double p) {
    if (!std::isfinite(p)) throw domain_error("exponent must be finite; use Exponent::infinity()");
    if (p < 1.0) throw domain_error("exponent must be >= 1, got " + std::to_string(p));
    return Exponent(p);
}

Exponent Exponent::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "inf" || t == "infinity" || t == "+inf") return infinity();
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc{} || ptr != last)
        throw argument_error("cannot parse exponent '" + std::string(text) + "'");
    return finite(v);
}

double Exponent::value() const noexcept { return infinite_ ? HUGE_VAL : value_; }

std::string Exponent::to_string() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

Exponent dual_exponent(Exponent p) noexcept {
    if (p.is_infinite()) return Exponent::finite(1.0);
    if (p.is_one()) return Exponent::infinity();
    if (p.is_two()) return p;
    const double v = p.value();
    return Exponent::finite(v / (v - 1.0));
}

CVector::CVector(std::size_t n, complex fill) : data_(n, fill) {
    if (n == 0) throw dimension_error("vector length must be >= 1");
}

CVector::CVector(std::vector<complex> entries) : data_(std::move(entries)) {
    if (data_.empty()) throw dimension_error("vector length must be >= 1");
}

CVector::CVector(std::initializer_list<complex> entries) : CVector(std::vector<complex>(entries)) {}

CVector CVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw dimension_error("unit vector index out of range");
    CVector e(n);
    e[i] = 1.0;
    return e;
}

CVector& CVector::operator*=(complex c) {
    for (auto& z : data_) z *= c;
    return *this;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : CMatrix(rows, cols, std::vector<complex>(rows * cols)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be >= 1");
    if (data_.size() != rows * cols) throw dimension_error("entry count does not match rows * cols");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw dimension_error("matrix dimensions must be >= 1");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool CMatrix::is_real() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const complex& z) { return z.imag() == 0.0; });
}

double CMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

CVector CMatrix::operator*(const CVector& x) const {
    if (x.size() != cols_) throw dimension_error("matrix-vector size mismatch");
    CVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        complex s{};
        const complex* row = &data_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

CMatrix CMatrix::operator*(const CMatrix& b) const {
    if (cols_ != b.rows_) throw dimension_error("matrix-matrix size mismatch");
    CMatrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const complex a = (*this)(i, k);
            if (a == complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
        }
    return c;
}

CMatrix& CMatrix::operator*=(complex c) {
    for (auto& z : data_) z *= c;
    return *this;
}

double vec_norm(std::span<const complex> x, Exponent p) {
    if (x.empty()) throw dimension_error("vec_norm of empty vector");
    double m = 0.0;
    for (const auto& z : x) m = std::max(m, std::abs(z));
    if (p.is_infinite() || m == 0.0) return m;
    const double pv = p.value();
    if (pv == 1.0) {
        double s = 0.0;
        for (const auto& z : x) s += std::abs(z);
        return s;
    }
    if (pv > kLargeExponent && std::expm1(std::log(static_cast<double>(x.size())) / pv) < 1e-12) return m;
    // Scale by the max modulus so |x_i|^p cannot overflow.
    double s = 0.0;
    for (const auto& z : x) {
        const double r = std::abs(z) / m;
        if (r > 0.0) s += std::pow(r, pv);
    }
    return m * std::pow(s, 1.0 / pv);
}

double vec_norm(const CVector& x, Exponent p) { return vec_norm(x.entries(), p); }

complex pairing(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw dimension_error("pairing of vectors with different lengths");
    complex s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

CMatrix transpose(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double norm_equivalence_factor(std::size_t n, Exponent p1, Exponent p2) {
    if (n == 0) throw dimension_error("dimension must be >= 1");
    if (p2 < p1) throw argument_error("norm_equivalence_factor requires p1 <= p2");
    return std::pow(static_cast<double>(n), p1.reciprocal() - p2.reciprocal());
}

bool approx_equal(double a, double b, double tol) noexcept {
    if (a == b) return true;
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace pnorm
