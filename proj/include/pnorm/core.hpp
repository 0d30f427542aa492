#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnorm {

using complex = std::complex<double>;

// Error taxonomy shared by every module.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// An extended real exponent p in [1, inf]. Infinity is a distinct state,
/// never a large float.
class Exponent {
public:
    /// Throws domain_error unless 1 <= p < inf.
    static Exponent finite(double p);
    static Exponent infinity() noexcept { return Exponent{}; }
    /// Accepts a decimal literal or "inf" (case-insensitive). "2" and "2.0"
    /// parse to the same value.
    static Exponent parse(std::string_view text);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    /// The finite value, or +HUGE_VAL for infinity.
    double value() const noexcept;
    /// 1/p with 1/inf = 0.
    double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }
    bool is_one() const noexcept { return !infinite_ && value_ == 1.0; }
    bool is_two() const noexcept { return !infinite_ && value_ == 2.0; }

    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    /// Orders by p (equivalently, reverse order of 1/p).
    friend bool operator<(const Exponent& a, const Exponent& b) noexcept {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

private:
    Exponent() = default;
    explicit Exponent(double v) : value_(v), infinite_(false) {}

    double value_ = 0.0;
    bool infinite_ = true;
};

/// Hoelder conjugate: 1/p + 1/q = 1.
Exponent dual_exponent(Exponent p) noexcept;

/// Complex column vector of fixed, nonzero length.
class CVector {
public:
    explicit CVector(std::size_t n, complex fill = {});
    explicit CVector(std::vector<complex> entries);
    CVector(std::initializer_list<complex> entries);

    std::size_t size() const noexcept { return data_.size(); }
    complex& operator[](std::size_t i) { return data_[i]; }
    const complex& operator[](std::size_t i) const { return data_[i]; }
    std::span<const complex> entries() const noexcept { return data_; }
    std::span<complex> entries() noexcept { return data_; }

    static CVector ones(std::size_t n) { return CVector(n, complex{1.0, 0.0}); }
    static CVector unit(std::size_t n, std::size_t i);

    CVector& operator*=(complex c);
    friend CVector operator*(complex c, CVector v) { return v *= c; }
    friend bool operator==(const CVector&, const CVector&) = default;

private:
    std::vector<complex> data_;
};

/// Dense complex matrix, row-major, rows >= 1 and cols >= 1.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    /// Nested-list construction, e.g. CMatrix{{1, 2}, {3, 4}}.
    CMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const complex> entries() const noexcept { return data_; }

    /// True if every imaginary part is exactly zero.
    bool is_real() const noexcept;
    /// Largest entry modulus.
    double max_abs() const noexcept;

    CVector operator*(const CVector& x) const;
    CMatrix operator*(const CMatrix& b) const;
    CMatrix& operator*=(complex c);

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> data_;
};

/// (sum |x_i|^p)^(1/p), or max |x_i| for p = inf.
double vec_norm(const CVector& x, Exponent p);
double vec_norm(std::span<const complex> x, Exponent p);

/// <x, y> = sum x_i conj(y_i).
complex pairing(const CVector& x, const CVector& y);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);
/// Plain transpose.
CMatrix transpose(const CMatrix& a);

/// n^(1/p1 - 1/p2), the constant in ||x||_p1 <= c ||x||_p2 for p1 <= p2.
double norm_equivalence_factor(std::size_t n, Exponent p1, Exponent p2);

/// Relative comparison |a - b| <= tol * max(|a|, |b|), with equality for a == b.
bool approx_equal(double a, double b, double tol = 1e-12) noexcept;

}  // namespace pnorm
