#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latorbit/errors.hpp"

namespace latorbit {

/// Dense row-major real matrix. Dimensions here are tiny (at most ~25), so
/// everything is plain O(n^3) arithmetic on a flat buffer.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
    Mat(std::size_t rows, std::size_t cols, std::initializer_list<double> entries)
        : rows_(rows), cols_(cols), a_(entries) {
        if (a_.size() != rows * cols) throw config_error("Mat: initializer size mismatch");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat& operator*=(double s) {
        for (double& x : a_) x *= s;
        return *this;
    }
    Mat& operator+=(const Mat& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols() != y.rows()) throw config_error("Mat multiply: shape mismatch");
    Mat z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

inline Mat operator*(double s, Mat m) {
    m *= s;
    return m;
}
inline Mat operator+(Mat x, const Mat& y) {
    x += y;
    return x;
}
inline Mat operator-(Mat x, const Mat& y) {
    x -= y;
    return x;
}

/// Row vector times matrix.
inline std::vector<double> row_mul(const std::vector<double>& v, const Mat& m) {
    if (v.size() != m.rows()) throw config_error("row_mul: shape mismatch");
    std::vector<double> r(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    return r;
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

/// Frobenius / Hilbert-Schmidt norm.
inline double hs_norm(const Mat& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

inline double max_abs(const Mat& m) {
    double s = 0.0;
    for (double x : m.data()) s = std::max(s, std::abs(x));
    return s;
}

/// LU determinant with partial pivoting.
double det(const Mat& m);

/// Gauss-Jordan inverse with partial pivoting. Throws degenerate_input_error
/// when a pivot falls below tiny * max|entry|.
Mat inverse(const Mat& m);

/// Solves x * A = b for a row vector x (i.e. x = b * A^{-1}).
std::vector<double> solve_row(const std::vector<double>& b, const Mat& a);

/// Largest singular value, by power iteration on A^T A.
double op_norm(const Mat& m);

/// All singular values, descending (Jacobi one-sided; fine for tiny matrices).
std::vector<double> singular_values(const Mat& m);

/// Square integer matrix, dimension at most 4. Entries are exact.
struct IntMat {
    int n = 0;
    std::array<std::int64_t, 16> a{};

    static IntMat identity(int n) {
        IntMat m;
        m.n = n;
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    std::int64_t norm2_int() const {
        std::int64_t s = 0;
        for (int k = 0; k < n * n; ++k) s += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];
        return s;
    }

    IntMat operator*(const IntMat& o) const {
        IntMat r;
        r.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    IntMat transpose() const {
        IntMat r;
        r.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat to_real() const {
        Mat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<double>(at(i, j));
        return m;
    }

    bool operator==(const IntMat& o) const {
        if (n != o.n) return false;
        for (int k = 0; k < n * n; ++k)
            if (a[static_cast<std::size_t>(k)] != o.a[static_cast<std::size_t>(k)]) return false;
        return true;
    }

    /// Row-major lexicographic order; the enumeration output order.
    bool operator<(const IntMat& o) const {
        for (int k = 0; k < n * n; ++k) {
            if (a[static_cast<std::size_t>(k)] != o.a[static_cast<std::size_t>(k)])
                return a[static_cast<std::size_t>(k)] < o.a[static_cast<std::size_t>(k)];
        }
        return false;
    }
};

/// Exact determinant by cofactor expansion (n <= 4).
std::int64_t det_int(const IntMat& m);

} // namespace latorbit
