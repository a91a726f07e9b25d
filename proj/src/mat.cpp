#include "latorbit/mat.hpp"

#include <algorithm>
#include <cmath>

namespace latorbit {

double det(const Mat& m) {
    if (!m.square()) throw config_error("det: matrix not square");
    const std::size_t n = m.rows();
    Mat a = m;
    double d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (!m.square()) throw config_error("inverse: matrix not square");
    const std::size_t n = m.rows();
    Mat a = m;
    Mat inv = Mat::identity(n);
    const double scale = std::max(max_abs(m), 1e-300);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (std::abs(a(piv, k)) < 1e-13 * scale)
            throw degenerate_input_error("inverse: matrix numerically singular");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        const double p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = a(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::vector<double> solve_row(const std::vector<double>& b, const Mat& a) {
    return row_mul(b, inverse(a));
}

double op_norm(const Mat& m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

std::vector<double> singular_values(const Mat& m) {
    // One-sided Jacobi on the columns of A (or A^T when wider than tall).
    Mat a = (m.rows() >= m.cols()) ? m : m.transpose();
    const std::size_t n = a.cols();
    const std::size_t r = a.rows();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < r; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                off = std::max(off, std::abs(apq) / std::max(std::sqrt(app * aqq), 1e-300));
                if (std::abs(apq) < 1e-15 * std::sqrt(app * aqq)) continue;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < r; ++i) {
                    const double xp = a(i, p), xq = a(i, q);
                    a(i, p) = c * xp - s * xq;
                    a(i, q) = s * xp + c * xq;
                }
            }
        if (off < 1e-14) break;
    }
    std::vector<double> sv(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < r; ++i) s += a(i, j) * a(i, j);
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

std::int64_t det_int(const IntMat& m) {
    switch (m.n) {
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        case 3:
            return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                   m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                   m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        case 4: {
            std::int64_t d = 0;
            IntMat minor;
            minor.n = 3;
            for (int j = 0; j < 4; ++j) {
                for (int r = 1; r < 4; ++r) {
                    int cc = 0;
                    for (int c = 0; c < 4; ++c) {
                        if (c == j) continue;
                        minor.at(r - 1, cc++) = m.at(r, c);
                    }
                }
                const std::int64_t term = m.at(0, j) * det_int(minor);
                d += (j % 2 == 0) ? term : -term;
            }
            return d;
        }
        default:
            throw config_error("det_int: dimension must be 1..4");
    }
}

} // namespace latorbit
