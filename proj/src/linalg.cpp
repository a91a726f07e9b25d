#include "latorbit/linalg.hpp"

#include <cmath>

namespace latorbit {

Mat u_matrix(const std::vector<double>& v) {
    const std::size_t m = v.size();
    Mat u = Mat::identity(m + 1);
    for (std::size_t j = 0; j < m; ++j) u(m, j) = v[j];
    return u;
}

Mat a_matrix(int m, double t) {
    if (t <= 0.0) throw config_error("a_matrix: t must be positive");
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    Mat a(n, n);
    const double s = std::pow(t, -1.0 / m);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i) = s;
    a(n - 1, n - 1) = t;
    return a;
}

Mat q_embed(const IntMat& q) {
    const std::size_t m = static_cast<std::size_t>(q.n);
    Mat e = Mat::identity(m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) e(i, j) = static_cast<double>(q.at(static_cast<int>(i), static_cast<int>(j)));
    return e;
}

Mat HElement::to_matrix() const {
    return u_matrix(v) * a_matrix(m, t) * q_embed(q);
}

namespace {

/// Exact inverse of an SL(m,Z) element via cofactors (det = 1).
IntMat int_inverse(const IntMat& q) {
    const std::int64_t d = det_int(q);
    if (d != 1 && d != -1) throw degenerate_input_error("int_inverse: determinant not a unit");
    IntMat inv;
    inv.n = q.n;
    if (q.n == 1) {
        inv.at(0, 0) = d;
        return inv;
    }
    IntMat minor;
    minor.n = q.n - 1;
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            int rr = 0;
            for (int r = 0; r < q.n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < q.n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = q.at(r, c);
                }
                ++rr;
            }
            const std::int64_t cof = ((i + j) % 2 == 0 ? 1 : -1) * det_int(minor);
            inv.at(j, i) = cof * d; // adjugate transposed, divided by det (= d, unit)
        }
    return inv;
}

} // namespace

HElement h_mul(const HElement& h1, const HElement& h2) {
    if (h1.m != h2.m) throw config_error("h_mul: mixed dimensions");
    HElement r;
    r.m = h1.m;
    r.t = h1.t * h2.t;
    r.q = h1.q * h2.q;
    const IntMat q1inv = int_inverse(h1.q);
    const double scale = std::pow(h1.t, (h1.m + 1.0) / h1.m);
    r.v.assign(static_cast<std::size_t>(r.m), 0.0);
    for (int j = 0; j < r.m; ++j) {
        double s = 0.0;
        for (int i = 0; i < r.m; ++i) s += h2.v[static_cast<std::size_t>(i)] * static_cast<double>(q1inv.at(i, j));
        r.v[static_cast<std::size_t>(j)] = h1.v[static_cast<std::size_t>(j)] + scale * s;
    }
    return r;
}

Mat IwasawaFactors::lower() const {
    const std::size_t m = gblock.rows();
    Mat l(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) l(i, j) = gblock(i, j);
    for (std::size_t j = 0; j < m; ++j) l(m, j) = v[j];
    l(m, m) = 1.0 / det(gblock);
    return l;
}

IwasawaFactors block_iwasawa(const Mat& g) {
    if (!g.square() || g.rows() < 2) throw config_error("block_iwasawa: need square matrix, dim >= 2");
    const std::size_t n = g.rows();
    const std::size_t m = n - 1;
    const double scale = hs_norm(g);

    // Gram-Schmidt on the first m rows; e holds the orthonormal rows of k,
    // r the (lower-triangular) coefficients, which form gblock.
    std::vector<std::vector<double>> e;
    Mat r(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = g(i, j);
        for (std::size_t p = 0; p < e.size(); ++p) {
            const double c = dot(w, e[p]);
            r(i, p) = c;
            for (std::size_t j = 0; j < n; ++j) w[j] -= c * e[p][j];
        }
        const double pivot = norm2(w);
        if (pivot < 1e-8 * scale)
            throw degenerate_input_error("block_iwasawa: near-singular input (Gram-Schmidt pivot collapsed)");
        r(i, i) = pivot;
        for (double& x : w) x /= pivot;
        e.push_back(std::move(w));
    }

    // Unit normal to the hyperplane spanned by the first m rows, signed so the
    // corner entry of the lower factor comes out positive.
    std::vector<double> normal(n);
    {
        // Take any vector with a component off the span and orthogonalize.
        double best = -1.0;
        std::size_t bestj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> c(n, 0.0);
            c[j] = 1.0;
            for (const auto& ei : e) {
                const double d0 = dot(c, ei);
                for (std::size_t k = 0; k < n; ++k) c[k] -= d0 * ei[k];
            }
            const double rem = norm2(c);
            if (rem > best) {
                best = rem;
                bestj = j;
                normal = c;
            }
        }
        (void)bestj;
        if (best < 1e-8)
            throw degenerate_input_error("block_iwasawa: degenerate hyperplane");
        for (double& x : normal) x /= best;
    }
    std::vector<double> last(n);
    for (std::size_t j = 0; j < n; ++j) last[j] = g(m, j);
    double corner = dot(last, normal);
    if (corner < 0) {
        for (double& x : normal) x = -x;
        corner = -corner;
    }
    if (corner < 1e-12 * scale)
        throw degenerate_input_error("block_iwasawa: last row lies in the hyperplane");

    IwasawaFactors f;
    f.gblock = r;
    f.v.resize(m);
    for (std::size_t j = 0; j < m; ++j) f.v[j] = dot(last, e[j]);
    f.k = Mat(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) f.k(i, j) = e[i][j];
    for (std::size_t j = 0; j < n; ++j) f.k(m, j) = normal[j];
    return f;
}

std::vector<double> sphere_action(const std::vector<double>& w, const Mat& g) {
    const Mat ginv_t = inverse(g).transpose();
    std::vector<double> x = row_mul(w, ginv_t);
    const double nx = norm2(x);
    if (nx == 0.0) throw degenerate_input_error("sphere_action: zero image");
    for (double& c : x) c /= nx;
    return x;
}

double covolume(const Mat& basis) {
    const std::size_t m = basis.rows();
    Mat gram(m, m);
    double diag_scale = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < basis.cols(); ++c) s += basis(i, c) * basis(j, c);
            gram(i, j) = s;
        }
        diag_scale *= gram(i, i);
    }
    const double d = det(gram);
    if (!(d > 1e-20 * std::max(diag_scale, 1e-300)))
        throw degenerate_input_error("covolume: rank-deficient basis");
    return std::sqrt(d);
}

} // namespace latorbit
