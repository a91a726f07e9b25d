#pragma once

#include <vector>

#include "latorbit/mat.hpp"

namespace latorbit {

/// Coordinates (v, t, q) of u_v a_t qt in the group H, where
///   u_v = [[I_m, 0], [v, 1]],  a_t = [[t^{-1/m} I_m, 0], [0, t]],
/// and qt is q in SL(m,Z) embedded as [[q, 0], [0, 1]].
struct HElement {
    int m = 0;
    std::vector<double> v;
    double t = 1.0;
    IntMat q;

    static HElement identity(int m) {
        HElement h;
        h.m = m;
        h.v.assign(static_cast<std::size_t>(m), 0.0);
        h.t = 1.0;
        h.q = IntMat::identity(m);
        return h;
    }

    /// The (m+1)x(m+1) matrix u_v a_t qt.
    Mat to_matrix() const;
};

/// Semidirect-product multiplication:
///   (v1,t1,q1)(v2,t2,q2) = (v1 + t1^{(m+1)/m} v2 q1^{-1}, t1 t2, q1 q2).
HElement h_mul(const HElement& h1, const HElement& h2);

/// u_v, a_t, qt as standalone matrices.
Mat u_matrix(const std::vector<double>& v);
Mat a_matrix(int m, double t);
Mat q_embed(const IntMat& q);

/// g = [[gblock, 0], [v, det(gblock)^{-1}]] * k with k in SO(m+1,R).
///
/// Canonical choice: Gram-Schmidt on the first m rows of g gives the first m
/// rows of k; the last row of k is the unit normal signed so the corner entry
/// det(gblock)^{-1} is positive. det k = +1 then holds automatically because
/// det g = 1.
struct IwasawaFactors {
    Mat gblock;            // m x m
    std::vector<double> v; // length m
    Mat k;                 // (m+1) x (m+1), rotation

    Mat lower() const;     // [[gblock,0],[v, det(gblock)^{-1}]]
    Mat reassemble() const { return lower() * k; }
};

/// Throws degenerate_input_error when the smallest Gram-Schmidt pivot falls
/// below 1e-8 * hs_norm(g).
IwasawaFactors block_iwasawa(const Mat& g);

/// Right action on the unit sphere: w.g = w (g^{-1})^T / ||w (g^{-1})^T||.
std::vector<double> sphere_action(const std::vector<double>& w, const Mat& g);

/// sqrt(det Gram) of the row-span basis. Throws on rank-deficient input.
double covolume(const Mat& basis);

} // namespace latorbit
