#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latorbit/mat.hpp"

namespace latorbit {

/// Ball query for Gamma_T = { gamma in SL(n,Z) : ||gamma|| <= T }.
struct NormBallQuery {
    int n = 2;
    double T = 0.0;
};

/// Safety caps on T per dimension (counts grow like T^{n(n-1)}).
double enum_cap(int n);

/// Largest integer norm^2 admitted by radius T. Shells within relative 1e-6
/// of T^2 are included, so T = 1.7320508 picks up the norm^2 = 3 shell.
std::int64_t norm_budget(double T);

using MatVisitor = std::function<void(const IntMat&)>;

/// Serial reference: exhaustive DFS over all n^2 entries with norm-budget
/// pruning and an exact determinant test at the leaves. Emits in row-major
/// lexicographic order. Only viable for small T; kept as the oracle the fast
/// path is tested against.
void enumerate_sl_reference(int n, double T, const MatVisitor& visit);

/// Fast serial enumeration: DFS over the first n-1 rows with remaining norm
/// budget; the last row solves the linear Diophantine equation cof . x = 1
/// (cofactor expansion of the determinant along the last row) and only lattice
/// points inside the residual-norm ball are visited. Same output order as the
/// reference.
void enumerate_sl_serial(int n, double T, const MatVisitor& visit);

/// Parallel enumeration partitioned by first row; partition results are
/// concatenated in partition order, so the output is identical to the serial
/// path regardless of thread count.
std::vector<IntMat> enumerate_sl(int n, double T);

/// Parallel count without materializing the stream.
std::uint64_t count_sl(int n, double T);

struct GrowthFit {
    double exponent = 0.0;
    double prefactor = 0.0;               // e^intercept of the log-log fit
    std::vector<double> residuals;        // per-point log residuals
    std::vector<std::uint64_t> counts;
};

/// Least-squares slope of log(count) vs log(T). Requires >= 4 radii and at
/// least 100 matrices at the smallest radius.
GrowthFit growth_fit(int n, const std::vector<double>& T_list);

} // namespace latorbit
