#pragma once

#include <span>
#include <vector>

#include "crownvol/geometry.hpp"

// Bracket matrices, Pfaffians, the invariant measure and the symplectic
// pairing on the log-canonical xi coordinates.

namespace crownvol {

/// Dense skew-symmetric matrix; set_upper keeps M + M^T = 0 exact.
struct SkewForm {
    int dim = 0;
    std::vector<double> a;  // row-major dim x dim

    explicit SkewForm(int m) : dim(m), a(static_cast<std::size_t>(m) * m, 0.0) {}
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
    void set_upper(int i, int j, double v) {
        a[static_cast<std::size_t>(i) * dim + j] = v;
        a[static_cast<std::size_t>(j) * dim + i] = -v;
    }
};

/// A_{ij} = x_i (x_j - x_i) for i < j, skew-completed.
SkewForm x_bracket_matrix(const XCoords& x);

/// Recursive Laplace expansion along the first row; sign convention
/// Pf([[0,a],[-a,0]]) = a. Even dim <= 8 (cost (dim-1)!!); throws otherwise.
double pfaffian(const SkewForm& m);

/// Determinant by LU with partial pivoting (oracle for Pf^2 = det).
double determinant(const SkewForm& m);

/// Pf A = x_1 prod_{i>=2} (x_i - x_{i-1}); equals pfaffian(x_bracket_matrix(x))
/// for even-dimensional (odd cusp count) input.
double pfaffian_closed_form(const XCoords& x);

/// Invariant measure density w.r.t. prod_{i<n} d(delta_i)/2:
///   sinh(P/2) / prod_{i=1}^{n} sinh(delta_i/2).
double crown_measure_density_delta(const DeltaGaps& g);

/// Upper-triangular-ones bracket matrix of {log xi_i, log xi_j} = 1, i < j.
SkewForm ones_upper_matrix(int m);

/// B with B_{ij} = (-1)^{i+j} for i < j (1-based); satisfies A B = I.
SkewForm inverse_ones_matrix(int m);

/// sum_{i<j} (-1)^{i+j} (u_i v_j - v_i u_j) with 1-based signs; the
/// symplectic pairing of two d log xi tangent vectors. Even equal length.
double symplectic_eval(std::span<const double> u, std::span<const double> v);

/// max_{i<j} relative residual of {xi_i, xi_j} = xi_i xi_j when the bracket
/// is transported from the x-bracket by bilinearity (exact partials).
double xi_bracket_transform_check(const XCoords& x);

/// Casimir C = xi_1 xi_3 ... xi_{n-1} / (xi_2 xi_4 ... xi_{n-2}) (even n).
double casimir_crown(const XiCoords& xi);

/// max_k | {log C, log xi_k} | from {log xi_i, log xi_j} = sgn(j - i);
/// exact integer arithmetic, identically zero for even n.
int casimir_bracket_residual(const XiCoords& xi);

/// | |Pf(B)| - 1 | for the symplectic coefficient matrix B of size n-1;
/// the unsigned omega^k/k! density in prod d log xi coordinates is 1.
/// (Signed, Pf(B) = (-1)^{(n-1)/2} under the fixed convention.) Odd n.
double dh_consistency(int n);

} // namespace crownvol
