#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qgt/gf.hpp"

namespace qgt::phase {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;

/// Max entrywise deviation from the conjugate transpose.
double hermiticity_defect(const Operator& op);

/// Pegg-Barnett phase operator on Z_q: eigenvalues theta0 + 2 pi k / q on
/// the discrete Fourier vectors.
Operator pegg_barnett_operator(int q, double theta0 = 0.0);

/// Galois phase operator, both construction routes.
struct GaloisPhaseOperator {
    Operator spectral;        // sum_b theta_b |theta_b^a><theta_b^a|
    Operator matrix_element;  // explicit S-sum form
    double max_route_deviation = 0.0;
};
GaloisPhaseOperator galois_phase_operator(const gf::Field& field, int a, int k = 0);

/// S(n, m) = sum over b in F_q of b_bar omega_p^{tr[b(n-m)]}.
Complex s_sum(const gf::Field& field, int n, int m);

/// Phase-locking operator: the eigenvalue-weighted spectral form over
/// coprime indices, and the Ramanujan-kernel matrix (1/q) c_q(n-l).
/// When truncate_to_totient is set, the kernel indices run 0..phi(q)
/// instead of the full 0..q-1 (the projector identity then fails).
struct LockOperator {
    Operator spectral;   // sum_{gcd(k,q)=1} theta'_k |theta'_k><theta'_k|
    Operator projector;  // sum_{gcd(k,q)=1} |theta'_k><theta'_k|
    Operator ramanujan;  // (1/q) c_q(n-l)
    double projector_deviation = 0.0;  // ramanujan vs projector, entrywise
};
LockOperator lock_operator(int q, bool truncate_to_totient = false);

/// Expectation of the locking operator in the pure phase state u_n =
/// exp(i n beta)/sqrt(q): the Ramanujan closed form and the exact spectral
/// value side by side.
struct LockExpectation {
    double closed_form = 0.0;            // full 0..q-1 kernel
    double closed_form_truncated = 0.0;  // kernel indices 0..phi(q)
    double spectral = 0.0;
    double imag_residue = 0.0;
};
LockExpectation lock_expectation(int q, double beta);

/// Expectation of the Galois phase operator in the same pure phase state:
/// the double-sum form, its diagonal subtotal, and the direct quadratic
/// form through the spectral operator.
struct GaloisExpectation {
    double value = 0.0;
    double diagonal_subtotal = 0.0;
    double direct = 0.0;  // <f| Theta_Gal |f>
    double imag_residue = 0.0;
};
GaloisExpectation galois_expectation(const gf::Field& field, int a, int k, double beta);

/// CSV-ready sweep row for the Mangoldt comparison.
struct LockSweepRow {
    int q;
    double expectation_closed_form;
    double expectation_spectral;
    double mangoldt_reference;  // pi Lambda(q) / ln q, 0 off prime powers
};
std::vector<LockSweepRow> lock_sweep(int qmax, double beta);

}  // namespace qgt::phase
