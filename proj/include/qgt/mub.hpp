#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgt/gf.hpp"
#include "qgt/gring.hpp"

namespace qgt::mub {

using StateVector = Eigen::VectorXcd;

struct MubError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EvenCharacteristic : MubError { using MubError::MubError; };
struct DimensionMismatch : MubError { using MubError::MubError; };
struct NonSquareDimension : MubError { using MubError::MubError; };

struct Basis {
    std::string label;  // "a=<index>" or "computational"
    std::vector<StateVector> vectors;
};

struct BasisSet {
    int dim = 0;
    std::vector<Basis> bases;
    bool includes_computational = false;
};

struct UnbiasednessReport {
    double max_ortho_deviation = 0.0;  // within-basis Gram vs identity
    double max_abs_deviation = 0.0;    // cross-basis | |<u|v>| - 1/sqrt(q) |
    double tolerance = 0.0;
    bool pass = false;
};

/// Complete MUB set for odd prime power q: bases indexed by a in F_q with
/// vectors psi_k(n) kappa(a n^2 + b n)/sqrt(q), plus the computational basis.
BasisSet mub_odd(const gf::Field& field, int k = 0);

/// Complete MUB set of m-qubits from the Galois ring: bases indexed by
/// a in T_m with vectors over n in T_m, plus the computational basis.
BasisSet mub_even(const gring::Ring& ring, int k = 0);

UnbiasednessReport verify_unbiasedness(const BasisSet& set, double tolerance = 1e-9);

/// Fourier Bell state (1/sqrt(q)) sum_n omega_q^{kn} |n, n+h>, indices mod q.
StateVector bell_fourier(int q, int h, int k);

/// Galois Bell state (1/sqrt(q)) sum_n omega_p^{tr[(an+b)n]} |n, n+h>,
/// n+h by field addition.  Odd characteristic only.
StateVector bell_galois(const gf::Field& field, int a, int h, int b);

struct EntanglementReport {
    Eigen::MatrixXcd reduced;       // partial trace over the second subsystem
    double max_deviation = 0.0;     // entrywise vs I_q / q
    bool maximally_entangled = false;
};

EntanglementReport entanglement_check(const StateVector& state, double tolerance = 1e-9);

}  // namespace qgt::mub
