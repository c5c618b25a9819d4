#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qgt/gf.hpp"
#include "qgt/gring.hpp"

namespace qgt::chars {

using Complex = std::complex<double>;

struct CharError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MultCharAtZero : CharError { using CharError::CharError; };
struct GroupDecompositionFailed : CharError { using CharError::CharError; };

/// Compensated complex accumulation (Kahan).
class KahanSum {
public:
    void add(Complex v);
    Complex value() const { return sum_; }

private:
    Complex sum_{0.0, 0.0};
    Complex comp_{0.0, 0.0};
};

/// Additive character of F_q: kappa_c(x) = omega_p^{tr(c x)}.
/// c = 1 is the canonical character; c = 0 the trivial one.
Complex additive_char(const gf::Field& f, int c, int x);

/// Additive character of R_{4^m}: i^{gtrace(c x)}.
Complex ring_additive_char(const gring::Ring& r, int c, int x);

/// Multiplicative character of F_q^*, parameter j, period q-1 in the
/// discrete log: psi_j(x) = exp(2 pi i j dlog(x) / (q-1)).  Throws on x = 0.
Complex multiplicative_char(const gf::Field& f, int j, int x);

/// Index-phase character, period q in the canonical integer encoding:
/// exp(2 pi i k n / q).  This is the DFT character family.
Complex index_phase_char(int q, int k, int n);

/// Weil sum: sum over x in F_q of kappa_c(f(x)), f given by element-index
/// coefficients lowest degree first.
Complex weil_sum(const gf::Field& field, const std::vector<int>& f, int c = 1);

/// Gauss sum over F_q^*: G(psi_j, kappa_c) = sum psi_j(x) kappa_c(x).
Complex gauss_sum_field(const gf::Field& field, int j, int c);

/// Generalized Gauss sum: sum over all x of psi_j(f(x)) kappa_c(g(x)),
/// skipping points where f(x) = 0 and psi is nontrivial; for trivial psi
/// (j = 0) the factor is 1 everywhere.
Complex gauss_sum_field(const gf::Field& field, int j, int c,
                        const std::vector<int>& f, const std::vector<int>& g);

/// Gamma sum over the Teichmueller set: sum_u kappa~(y u).
Complex gamma_sum(const gring::Ring& ring, int y);

/// A multiplicative character of the unit group R*, realized through the
/// decomposition R* = <xi> x (1 + 2R).  Index j picks the cyclic part
/// (period 2^m - 1), mask s the (Z_2)^m part.
struct UnitCharacter {
    int j = 0;
    unsigned mask = 0;
    bool trivial() const { return j == 0 && mask == 0; }
};

/// Structure of R*: generators and their orders, plus the lookup tables the
/// characters evaluate through.
class UnitGroup {
public:
    explicit UnitGroup(const gring::Ring& ring);

    const gring::Ring& ring() const { return *ring_; }
    int order() const { return static_cast<int>(units_.size()); }
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<int>& generator_orders() const { return orders_; }
    const std::vector<int>& units() const { return units_; }

    /// All characters of R*, trivial character first.
    std::vector<UnitCharacter> characters() const;

    /// Character value at a unit; throws MultCharAtZero on a non-unit.
    Complex evaluate(const UnitCharacter& chi, int x) const;

private:
    const gring::Ring* ring_;
    std::vector<int> generators_;
    std::vector<int> orders_;
    std::vector<int> units_;
    std::vector<int> cyclic_exp_;   // element -> t with x = xi^t (1+2b), or -1
    std::vector<unsigned> two_part_;  // element -> b mod 2 as an F_2 vector
};

/// Ring Gauss sum: sum over x in R of psi(x) kappa~(y x).  The trivial
/// character is taken as all-ones on the whole ring; nontrivial characters
/// are extended by zero on non-units.
Complex gauss_sum_ring(const UnitGroup& group, const UnitCharacter& chi, int y);

}  // namespace qgt::chars
