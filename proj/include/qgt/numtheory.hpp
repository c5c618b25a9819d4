#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qgt::numtheory {

/// Integer polynomial, coefficients lowest degree first.  The zero
/// polynomial is the empty vector; otherwise the last coefficient is nonzero.
struct IntPolynomial {
    std::vector<long long> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const IntPolynomial&) const = default;
};

struct ArithmeticProfile {
    std::uint64_t n;
    int mobius;
    std::uint64_t totient;
    double mangoldt;
    bool is_prime_power;
};

// Trial-division factorization, (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
// Returns p if n = p^k for some k >= 1, else 0.
std::uint64_t prime_power_base(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
double mangoldt(std::uint64_t n);
ArithmeticProfile arithmetic_profile(std::uint64_t n);

// Ramanujan sum c_q(n) via the Moebius/totient closed form.
long long ramanujan_sum(std::uint64_t q, long long n);

// n-th cyclotomic polynomial, exact integer coefficients.
IntPolynomial cyclotomic_poly(std::uint64_t n);

// Exact polynomial helpers used by cyclotomic_poly and its tests.
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
// Exact division; throws std::domain_error if the remainder is nonzero.
IntPolynomial poly_div_exact(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace qgt::numtheory
