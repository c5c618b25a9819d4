#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "qgt/numtheory.hpp"

using namespace qgt::numtheory;

TEST_CASE("factorization and divisors") {
    CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == std::vector<std::pair<std::uint64_t, int>>{{97, 1}});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("primality and prime powers") {
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_power_base(8) == 2);
    CHECK(prime_power_base(49) == 7);
    CHECK(prime_power_base(27) == 3);
    CHECK(prime_power_base(12) == 0);
    CHECK(prime_power_base(1) == 0);
}

TEST_CASE("mobius values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
}

TEST_CASE("totient and mangoldt") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(36) == 12);
    CHECK(totient(97) == 96);
    CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(mangoldt(7) == doctest::Approx(std::log(7.0)));
    CHECK(mangoldt(6) == 0.0);
    CHECK(mangoldt(1) == 0.0);
}

TEST_CASE("mobius and totient divisor sums up to 1000") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        long long msum = 0;
        std::uint64_t tsum = 0;
        for (std::uint64_t d : divisors(n)) {
            msum += mobius(d);
            tsum += totient(d);
        }
        CHECK(msum == (n == 1 ? 1 : 0));
        CHECK(tsum == n);
    }
}

TEST_CASE("ramanujan sum closed form vs direct exponential sum") {
    CHECK(ramanujan_sum(1, 5) == 1);
    CHECK(ramanujan_sum(9, 0) == 6);   // phi(9)
    CHECK(ramanujan_sum(10, 1) == 1);  // mu(10)
    CHECK(ramanujan_sum(4, 2) == -2);
    for (std::uint64_t q = 1; q <= 64; ++q)
        for (long long n = -2 * static_cast<long long>(q); n <= 2 * static_cast<long long>(q); ++n) {
            std::complex<double> s = 0.0;
            for (std::uint64_t p = 1; p <= q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                s += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) * n / q);
            }
            CHECK(std::abs(s.imag()) < 1e-9);
            CHECK(s.real() == doctest::Approx(static_cast<double>(ramanujan_sum(q, n))).epsilon(1e-9));
        }
}

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPolynomial{{-1, 1}});
    CHECK(cyclotomic_poly(2) == IntPolynomial{{1, 1}});
    CHECK(cyclotomic_poly(6) == IntPolynomial{{1, -1, 1}});
    CHECK(cyclotomic_poly(12) == IntPolynomial{{1, 0, -1, 0, 1}});
    // first index with a coefficient outside {-1, 0, 1}
    auto q105 = cyclotomic_poly(105);
    CHECK(q105.degree() == 48);
    CHECK(q105.coeffs[7] == -2);
    CHECK(q105.coeffs[41] == -2);
}

TEST_CASE("cyclotomic product recovers x^n - 1 for n <= 100") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        IntPolynomial prod{{1}};
        for (std::uint64_t d : divisors(n)) prod = poly_mul(prod, cyclotomic_poly(d));
        IntPolynomial want;
        want.coeffs.assign(n + 1, 0);
        want.coeffs[0] = -1;
        want.coeffs[n] = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("exact polynomial division guards") {
    IntPolynomial a{{-1, 0, 0, 1}};  // x^3 - 1
    IntPolynomial b{{-1, 1}};        // x - 1
    CHECK(poly_div_exact(a, b) == IntPolynomial{{1, 1, 1}});
    CHECK_THROWS_AS(poly_div_exact(IntPolynomial{{1, 1}}, IntPolynomial{{0, 1}}), std::domain_error);
}
