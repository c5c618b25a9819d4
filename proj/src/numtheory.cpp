#include "qgt/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgt::numtheory {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) return 0;
    auto f = factorize(n);
    return f.size() == 1 ? f[0].first : 0;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be positive");
    if (n == 1) return 1;
    auto f = factorize(n);
    for (auto [p, e] : f)
        if (e > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient: n must be positive");
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

double mangoldt(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mangoldt: n must be positive");
    std::uint64_t p = prime_power_base(n);
    return p ? std::log(static_cast<double>(p)) : 0.0;
}

ArithmeticProfile arithmetic_profile(std::uint64_t n) {
    return {n, mobius(n), totient(n), mangoldt(n), prime_power_base(n) != 0};
}

long long ramanujan_sum(std::uint64_t q, long long n) {
    if (q == 0) throw std::invalid_argument("ramanujan_sum: q must be positive");
    // c_q(n) is even and q-periodic in n.
    std::uint64_t nn = static_cast<std::uint64_t>(std::llabs(n)) % q;
    std::uint64_t q1 = q / std::gcd(q, nn == 0 ? q : nn);
    long long mu = mobius(q1);
    if (mu == 0) return 0;
    return mu * static_cast<long long>(totient(q) / totient(q1));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    IntPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

IntPolynomial poly_div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.coeffs.empty()) throw std::domain_error("poly_div_exact: division by zero");
    IntPolynomial rem = a;
    const int db = b.degree();
    const long long lead = b.coeffs.back();
    if (rem.degree() < db) {
        if (rem.coeffs.empty()) return {};
        throw std::domain_error("poly_div_exact: nonzero remainder");
    }
    IntPolynomial quot;
    quot.coeffs.assign(rem.degree() - db + 1, 0);
    for (int i = rem.degree(); i >= db; --i) {
        long long c = rem.coeffs[i];
        if (c == 0) continue;
        if (c % lead != 0) throw std::domain_error("poly_div_exact: inexact division");
        long long f = c / lead;
        quot.coeffs[i - db] = f;
        for (int j = 0; j <= db; ++j) rem.coeffs[i - db + j] -= f * b.coeffs[j];
    }
    for (long long c : rem.coeffs)
        if (c != 0) throw std::domain_error("poly_div_exact: nonzero remainder");
    return quot;
}

IntPolynomial cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    // Moebius product over divisors d of n: prod (x^d - 1)^{mu(n/d)},
    // numerator terms multiplied first, then exact division.
    IntPolynomial num{{1}};
    std::vector<std::uint64_t> denom;
    for (std::uint64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        if (mu == 1) {
            IntPolynomial t;
            t.coeffs.assign(d + 1, 0);
            t.coeffs[0] = -1;
            t.coeffs[d] = 1;
            num = poly_mul(num, t);
        } else {
            denom.push_back(d);
        }
    }
    for (std::uint64_t d : denom) {
        IntPolynomial t;
        t.coeffs.assign(d + 1, 0);
        t.coeffs[0] = -1;
        t.coeffs[d] = 1;
        num = poly_div_exact(num, t);
    }
    return num;
}

}  // namespace qgt::numtheory
