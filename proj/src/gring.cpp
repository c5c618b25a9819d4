#include "qgt/gring.hpp"

#include <algorithm>

#include "qgt/gf.hpp"

namespace qgt::gring {

namespace {

void trim(Z4Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Z4Poly& a) { return static_cast<int>(a.size()) - 1; }

// Reduce modulo a monic polynomial over Z_4.
Z4Poly z4_reduce(Z4Poly a, const Z4Poly& h) {
    for (auto& c : a) c = ((c % 4) + 4) % 4;
    const int dh = pdeg(h);
    for (int i = pdeg(a); i >= dh; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dh; ++j)
            a[i - dh + j] = ((a[i - dh + j] - c * h[j]) % 4 + 4) % 4;
    }
    trim(a);
    return a;
}

Z4Poly z4_mul(const Z4Poly& a, const Z4Poly& b, const Z4Poly& h) {
    if (a.empty() || b.empty()) return {};
    Z4Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % 4;
    return z4_reduce(std::move(r), h);
}

long long ipow2(int m) { return 1LL << m; }

}  // namespace

Z4Poly lift_basic_primitive(const Z4Poly& hbar) {
    Z4Poly hb = hbar;
    trim(hb);
    const int m = pdeg(hb);
    for (int c : hb)
        if (c != 0 && c != 1)
            throw NotPrimitiveBase("hbar must have coefficients in Z_2");
    if (m < 1 || !gf::is_primitive(hb, 2))
        throw NotPrimitiveBase("hbar is not primitive over Z_2");

    // Split into even and odd parts, form e^2 - d^2 over Z, read off the
    // polynomial in x^2, fix the sign so the result is monic.
    std::vector<long long> e(hb.size(), 0), d(hb.size(), 0);
    for (std::size_t i = 0; i < hb.size(); ++i)
        (i % 2 == 0 ? e[i] : d[i]) = hb[i];
    std::vector<long long> prod(2 * hb.size() - 1, 0);
    for (std::size_t i = 0; i < hb.size(); ++i)
        for (std::size_t j = 0; j < hb.size(); ++j)
            prod[i + j] += e[i] * e[j] - d[i] * d[j];
    Z4Poly h(m + 1, 0);
    long long sign = prod[2 * m] > 0 ? 1 : -1;
    for (int k = 0; k <= m; ++k) {
        if (2 * k + 1 < static_cast<int>(prod.size()) && prod[2 * k + 1] != 0)
            throw LiftVerificationFailed("lift produced odd-degree terms");
        h[k] = static_cast<int>(((sign * prod[2 * k]) % 4 + 4) % 4);
    }

    // h mod 2 must recover hbar
    for (int k = 0; k <= m; ++k)
        if (h[k] % 2 != hb[k])
            throw LiftVerificationFailed("h mod 2 differs from hbar");
    // h must divide x^{2^m - 1} - 1 in Z_4[x]
    const long long r = ipow2(m) - 1;
    Z4Poly xr(static_cast<std::size_t>(r) + 1, 0);
    xr[static_cast<std::size_t>(r)] = 1;
    xr[0] = 3;  // -1 mod 4
    if (!z4_reduce(std::move(xr), h).empty())
        throw LiftVerificationFailed("h does not divide x^(2^m-1) - 1 over Z_4");
    return h;
}

Ring::Ring(int m) : Ring(m, gf::Field(2, m).modulus()) {}

Ring::Ring(int m, const Z4Poly& hbar) : m_(m) {
    if (m < 1 || m > 8) throw RingError("ring degree must be in [1, 8]");
    hbar_ = hbar;
    trim(hbar_);
    if (pdeg(hbar_) != m) throw NotPrimitiveBase("hbar degree mismatch");
    h_ = lift_basic_primitive(hbar_);
    size_ = static_cast<int>(1LL << (2 * m));
    tsize_ = static_cast<int>(ipow2(m));

    xi_ = element_from_coeffs(z4_reduce({0, 1}, h_));

    teich_.clear();
    teich_.push_back(0);
    int cur = 1;
    for (int t = 0; t < tsize_ - 1; ++t) {
        teich_.push_back(cur);
        cur = mul(cur, xi_);
    }
    if (cur != 1) throw RingError("xi does not have order 2^m - 1");
    teich_pos_.assign(size_, -1);
    for (int t = 0; t < tsize_; ++t) {
        if (teich_pos_[teich_[t]] != -1) throw RingError("Teichmueller elements not distinct");
        teich_pos_[teich_[t]] = t;
    }
    double_of_.assign(tsize_, 0);
    for (int t = 0; t < tsize_; ++t) double_of_[t] = scale(2, teich_[t]);

    gtrace_.assign(size_, 0);
    for (int y = 0; y < size_; ++y) {
        int acc = 0, t = y;
        for (int k = 0; k < m_; ++k) {
            acc = add(acc, t);
            if (k + 1 < m_) t = frobenius_raw(t);
        }
        auto c = coeffs_of(acc);
        for (int i = 1; i < m_; ++i)
            if (c[i] != 0) throw TraceNotScalar("generalized trace is not a scalar");
        gtrace_[y] = c[0];
    }
}

void Ring::check_element(int y) const {
    if (y < 0 || y >= size_) throw MixedRings("element index out of range for this ring");
}

std::vector<int> Ring::coeffs_of(int y) const {
    check_element(y);
    std::vector<int> c(m_, 0);
    for (int i = 0; i < m_; ++i) { c[i] = y & 3; y >>= 2; }
    return c;
}

int Ring::element_from_coeffs(const Z4Poly& c) const {
    if (pdeg(c) >= m_) throw RingError("coefficient tuple longer than degree");
    int y = 0;
    for (int i = pdeg(c); i >= 0; --i) y = (y << 2) | (((c[i] % 4) + 4) % 4);
    return y;
}

int Ring::add(int a, int b) const {
    check_element(a);
    check_element(b);
    int r = 0;
    for (int i = 0; i < m_; ++i)
        r |= (((a >> (2 * i)) + (b >> (2 * i))) & 3) << (2 * i);
    return r;
}

int Ring::neg(int a) const {
    check_element(a);
    int r = 0;
    for (int i = 0; i < m_; ++i)
        r |= ((4 - ((a >> (2 * i)) & 3)) & 3) << (2 * i);
    return r;
}

int Ring::sub(int a, int b) const { return add(a, neg(b)); }

int Ring::mul(int a, int b) const {
    check_element(a);
    check_element(b);
    return element_from_coeffs(z4_mul(coeffs_of(a), coeffs_of(b), h_));
}

int Ring::pow(int a, long long e) const {
    check_element(a);
    if (e < 0) throw RingError("negative exponents are not available in a ring");
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Ring::scale(int k, int a) const {
    int r = 0;
    k = ((k % 4) + 4) % 4;
    for (int i = 0; i < k; ++i) r = add(r, a);
    return r;
}

bool Ring::in_teichmuller(int y) const {
    check_element(y);
    return teich_pos_[y] >= 0;
}

int Ring::teich_index(int y) const {
    check_element(y);
    return teich_pos_[y];
}

TwoAdicForm Ring::two_adic_decompose(int y) const {
    check_element(y);
    int a = pow(y, static_cast<long long>(tsize_));
    if (teich_pos_[a] < 0)
        throw DecompositionFailed("y^(2^m) is not in the Teichmueller set");
    int r = sub(y, a);
    for (int t = 0; t < tsize_; ++t)
        if (double_of_[t] == r) return {a, teich_[t]};
    throw DecompositionFailed("no Teichmueller b with 2b = y - a");
}

int Ring::frobenius_raw(int y) const {
    TwoAdicForm f = two_adic_decompose(y);
    return add(mul(f.a, f.a), scale(2, mul(f.b, f.b)));
}

int Ring::frobenius(int y) const {
    check_element(y);
    return frobenius_raw(y);
}

int Ring::gtrace(int y) const {
    check_element(y);
    return gtrace_[y];
}

bool Ring::is_unit(int y) const {
    check_element(y);
    // units are exactly the elements that are nonzero mod 2
    for (int i = 0; i < m_; ++i)
        if (((y >> (2 * i)) & 1) != 0) return true;
    return false;
}

}  // namespace qgt::gring
