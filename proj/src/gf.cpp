#include "qgt/gf.hpp"

#include <algorithm>
#include <numeric>

#include "qgt/numtheory.hpp"

namespace qgt::gf {

namespace {

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly pm_reduce(ModPoly a, const ModPoly& g, int p) {
    for (auto& c : a) c = ((c % p) + p) % p;
    const int dg = pdeg(g);
    for (int i = pdeg(a); i >= dg; --i) {
        int c = a[i];
        if (c == 0) continue;
        // g is monic
        for (int j = 0; j <= dg; ++j)
            a[i - dg + j] = ((a[i - dg + j] - c * g[j]) % p + p) % p;
    }
    trim(a);
    return a;
}

ModPoly pm_mul(const ModPoly& a, const ModPoly& b, const ModPoly& g, int p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pm_reduce(std::move(r), g, p);
}

ModPoly pm_pow(ModPoly base, long long e, const ModPoly& g, int p) {
    ModPoly r{1};
    base = pm_reduce(std::move(base), g, p);
    while (e > 0) {
        if (e & 1) r = pm_mul(r, base, g, p);
        base = pm_mul(base, base, g, p);
        e >>= 1;
    }
    return r;
}

int inv_mod(int a, int p) {
    int r = 1, e = p - 2;
    a = ((a % p) + p) % p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        int lead_inv = inv_mod(b.back(), p);
        ModPoly bm = b;
        for (auto& c : bm) c = c * lead_inv % p;
        a = pm_reduce(std::move(a), bm, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        int lead_inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * lead_inv % p;
    }
    return a;
}

ModPoly x_poly() { return {0, 1}; }

long long ipow(int p, int m) {
    long long r = 1;
    while (m--) r *= p;
    return r;
}

}  // namespace

bool is_irreducible(const ModPoly& g, int p) {
    ModPoly gg = g;
    trim(gg);
    const int m = pdeg(gg);
    if (m < 1) return false;
    if (m == 1) return true;
    // x^{p^m} == x mod g, and gcd(x^{p^{m/l}} - x, g) = 1 for prime l | m
    ModPoly xq = pm_pow(x_poly(), ipow(p, m), gg, p);
    ModPoly diff = xq;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (auto [l, e] : numtheory::factorize(m)) {
        ModPoly xk = pm_pow(x_poly(), ipow(p, m / static_cast<int>(l)), gg, p);
        xk.resize(std::max<std::size_t>(xk.size(), 2), 0);
        xk[1] = ((xk[1] - 1) % p + p) % p;
        trim(xk);
        if (pdeg(poly_gcd(xk, gg, p)) != 0) return false;
    }
    return true;
}

bool is_primitive(const ModPoly& g, int p) {
    ModPoly gg = g;
    trim(gg);
    const int m = pdeg(gg);
    if (m < 1 || gg[0] == 0) return false;
    if (!is_irreducible(gg, p)) return false;
    const long long r = ipow(p, m) - 1;
    ModPoly xr = pm_pow(x_poly(), r, gg, p);
    if (xr != ModPoly{1}) return false;
    for (auto [l, e] : numtheory::factorize(static_cast<std::uint64_t>(r))) {
        if (pm_pow(x_poly(), r / static_cast<long long>(l), gg, p) == ModPoly{1})
            return false;
    }
    return true;
}

Field::Field(int p, int m, std::optional<ModPoly> modulus, bool allow_non_primitive)
    : p_(p), m_(m) {
    if (!numtheory::is_prime(static_cast<std::uint64_t>(p)))
        throw NonPrimeP("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("extension degree must be >= 1");
    long long q = ipow(p, m);
    if (q > (1 << 20)) throw TableTooLarge("p^m exceeds 2^20");
    q_ = static_cast<int>(q);

    if (modulus) {
        modulus_ = *modulus;
        trim(modulus_);
        if (pdeg(modulus_) != m || modulus_.back() != 1)
            throw FieldError("modulus must be monic of degree m");
        for (auto& c : modulus_) c = ((c % p) + p) % p;
        if (!is_irreducible(modulus_, p))
            throw NotIrreducible("modulus factors over F_p");
        primitive_ = is_primitive(modulus_, p);
        if (!primitive_ && !allow_non_primitive)
            throw NotPrimitive("modulus is irreducible but its root has order < q-1");
    } else {
        // Smallest canonical integer encoding among monic primitive
        // polynomials of degree m (constant term scanned fastest).
        primitive_ = false;
        for (long long enc = 1; enc < q; ++enc) {
            ModPoly g(m + 1, 0);
            long long v = enc;
            for (int i = 0; i < m; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
            g[m] = 1;
            if (g[0] == 0) continue;
            if (is_primitive(g, p)) {
                modulus_ = g;
                primitive_ = true;
                break;
            }
        }
        if (!primitive_) throw FieldError("no primitive polynomial found");
    }

    // alpha = [x] reduced mod modulus
    ModPoly ap = pm_reduce(x_poly(), modulus_, p_);
    alpha_ = element_from_coeffs(ap);

    if (primitive_) {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        ModPoly cur{1};
        for (int t = 0; t < q_ - 1; ++t) {
            int idx = element_from_coeffs(cur);
            exp_[t] = idx;
            log_[idx] = t;
            cur = pm_mul(cur, ap, modulus_, p_);
        }
    } else {
        // No discrete log available; dense multiplication fallback tables
        // are not built, mul works through polynomial arithmetic.
        exp_.clear();
        log_.clear();
    }

    trace_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        ModPoly acc;
        ModPoly t = pm_reduce(coeffs_of(a), modulus_, p_);
        ModPoly cur = t;
        for (int k = 0; k < m_; ++k) {
            acc.resize(std::max(acc.size(), cur.size()), 0);
            for (std::size_t i = 0; i < cur.size(); ++i)
                acc[i] = (acc[i] + cur[i]) % p_;
            if (k + 1 < m_) cur = pm_pow(cur, p_, modulus_, p_);
        }
        trim(acc);
        if (pdeg(acc) > 0) throw FieldError("trace did not land in the prime subfield");
        trace_[a] = acc.empty() ? 0 : acc[0];
    }
}

void Field::check_element(int a) const {
    if (a < 0 || a >= q_) throw MixedFields("element index out of range for this field");
}

std::vector<int> Field::coeffs_of(int a) const {
    check_element(a);
    std::vector<int> c(m_, 0);
    for (int i = 0; i < m_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

int Field::element_from_coeffs(const ModPoly& c) const {
    if (pdeg(c) >= m_) throw FieldError("coefficient tuple longer than degree");
    int idx = 0;
    for (int i = pdeg(c); i >= 0; --i)
        idx = idx * p_ + ((c[i] % p_) + p_) % p_;
    return idx;
}

int Field::add(int a, int b) const {
    check_element(a);
    check_element(b);
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    check_element(a);
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty())
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    ModPoly r = pm_mul(coeffs_of(a), coeffs_of(b), modulus_, p_);
    return element_from_coeffs(r);
}

int Field::inv(int a) const {
    check_element(a);
    if (a == 0) throw ZeroInverse("inverse of zero");
    if (!exp_.empty())
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    ModPoly r = pm_pow(coeffs_of(a), static_cast<long long>(q_) - 2, modulus_, p_);
    return element_from_coeffs(r);
}

int Field::pow(int a, long long e) const {
    check_element(a);
    if (e < 0) return pow(inv(a), -e);
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty())
        return exp_[static_cast<int>((static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
    ModPoly r = pm_pow(coeffs_of(a), e, modulus_, p_);
    return element_from_coeffs(r);
}

int Field::trace(int a) const {
    check_element(a);
    return trace_[a];
}

int Field::discrete_log(int a) const {
    check_element(a);
    if (a == 0) throw LogOfZero("discrete log of zero");
    if (exp_.empty()) throw NotPrimitive("discrete_log requires a primitive modulus");
    return log_[a];
}

int Field::alpha_pow(int t) const {
    if (exp_.empty()) throw NotPrimitive("alpha_pow requires a primitive modulus");
    int r = t % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[r];
}

int Field::eval_poly(const std::vector<int>& coeffs, int x) const {
    int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = add(mul(acc, x), *it);
    return acc;
}

bool Field::same_field(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::vector<FieldTableRow> Field::table() const {
    if (q_ > (1 << 16)) throw TableTooLarge("field table limited to q <= 2^16");
    auto poly_str = [this](int idx) {
        auto c = coeffs_of(idx);
        std::string s;
        for (int i = 0; i < m_; ++i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            std::string term;
            if (i == 0) term = std::to_string(c[i]);
            else {
                if (c[i] != 1) term = std::to_string(c[i]) + "*";
                term += (i == 1) ? "a" : "a^" + std::to_string(i);
            }
            s += term;
        }
        return s.empty() ? std::string("0") : s;
    };
    auto tuple_of = [this](int idx) {
        auto c = coeffs_of(idx);
        std::reverse(c.begin(), c.end());
        return c;
    };
    std::vector<FieldTableRow> rows;
    rows.push_back({"0", "0", tuple_of(0), 0});
    if (exp_.empty()) throw NotPrimitive("field table requires a primitive modulus");
    for (int t = 0; t < q_ - 1; ++t) {
        int idx = exp_[t];
        std::string pw = (t == 0) ? "1" : (t == 1 ? "a" : "a^" + std::to_string(t));
        rows.push_back({pw, poly_str(idx), tuple_of(idx), idx});
    }
    return rows;
}

}  // namespace qgt::gf
