#include "qgt/codes.hpp"

#include <algorithm>
#include <cmath>

namespace qgt::codes {

namespace {

void trim(FqPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

bool is_monic(const gf::Field&, const FqPoly& a) {
    return !a.empty() && a.back() == 1;
}

}  // namespace

FqPoly poly_mul(const gf::Field& f, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    trim(r);
    return r;
}

FqPoly poly_mod(const gf::Field& f, FqPoly a, const FqPoly& b) {
    if (!is_monic(f, b)) throw CodeError("poly_mod: divisor must be monic");
    trim(a);
    const int db = pdeg(b);
    for (int i = pdeg(a); i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
    }
    trim(a);
    return a;
}

FqPoly xn_minus_one(const gf::Field& f, int n) {
    FqPoly r(n + 1, 0);
    r[0] = f.neg(1);
    r[n] = 1;
    return r;
}

std::vector<FqPoly> xn1_factors(int n, const gf::Field& field) {
    if (n < 1) throw UnsupportedLength("length must be positive");
    if (n % field.p() == 0)
        throw UnsupportedLength("gcd(n, p) must be 1 for the factorization route");
    FqPoly rem = xn_minus_one(field, n);
    std::vector<FqPoly> factors;
    // trial division in increasing degree; the smallest divisor of the
    // remaining cofactor is automatically irreducible
    for (int d = 1; d <= pdeg(rem); ++d) {
        bool progressed = true;
        while (progressed && d <= pdeg(rem)) {
            progressed = false;
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= field.q();
            for (long long enc = 0; enc < count; ++enc) {
                FqPoly cand(d + 1, 0);
                long long v = enc;
                for (int i = 0; i < d; ++i) { cand[i] = static_cast<int>(v % field.q()); v /= field.q(); }
                cand[d] = 1;
                if (poly_mod(field, rem, cand).empty()) {
                    factors.push_back(cand);
                    // exact division rem / cand
                    FqPoly quot(pdeg(rem) - d + 1, 0);
                    FqPoly r = rem;
                    for (int i = pdeg(r); i >= d; --i) {
                        int c = r[i];
                        if (c == 0) continue;
                        quot[i - d] = c;
                        for (int j = 0; j <= d; ++j)
                            r[i - d + j] = field.sub(r[i - d + j], field.mul(c, cand[j]));
                    }
                    rem = quot;
                    trim(rem);
                    progressed = true;
                    break;
                }
            }
        }
    }
    if (pdeg(rem) > 0) factors.push_back(rem);
    // verify by multiplying back
    FqPoly prod{1};
    for (const auto& f : factors) prod = poly_mul(field, prod, f);
    if (prod != xn_minus_one(field, n))
        throw CodeError("factorization verification failed");
    return factors;
}

std::vector<FqPoly> xn1_divisors(int n, const gf::Field& field) {
    auto factors = xn1_factors(n, field);
    std::vector<FqPoly> out;
    const std::size_t subsets = 1u << factors.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        FqPoly prod{1};
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (mask & (1u << i)) prod = poly_mul(field, prod, factors[i]);
        out.push_back(prod);
    }
    std::sort(out.begin(), out.end(), [](const FqPoly& a, const FqPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

LinearCode cyclic_code(int n, const gf::Field& field, const FqPoly& gin) {
    FqPoly g = gin;
    trim(g);
    if (!is_monic(field, g)) throw NotADivisor("generator polynomial must be monic");
    if (pdeg(g) >= n) throw NotADivisor("deg(g) must be < n");
    if (!poly_mod(field, xn_minus_one(field, n), g).empty())
        throw NotADivisor("g does not divide x^n - 1");
    LinearCode code;
    code.n = n;
    code.k = n - pdeg(g);
    code.field = &field;
    code.g = g;
    for (int r = 0; r < code.k; ++r) {
        std::vector<int> row(n, 0);
        for (int i = 0; i <= pdeg(g); ++i) row[r + i] = g[i];
        code.generator_matrix.push_back(std::move(row));
    }
    return code;
}

std::vector<std::vector<int>> codewords(const LinearCode& code) {
    const gf::Field& f = *code.field;
    double total = std::pow(static_cast<double>(f.q()), code.k);
    if (total > static_cast<double>(1 << 22)) throw CodeTooLarge("q^k exceeds enumeration bound");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> info(code.k, 0);
    while (true) {
        std::vector<int> word(code.n, 0);
        for (int r = 0; r < code.k; ++r) {
            if (info[r] == 0) continue;
            for (int c = 0; c < code.n; ++c)
                word[c] = f.add(word[c], f.mul(info[r], code.generator_matrix[r][c]));
        }
        out.push_back(std::move(word));
        int pos = 0;
        while (pos < code.k && ++info[pos] == f.q()) info[pos++] = 0;
        if (pos == code.k) break;
    }
    return out;
}

DistanceReport min_distance(const LinearCode& code) {
    DistanceReport rep;
    int best = code.n + 1;
    for (const auto& w : codewords(code)) {
        int wt = 0;
        for (int c : w) wt += (c != 0);
        if (wt > 0) best = std::min(best, wt);
    }
    rep.d_min = best;
    rep.correct_up_to = (best - 1) / 2;
    rep.detect_up_to = best - 1;
    rep.singleton_gap = (code.n - code.k + 1) - best;
    rep.is_mds = rep.singleton_gap == 0;
    return rep;
}

std::vector<std::vector<int>> cyclic_extension_matrix(int n, const gf::Field& field,
                                                      const FqPoly& gin) {
    FqPoly g = gin;
    trim(g);
    if (!is_monic(field, g)) throw NotADivisor("generator polynomial must be monic");
    if (!poly_mod(field, xn_minus_one(field, n), g).empty())
        throw NotADivisor("g does not divide x^n - 1");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < n; ++r) {
        std::vector<int> row(n, 0);
        for (int i = 0; i <= pdeg(g); ++i) row[(r + i) % n] = g[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

PlaneAxiomReport plane_axioms_check(const std::vector<std::vector<int>>& matrix) {
    PlaneAxiomReport rep;
    const int n = static_cast<int>(matrix.size());
    rep.square = n > 0;
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n) rep.square = false;
    if (!rep.square) return rep;

    int s = 0;
    for (int j = 0; j < n; ++j) s += matrix[0][j] != 0;
    rep.line_size = s;
    rep.constant_row_sum = true;
    for (const auto& row : matrix) {
        int sum = 0;
        for (int v : row) sum += v != 0;
        if (sum != s) rep.constant_row_sum = false;
    }
    rep.constant_col_sum = true;
    for (int j = 0; j < n; ++j) {
        int sum = 0;
        for (int i = 0; i < n; ++i) sum += matrix[i][j] != 0;
        if (sum != s) rep.constant_col_sum = false;
    }
    rep.rows_meet_once = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int common = 0;
            for (int c = 0; c < n; ++c) common += (matrix[i][c] != 0 && matrix[j][c] != 0);
            if (common != 1) rep.rows_meet_once = false;
        }
    rep.cols_meet_once = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int common = 0;
            for (int r = 0; r < n; ++r) common += (matrix[r][i] != 0 && matrix[r][j] != 0);
            if (common != 1) rep.cols_meet_once = false;
        }
    rep.count_matches = (n == s * s - s + 1);
    rep.pass = rep.constant_row_sum && rep.constant_col_sum && rep.rows_meet_once &&
               rep.cols_meet_once && rep.count_matches;
    rep.order = rep.pass ? s - 1 : 0;
    return rep;
}

}  // namespace qgt::codes
