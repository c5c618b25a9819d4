#include "qgt/chars.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace qgt::chars {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex root_of_unity(long long num, long long den) {
    return std::polar(1.0, kTwoPi * static_cast<double>(num) / static_cast<double>(den));
}
}  // namespace

void KahanSum::add(Complex v) {
    Complex y = v - comp_;
    Complex t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
}

Complex additive_char(const gf::Field& f, int c, int x) {
    return root_of_unity(f.trace(f.mul(c, x)), f.p());
}

Complex ring_additive_char(const gring::Ring& r, int c, int x) {
    return root_of_unity(r.gtrace(r.mul(c, x)), 4);
}

Complex multiplicative_char(const gf::Field& f, int j, int x) {
    if (x == 0) throw MultCharAtZero("multiplicative character at zero");
    return root_of_unity(static_cast<long long>(j) * f.discrete_log(x), f.q() - 1);
}

Complex index_phase_char(int q, int k, int n) {
    return root_of_unity(static_cast<long long>(k) * n, q);
}

Complex weil_sum(const gf::Field& field, const std::vector<int>& f, int c) {
    int deg = static_cast<int>(f.size()) - 1;
    while (deg >= 0 && f[deg] == 0) --deg;
    if (deg < 1) throw std::invalid_argument("weil_sum: polynomial degree must be >= 1");
    KahanSum s;
    for (int x = 0; x < field.q(); ++x)
        s.add(additive_char(field, c, field.eval_poly(f, x)));
    return s.value();
}

Complex gauss_sum_field(const gf::Field& field, int j, int c) {
    KahanSum s;
    for (int x = 1; x < field.q(); ++x)
        s.add(multiplicative_char(field, j, x) * additive_char(field, c, x));
    return s.value();
}

Complex gauss_sum_field(const gf::Field& field, int j, int c,
                        const std::vector<int>& f, const std::vector<int>& g) {
    KahanSum s;
    for (int x = 0; x < field.q(); ++x) {
        int fx = field.eval_poly(f, x);
        Complex psi;
        if (j == 0)
            psi = 1.0;
        else if (fx == 0)
            continue;
        else
            psi = multiplicative_char(field, j, fx);
        s.add(psi * additive_char(field, c, field.eval_poly(g, x)));
    }
    return s.value();
}

Complex gamma_sum(const gring::Ring& ring, int y) {
    KahanSum s;
    for (int u : ring.teichmuller())
        s.add(ring_additive_char(ring, 1, ring.mul(y, u)));
    return s.value();
}

UnitGroup::UnitGroup(const gring::Ring& ring) : ring_(&ring) {
    const int m = ring.m();
    const int tord = ring.teich_size() - 1;  // order of xi

    generators_.push_back(ring.xi());
    orders_.push_back(tord);
    for (int i = 0; i < m; ++i) {
        gring::Z4Poly c(m, 0);
        c[i] = 2;
        generators_.push_back(ring.add(1, ring.element_from_coeffs(c)));
        orders_.push_back(2);
    }

    cyclic_exp_.assign(ring.size(), -1);
    two_part_.assign(ring.size(), 0);
    // every unit is uniquely xi^t (1 + 2b) with b Teichmueller
    for (int t = 0; t < tord; ++t) {
        int xit = ring.pow(ring.xi(), t);
        for (int bi = 0; bi < ring.teich_size(); ++bi) {
            int b = ring.teichmuller()[bi];
            int u = ring.mul(xit, ring.add(1, ring.scale(2, b)));
            if (cyclic_exp_[u] != -1)
                throw GroupDecompositionFailed("unit group enumeration collided");
            cyclic_exp_[u] = t;
            unsigned bits = 0;
            auto bc = ring.coeffs_of(b);
            for (int i = 0; i < m; ++i)
                if (bc[i] & 1) bits |= 1u << i;
            two_part_[u] = bits;
            units_.push_back(u);
        }
    }
    const int expected = ring.size() - ring.teich_size();
    if (static_cast<int>(units_.size()) != expected)
        throw GroupDecompositionFailed("unit count mismatch");
    for (int y = 0; y < ring.size(); ++y)
        if (ring.is_unit(y) != (cyclic_exp_[y] >= 0))
            throw GroupDecompositionFailed("unit enumeration missed an element");
}

std::vector<UnitCharacter> UnitGroup::characters() const {
    std::vector<UnitCharacter> out;
    const int tord = ring_->teich_size() - 1;
    for (int j = 0; j < tord; ++j)
        for (unsigned mask = 0; mask < static_cast<unsigned>(ring_->teich_size()); ++mask)
            out.push_back({j, mask});
    // trivial character (j=0, mask=0) comes first by construction
    return out;
}

Complex UnitGroup::evaluate(const UnitCharacter& chi, int x) const {
    if (cyclic_exp_[x] < 0) throw MultCharAtZero("character evaluated at a non-unit");
    const int tord = ring_->teich_size() - 1;
    Complex v = root_of_unity(static_cast<long long>(chi.j) * cyclic_exp_[x], tord);
    if (std::popcount(chi.mask & two_part_[x]) & 1) v = -v;
    return v;
}

Complex gauss_sum_ring(const UnitGroup& group, const UnitCharacter& chi, int y) {
    const gring::Ring& r = group.ring();
    KahanSum s;
    if (chi.trivial()) {
        // all-ones convention on the full ring
        for (int x = 0; x < r.size(); ++x)
            s.add(ring_additive_char(r, 1, r.mul(y, x)));
    } else {
        for (int x : group.units())
            s.add(group.evaluate(chi, x) * ring_additive_char(r, 1, r.mul(y, x)));
    }
    return s.value();
}

}  // namespace qgt::chars
