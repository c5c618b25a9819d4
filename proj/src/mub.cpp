#include "qgt/mub.hpp"

#include <cmath>

#include "qgt/chars.hpp"

namespace qgt::mub {

using chars::Complex;

BasisSet mub_odd(const gf::Field& field, int k) {
    if (field.p() == 2)
        throw EvenCharacteristic("mub_odd needs odd characteristic; use mub_even");
    const int q = field.q();
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    BasisSet set;
    set.dim = q;
    for (int a = 0; a < q; ++a) {
        Basis basis;
        basis.label = "a=" + std::to_string(a);
        for (int b = 0; b < q; ++b) {
            StateVector v(q);
            for (int n = 0; n < q; ++n) {
                int arg = field.add(field.mul(a, field.mul(n, n)), field.mul(b, n));
                v(n) = norm * chars::index_phase_char(q, k, n) *
                       chars::additive_char(field, 1, arg);
            }
            basis.vectors.push_back(std::move(v));
        }
        set.bases.push_back(std::move(basis));
    }
    Basis comp;
    comp.label = "computational";
    for (int b = 0; b < q; ++b) {
        StateVector v = StateVector::Zero(q);
        v(b) = 1.0;
        comp.vectors.push_back(std::move(v));
    }
    set.bases.push_back(std::move(comp));
    set.includes_computational = true;
    return set;
}

BasisSet mub_even(const gring::Ring& ring, int k) {
    const int d = ring.teich_size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    const auto& teich = ring.teichmuller();
    BasisSet set;
    set.dim = d;
    for (int ai = 0; ai < d; ++ai) {
        Basis basis;
        basis.label = "a=" + std::to_string(ai);
        for (int bi = 0; bi < d; ++bi) {
            // phase element a + 2b, both Teichmueller
            int ab = ring.add(teich[ai], ring.scale(2, teich[bi]));
            StateVector v(d);
            for (int ni = 0; ni < d; ++ni) {
                int arg = ring.mul(ab, teich[ni]);
                v(ni) = norm * chars::index_phase_char(d, k, ni) *
                        chars::ring_additive_char(ring, 1, arg);
            }
            basis.vectors.push_back(std::move(v));
        }
        set.bases.push_back(std::move(basis));
    }
    Basis comp;
    comp.label = "computational";
    for (int b = 0; b < d; ++b) {
        StateVector v = StateVector::Zero(d);
        v(b) = 1.0;
        comp.vectors.push_back(std::move(v));
    }
    set.bases.push_back(std::move(comp));
    set.includes_computational = true;
    return set;
}

UnbiasednessReport verify_unbiasedness(const BasisSet& set, double tolerance) {
    UnbiasednessReport rep;
    rep.tolerance = tolerance;
    const double target = 1.0 / std::sqrt(static_cast<double>(set.dim));
    for (const auto& basis : set.bases)
        for (const auto& v : basis.vectors)
            if (v.size() != set.dim)
                throw DimensionMismatch("basis vector dimension mismatch");
    for (std::size_t i = 0; i < set.bases.size(); ++i) {
        const auto& bi = set.bases[i].vectors;
        for (std::size_t r = 0; r < bi.size(); ++r)
            for (std::size_t c = 0; c < bi.size(); ++c) {
                double g = std::abs(bi[r].dot(bi[c]));
                double want = (r == c) ? 1.0 : 0.0;
                rep.max_ortho_deviation = std::max(rep.max_ortho_deviation, std::abs(g - want));
            }
        for (std::size_t j = i + 1; j < set.bases.size(); ++j)
            for (const auto& u : bi)
                for (const auto& v : set.bases[j].vectors) {
                    double g = std::abs(u.dot(v));
                    rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(g - target));
                }
    }
    rep.pass = rep.max_ortho_deviation <= tolerance && rep.max_abs_deviation <= tolerance;
    return rep;
}

StateVector bell_fourier(int q, int h, int k) {
    if (q < 2) throw MubError("bell_fourier: q must be >= 2");
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(q) * q);
    for (int n = 0; n < q; ++n) {
        int second = (n + h) % q;
        v(static_cast<Eigen::Index>(n) * q + second) = norm * chars::index_phase_char(q, k, n);
    }
    return v;
}

StateVector bell_galois(const gf::Field& field, int a, int h, int b) {
    if (field.p() == 2)
        throw EvenCharacteristic("bell_galois needs odd characteristic");
    const int q = field.q();
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(q) * q);
    for (int n = 0; n < q; ++n) {
        int arg = field.mul(field.add(field.mul(a, n), b), n);
        int second = field.add(n, h);
        v(static_cast<Eigen::Index>(n) * q + second) = norm * chars::additive_char(field, 1, arg);
    }
    return v;
}

EntanglementReport entanglement_check(const StateVector& state, double tolerance) {
    const auto dim2 = state.size();
    const int q = static_cast<int>(std::llround(std::sqrt(static_cast<double>(dim2))));
    if (static_cast<Eigen::Index>(q) * q != dim2)
        throw NonSquareDimension("state dimension is not a perfect square");
    EntanglementReport rep;
    rep.reduced = Eigen::MatrixXcd::Zero(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            Complex acc = 0.0;
            for (int s = 0; s < q; ++s)
                acc += state(static_cast<Eigen::Index>(i) * q + s) *
                       std::conj(state(static_cast<Eigen::Index>(j) * q + s));
            rep.reduced(i, j) = acc;
        }
    const double diag = 1.0 / q;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            double want = (i == j) ? diag : 0.0;
            rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.reduced(i, j) - Complex(want)));
        }
    rep.maximally_entangled = rep.max_deviation <= tolerance;
    return rep;
}

}  // namespace qgt::mub
