#include "qgt/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qgt/chars.hpp"
#include "qgt/mub.hpp"
#include "qgt/numtheory.hpp"

namespace qgt::phase {

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd fourier_vector(int q, int k) {
    Eigen::VectorXcd v(q);
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    for (int n = 0; n < q; ++n) v(n) = norm * chars::index_phase_char(q, k, n);
    return v;
}

Eigen::VectorXcd pure_phase_state(int q, double beta) {
    Eigen::VectorXcd f(q);
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    for (int n = 0; n < q; ++n) f(n) = norm * std::polar(1.0, n * beta);
    return f;
}
}  // namespace

double hermiticity_defect(const Operator& op) {
    return (op - op.adjoint()).cwiseAbs().maxCoeff();
}

Operator pegg_barnett_operator(int q, double theta0) {
    if (q < 2) throw std::invalid_argument("pegg_barnett_operator: q must be >= 2");
    Operator op = Operator::Zero(q, q);
    for (int k = 0; k < q; ++k) {
        Eigen::VectorXcd v = fourier_vector(q, k);
        op += (theta0 + 2.0 * kPi * k / q) * (v * v.adjoint());
    }
    return op;
}

Complex s_sum(const gf::Field& field, int n, int m) {
    const int diff = field.sub(n, m);
    chars::KahanSum s;
    for (int b = 0; b < field.q(); ++b)
        s.add(static_cast<double>(b) * chars::additive_char(field, 1, field.mul(b, diff)));
    return s.value();
}

GaloisPhaseOperator galois_phase_operator(const gf::Field& field, int a, int k) {
    if (field.p() == 2)
        throw mub::EvenCharacteristic("galois_phase_operator needs odd characteristic");
    const int q = field.q();
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));

    GaloisPhaseOperator out;
    out.spectral = Operator::Zero(q, q);
    for (int b = 0; b < q; ++b) {
        Eigen::VectorXcd v(q);
        for (int n = 0; n < q; ++n) {
            int arg = field.add(field.mul(a, field.mul(n, n)), field.mul(b, n));
            v(n) = norm * chars::index_phase_char(q, k, n) * chars::additive_char(field, 1, arg);
        }
        out.spectral += (2.0 * kPi * b / q) * (v * v.adjoint());
    }

    out.matrix_element = Operator::Zero(q, q);
    const double pref = 2.0 * kPi / (static_cast<double>(q) * q);
    for (int n = 0; n < q; ++n)
        for (int m = 0; m < q; ++m) {
            int nm = ((n - m) % q + q) % q;
            int sq_diff = field.sub(field.mul(n, n), field.mul(m, m));
            out.matrix_element(n, m) = pref * chars::index_phase_char(q, k, nm) *
                                       chars::additive_char(field, a, sq_diff) *
                                       s_sum(field, n, m);
        }

    out.max_route_deviation = (out.spectral - out.matrix_element).cwiseAbs().maxCoeff();
    return out;
}

LockOperator lock_operator(int q, bool truncate_to_totient) {
    if (q < 2) throw std::invalid_argument("lock_operator: q must be >= 2");
    LockOperator out;
    out.spectral = Operator::Zero(q, q);
    out.projector = Operator::Zero(q, q);
    for (int k = 1; k < q; ++k) {
        if (std::gcd(k, q) != 1) continue;
        Eigen::VectorXcd v = fourier_vector(q, k);
        Operator proj = v * v.adjoint();
        out.spectral += (2.0 * kPi * k / q) * proj;
        out.projector += proj;
    }
    const int dim = truncate_to_totient
                        ? static_cast<int>(numtheory::totient(static_cast<std::uint64_t>(q))) + 1
                        : q;
    out.ramanujan = Operator::Zero(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int l = 0; l < dim; ++l)
            out.ramanujan(n, l) =
                static_cast<double>(numtheory::ramanujan_sum(static_cast<std::uint64_t>(q), n - l)) / q;
    const int cmp = std::min<int>(dim, q);
    out.projector_deviation =
        (out.ramanujan.topLeftCorner(cmp, cmp) - out.projector.topLeftCorner(cmp, cmp))
            .cwiseAbs()
            .maxCoeff();
    return out;
}

LockExpectation lock_expectation(int q, double beta) {
    if (q < 2) throw std::invalid_argument("lock_expectation: q must be >= 2");
    LockExpectation out;
    chars::KahanSum s;
    for (int n = 0; n < q; ++n)
        for (int l = 0; l < q; ++l) {
            double c = static_cast<double>(numtheory::ramanujan_sum(static_cast<std::uint64_t>(q), l - n));
            s.add(c * std::polar(1.0, beta * (n - l)));
        }
    Complex v = s.value() * (kPi / (static_cast<double>(q) * q));
    out.imag_residue = std::abs(v.imag());
    out.closed_form = v.real();

    const int hi = static_cast<int>(numtheory::totient(static_cast<std::uint64_t>(q)));
    chars::KahanSum st;
    for (int n = 0; n <= hi; ++n)
        for (int l = 0; l <= hi; ++l) {
            double c = static_cast<double>(numtheory::ramanujan_sum(static_cast<std::uint64_t>(q), l - n));
            st.add(c * std::polar(1.0, beta * (n - l)));
        }
    out.closed_form_truncated = (st.value() * (kPi / (static_cast<double>(q) * q))).real();

    Eigen::VectorXcd f = pure_phase_state(q, beta);
    double spectral = 0.0;
    for (int k = 1; k < q; ++k) {
        if (std::gcd(k, q) != 1) continue;
        Complex amp = fourier_vector(q, k).dot(f);
        spectral += (2.0 * kPi * k / q) * std::norm(amp);
    }
    out.spectral = spectral;
    return out;
}

GaloisExpectation galois_expectation(const gf::Field& field, int a, int k, double beta) {
    if (field.p() == 2)
        throw mub::EvenCharacteristic("galois_expectation needs odd characteristic");
    const int q = field.q();
    const double pref = 2.0 * kPi / (static_cast<double>(q) * q * q);

    GaloisExpectation out;
    chars::KahanSum total, diag;
    for (int m = 0; m < q; ++m)
        for (int n = 0; n < q; ++n) {
            int mn = ((m - n) % q + q) % q;
            int sq_diff = field.sub(field.mul(m, m), field.mul(n, n));
            Complex term = chars::index_phase_char(q, k, mn) *
                           std::polar(1.0, beta * (n - m)) *
                           chars::additive_char(field, a, sq_diff) * s_sum(field, m, n);
            total.add(term);
            if (m == n) diag.add(term);
        }
    Complex v = total.value() * pref;
    out.imag_residue = std::abs(v.imag());
    out.value = v.real();
    out.diagonal_subtotal = (diag.value() * pref).real();

    Eigen::VectorXcd f = pure_phase_state(q, beta);
    out.direct = (f.adjoint() * galois_phase_operator(field, a, k).spectral * f)(0, 0).real();
    return out;
}

std::vector<LockSweepRow> lock_sweep(int qmax, double beta) {
    std::vector<LockSweepRow> rows;
    for (int q = 2; q <= qmax; ++q) {
        LockExpectation e = lock_expectation(q, beta);
        double ref = 0.0;
        std::uint64_t p = numtheory::prime_power_base(static_cast<std::uint64_t>(q));
        if (p != 0)
            ref = kPi * std::log(static_cast<double>(p)) / std::log(static_cast<double>(q));
        rows.push_back({q, e.closed_form, e.spectral, ref});
    }
    return rows;
}

}  // namespace qgt::phase
