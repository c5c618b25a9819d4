#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgt/mub.hpp"
#include "qgt/phase.hpp"

using namespace qgt::phase;
using qgt::gf::Field;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pegg-barnett operator spectrum") {
    for (int q : {2, 3, 8}) {
        Operator op = pegg_barnett_operator(q, 0.5);
        CHECK(hermiticity_defect(op) < 1e-9);
        Eigen::SelfAdjointEigenSolver<Operator> es(op);
        std::vector<double> eig(es.eigenvalues().data(), es.eigenvalues().data() + q);
        std::sort(eig.begin(), eig.end());
        for (int k = 0; k < q; ++k)
            CHECK(eig[k] == doctest::Approx(0.5 + 2.0 * kPi * k / q).epsilon(1e-9));
    }
    CHECK_THROWS_AS(pegg_barnett_operator(1), std::invalid_argument);
}

TEST_CASE("s sum diagonal value") {
    Field f(5, 1);
    // n = m: plain sum of the integer labels
    CHECK(std::abs(s_sum(f, 2, 2) - std::complex<double>(10.0)) < 1e-9);
}

TEST_CASE("galois phase operator routes agree") {
    for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        Field f(p, m);
        for (int a = 0; a < f.q(); ++a) {
            GaloisPhaseOperator op = galois_phase_operator(f, a);
            CHECK(op.max_route_deviation < 1e-9);
            CHECK(hermiticity_defect(op.spectral) < 1e-9);
        }
    }
    CHECK_THROWS_AS(galois_phase_operator(Field(2, 2), 0), qgt::mub::EvenCharacteristic);
}

TEST_CASE("lock operator: ramanujan kernel equals the coprime projector") {
    for (int q = 2; q <= 30; ++q) {
        LockOperator op = lock_operator(q);
        CHECK(op.projector_deviation < 1e-9);
        CHECK(hermiticity_defect(op.spectral) < 1e-9);
        // idempotent kernel
        CHECK((op.ramanujan * op.ramanujan - op.ramanujan).cwiseAbs().maxCoeff() < 1e-9);
    }
    // q=3 diagonal phi(3)/3, q=4 rank phi(4)
    CHECK(std::abs(lock_operator(3).ramanujan(0, 0) - std::complex<double>(2.0 / 3.0)) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Operator> es(lock_operator(4).ramanujan);
    int rank = 0;
    for (int i = 0; i < 4; ++i) rank += es.eigenvalues()(i) > 0.5;
    CHECK(rank == 2);
    // q=2 spectral operator is pi times the single projector
    LockOperator two = lock_operator(2);
    CHECK((two.spectral - kPi * two.projector).cwiseAbs().maxCoeff() < 1e-12);
    // truncation breaks the identity whenever phi(q) + 1 != q
    CHECK(lock_operator(6, true).ramanujan.rows() == 3);
}

TEST_CASE("lock expectation values") {
    LockExpectation e2 = lock_expectation(2, 0.0);
    CHECK(std::abs(e2.closed_form) < 1e-12);

    for (int q = 2; q <= 30; ++q)
        for (double beta : {0.0, 0.7, 1.0}) {
            LockExpectation e = lock_expectation(q, beta);
            CHECK(e.imag_residue < 1e-9);
            // closed form is pi times the coprime-mode weight of the state
            CHECK(e.closed_form >= -1e-9);
            CHECK(e.closed_form <= kPi + 1e-9);
            // spectral value uses the same modes with weights in (0, 2pi)
            CHECK(e.spectral >= -1e-9);
            CHECK(e.spectral <= 2.0 * kPi + 1e-9);
        }

    // truncated kernel reproduces the Mangoldt-profile value at q=8
    LockExpectation e8 = lock_expectation(8, 1.0);
    double ref = kPi / 3.0;
    CHECK(std::abs(e8.closed_form_truncated - ref) <= 0.25 * ref);
    // full-range value, frozen
    CHECK(e8.closed_form == doctest::Approx(2.5975).epsilon(1e-3));
}

TEST_CASE("galois expectation paths agree and diagonal is pi(q-1)/q") {
    for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        Field f(p, m);
        const int q = f.q();
        for (int a = 0; a < std::min(q, 3); ++a)
            for (double beta : {0.0, 1.0}) {
                GaloisExpectation e = galois_expectation(f, a, 0, beta);
                CHECK(e.imag_residue < 1e-9);
                CHECK(std::abs(e.value - e.direct) < 1e-9);
                CHECK(e.diagonal_subtotal == doctest::Approx(kPi * (q - 1) / q).epsilon(1e-9));
            }
    }
    // diagonal subtotal approaches pi
    GaloisExpectation big = galois_expectation(Field(3, 3), 1, 0, 1.0);
    CHECK(big.diagonal_subtotal == doctest::Approx(kPi * 26.0 / 27.0).epsilon(1e-9));
    CHECK(std::abs(big.diagonal_subtotal - kPi) < 0.13);
}

TEST_CASE("lock sweep rows") {
    auto rows = lock_sweep(12, 1.0);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0].q == 2);
    CHECK(rows[4].q == 6);
    CHECK(rows[4].mangoldt_reference == 0.0);
    CHECK(rows[5].mangoldt_reference == doctest::Approx(kPi).epsilon(1e-12));  // q=7
    CHECK(rows[6].mangoldt_reference == doctest::Approx(kPi / 3.0).epsilon(1e-12));  // q=8
    for (const auto& r : rows) {
        LockExpectation e = lock_expectation(r.q, 1.0);
        CHECK(r.expectation_closed_form == e.closed_form);
        CHECK(r.expectation_spectral == e.spectral);
    }
}
