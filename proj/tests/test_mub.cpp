#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qgt/mub.hpp"

using namespace qgt::mub;
using qgt::gf::Field;
using qgt::gring::Ring;

TEST_CASE("odd prime power MUB sets are complete and unbiased") {
    for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        Field f(p, m);
        BasisSet set = mub_odd(f);
        CHECK(set.dim == f.q());
        CHECK(static_cast<int>(set.bases.size()) == f.q() + 1);
        CHECK(set.includes_computational);
        UnbiasednessReport rep = verify_unbiasedness(set);
        CHECK(rep.pass);
        CHECK(rep.max_ortho_deviation < 1e-9);
        CHECK(rep.max_abs_deviation < 1e-9);
    }
    CHECK_THROWS_AS(mub_odd(Field(2, 2)), EvenCharacteristic);
}

TEST_CASE("even (ring) MUB sets are complete and unbiased") {
    for (int m = 1; m <= 3; ++m) {
        Ring r(m);
        BasisSet set = mub_even(r);
        CHECK(set.dim == r.teich_size());
        CHECK(static_cast<int>(set.bases.size()) == r.teich_size() + 1);
        CHECK(verify_unbiasedness(set).pass);
    }
}

TEST_CASE("m=1 ring MUBs are the Pauli eigenbases up to global phase") {
    Ring r(1);
    BasisSet set = mub_even(r);
    REQUIRE(set.bases.size() == 3);
    const double s = 1.0 / std::sqrt(2.0);
    // X eigenvectors (1,1)/sqrt2, (1,-1)/sqrt2; Y eigenvectors (1,i)/sqrt2, (1,-i)/sqrt2
    std::vector<std::vector<StateVector>> pauli(2);
    StateVector v(2);
    v << s, s; pauli[0].push_back(v);
    v << s, -s; pauli[0].push_back(v);
    v << s, std::complex<double>(0, s); pauli[1].push_back(v);
    v << s, std::complex<double>(0, -s); pauli[1].push_back(v);
    for (int b = 0; b < 2; ++b)
        for (const auto& u : set.bases[b].vectors) {
            // u must match one Pauli eigenvector up to a global phase
            bool matched = false;
            for (const auto& w : pauli[b])
                if (std::abs(std::abs(w.dot(u)) - 1.0) < 1e-9) matched = true;
            CHECK(matched);
        }
    // third basis is computational (Z eigenbasis)
    CHECK(set.bases[2].label == "computational");
}

TEST_CASE("unbiasedness verifier flags a broken set") {
    Field f(3, 1);
    BasisSet set = mub_odd(f);
    set.bases[0].vectors[0](0) += 0.01;
    CHECK_FALSE(verify_unbiasedness(set).pass);
}

TEST_CASE("fourier Bell states form an orthonormal family") {
    for (int q : {2, 3, 4}) {
        std::vector<StateVector> states;
        for (int h = 0; h < q; ++h)
            for (int k = 0; k < q; ++k) states.push_back(bell_fourier(q, h, k));
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j) {
                double g = std::abs(states[i].dot(states[j]));
                CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-9);
            }
    }
}

TEST_CASE("bell states are maximally entangled") {
    EntanglementReport r1 = entanglement_check(bell_fourier(4, 1, 2));
    CHECK(r1.maximally_entangled);

    Field f(3, 1);
    for (int a = 0; a < 3; ++a)
        for (int h = 0; h < 3; ++h)
            for (int b = 0; b < 3; ++b)
                CHECK(entanglement_check(bell_galois(f, a, h, b)).maximally_entangled);
    CHECK_THROWS_AS(bell_galois(Field(2, 2), 0, 0, 0), EvenCharacteristic);
}

TEST_CASE("fixed-h galois Bell sub-bases are mutually unbiased") {
    Field f(3, 1);
    const int q = f.q();
    const double target = 1.0 / std::sqrt(static_cast<double>(q));
    for (int h = 0; h < q; ++h)
        for (int a = 0; a < q; ++a)
            for (int a2 = a + 1; a2 < q; ++a2)
                for (int b = 0; b < q; ++b)
                    for (int b2 = 0; b2 < q; ++b2) {
                        double g = std::abs(
                            bell_galois(f, a, h, b).dot(bell_galois(f, a2, h, b2)));
                        CHECK(std::abs(g - target) < 1e-9);
                    }
}

TEST_CASE("entanglement check rejects non-square dimensions") {
    StateVector v = StateVector::Zero(6);
    v(0) = 1.0;
    CHECK_THROWS_AS(entanglement_check(v), NonSquareDimension);
}
