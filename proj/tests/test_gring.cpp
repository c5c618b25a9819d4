#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qgt/gring.hpp"

using namespace qgt::gring;

TEST_CASE("basic primitive lifts") {
    CHECK(lift_basic_primitive({1, 1, 1}) == Z4Poly{1, 1, 1});
    CHECK(lift_basic_primitive({1, 1, 0, 1}) == Z4Poly{3, 1, 2, 1});     // x^3+2x^2+x+3
    CHECK(lift_basic_primitive({1, 1, 0, 0, 1}) == Z4Poly{1, 3, 2, 0, 1});  // x^4+2x^2+3x+1
    CHECK_THROWS_AS(lift_basic_primitive({1, 1, 1, 1, 1}), NotPrimitiveBase);
    CHECK_THROWS_AS(lift_basic_primitive({1, 2, 1}), NotPrimitiveBase);
}

TEST_CASE("ring construction basics") {
    Ring r(3);
    CHECK(r.size() == 64);
    CHECK(r.teich_size() == 8);
    CHECK(r.modulus() == Z4Poly{3, 1, 2, 1});
    CHECK(r.reduced_modulus() == Z4Poly{1, 1, 0, 1});
    CHECK(r.teichmuller().size() == 8);
    CHECK(r.teichmuller()[0] == 0);
    CHECK(r.teichmuller()[1] == 1);
    CHECK(r.teichmuller()[2] == r.xi());
    CHECK(r.pow(r.xi(), 7) == 1);
}

TEST_CASE("teichmuller set is multiplicatively closed") {
    for (int m = 1; m <= 4; ++m) {
        Ring r(m);
        std::set<int> t(r.teichmuller().begin(), r.teichmuller().end());
        CHECK(static_cast<int>(t.size()) == r.teich_size());
        for (int a : t)
            for (int b : t) CHECK(t.count(r.mul(a, b)) == 1);
    }
}

TEST_CASE("two-adic decomposition covers the whole ring") {
    for (int m = 1; m <= 3; ++m) {
        Ring r(m);
        for (int y = 0; y < r.size(); ++y) {
            TwoAdicForm f = r.two_adic_decompose(y);
            CHECK(r.in_teichmuller(f.a));
            CHECK(r.in_teichmuller(f.b));
            CHECK(r.add(f.a, r.scale(2, f.b)) == y);
        }
    }
}

TEST_CASE("frobenius is an order-m ring automorphism") {
    for (int m = 2; m <= 3; ++m) {
        Ring r(m);
        for (int x = 0; x < r.size(); ++x) {
            int fx = r.frobenius(x);
            // sigma^m = identity
            int it = fx;
            for (int k = 1; k < m; ++k) it = r.frobenius(it);
            CHECK(it == x);
            CHECK(r.gtrace(fx) == r.gtrace(x));
            for (int y = 0; y < r.size(); ++y) {
                CHECK(r.frobenius(r.add(x, y)) == r.add(fx, r.frobenius(y)));
                CHECK(r.frobenius(r.mul(x, y)) == r.mul(fx, r.frobenius(y)));
            }
        }
    }
}

TEST_CASE("generalized trace is additive and Z4-linear") {
    Ring r(3);
    for (int x = 0; x < r.size(); ++x)
        for (int k = 0; k < 4; ++k)
            CHECK(r.gtrace(r.scale(k, x)) == k * r.gtrace(x) % 4);
    for (int x = 0; x < r.size(); x += 3)
        for (int y = 0; y < r.size(); y += 5)
            CHECK(r.gtrace(r.add(x, y)) == (r.gtrace(x) + r.gtrace(y)) % 4);
}

TEST_CASE("unit census") {
    for (int m = 1; m <= 4; ++m) {
        Ring r(m);
        int units = 0;
        for (int y = 0; y < r.size(); ++y) units += r.is_unit(y);
        CHECK(units == r.size() - r.teich_size());  // 4^m - 2^m
    }
}

TEST_CASE("element encoding round trip and arithmetic identities") {
    Ring r(2);
    for (int y = 0; y < r.size(); ++y) {
        CHECK(r.element_from_coeffs(r.coeffs_of(y)) == y);
        CHECK(r.add(y, r.neg(y)) == 0);
        CHECK(r.mul(y, 1) == y);
        CHECK(r.scale(2, r.scale(2, y)) == 0);  // 4 = 0
    }
    CHECK_THROWS_AS(r.add(0, 16), MixedRings);
    CHECK_THROWS_AS(r.pow(1, -1), RingError);
}

TEST_CASE("m=1 ring is Z4") {
    Ring r(1);
    CHECK(r.size() == 4);
    CHECK(r.teichmuller() == std::vector<int>{0, 1});
    for (int a = 0; a < 4; ++a) {
        CHECK(r.add(a, a) == (2 * a) % 4);
        CHECK(r.gtrace(a) == a);
    }
}
