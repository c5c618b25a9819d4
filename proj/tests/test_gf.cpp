#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qgt/gf.hpp"

using namespace qgt::gf;

TEST_CASE("GF(8) default modulus and full table") {
    Field f(2, 3);
    CHECK(f.modulus() == ModPoly{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(f.primitive_modulus());
    CHECK(f.alpha() == 2);

    auto rows = f.table();
    REQUIRE(rows.size() == 8);
    struct Row { const char* pw; const char* poly; std::vector<int> tup; int idx; };
    const Row want[] = {
        {"0", "0", {0, 0, 0}, 0},
        {"1", "1", {0, 0, 1}, 1},
        {"a", "a", {0, 1, 0}, 2},
        {"a^2", "a^2", {1, 0, 0}, 4},
        {"a^3", "1+a", {0, 1, 1}, 3},
        {"a^4", "a+a^2", {1, 1, 0}, 6},
        {"a^5", "1+a+a^2", {1, 1, 1}, 7},
        {"a^6", "1+a^2", {1, 0, 1}, 5},
    };
    for (int i = 0; i < 8; ++i) {
        CHECK(rows[i].power == want[i].pw);
        CHECK(rows[i].polynomial == want[i].poly);
        CHECK(rows[i].tuple == want[i].tup);
        CHECK(rows[i].canonical_index == want[i].idx);
    }
    CHECK(f.discrete_log(3) == 3);  // 1+a = a^3
    CHECK(f.discrete_log(5) == 6);  // 1+a^2 = a^6
}

TEST_CASE("GF(4) arithmetic") {
    Field f(2, 2);
    CHECK(f.modulus() == ModPoly{1, 1, 1});
    CHECK(f.mul(2, 2) == 3);  // [x][x] = [x+1]
    CHECK(f.add(2, 3) == 1);
    CHECK(f.inv(2) == 3);
}

TEST_CASE("GF(9) default modulus") {
    Field f(3, 2);
    CHECK(f.modulus() == ModPoly{2, 1, 1});  // x^2 + x + 2
    CHECK(f.q() == 9);
    CHECK(f.pow(f.alpha(), 8) == 1);
    CHECK(f.pow(f.alpha(), 4) == 2);  // alpha^4 = -1
}

TEST_CASE("irreducibility and primitivity predicates") {
    CHECK(is_irreducible({1, 1, 0, 1}, 2));
    CHECK(is_primitive({1, 1, 0, 1}, 2));
    CHECK(is_primitive({1, 1, 0, 0, 1}, 2));  // x^4 + x + 1
    // x^4 + x^3 + x^2 + x + 1 divides x^5 - 1: irreducible but order 5
    CHECK(is_irreducible({1, 1, 1, 1, 1}, 2));
    CHECK_FALSE(is_primitive({1, 1, 1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible({2, 0, 1}, 3));  // x^2 - 1
    CHECK(is_irreducible({1, 0, 1}, 3));
    CHECK_FALSE(is_primitive({1, 0, 1}, 3));  // [x] has order 4 in GF(9)
}

TEST_CASE("constructor error cases") {
    CHECK_THROWS_AS(Field(4, 1), NonPrimeP);
    CHECK_THROWS_AS(Field(3, 2, ModPoly{2, 0, 1}), NotIrreducible);
    CHECK_THROWS_AS(Field(3, 2, ModPoly{1, 0, 1}), NotPrimitive);
    Field f(3, 2, ModPoly{1, 0, 1}, true);  // accepted with the override
    CHECK_FALSE(f.primitive_modulus());
    CHECK(f.mul(f.alpha(), f.alpha()) == f.neg(1));
    CHECK_THROWS_AS(f.discrete_log(2), NotPrimitive);
    Field g(2, 3);
    CHECK_THROWS_AS(g.inv(0), ZeroInverse);
    CHECK_THROWS_AS(g.discrete_log(0), LogOfZero);
    CHECK_THROWS_AS(g.add(1, 9), MixedFields);
}

static void field_invariants(int p, int m) {
    Field f(p, m);
    const int q = f.q();

    // multiplicative group cyclicity
    std::set<int> seen;
    for (int t = 0; t < q - 1; ++t) seen.insert(f.alpha_pow(t));
    CHECK(static_cast<int>(seen.size()) == q - 1);
    CHECK(seen.count(0) == 0);

    // inverses
    for (int x = 1; x < q; ++x) CHECK(f.mul(x, f.inv(x)) == 1);

    // trace: additive, p-linear over the prime subfield, Frobenius-stable
    for (int x = 0; x < q; ++x) {
        CHECK(f.trace(f.pow(x, q)) == f.trace(x));
        for (int y = 0; y < q; ++y)
            CHECK(f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % p);
        for (int a = 0; a < p; ++a)
            CHECK(f.trace(f.mul(a, x)) == a * f.trace(x) % p);
    }

    // trace fibers all have size q / p
    std::vector<int> fiber(p, 0);
    for (int x = 0; x < q; ++x) ++fiber[f.trace(x)];
    for (int c = 0; c < p; ++c) CHECK(fiber[c] == q / p);
}

TEST_CASE("field invariants for all q <= 64") {
    field_invariants(2, 2);
    field_invariants(2, 3);
    field_invariants(2, 4);
    field_invariants(2, 5);
    field_invariants(2, 6);
    field_invariants(3, 2);
    field_invariants(3, 3);
    field_invariants(5, 2);
    field_invariants(7, 2);
    field_invariants(61, 1);
}

TEST_CASE("coeffs round trip and polynomial evaluation") {
    Field f(3, 3);
    for (int x = 0; x < f.q(); ++x)
        CHECK(f.element_from_coeffs(f.coeffs_of(x)) == x);
    // f(x) = x^2 + 1 at alpha: alpha^2 + 1
    int v = f.eval_poly({1, 0, 1}, f.alpha());
    CHECK(v == f.add(f.mul(f.alpha(), f.alpha()), 1));
}
