#pragma once

#include <stdexcept>
#include <vector>

#include "qgt/gf.hpp"

namespace qgt::codes {

struct CodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedLength : CodeError { using CodeError::CodeError; };
struct NotADivisor : CodeError { using CodeError::CodeError; };
struct CodeTooLarge : CodeError { using CodeError::CodeError; };

/// Polynomial over F_q, element-index coefficients lowest degree first.
using FqPoly = std::vector<int>;

FqPoly poly_mul(const gf::Field& f, const FqPoly& a, const FqPoly& b);
/// Remainder of a modulo monic b.
FqPoly poly_mod(const gf::Field& f, FqPoly a, const FqPoly& b);
/// x^n - 1 over F_q.
FqPoly xn_minus_one(const gf::Field& f, int n);

/// Monic irreducible factors of x^n - 1 (requires gcd(n, p) = 1), found by
/// trial division in increasing degree and verified by multiplying back.
std::vector<FqPoly> xn1_factors(int n, const gf::Field& field);
/// All monic divisors of x^n - 1 (products of subsets of factors).
std::vector<FqPoly> xn1_divisors(int n, const gf::Field& field);

struct LinearCode {
    int n = 0;
    int k = 0;
    const gf::Field* field = nullptr;
    FqPoly g;
    std::vector<std::vector<int>> generator_matrix;  // k rows of length n
};

LinearCode cyclic_code(int n, const gf::Field& field, const FqPoly& g);

struct DistanceReport {
    int d_min = 0;
    int correct_up_to = 0;
    int detect_up_to = 0;
    int singleton_gap = 0;
    bool is_mds = false;
};

/// Exact minimum distance by exhaustive codeword enumeration.
DistanceReport min_distance(const LinearCode& code);

/// Enumerate all q^k codewords (test oracle and small-code helper).
std::vector<std::vector<int>> codewords(const LinearCode& code);

/// All n cyclic shifts of g's coefficient vector, wrapped mod n.
std::vector<std::vector<int>> cyclic_extension_matrix(int n, const gf::Field& field,
                                                      const FqPoly& g);

struct PlaneAxiomReport {
    bool square = false;
    bool constant_row_sum = false;
    bool constant_col_sum = false;
    bool rows_meet_once = false;   // two lines share exactly one point
    bool cols_meet_once = false;   // two points lie on exactly one line
    bool count_matches = false;    // n = s^2 - s + 1
    int line_size = 0;             // s = points per line
    int order = 0;                 // s - 1 when the axioms hold
    bool pass = false;
};

PlaneAxiomReport plane_axioms_check(const std::vector<std::vector<int>>& matrix);

}  // namespace qgt::codes
