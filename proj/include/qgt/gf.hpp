#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgt::gf {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPrimeP : FieldError { using FieldError::FieldError; };
struct NotIrreducible : FieldError { using FieldError::FieldError; };
struct NotPrimitive : FieldError { using FieldError::FieldError; };
struct ZeroInverse : FieldError { using FieldError::FieldError; };
struct MixedFields : FieldError { using FieldError::FieldError; };
struct LogOfZero : FieldError { using FieldError::FieldError; };
struct TableTooLarge : FieldError { using FieldError::FieldError; };

/// Polynomial over Z_p, coefficients lowest degree first.
using ModPoly = std::vector<int>;

struct FieldTableRow {
    std::string power;       // "0", "1", "a", "a^2", ...
    std::string polynomial;  // "1+a+a^2"
    std::vector<int> tuple;  // high-to-low, matching the usual table layout
    int canonical_index;
};

/// A realized GF(p^m).  Elements are canonical integer encodings
/// n = sum c_i p^i in [0, q-1]; 0 and 1 encode the additive and
/// multiplicative identities.  Immutable after construction.
class Field {
public:
    /// If no modulus is given, picks the monic primitive polynomial of
    /// degree m with the smallest canonical integer encoding.
    /// allow_non_primitive accepts an irreducible non-primitive modulus
    /// (discrete_log then throws NotPrimitive).
    Field(int p, int m, std::optional<ModPoly> modulus = std::nullopt,
          bool allow_non_primitive = false);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const ModPoly& modulus() const { return modulus_; }
    bool primitive_modulus() const { return primitive_; }
    /// Canonical index of the generator alpha = [x] (index p for m > 1).
    int alpha() const { return alpha_; }

    std::vector<int> coeffs_of(int a) const;
    int element_from_coeffs(const ModPoly& c) const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// tr(x) = x + x^p + ... + x^{p^{m-1}}, as an integer in [0, p-1].
    int trace(int a) const;

    /// t with alpha^t = a, for nonzero a.
    int discrete_log(int a) const;
    int alpha_pow(int t) const;  // alpha^t, t taken mod q-1

    /// Evaluate a polynomial with coefficients in this field at x.
    int eval_poly(const std::vector<int>& coeffs, int x) const;

    std::vector<FieldTableRow> table() const;

    bool same_field(const Field& other) const;

private:
    void check_element(int a) const;

    int p_, m_, q_;
    ModPoly modulus_;
    bool primitive_;
    int alpha_;
    std::vector<int> exp_;    // exp_[t] = alpha^t, t in [0, q-2]
    std::vector<int> log_;    // log_[a] = t, a nonzero
    std::vector<int> trace_;  // per-element trace
};

/// Irreducibility of a monic polynomial over Z_p.
bool is_irreducible(const ModPoly& g, int p);
/// Primitivity: irreducible, g(0) != 0 and [x] has order p^deg - 1.
bool is_primitive(const ModPoly& g, int p);

}  // namespace qgt::gf
