#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qgt::gring {

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPrimitiveBase : RingError { using RingError::RingError; };
struct LiftVerificationFailed : RingError { using RingError::RingError; };
struct MixedRings : RingError { using RingError::RingError; };
struct DecompositionFailed : RingError { using RingError::RingError; };
struct TraceNotScalar : RingError { using RingError::RingError; };

/// Polynomial over Z_4 (or Z_2), coefficients lowest degree first.
using Z4Poly = std::vector<int>;

/// y = a + 2b with both parts in the Teichmueller set.
struct TwoAdicForm {
    int a;
    int b;
};

/// Lift a primitive polynomial over Z_2 to the basic primitive polynomial
/// over Z_4 via the even/odd-part squaring construction.
Z4Poly lift_basic_primitive(const Z4Poly& hbar);

/// The Galois ring R_{4^m} = Z_4[x]/(h).  Elements are canonical integer
/// encodings n = sum c_i 4^i with c_i in Z_4, n in [0, 4^m).  Immutable.
class Ring {
public:
    explicit Ring(int m);
    Ring(int m, const Z4Poly& hbar);

    int m() const { return m_; }
    int size() const { return size_; }          // 4^m
    int teich_size() const { return tsize_; }   // 2^m
    const Z4Poly& modulus() const { return h_; }
    const Z4Poly& reduced_modulus() const { return hbar_; }
    int xi() const { return xi_; }  // distinguished root of order 2^m - 1

    /// Teichmueller set in canonical order (0, 1, xi, xi^2, ...).
    const std::vector<int>& teichmuller() const { return teich_; }
    bool in_teichmuller(int y) const;
    /// Position of y in the Teichmueller ordering; -1 if absent.
    int teich_index(int y) const;

    std::vector<int> coeffs_of(int y) const;
    int element_from_coeffs(const Z4Poly& c) const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int pow(int a, long long e) const;
    int scale(int k, int a) const;  // k in Z_4 times a

    TwoAdicForm two_adic_decompose(int y) const;
    int frobenius(int y) const;
    /// Generalized trace to Z_4.
    int gtrace(int y) const;

    bool is_unit(int y) const;

private:
    void check_element(int y) const;
    int frobenius_raw(int y) const;

    int m_, size_, tsize_;
    Z4Poly h_, hbar_;
    int xi_;
    std::vector<int> teich_;
    std::vector<int> teich_pos_;   // element -> Teichmueller position or -1
    std::vector<int> double_of_;   // Teichmueller position t -> 2*teich_[t]
    std::vector<int> gtrace_;
};

}  // namespace qgt::gring
