#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "forge/error.hpp"

namespace forge {

/// Element of a finite field GF(p^m), stored by its canonical integer
/// encoding enc(a) = sum coords[i] * p^i where coords are the coordinates
/// in the polynomial basis 1, X, ..., X^{m-1} modulo the field modulus.
/// enc is a bijection between field elements and [0, q); the induced
/// ordering is used everywhere determinism matters.
struct Fe {
    uint32_t v = 0;
    friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

/// GF(p^m) with an explicit monic irreducible modulus over GF(p).
///
/// Instances are immutable after construction and every operation is a
/// pure function of its inputs, so a Field can be shared across threads
/// without synchronization.
///
/// Scale limits: p <= 2^16 and q = p^m <= 2^20.
class Field {
public:
    /// Builds GF(p^m) with the monic irreducible degree-m modulus whose
    /// integer encoding (ascending coefficient digits base p) is smallest.
    /// Deterministic across runs and platforms.
    static Field make(uint32_t p, uint32_t m);

    /// Builds GF(p^m) with an explicit modulus given as ascending
    /// coefficients over GF(p), length m+1, monic.
    static Field make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    uint32_t p() const noexcept { return p_; }
    uint32_t m() const noexcept { return m_; }
    uint64_t q() const noexcept { return q_; }
    const std::vector<uint32_t>& modulus() const noexcept { return mod_; }
    bool default_modulus() const noexcept { return default_mod_; }

    /// "p^m" for the default modulus, "p^m/c0,c1,...,1" otherwise.
    std::string descriptor() const;

    Fe zero() const noexcept { return Fe{0}; }
    Fe one() const noexcept { return Fe{1}; }

    /// Element from its canonical encoding; range-checked.
    Fe from_enc(uint64_t enc) const;
    /// Prime-subfield element from an integer residue (reduced mod p).
    Fe from_residue(int64_t r) const;
    /// Polynomial-basis coordinates of an element, length m.
    std::vector<uint32_t> coords(Fe a) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    /// Multiplicative inverse; throws DivisionByZero for 0.
    Fe inv(Fe a) const;
    /// a^e by square-and-multiply; pow(a, 0) = 1.
    Fe pow(Fe a, uint64_t e) const;

    /// a^{p^k}; k may exceed m (the Frobenius has order m).
    Fe frobenius(Fe a, uint64_t k) const;
    /// The unique b with b^p = a (the field is perfect).
    Fe pth_root(Fe a) const;
    /// Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{m-1}}, returned as a
    /// residue in [0, p).
    uint32_t trace_to_prime(Fe a) const;
    /// Whether a lies in (F_q^*)^d; computed as pow(a, (q-1)/g) == 1 with
    /// g = gcd(d, q-1). Throws ZeroInput for a = 0.
    bool is_dth_power(Fe a, uint64_t d) const;

    /// All q elements in increasing encoding order, starting with 0.
    std::vector<Fe> enumerate() const;

private:
    Field() = default;

    void init_tables();
    void decode(uint32_t v, uint32_t* out) const;
    uint32_t encode(const uint32_t* digits) const;

    uint32_t p_ = 0;
    uint32_t m_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> mod_;           // ascending, length m+1, monic
    std::vector<uint32_t> red_;           // coords of X^{m+j} mod modulus, row-major, j in [0, m-1)
    std::vector<uint64_t> ppow_;          // p^0 .. p^m
    bool default_mod_ = false;
};

}  // namespace forge
