#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forge/gf.hpp"

namespace forge {

/// Dense univariate polynomial over one Field, ascending coefficients with
/// no trailing zero. The zero polynomial is the empty sequence and reports
/// degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Fe> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Fe c) { return Poly(std::vector<Fe>{c}); }
    static Poly monomial(Fe c, size_t n) {
        std::vector<Fe> v(n + 1, Fe{0});
        v[n] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return (int)c_.size() - 1; }
    const std::vector<Fe>& coeffs() const noexcept { return c_; }
    Fe coeff(size_t i) const noexcept { return i < c_.size() ? c_[i] : Fe{0}; }
    Fe lead() const noexcept { return c_.empty() ? Fe{0} : c_.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }
    std::vector<Fe> c_;
};

Poly add(const Field& k, const Poly& a, const Poly& b);
Poly sub(const Field& k, const Poly& a, const Poly& b);
Poly neg(const Field& k, const Poly& a);
Poly mul(const Field& k, const Poly& a, const Poly& b);
Poly scale(const Field& k, Fe c, const Poly& a);
Poly pow(const Field& k, const Poly& a, uint64_t e);

/// Exact division with remainder: a = q*b + r, deg r < deg b.
/// Throws DivisionByZero when b = 0.
std::pair<Poly, Poly> divrem(const Field& k, const Poly& a, const Poly& b);

/// Monic greatest common divisor by Euclid. Throws BothZero.
Poly gcd(const Field& k, Poly a, Poly b);

Poly monic(const Field& k, const Poly& a);

/// Formal derivative with characteristic-p coefficient arithmetic.
Poly derivative(const Field& k, const Poly& a);

/// Horner evaluation.
Fe evaluate(const Field& k, const Poly& a, Fe x0);

/// One multiplicity band of a squarefree decomposition: a monic squarefree
/// factor together with its multiplicity in the input.
struct SqfBand {
    Poly factor;
    uint64_t multiplicity;
};

/// unit * prod factor_i^{multiplicity_i} equals the decomposed polynomial;
/// bands are pairwise coprime and sorted by increasing multiplicity.
struct SqfDecomp {
    Fe unit;
    std::vector<SqfBand> bands;
};

/// Characteristic-p squarefree decomposition. Residuals with zero
/// derivative are p-th powers; they are deflated by a coefficient-wise
/// p-th root with the pending multiplicities scaled by p.
/// Throws ZeroPolynomial.
SqfDecomp squarefree_decomposition(const Field& k, const Poly& a);

/// Coefficient-wise p-th root of a polynomial supported on exponents
/// divisible by p (so a = out^p).
Poly pth_root_poly(const Field& k, const Poly& a);

/// All roots in F_q with exact multiplicities, by exhaustive evaluation
/// plus deflation. Throws ZeroPolynomial.
std::vector<std::pair<Fe, uint64_t>> rational_roots(const Field& k, const Poly& a);

/// a = (x - x0)^d * reduced with reduced(x0) != 0. Throws ZeroPolynomial.
std::pair<uint64_t, Poly> deflate(const Field& k, const Poly& a, Fe x0);

}  // namespace forge
