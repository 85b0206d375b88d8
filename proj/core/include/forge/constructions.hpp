#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/kummer.hpp"

namespace forge {

/// p-linearized polynomial sum a_i x^{p^i}, stored as an exponent-indexed
/// coefficient map {i -> a_i} with no zero entries. The zero set of a
/// separable linearized polynomial (a_0 != 0) is an F_p-subspace.
struct LinearizedPoly {
    std::map<uint32_t, Fe> terms;

    bool is_zero() const { return terms.empty(); }
    uint32_t top() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    Fe coeff(uint32_t i) const {
        auto it = terms.find(i);
        return it == terms.end() ? Fe{0} : it->second;
    }
    void set(uint32_t i, Fe c) {
        if (c.v == 0)
            terms.erase(i);
        else
            terms[i] = c;
    }
};

LinearizedPoly lin_sub(const Field& k, const LinearizedPoly& a, const LinearizedPoly& b);
Fe lin_eval(const Field& k, const LinearizedPoly& a, Fe x);
Poly lin_to_poly(const Field& k, const LinearizedPoly& a);

/// x^q - x, the annihilator of the full space F_q.
LinearizedPoly lin_full_space(const Field& k);
/// sum_{i=0}^{m-1} x^{p^i}, the annihilator of the trace-zero hyperplane.
LinearizedPoly lin_trace_form(const Field& k);

/// An F_p-subspace of F_q given by an independent basis, with all p^r
/// members materialized.
struct Subspace {
    std::vector<Fe> basis;
    std::vector<Fe> elements;  // sorted by encoding
    uint32_t r() const { return (uint32_t)basis.size(); }
};

/// Validates independence by rank computation over GF(p) in coordinates.
/// Throws DependentBasis.
Subspace make_subspace(const Field& k, std::vector<Fe> basis);
Subspace full_subspace(const Field& k);
Subspace trace_zero_subspace(const Field& k);

/// The monic linearized polynomial of degree p^r vanishing exactly on L,
/// built by adjoining basis vectors. Throws DependentBasis.
LinearizedPoly annihilator(const Field& k, const Subspace& L);

/// Splitting R = R1 + R2 with support(R1) in [s, r], support(R2) in
/// [0, t], t <= s, and the boundary coefficients nonzero. delta is the
/// number of common zeros #(L1 cap L2); these always lie in F_q.
struct SplittingSpec {
    LinearizedPoly R, R1, R2;
    uint32_t r = 0, s = 0, t = 0;
    uint64_t delta = 0;
};

/// Splits R at index s with chosen coefficient c_s for R2 (so
/// b_s = a_s - c_s on the R1 side). All lower coefficients go to R2 and
/// all higher ones to R1; this is exactly the freedom the construction
/// permits. Throws InvalidSplit.
SplittingSpec make_splitting(const Field& k, const LinearizedPoly& R, uint32_t s, Fe c_s);

/// The Kummer cover y^{q-1} = -R1/R2.
KummerCurve splitting_curve(const Field& k, const SplittingSpec& spec);

/// Closed-form genus and point lower bound for a splitting curve:
///   g = {(p^{r-s} + p^t - delta - 1)(q-2) - delta p^{gcd(m,s)}
///        - p^{gcd(m,r-t)} + 2 delta + 2} / 2
///   N >= (p^r - delta)(q-1)
struct SplitPrediction {
    uint64_t genus;
    uint64_t point_lower_bound;
};

SplitPrediction splitting_prediction(const Field& k, const SplittingSpec& spec);

struct EnumStats {
    uint64_t candidates = 0;
    uint64_t emitted = 0;
    uint64_t zero_boundary = 0;    // b_s would vanish
    uint64_t equal_zero_sets = 0;  // L1 = L2
    uint64_t duplicates = 0;       // same (R1, R2) reached twice
};

/// Every valid splitting of R, for s in (0, r) and c_s over F_q,
/// deduplicated by (R1, R2) and ordered by (s, enc(c_s)).
std::vector<SplittingSpec> enumerate_splittings(const Field& k, const LinearizedPoly& R,
                                                EnumStats* stats = nullptr);

/// A generated curve plus the closed-form (genus, points) where the
/// construction states them; make_report enforces the prediction.
struct FamilyResult {
    KummerCurve curve;
    std::optional<Prediction> predicted;
    std::string family;
};

/// y^{q-1} = -(x^q - a x^{p^s}) / (a x^{p^s} - x) with s = (m-1)/2, for
/// odd m >= 3 and a in the (p^s - 1)-th power class (delta = p).
FamilyResult family_prop21(const Field& k, Fe a);
/// Same splitting with a outside that power class (delta = 1).
FamilyResult family_prop23(const Field& k, Fe a);
/// Even m, s = m/2, a with a^{sqrt(q)+1} != 1; points = (q-1)^2.
/// When a is absent the first admissible element by encoding is chosen.
FamilyResult family_prop25(const Field& k, std::optional<Fe> a = {});
/// Trace-zero splitting R2 = sum_{i<s} x^{p^i} for gcd(m, s) = 1.
FamilyResult family_prop31(const Field& k, uint32_t s);
/// Maximal curve y^{sqrt(q)+1} = a(x^{p^{m/2-1}} + ... + x) with
/// a^{sqrt(q)} + a = 0; attains the Hasse-Weil bound.
FamilyResult family_prop35(const Field& k);
/// y^{q-1} = x f(x)^p for a supplied polynomial f.
FamilyResult family_xfp(const Field& k, const Poly& f);
/// y^s = g where base f(x) = g(x^t); s | n, t | p-1.
/// Throws NotAQuotient when no such g exists.
FamilyResult family_quotient(const Field& k, const KummerCurve& base, uint64_t s, uint32_t t);

}  // namespace forge
