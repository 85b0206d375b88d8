#include "forge/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace forge {

LinearizedPoly lin_sub(const Field& k, const LinearizedPoly& a, const LinearizedPoly& b) {
    LinearizedPoly out = a;
    for (const auto& [i, c] : b.terms) out.set(i, k.sub(out.coeff(i), c));
    return out;
}

Fe lin_eval(const Field& k, const LinearizedPoly& a, Fe x) {
    Fe acc{0};
    Fe xp = x;  // x^{p^i}, advanced as i grows
    uint32_t cur = 0;
    for (const auto& [i, c] : a.terms) {
        while (cur < i) {
            xp = k.pow(xp, k.p());
            ++cur;
        }
        acc = k.add(acc, k.mul(c, xp));
    }
    return acc;
}

Poly lin_to_poly(const Field& k, const LinearizedPoly& a) {
    if (a.is_zero()) return Poly();
    uint64_t deg = 1;
    for (uint32_t i = 0; i < a.top(); ++i) deg *= k.p();
    std::vector<Fe> coeffs(deg + 1, Fe{0});
    uint64_t e = 1;
    uint32_t cur = 0;
    for (const auto& [i, c] : a.terms) {
        while (cur < i) {
            e *= k.p();
            ++cur;
        }
        coeffs[e] = c;
    }
    return Poly(std::move(coeffs));
}

LinearizedPoly lin_full_space(const Field& k) {
    LinearizedPoly R;
    R.set(0, k.from_residue(-1));
    R.set(k.m(), k.one());
    return R;
}

LinearizedPoly lin_trace_form(const Field& k) {
    LinearizedPoly R;
    for (uint32_t i = 0; i < k.m(); ++i) R.set(i, k.one());
    return R;
}

Subspace make_subspace(const Field& k, std::vector<Fe> basis) {
    // Rank over GF(p) by Gaussian elimination on the coordinate vectors.
    std::vector<std::vector<uint32_t>> rows;
    for (Fe b : basis) rows.push_back(k.coords(b));
    uint32_t rank = 0;
    for (uint32_t col = 0; col < k.m() && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        uint32_t piv = rows[rank][col];
        uint32_t ipiv = 1, base = piv, e = k.p() - 2;
        while (e) {
            if (e & 1) ipiv = (uint32_t)((uint64_t)ipiv * base % k.p());
            base = (uint32_t)((uint64_t)base * base % k.p());
            e >>= 1;
        }
        for (size_t r2 = rank + 1; r2 < rows.size(); ++r2) {
            uint32_t fac = (uint32_t)((uint64_t)rows[r2][col] * ipiv % k.p());
            if (fac == 0) continue;
            for (uint32_t j = 0; j < k.m(); ++j)
                rows[r2][j] =
                    (uint32_t)((rows[r2][j] + (uint64_t)(k.p() - fac) * rows[rank][j]) % k.p());
        }
        ++rank;
    }
    if (rank != basis.size())
        raise("DependentBasis", "basis vectors are linearly dependent over GF(p)");

    Subspace L;
    L.basis = std::move(basis);
    // Materialize all p^r combinations.
    uint64_t total = 1;
    for (size_t i = 0; i < L.basis.size(); ++i) total *= k.p();
    L.elements.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        Fe acc{0};
        for (Fe b : L.basis) {
            uint32_t digit = (uint32_t)(rest % k.p());
            rest /= k.p();
            if (digit) acc = k.add(acc, k.mul(k.from_residue(digit), b));
        }
        L.elements.push_back(acc);
    }
    std::sort(L.elements.begin(), L.elements.end());
    return L;
}

Subspace full_subspace(const Field& k) {
    std::vector<Fe> basis;
    uint64_t e = 1;
    for (uint32_t i = 0; i < k.m(); ++i) {
        basis.push_back(Fe{(uint32_t)e});
        e *= k.p();
    }
    return make_subspace(k, std::move(basis));
}

Subspace trace_zero_subspace(const Field& k) {
    // Greedy basis of ker(Tr) in encoding order.
    std::vector<Fe> basis;
    for (uint64_t v = 1; v < k.q() && basis.size() + 1 < k.m(); ++v) {
        Fe x{(uint32_t)v};
        if (k.trace_to_prime(x) != 0) continue;
        std::vector<Fe> attempt = basis;
        attempt.push_back(x);
        try {
            make_subspace(k, attempt);
        } catch (const Error&) {
            continue;
        }
        basis.push_back(x);
    }
    if (k.m() >= 2 && basis.size() != k.m() - 1)
        raise("InternalInconsistency", "trace-zero hyperplane basis not found");
    return make_subspace(k, basis);
}

LinearizedPoly annihilator(const Field& k, const Subspace& L) {
    LinearizedPoly R;
    R.set(0, k.one());  // R_0 = x
    for (Fe b : L.basis) {
        Fe rb = lin_eval(k, R, b);
        if (rb.v == 0) raise("DependentBasis", "basis vector already annihilated");
        // R <- R^p - R(b)^{p-1} R
        LinearizedPoly next;
        for (const auto& [i, c] : R.terms) next.set(i + 1, k.pow(c, k.p()));
        Fe factor = k.pow(rb, k.p() - 1);
        for (const auto& [i, c] : R.terms) next.set(i, k.sub(next.coeff(i), k.mul(factor, c)));
        R = std::move(next);
    }
    return R;
}

namespace {

// The separable deflation M1 of R1 = M1^{p^s}: coefficient p^s-th roots
// with exponents shifted down by s.
LinearizedPoly deflate_by_ps(const Field& k, const LinearizedPoly& R1, uint32_t s) {
    LinearizedPoly M1;
    uint64_t root_exp = 1;  // p^{m-s}: b^{p^{m-s}} is the p^s-th root of b
    for (uint32_t i = 0; i < k.m() - s; ++i) root_exp *= k.p();
    for (const auto& [i, c] : R1.terms) M1.set(i - s, k.pow(c, root_exp));
    return M1;
}

bool scalar_multiples(const Field& k, const LinearizedPoly& a, const LinearizedPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    Fe a0 = a.coeff(0), b0 = b.coeff(0);
    if (a0.v == 0 || b0.v == 0) return a0.v == b0.v;
    Fe lambda = k.mul(a0, k.inv(b0));
    for (const auto& [i, c] : b.terms)
        if (!(a.coeff(i) == k.mul(lambda, c))) return false;
    return true;
}

enum class SplitCheck { ok, zero_boundary, equal_zero_sets };

SplitCheck try_split(const Field& k, const LinearizedPoly& R, uint32_t s, Fe c_s,
                     SplittingSpec& out) {
    uint32_t r = R.top();
    // R2 takes everything below s plus c_s at s; R1 takes the rest.
    LinearizedPoly R2;
    for (const auto& [i, c] : R.terms)
        if (i < s) R2.set(i, c);
    R2.set(s, c_s);
    LinearizedPoly R1 = lin_sub(k, R, R2);
    if (R1.coeff(s).v == 0) return SplitCheck::zero_boundary;
    LinearizedPoly M1 = deflate_by_ps(k, R1, s);
    if (scalar_multiples(k, M1, R2)) return SplitCheck::equal_zero_sets;
    Poly g = gcd(k, lin_to_poly(k, M1), lin_to_poly(k, R2));
    out.R = R;
    out.R1 = std::move(R1);
    out.R2 = std::move(R2);
    out.r = r;
    out.s = s;
    out.t = out.R2.top();
    out.delta = (uint64_t)g.degree();  // both sides separable
    return SplitCheck::ok;
}

}  // namespace

SplittingSpec make_splitting(const Field& k, const LinearizedPoly& R, uint32_t s, Fe c_s) {
    if (R.is_zero() || R.coeff(0).v == 0)
        raise("InvalidSplit", "R must be a separable linearized polynomial (a_0 != 0)");
    uint32_t r = R.top();
    if (r < 2) raise("InvalidSplit", "splitting requires r >= 2");
    if (s == 0 || s >= r) raise("InvalidSplit", "need 0 < s < r");
    SplittingSpec spec;
    switch (try_split(k, R, s, c_s, spec)) {
        case SplitCheck::ok:
            return spec;
        case SplitCheck::zero_boundary:
            raise("InvalidSplit", "boundary coefficient b_s vanishes");
        case SplitCheck::equal_zero_sets:
            raise("InvalidSplit", "R1 and R2 have the same zero set (L1 = L2)");
    }
    raise("InvalidSplit", "unreachable");
}

KummerCurve splitting_curve(const Field& k, const SplittingSpec& spec) {
    Poly num = neg(k, lin_to_poly(k, spec.R1));
    Poly den = lin_to_poly(k, spec.R2);
    return make_curve(k, k.q() - 1, make_ratfun(k, std::move(num), std::move(den)));
}

SplitPrediction splitting_prediction(const Field& k, const SplittingSpec& spec) {
    uint64_t p = k.p(), q = k.q(), m = k.m();
    auto ppow = [&](uint64_t e) {
        uint64_t v = 1;
        while (e--) v *= p;
        return v;
    };
    uint64_t d = spec.delta;
    int64_t twog = (int64_t)((ppow(spec.r - spec.s) + ppow(spec.t) - d - 1) * (q - 2)) -
                   (int64_t)(d * ppow(std::gcd(m, (uint64_t)spec.s))) -
                   (int64_t)ppow(std::gcd(m, (uint64_t)(spec.r - spec.t))) + 2 * (int64_t)d + 2;
    if (twog < 0 || twog % 2 != 0)
        raise("InternalInconsistency", "splitting genus formula yielded an invalid value");
    return {(uint64_t)(twog / 2), (ppow(spec.r) - d) * (q - 1)};
}

std::vector<SplittingSpec> enumerate_splittings(const Field& k, const LinearizedPoly& R,
                                                EnumStats* stats) {
    EnumStats local;
    EnumStats& st = stats ? *stats : local;
    std::vector<SplittingSpec> out;
    if (R.is_zero() || R.coeff(0).v == 0 || R.top() < 2) return out;
    uint32_t r = R.top();
    std::set<std::vector<std::pair<uint32_t, uint32_t>>> seen;  // serialized R2
    for (uint32_t s = 1; s < r; ++s) {
        for (uint64_t cv = 0; cv < k.q(); ++cv) {
            ++st.candidates;
            SplittingSpec spec;
            switch (try_split(k, R, s, Fe{(uint32_t)cv}, spec)) {
                case SplitCheck::zero_boundary:
                    ++st.zero_boundary;
                    continue;
                case SplitCheck::equal_zero_sets:
                    ++st.equal_zero_sets;
                    continue;
                case SplitCheck::ok:
                    break;
            }
            std::vector<std::pair<uint32_t, uint32_t>> key;
            for (const auto& [i, c] : spec.R2.terms) key.emplace_back(i, c.v);
            if (!seen.insert(key).second) {
                ++st.duplicates;
                continue;
            }
            ++st.emitted;
            out.push_back(std::move(spec));
        }
    }
    return out;
}

namespace {

FamilyResult odd_m_family(const Field& k, Fe a, bool power_class) {
    uint64_t p = k.p(), q = k.q(), m = k.m();
    if (m < 3 || m % 2 == 0)
        raise("HypothesisViolated", "family requires odd extension degree m >= 3");
    if (a.v == 0) raise("HypothesisViolated", "a must be nonzero");
    uint32_t s = (uint32_t)((m - 1) / 2);
    uint64_t d = 1;
    for (uint32_t i = 0; i < s; ++i) d *= p;
    --d;  // p^{(m-1)/2} - 1
    bool in_class = k.is_dth_power(a, d);
    if (in_class != power_class)
        raise("HypothesisViolated", power_class
                                        ? "a must be a (p^{(m-1)/2}-1)-th power"
                                        : "a must not be a (p^{(m-1)/2}-1)-th power");
    SplittingSpec spec = make_splitting(k, lin_full_space(k), s, a);
    uint64_t expected_delta = power_class ? p : 1;
    if (spec.delta != expected_delta)
        raise("InternalInconsistency", "unexpected delta for the odd-m splitting");
    auto ppow = [&](uint64_t e) {
        uint64_t v = 1;
        while (e--) v *= p;
        return v;
    };
    Prediction pred;
    if (power_class) {
        pred.genus = ((ppow((m + 1) / 2) + ppow((m - 1) / 2) - p - 1) * (q - 2) - p * p + p + 2) / 2;
        pred.points = (q - 1) * (q - p) + (p == 2 ? 3 : 0);
    } else {
        pred.genus = ((ppow((m + 1) / 2) + ppow((m - 1) / 2) - 2) * (q - 2) - 2 * p + 4) / 2;
        pred.points = (q - 1) * (q - 1) + (k.is_dth_power(k.neg(a), p - 1) ? 2 * (p - 1) : 0);
    }
    return {splitting_curve(k, spec), pred, power_class ? "prop2.1" : "prop2.3"};
}

}  // namespace

FamilyResult family_prop21(const Field& k, Fe a) { return odd_m_family(k, a, true); }

FamilyResult family_prop23(const Field& k, Fe a) { return odd_m_family(k, a, false); }

FamilyResult family_prop25(const Field& k, std::optional<Fe> a_opt) {
    uint64_t q = k.q(), m = k.m();
    if (m % 2 != 0) raise("HypothesisViolated", "family requires even extension degree");
    uint64_t sq = isqrt64(q);
    Fe a{0};
    if (a_opt) {
        a = *a_opt;
        if (a.v == 0 || k.is_dth_power(a, sq - 1))
            raise("HypothesisViolated", "a must not be a (sqrt(q)-1)-th power");
    } else {
        bool found = false;
        for (uint64_t v = 1; v < q; ++v) {
            if (!k.is_dth_power(Fe{(uint32_t)v}, sq - 1)) {
                a = Fe{(uint32_t)v};
                found = true;
                break;
            }
        }
        if (!found)
            raise("HypothesisViolated", "no admissible a exists (every element is a (sqrt(q)-1)-th power)");
    }
    SplittingSpec spec = make_splitting(k, lin_full_space(k), (uint32_t)(m / 2), a);
    if (spec.delta != 1)
        raise("InternalInconsistency", "unexpected delta for the even-m splitting");
    Prediction pred;
    pred.genus = (sq - 1) * (q - 2) - sq + 2;
    pred.points = (q - 1) * (q - 1);
    return {splitting_curve(k, spec), pred, "prop2.5"};
}

FamilyResult family_prop31(const Field& k, uint32_t s) {
    uint64_t p = k.p(), q = k.q(), m = k.m();
    if (m < 3) raise("HypothesisViolated", "family requires m >= 3");
    if (s == 0 || s >= m - 1) raise("HypothesisViolated", "need 0 < s < m-1");
    if (std::gcd(m, (uint64_t)s) != 1) raise("HypothesisViolated", "need gcd(m, s) = 1");
    SplittingSpec spec = make_splitting(k, lin_trace_form(k), s, Fe{0});
    if (spec.delta != 1)
        raise("InternalInconsistency", "unexpected delta for the trace-zero splitting");
    auto ppow = [&](uint64_t e) {
        uint64_t v = 1;
        while (e--) v *= p;
        return v;
    };
    Prediction pred;
    pred.genus = ((ppow(m - 1 - s) + ppow(s - 1) - 2) * (q - 2) - 2 * p + 4) / 2;
    uint64_t extras = (p * m % 2 == 0 ? 2 : 0) + ((uint64_t)s * (m - s) % p == 0 ? 1 : 0);
    pred.points = (ppow(m - 1) - 1) * (q - 1) + extras * (p - 1);
    return {splitting_curve(k, spec), pred, "prop3.1"};
}

FamilyResult family_prop35(const Field& k) {
    uint64_t p = k.p(), q = k.q(), m = k.m();
    if (m % 2 != 0) raise("HypothesisViolated", "family requires even extension degree");
    uint64_t sq = isqrt64(q);
    Fe a = k.one();
    if (p != 2) {
        bool found = false;
        for (uint64_t v = 1; v < q; ++v) {
            Fe cand{(uint32_t)v};
            if (k.pow(cand, sq) == k.neg(cand)) {
                a = cand;
                found = true;
                break;
            }
        }
        if (!found) raise("InternalInconsistency", "no a with a^sqrt(q) + a = 0 found");
    }
    LinearizedPoly R2;
    for (uint32_t i = 0; i < m / 2; ++i) R2.set(i, k.one());
    Poly f = scale(k, a, lin_to_poly(k, R2));
    KummerCurve curve = make_curve(k, sq + 1, make_ratfun(k, std::move(f), Poly::constant(k.one())));
    Prediction pred;
    pred.genus = (q - p * sq) / (2 * p);
    pred.points = q * sq / p + 1;
    return {std::move(curve), pred, "prop3.5"};
}

FamilyResult family_xfp(const Field& k, const Poly& f) {
    if (f.is_zero()) raise("ZeroPolynomial", "f must be nonzero");
    Poly num = mul(k, Poly::monomial(k.one(), 1), pow(k, f, k.p()));
    KummerCurve curve =
        make_curve(k, k.q() - 1, make_ratfun(k, std::move(num), Poly::constant(k.one())));
    return {std::move(curve), std::nullopt, "xfp"};
}

namespace {

// g with a(x) = g(x^t), or NotAQuotient when the support is wrong.
Poly compress_exponents(const Poly& a, uint32_t t) {
    std::vector<Fe> out(a.degree() / t + 1, Fe{0});
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs()[i].v == 0) continue;
        if (i % t != 0)
            raise("NotAQuotient", "f is not structurally a function of x^t");
        out[i / t] = a.coeffs()[i];
    }
    return Poly(std::move(out));
}

}  // namespace

FamilyResult family_quotient(const Field& k, const KummerCurve& base, uint64_t s, uint32_t t) {
    if (s < 2 || base.n % s != 0)
        raise("DegreeNotDividing", "s must be a divisor >= 2 of the base cover degree");
    if (t == 0 || (k.p() - 1) % t != 0)
        raise("HypothesisViolated", "t must divide p-1");
    Poly num = base.f.num;
    Poly den = base.f.den;
    if (t > 1) {
        num = compress_exponents(num, t);
        den = compress_exponents(den, t);
    }
    KummerCurve curve = make_curve(k, s, make_ratfun(k, std::move(num), std::move(den)));
    return {std::move(curve), std::nullopt, "quotient"};
}

}  // namespace forge
