#include "forge/upoly.hpp"

#include <algorithm>

namespace forge {

Poly add(const Field& k, const Poly& a, const Poly& b) {
    std::vector<Fe> out(std::max(a.coeffs().size(), b.coeffs().size()), Fe{0});
    for (size_t i = 0; i < out.size(); ++i) out[i] = k.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly sub(const Field& k, const Poly& a, const Poly& b) {
    std::vector<Fe> out(std::max(a.coeffs().size(), b.coeffs().size()), Fe{0});
    for (size_t i = 0; i < out.size(); ++i) out[i] = k.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly neg(const Field& k, const Poly& a) {
    std::vector<Fe> out(a.coeffs());
    for (auto& c : out) c = k.neg(c);
    return Poly(std::move(out));
}

Poly mul(const Field& k, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Fe> out(a.coeffs().size() + b.coeffs().size() - 1, Fe{0});
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        Fe ai = a.coeffs()[i];
        if (ai.v == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = k.add(out[i + j], k.mul(ai, b.coeffs()[j]));
    }
    return Poly(std::move(out));
}

Poly scale(const Field& k, Fe c, const Poly& a) {
    std::vector<Fe> out(a.coeffs());
    for (auto& x : out) x = k.mul(c, x);
    return Poly(std::move(out));
}

Poly pow(const Field& k, const Poly& a, uint64_t e) {
    Poly result = Poly::constant(k.one());
    Poly base = a;
    while (e > 0) {
        if (e & 1) result = mul(k, result, base);
        base = mul(k, base, base);
        e >>= 1;
    }
    return result;
}

std::pair<Poly, Poly> divrem(const Field& k, const Poly& a, const Poly& b) {
    if (b.is_zero()) raise("DivisionByZero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    Fe ilc = k.inv(b.lead());
    std::vector<Fe> r(a.coeffs());
    std::vector<Fe> q(a.degree() - b.degree() + 1, Fe{0});
    for (int i = a.degree(); i >= b.degree(); --i) {
        Fe t = k.mul(r[i], ilc);
        if (t.v == 0) continue;
        q[i - b.degree()] = t;
        for (int j = 0; j <= b.degree(); ++j)
            r[i - b.degree() + j] = k.sub(r[i - b.degree() + j], k.mul(t, b.coeffs()[j]));
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly monic(const Field& k, const Poly& a) {
    if (a.is_zero() || a.lead() == k.one()) return a;
    return scale(k, k.inv(a.lead()), a);
}

Poly gcd(const Field& k, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) raise("BothZero", "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = divrem(k, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, a);
}

Poly derivative(const Field& k, const Poly& a) {
    if (a.degree() < 1) return Poly();
    std::vector<Fe> out(a.degree(), Fe{0});
    for (int i = 1; i <= a.degree(); ++i)
        out[i - 1] = k.mul(k.from_residue(i), a.coeffs()[i]);
    return Poly(std::move(out));
}

Fe evaluate(const Field& k, const Poly& a, Fe x0) {
    Fe acc{0};
    for (size_t i = a.coeffs().size(); i-- > 0;)
        acc = k.add(k.mul(acc, x0), a.coeffs()[i]);
    return acc;
}

Poly pth_root_poly(const Field& k, const Poly& a) {
    if (a.is_zero()) return a;
    uint32_t p = k.p();
    std::vector<Fe> out(a.degree() / p + 1, Fe{0});
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs()[i].v == 0) continue;
        if (i % p != 0)
            raise("InternalInconsistency", "p-th root of a polynomial not supported on p-multiples");
        out[i / p] = k.pth_root(a.coeffs()[i]);
    }
    return Poly(std::move(out));
}

namespace {

void sqf_rec(const Field& k, Poly f, uint64_t scale, std::vector<SqfBand>& acc) {
    if (f.degree() <= 0) return;
    Poly fp = derivative(k, f);
    if (fp.is_zero()) {
        sqf_rec(k, pth_root_poly(k, f), scale * k.p(), acc);
        return;
    }
    Poly c = gcd(k, f, fp);
    Poly w = divrem(k, f, c).first;
    uint64_t i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(k, w, c);
        Poly z = divrem(k, w, y).first;
        if (z.degree() > 0) acc.push_back({z, scale * i});
        ++i;
        w = std::move(y);
        c = divrem(k, c, w).first;
    }
    if (c.degree() > 0) sqf_rec(k, pth_root_poly(k, c), scale * k.p(), acc);
}

}  // namespace

SqfDecomp squarefree_decomposition(const Field& k, const Poly& a) {
    if (a.is_zero()) raise("ZeroPolynomial", "squarefree decomposition of zero");
    SqfDecomp out;
    out.unit = a.lead();
    sqf_rec(k, monic(k, a), 1, out.bands);
    std::sort(out.bands.begin(), out.bands.end(), [](const SqfBand& x, const SqfBand& y) {
        return x.multiplicity < y.multiplicity;
    });
    // Bands with equal multiplicity are coprime; fold them together so the
    // multiplicities are strictly increasing.
    std::vector<SqfBand> merged;
    for (auto& b : out.bands) {
        if (!merged.empty() && merged.back().multiplicity == b.multiplicity)
            merged.back().factor = mul(k, merged.back().factor, b.factor);
        else
            merged.push_back(std::move(b));
    }
    out.bands = std::move(merged);
    return out;
}

std::vector<std::pair<Fe, uint64_t>> rational_roots(const Field& k, const Poly& a) {
    if (a.is_zero()) raise("ZeroPolynomial", "rational roots of zero");
    std::vector<std::pair<Fe, uint64_t>> out;
    if (a.degree() == 0) return out;
    for (uint64_t v = 0; v < k.q(); ++v) {
        Fe x{(uint32_t)v};
        if (evaluate(k, a, x).v != 0) continue;
        out.emplace_back(x, deflate(k, a, x).first);
    }
    return out;
}

std::pair<uint64_t, Poly> deflate(const Field& k, const Poly& a, Fe x0) {
    if (a.is_zero()) raise("ZeroPolynomial", "deflate of zero");
    Poly cur = a;
    uint64_t d = 0;
    while (cur.degree() >= 1) {
        // synthetic division by (x - x0)
        std::vector<Fe> q(cur.degree(), Fe{0});
        Fe carry{0};
        for (int i = cur.degree(); i >= 1; --i) {
            carry = k.add(cur.coeffs()[i], k.mul(carry, x0));
            q[i - 1] = carry;
        }
        Fe rem = k.add(cur.coeffs()[0], k.mul(carry, x0));
        if (rem.v != 0) break;
        cur = Poly(std::move(q));
        ++d;
    }
    return {d, cur};
}

}  // namespace forge
