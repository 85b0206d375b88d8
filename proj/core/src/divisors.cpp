#include "forge/divisors.hpp"

#include <algorithm>
#include <numeric>

namespace forge {

RatFun make_ratfun(const Field& k, Poly num, Poly den) {
    if (num.is_zero()) raise("ZeroNumerator", "the zero function is not a valid cover input");
    if (den.is_zero()) raise("ZeroDenominator", "denominator must be nonzero");
    Poly g = gcd(k, num, den);
    if (g.degree() > 0) {
        num = divrem(k, num, g).first;
        den = divrem(k, den, g).first;
    }
    Fe lc = den.lead();
    if (!(lc == k.one())) {
        Fe ilc = k.inv(lc);
        num = scale(k, ilc, num);
        den = scale(k, ilc, den);
    }
    return {std::move(num), std::move(den)};
}

bool is_constant(const RatFun& f) {
    return f.num.degree() <= 0 && f.den.degree() <= 0;
}

LocalData local_data(const Field& k, const RatFun& f, P1Point at) {
    if (at.infinite) {
        int64_t d = (int64_t)f.den.degree() - (int64_t)f.num.degree();
        Fe c = k.mul(f.num.lead(), k.inv(f.den.lead()));
        return {d, c};
    }
    auto [dn, rn] = deflate(k, f.num, at.x);
    auto [dd, rd] = deflate(k, f.den, at.x);
    Fe c = k.mul(evaluate(k, rn, at.x), k.inv(evaluate(k, rd, at.x)));
    return {(int64_t)dn - (int64_t)dd, c};
}

DivisorProfile divisor_profile(const Field& k, const RatFun& f) {
    DivisorProfile out;
    if (is_constant(f)) return out;

    std::vector<Place> finite;
    std::vector<Place> classes;

    auto scan = [&](const Poly& poly, int64_t sign) {
        if (poly.degree() <= 0) return;
        SqfDecomp dec = squarefree_decomposition(k, poly);
        for (const auto& band : dec.bands) {
            auto roots = rational_roots(k, band.factor);
            for (const auto& [x0, mult] : roots) {
                (void)mult;  // band factors are squarefree
                Place pl;
                pl.loc = Place::Loc::finite;
                pl.x = x0;
                pl.d = sign * (int64_t)band.multiplicity;
                pl.count = 1;
                pl.c = local_data(k, f, P1Point::finite(x0)).c;
                finite.push_back(pl);
            }
            uint64_t rest = (uint64_t)band.factor.degree() - roots.size();
            if (rest > 0) {
                Place pl;
                pl.loc = Place::Loc::closure_class;
                pl.d = sign * (int64_t)band.multiplicity;
                pl.count = rest;
                classes.push_back(pl);
            }
        }
    };
    scan(f.num, +1);
    scan(f.den, -1);

    std::sort(finite.begin(), finite.end(), [](const Place& a, const Place& b) { return a.x < b.x; });
    std::sort(classes.begin(), classes.end(), [](const Place& a, const Place& b) {
        if (a.d != b.d) return a.d > b.d;
        return a.count < b.count;
    });

    out.places = std::move(finite);
    out.places.insert(out.places.end(), classes.begin(), classes.end());

    int64_t dinf = (int64_t)f.den.degree() - (int64_t)f.num.degree();
    if (dinf != 0) {
        Place pl;
        pl.loc = Place::Loc::infinity;
        pl.d = dinf;
        pl.count = 1;
        pl.c = k.mul(f.num.lead(), k.inv(f.den.lead()));  // den monic, so this is lc(num)
        out.places.push_back(pl);
    }

    int64_t degsum = 0;
    for (const auto& pl : out.places) {
        out.ell += pl.count;
        degsum += pl.d * (int64_t)pl.count;
    }
    if (degsum != 0)
        raise("InternalInconsistency", "divisor profile does not have degree zero");
    return out;
}

uint64_t power_class_gcd(const DivisorProfile& profile, uint64_t n) {
    uint64_t g = n;
    for (const auto& pl : profile.places)
        g = std::gcd(g, (uint64_t)(pl.d < 0 ? -pl.d : pl.d));
    return g;
}

}  // namespace forge
