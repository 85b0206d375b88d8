#include "forge/gf.hpp"

#include <algorithm>
#include <numeric>

namespace forge {

namespace {

constexpr uint32_t kMaxPrime = 1u << 16;
constexpr uint64_t kMaxQ = 1u << 20;
constexpr uint32_t kMaxM = 20;

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over the prime field Z_p, used only for
// modulus validation and selection. Vectors are ascending coefficients.
using PfPoly = std::vector<uint32_t>;

void pf_trim(PfPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pf_deg(const PfPoly& a) { return (int)a.size() - 1; }

// a * b reduced modulo the monic polynomial mod.
PfPoly pf_mulmod(const PfPoly& a, const PfPoly& b, const PfPoly& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> conv(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            conv[i + j] += (uint64_t)a[i] * b[j];
    size_t md = mod.size() - 1;
    for (size_t k = conv.size(); k-- > md;) {
        uint64_t c = conv[k] % p;
        conv[k] = 0;
        if (c == 0) continue;
        // subtract c * x^{k-md} * mod
        for (size_t j = 0; j < md; ++j)
            conv[k - md + j] += c * (uint64_t)(p - mod[j] % p) % p;
    }
    PfPoly out(std::min(conv.size(), md));
    for (size_t i = 0; i < out.size(); ++i) out[i] = (uint32_t)(conv[i] % p);
    pf_trim(out);
    return out;
}

PfPoly pf_powmod(PfPoly base, uint64_t e, const PfPoly& mod, uint32_t p) {
    PfPoly result{1};
    while (e > 0) {
        if (e & 1) result = pf_mulmod(result, base, mod, p);
        base = pf_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

PfPoly pf_sub(const PfPoly& a, const PfPoly& b, uint32_t p) {
    PfPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint32_t ai = i < a.size() ? a[i] : 0;
        uint32_t bi = i < b.size() ? b[i] : 0;
        out[i] = (ai + p - bi) % p;
    }
    pf_trim(out);
    return out;
}

PfPoly pf_rem(PfPoly a, const PfPoly& b, uint32_t p) {
    // b monic-normalized by caller; normalize here for safety.
    PfPoly d = b;
    pf_trim(d);
    uint32_t lc = d.back();
    if (lc != 1) {
        // scale to monic via modular inverse of lc (p prime)
        uint32_t inv = 1, base = lc, e = p - 2;
        while (e) {
            if (e & 1) inv = (uint32_t)((uint64_t)inv * base % p);
            base = (uint32_t)((uint64_t)base * base % p);
            e >>= 1;
        }
        for (auto& c : d) c = (uint32_t)((uint64_t)c * inv % p);
    }
    pf_trim(a);
    while (pf_deg(a) >= pf_deg(d)) {
        uint32_t c = a.back();
        size_t shift = a.size() - d.size();
        if (c != 0)
            for (size_t j = 0; j < d.size(); ++j)
                a[shift + j] = (a[shift + j] + (uint64_t)c * (p - d[j] % p)) % p;
        pf_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PfPoly pf_gcd(PfPoly a, PfPoly b, uint32_t p) {
    pf_trim(a);
    pf_trim(b);
    while (!b.empty()) {
        PfPoly r = pf_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Irreducibility over GF(p). Degrees <= 3 reduce to a root check; larger
// degrees use x^{p^m} == x mod f plus gcd(x^{p^{m/t}} - x, f) = 1 for each
// prime t | m.
bool pf_irreducible(const PfPoly& f, uint32_t p) {
    int m = pf_deg(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    if (m <= 3) {
        for (uint32_t x = 0; x < p; ++x) {
            uint64_t acc = 0;
            for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
            if (acc == 0) return false;
        }
        return true;
    }
    if (f[0] == 0) return false;  // x divides f
    PfPoly x{0, 1};
    // frob[k] = x^{p^k} mod f
    std::vector<PfPoly> frob(m + 1);
    frob[0] = x;
    for (int k = 1; k <= m; ++k) frob[k] = pf_powmod(frob[k - 1], p, f, p);
    if (frob[m] != x) return false;
    for (int t = 2; t <= m; ++t) {
        if (m % t != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= t; ++d)
            if (t % d == 0) { prime = false; break; }
        if (!prime) continue;
        PfPoly g = pf_gcd(pf_sub(frob[m / t], x, p), f, p);
        if (pf_deg(g) != 0) return false;
    }
    return true;
}

// Smallest monic irreducible of degree m over GF(p), by the integer
// encoding of the ascending coefficient digits.
PfPoly smallest_irreducible(uint32_t p, uint32_t m, uint64_t q) {
    PfPoly f(m + 1, 0);
    f[m] = 1;
    for (uint64_t low = 0; low < q; ++low) {
        uint64_t v = low;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = (uint32_t)(v % p);
            v /= p;
        }
        if (pf_irreducible(f, p)) return f;
    }
    raise("ReducibleModulus", "no irreducible polynomial found (internal)");
}

void validate_p_m(uint32_t p, uint32_t m) {
    if (!is_prime_u32(p)) raise("NotPrime", "p = " + std::to_string(p) + " is not prime");
    if (p > kMaxPrime) raise("FieldTooLarge", "p exceeds 2^16");
    if (m < 1 || m > kMaxM) raise("DegreeMismatch", "extension degree m must be in [1, 20]");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) raise("FieldTooLarge", "q = p^m exceeds 2^20");
    }
}

}  // namespace

Field Field::make(uint32_t p, uint32_t m) {
    validate_p_m(p, m);
    Field k;
    k.p_ = p;
    k.m_ = m;
    k.q_ = 1;
    for (uint32_t i = 0; i < m; ++i) k.q_ *= p;
    k.mod_ = smallest_irreducible(p, m, k.q_);
    k.default_mod_ = true;
    k.init_tables();
    return k;
}

Field Field::make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    validate_p_m(p, m);
    if (modulus.size() != (size_t)m + 1)
        raise("DegreeMismatch", "modulus must have degree m = " + std::to_string(m));
    if (modulus.back() % p != 1)
        raise("DegreeMismatch", "modulus must be monic");
    PfPoly f(modulus);
    for (auto& c : f) c %= p;
    if (!pf_irreducible(f, p))
        raise("ReducibleModulus", "modulus is reducible over GF(" + std::to_string(p) + ")");
    Field k;
    k.p_ = p;
    k.m_ = m;
    k.q_ = 1;
    for (uint32_t i = 0; i < m; ++i) k.q_ *= p;
    k.mod_ = f;
    k.default_mod_ = (f == smallest_irreducible(p, m, k.q_));
    k.init_tables();
    return k;
}

void Field::init_tables() {
    ppow_.assign(m_ + 1, 1);
    for (uint32_t i = 1; i <= m_; ++i) ppow_[i] = ppow_[i - 1] * p_;
    // red_ row j holds the coordinates of X^{m+j} mod modulus.
    red_.assign(m_ > 0 ? (size_t)(m_ - 1) * m_ : 0, 0);
    std::vector<uint32_t> cur(m_, 0);
    // X^m = -(mod_[0] + mod_[1] X + ...)
    for (uint32_t i = 0; i < m_; ++i) cur[i] = (p_ - mod_[i] % p_) % p_;
    for (uint32_t j = 0; j + 1 < m_; ++j) {
        std::copy(cur.begin(), cur.end(), red_.begin() + (size_t)j * m_);
        // multiply cur by X and reduce
        uint32_t top = cur[m_ - 1];
        for (uint32_t i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (uint32_t i = 0; i < m_; ++i)
                cur[i] = (uint32_t)((cur[i] + (uint64_t)top * ((p_ - mod_[i] % p_) % p_)) % p_);
    }
}

void Field::decode(uint32_t v, uint32_t* out) const {
    for (uint32_t i = 0; i < m_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
}

uint32_t Field::encode(const uint32_t* digits) const {
    uint64_t v = 0;
    for (uint32_t i = m_; i-- > 0;) v = v * p_ + digits[i] % p_;
    return (uint32_t)v;
}

std::string Field::descriptor() const {
    std::string d = std::to_string(p_) + "^" + std::to_string(m_);
    if (!default_mod_) {
        d += "/";
        for (size_t i = 0; i < mod_.size(); ++i) {
            if (i) d += ",";
            d += std::to_string(mod_[i]);
        }
    }
    return d;
}

Fe Field::from_enc(uint64_t enc) const {
    if (enc >= q_) raise("DegreeMismatch", "element encoding " + std::to_string(enc) + " out of range [0, q)");
    return Fe{(uint32_t)enc};
}

Fe Field::from_residue(int64_t r) const {
    int64_t v = r % (int64_t)p_;
    if (v < 0) v += p_;
    return Fe{(uint32_t)v};
}

std::vector<uint32_t> Field::coords(Fe a) const {
    std::vector<uint32_t> out(m_);
    decode(a.v, out.data());
    return out;
}

Fe Field::add(Fe a, Fe b) const {
    uint32_t A[kMaxM], B[kMaxM], C[kMaxM];
    decode(a.v, A);
    decode(b.v, B);
    for (uint32_t i = 0; i < m_; ++i) C[i] = (A[i] + B[i]) % p_;
    return Fe{encode(C)};
}

Fe Field::sub(Fe a, Fe b) const {
    uint32_t A[kMaxM], B[kMaxM], C[kMaxM];
    decode(a.v, A);
    decode(b.v, B);
    for (uint32_t i = 0; i < m_; ++i) C[i] = (A[i] + p_ - B[i]) % p_;
    return Fe{encode(C)};
}

Fe Field::neg(Fe a) const {
    uint32_t A[kMaxM], C[kMaxM];
    decode(a.v, A);
    for (uint32_t i = 0; i < m_; ++i) C[i] = (p_ - A[i]) % p_;
    return Fe{encode(C)};
}

Fe Field::mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    uint32_t A[kMaxM], B[kMaxM];
    decode(a.v, A);
    decode(b.v, B);
    uint64_t conv[2 * kMaxM] = {};
    for (uint32_t i = 0; i < m_; ++i) {
        if (A[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) conv[i + j] += (uint64_t)A[i] * B[j];
    }
    for (uint32_t k = 2 * m_ - 2; k >= m_ && k < 2 * kMaxM; --k) {
        uint64_t c = conv[k] % p_;
        conv[k] = 0;
        if (c == 0) continue;
        const uint32_t* row = &red_[(size_t)(k - m_) * m_];
        for (uint32_t j = 0; j < m_; ++j) conv[j] += c * row[j];
        if (k == m_) break;
    }
    uint32_t C[kMaxM];
    for (uint32_t i = 0; i < m_; ++i) C[i] = (uint32_t)(conv[i] % p_);
    return Fe{encode(C)};
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) raise("DivisionByZero", "inverse of zero");
    return pow(a, q_ - 2);
}

Fe Field::pow(Fe a, uint64_t e) const {
    Fe result = one();
    Fe base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Fe Field::frobenius(Fe a, uint64_t k) const {
    uint64_t r = k % m_;
    Fe out = a;
    for (uint64_t i = 0; i < r; ++i) out = pow(out, p_);
    return out;
}

Fe Field::pth_root(Fe a) const {
    return frobenius(a, m_ - 1);
}

uint32_t Field::trace_to_prime(Fe a) const {
    Fe acc = a;
    Fe t = a;
    for (uint32_t i = 1; i < m_; ++i) {
        t = pow(t, p_);
        acc = add(acc, t);
    }
    // The trace lies in the prime subfield, whose encodings are [0, p).
    return acc.v;
}

bool Field::is_dth_power(Fe a, uint64_t d) const {
    if (a.v == 0) raise("ZeroInput", "power-class test requires a nonzero element");
    if (d == 0) raise("ZeroInput", "d must be positive");
    uint64_t g = std::gcd(d, q_ - 1);
    return pow(a, (q_ - 1) / g) == one();
}

std::vector<Fe> Field::enumerate() const {
    std::vector<Fe> out;
    out.reserve(q_);
    for (uint64_t v = 0; v < q_; ++v) out.push_back(Fe{(uint32_t)v});
    return out;
}

}  // namespace forge
