#include "apparent_loci/factor.hpp"

#include "apparent_loci/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace apparent_loci {

std::vector<PolyFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<PolyFactor> out;
    Poly f = p.monic();
    if (f.degree() < 1) return out;
    Poly df = f.derivative();
    Poly a0 = gcd(f, df);
    Poly b = exact_div(f, a0);
    Poly c = exact_div(df, a0);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly a = gcd(b, d);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
        if (a.degree() > 0) out.push_back({a, i});
    }
    return out;
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// ---- arithmetic in F_p[x], p < 2^31 --------------------------------------

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 reduce(const Integer& z) const {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return r.get_ui();
    }

    static void trim(FpPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
        if (a.size() < b.size()) return {{}, a};
        FpPoly rem = a;
        std::size_t db = b.size() - 1;
        FpPoly quo(a.size() - db, 0);
        u64 inv_lead = inv(b.back());
        for (std::size_t k = quo.size(); k-- > 0;) {
            u64 q = mul(rem[k + db], inv_lead);
            quo[k] = q;
            if (!q) continue;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(q, b[j]));
        }
        rem.resize(db);
        trim(rem);
        trim(quo);
        return {quo, rem};
    }
    FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
    FpPoly monic(FpPoly a) const {
        if (a.empty()) return a;
        u64 il = inv(a.back());
        for (auto& v : a) v = mul(v, il);
        return a;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s*a + t*b = 1 (a, b coprime)
    std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
        FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        u64 il = inv(r0.at(0));
        for (auto& v : s0) v = mul(v, il);
        for (auto& v : t0) v = mul(v, il);
        return {s0, t0};
    }
    FpPoly derivative(const FpPoly& a) const {
        if (a.size() <= 1) return {};
        FpPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
    FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
        FpPoly result{1};
        base = rem(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = rem(mul(result, result), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
        }
        return result;
    }
};

// ---- integer polynomials -------------------------------------------------

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

ZPoly zmod(ZPoly a, const Integer& m) {
    for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

ZPoly zsymmetric(ZPoly a, const Integer& m) {
    Integer half = m / 2;
    for (auto& v : a) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half) v -= m;
    }
    ztrim(a);
    return a;
}

ZPoly zprimitive(ZPoly a) {
    Integer g = 0;
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (a.back() < 0) g = -g;
    for (auto& v : a) v /= g;
    return a;
}

FpPoly to_fp(const ZPoly& a, const Fp& F) {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.reduce(a[i]);
    Fp::trim(r);
    return r;
}

ZPoly from_fp(const FpPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

bool is_prime_small(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- modular factorization -----------------------------------------------

std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, const Fp& F) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x{0, 1};
    FpPoly h = x;
    Integer p(static_cast<unsigned long>(F.p));
    for (int i = 1; static_cast<int>(f.size()) - 1 >= 2 * i; ++i) {
        h = F.powmod(h, p, f);
        FpPoly g = F.gcd(F.sub(h, x), f);
        if (g.size() > 1) {
            out.emplace_back(g, i);
            f = F.divmod(f, g).first;
            h = F.rem(h, f);
        }
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
    return out;
}

void equal_degree(const FpPoly& g, int d, const Fp& F, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(F.monic(g));
        return;
    }
    Integer e = 1;
    for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(F.p);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> dist(0, F.p - 1);
    for (;;) {
        FpPoly a(static_cast<std::size_t>(n));
        for (auto& v : a) v = dist(rng);
        Fp::trim(a);
        if (a.size() < 2) continue;
        FpPoly b = F.sub(F.powmod(a, e, g), FpPoly{1});
        FpPoly u = F.gcd(b, g);
        if (u.size() > 1 && u.size() < g.size()) {
            equal_degree(u, d, F, rng, out);
            equal_degree(F.divmod(g, u).first, d, F, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> factor_mod_p(const FpPoly& f_monic, const Fp& F) {
    std::mt19937_64 rng(0x5eed5eedULL ^ F.p);
    std::vector<FpPoly> out;
    for (auto& [g, d] : distinct_degree(f_monic, F)) equal_degree(g, d, F, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Hensel lifting --------------------------------------------------------

// F == g*h mod p, g monic; lift to modulus p^steps.
std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& F, ZPoly g, ZPoly h, const Fp& Fq, int steps) {
    auto [s, t] = Fq.bezout(to_fp(g, Fq), to_fp(h, Fq));
    Integer mod = static_cast<unsigned long>(Fq.p);
    for (int k = 1; k < steps; ++k) {
        ZPoly gh = zmul(g, h);
        ZPoly e(std::max(F.size(), gh.size()), Integer(0));
        for (std::size_t i = 0; i < e.size(); ++i) {
            Integer lhs = i < F.size() ? F[i] : Integer(0);
            Integer rhs = i < gh.size() ? gh[i] : Integer(0);
            e[i] = (lhs - rhs);
            mpz_divexact(e[i].get_mpz_t(), e[i].get_mpz_t(), mod.get_mpz_t());
        }
        ztrim(e);
        FpPoly ep = to_fp(e, Fq);
        FpPoly gp = to_fp(g, Fq);
        FpPoly hp = to_fp(h, Fq);
        auto [q, r] = Fq.divmod(Fq.mul(ep, t), gp);
        FpPoly sigma = Fq.add(Fq.mul(ep, s), Fq.mul(q, hp));
        ZPoly rz = from_fp(r), sz = from_fp(sigma);
        if (g.size() < rz.size()) g.resize(rz.size(), Integer(0));
        for (std::size_t i = 0; i < rz.size(); ++i) g[i] += mod * rz[i];
        if (h.size() < sz.size()) h.resize(sz.size(), Integer(0));
        for (std::size_t i = 0; i < sz.size(); ++i) h[i] += mod * sz[i];
        mod *= static_cast<unsigned long>(Fq.p);
        g = zmod(g, mod);
        h = zmod(h, mod);
    }
    return {g, h};
}

std::vector<ZPoly> lift_all(const ZPoly& F, const std::vector<FpPoly>& factors, const Fp& Fq, int steps,
                            const Integer& modulus) {
    if (factors.size() == 1) {
        Integer inv;
        Integer lc = F.back();
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
        ZPoly g = F;
        for (auto& v : g) v *= inv;
        return {zmod(g, modulus)};
    }
    FpPoly rest{Fq.reduce(F.back())};
    for (std::size_t i = 1; i < factors.size(); ++i) rest = Fq.mul(rest, factors[i]);
    auto [g, h] = lift_pair(F, from_fp(factors[0]), from_fp(rest), Fq, steps);
    std::vector<FpPoly> tail(factors.begin() + 1, factors.end());
    std::vector<ZPoly> out{g};
    for (auto& z : lift_all(h, tail, Fq, steps, modulus)) out.push_back(std::move(z));
    return out;
}

// ---- Zassenhaus ------------------------------------------------------------

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// F primitive, squarefree, deg >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& F) {
    const int n = static_cast<int>(F.size()) - 1;
    if (n <= 1) return {F};

    // choose a prime with F mod p squarefree, preferring few modular factors
    std::vector<FpPoly> best;
    u64 best_p = 0;
    int good = 0;
    for (u64 cand = 3; good < 5 && cand < 100000; cand += 2) {
        if (!is_prime_small(cand)) continue;
        Fp Fq{cand};
        if (Fq.reduce(F.back()) == 0) continue;
        FpPoly fp = Fq.monic(to_fp(F, Fq));
        if (Fq.gcd(fp, Fq.derivative(fp)).size() != 1) continue;
        ++good;
        auto facs = factor_mod_p(fp, Fq);
        if (best_p == 0 || facs.size() < best.size()) {
            best = std::move(facs);
            best_p = cand;
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw DomainError("factor: no suitable prime found");
    if (best.size() == 1) return {F};
    Fp Fq{best_p};

    // coefficient bound: |lc| * 2^n * ||F||_2
    Integer norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned long>(n);
    bound *= abs(F.back());
    bound *= 2;
    Integer modulus = static_cast<unsigned long>(best_p);
    int steps = 1;
    while (modulus <= bound) {
        modulus *= static_cast<unsigned long>(best_p);
        ++steps;
    }
    std::vector<ZPoly> lifted = lift_all(F, best, Fq, steps, modulus);

    std::vector<ZPoly> result;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    ZPoly cur = F;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            Integer lc = cur.back();
            ZPoly G{lc};
            ZPoly H{lc};
            std::vector<bool> in(remaining.size(), false);
            for (auto i : idx) in[i] = true;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                if (in[i])
                    G = zmod(zmul(G, lifted[remaining[i]]), modulus);
                else
                    H = zmod(zmul(H, lifted[remaining[i]]), modulus);
            }
            G = zsymmetric(G, modulus);
            H = zsymmetric(H, modulus);
            ZPoly target = cur;
            for (auto& v : target) v *= lc;
            if (zmul(G, H) == target) {
                result.push_back(zprimitive(G));
                cur = zprimitive(H);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (!in[i]) keep.push_back(remaining[i]);
                remaining = std::move(keep);
                found = true;
                break;
            }
        } while (next_combination(idx, remaining.size()));
        if (!found) ++s;
    }
    result.push_back(cur);
    return result;
}

Poly to_monic_poly(const ZPoly& z) {
    std::vector<Rational> c(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
    return Poly(std::move(c)).monic();
}

}  // namespace

Factorization factor(const Poly& p) {
    if (p.is_zero()) throw DomainError("factor: zero polynomial");
    Factorization out{p.lead(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        if (part.degree() == 1) {
            out.factors.push_back({part, mult});
            continue;
        }
        auto [scale, ints] = part.primitive_part();
        for (const auto& z : zassenhaus(ints)) out.factors.push_back({to_monic_poly(z), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.base < b.base; });
    return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> roots;
    for (const auto& f : factor(p).factors)
        if (f.base.degree() == 1) roots.push_back(-f.base.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace apparent_loci
