#include "apparent_loci/riemann_roch.hpp"

#include "apparent_loci/errors.hpp"
#include "apparent_loci/linalg.hpp"
#include "apparent_loci/valuation.hpp"

#include <algorithm>
#include <optional>

namespace apparent_loci {

namespace {

struct Fiber {
    bool ramified = false;
    long n = 0;  // ramified multiplicity
    std::optional<Poly> branch;
    long n_plus = 0;   // on y = branch
    long n_minus = 0;  // on y = -branch
};

std::map<Poly, Fiber> collect_fibers(const Curve& curve, const Divisor& D, long& n_inf) {
    std::map<Poly, Fiber> fibers;
    n_inf = 0;
    for (const auto& [p, k] : D.terms()) {
        if (p.is_infinity()) {
            n_inf = k;
            continue;
        }
        Poly m = p.x_poly();
        Fiber& fb = fibers[m];
        if (p.is_ramified() || (curve.f() % m).is_zero()) {
            fb.ramified = true;
            fb.n += k;
            continue;
        }
        std::optional<Poly> r;
        if (p.is_affine())
            r = Poly(p.affine().y);
        else
            r = p.closed().branch;
        if (!r) {
            fb.n_plus += k;
            fb.n_minus += k;
            continue;
        }
        if (!fb.branch) fb.branch = *r;
        if (*r == *fb.branch)
            fb.n_plus += k;
        else
            fb.n_minus += k;
    }
    return fibers;
}

long ceil_half(long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

// Appends rows forcing sum_j z_j * polys[j] = 0 mod modulus.
void add_congruence(QMatrix& rows, const std::vector<Poly>& polys, const Poly& modulus) {
    if (modulus.degree() <= 0) return;
    std::vector<Poly> rem;
    rem.reserve(polys.size());
    for (const auto& p : polys) rem.push_back(p.is_zero() ? Poly() : p % modulus);
    for (int i = 0; i < modulus.degree(); ++i) {
        QVector row(polys.size());
        bool any = false;
        for (std::size_t j = 0; j < polys.size(); ++j) {
            row[j] = rem[j].coeff(i);
            if (sgn(row[j]) != 0) any = true;
        }
        if (any) rows.append_row(row);
    }
}

}  // namespace

std::vector<FuncElem> rr_basis(const CurvePtr& curve, const Divisor& D) {
    if (D.degree() < 0) return {};
    long n_inf = 0;
    auto fibers = collect_fibers(*curve, D, n_inf);

    Poly d(1);
    std::map<Poly, long> c;
    for (const auto& [m, fb] : fibers) {
        long cm = fb.ramified ? std::max(0L, ceil_half(fb.n)) : std::max({0L, fb.n_plus, fb.n_minus});
        c[m] = cm;
        if (cm > 0) d *= m.pow(static_cast<unsigned>(cm));
    }
    int g = curve->genus();
    long N = n_inf + 2L * d.degree();
    long du = N >= 0 ? N / 2 : -1;
    long dv = N - 2 * g - 1 >= 0 ? (N - 2 * g - 1) / 2 : -1;
    if (du < 0 && dv < 0) return {};

    std::size_t nu = static_cast<std::size_t>(du + 1), nv = static_cast<std::size_t>(dv + 1);
    std::size_t n = nu + nv;
    auto unknown_polys = [&](const Poly& u_factor, const Poly& v_factor) {
        std::vector<Poly> out;
        out.reserve(n);
        for (std::size_t i = 0; i < nu; ++i) out.push_back(Poly::monomial(1, static_cast<int>(i)) * u_factor);
        for (std::size_t i = 0; i < nv; ++i) out.push_back(Poly::monomial(1, static_cast<int>(i)) * v_factor);
        return out;
    };

    QMatrix rows(0, n);
    for (const auto& [m, fb] : fibers) {
        long cm = c[m];
        if (fb.ramified) {
            long k = 2 * cm - fb.n;
            long ku = std::max(0L, ceil_half(k)), kv = std::max(0L, ceil_half(k - 1));
            if (ku > 0) add_congruence(rows, unknown_polys(Poly(1), Poly()), m.pow(static_cast<unsigned>(ku)));
            if (kv > 0) add_congruence(rows, unknown_polys(Poly(), Poly(1)), m.pow(static_cast<unsigned>(kv)));
            continue;
        }
        long kp = cm - fb.n_plus, km = cm - fb.n_minus;
        if (!fb.branch) {
            if (kp > 0) {
                Poly mod = m.pow(static_cast<unsigned>(kp));
                add_congruence(rows, unknown_polys(Poly(1), Poly()), mod);
                add_congruence(rows, unknown_polys(Poly(), Poly(1)), mod);
            }
            continue;
        }
        long kmax = std::max(kp, km);
        if (kmax <= 0) continue;
        Poly Y = branch_lift(*curve, m, *fb.branch, static_cast<int>(kmax));
        if (kp > 0) add_congruence(rows, unknown_polys(Poly(1), Y), m.pow(static_cast<unsigned>(kp)));
        if (km > 0) add_congruence(rows, unknown_polys(Poly(1), -Y), m.pow(static_cast<unsigned>(km)));
    }

    std::vector<QVector> kernel;
    if (rows.rows() == 0) {
        for (std::size_t j = 0; j < n; ++j) {
            QVector e(n);
            e[j] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = nullspace(rows);
    }
    std::vector<FuncElem> basis;
    RatFunc dinv(Poly(1), d);
    for (const auto& vec : kernel) {
        Poly u(std::vector<Rational>(vec.begin(), vec.begin() + static_cast<long>(nu)));
        Poly v(std::vector<Rational>(vec.begin() + static_cast<long>(nu), vec.end()));
        basis.emplace_back(curve, RatFunc(u) * dinv, RatFunc(v) * dinv);
    }
    return basis;
}

namespace {

bool advance_digits(std::vector<std::size_t>& digit, std::size_t base) {
    for (std::size_t pos = digit.size(); pos > 0; --pos) {
        if (++digit[pos - 1] < base) return true;
        digit[pos - 1] = 0;
    }
    return false;
}

bool advance_subset(std::vector<std::size_t>& support, std::size_t n) {
    std::size_t w = support.size();
    std::size_t i = w;
    while (i > 0 && support[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) return false;
    ++support[i - 1];
    for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
    return true;
}

}  // namespace

std::vector<std::vector<long>> candidate_combinations(std::size_t n, std::size_t cap) {
    static const long values[] = {1, -1, 2, -2};
    std::vector<std::vector<long>> out;
    for (std::size_t w = 1; w <= n && out.size() < cap; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        do {
            std::vector<std::size_t> digit(w, 0);
            do {
                std::vector<long> v(n, 0);
                for (std::size_t i = 0; i < w; ++i) v[support[i]] = values[digit[i]];
                out.push_back(std::move(v));
            } while (out.size() < cap && advance_digits(digit, 4));
        } while (out.size() < cap && advance_subset(support, n));
    }
    return out;
}

FuncElem combine(const CurvePtr& curve, const std::vector<FuncElem>& basis, const std::vector<long>& coeffs) {
    FuncElem h(curve);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0) h += Rational(coeffs[i]) * basis[i];
    return h;
}

namespace {

void require_basepoint(const Place& P) {
    if (P.is_closed()) throw DomainError("basepoint must be a rational place, got " + P.to_string());
}

void require_jet_sites(const std::vector<Place>& points, const Place& P) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].is_jet_site())
            throw DomainError("point " + points[i].to_string() + " is not a rational unramified affine place");
        if (points[i] == P) throw DomainError("basepoint " + P.to_string() + " is among the listed points");
        for (std::size_t j = 0; j < i; ++j)
            if (points[j] == points[i]) throw DomainError("repeated point " + points[i].to_string());
    }
}

long non_jet_points(const Divisor& D) {
    long n = 0;
    for (const auto& [p, k] : D.terms())
        if (k > 0 && !p.is_jet_site()) n += p.degree();
    return n;
}

// Scans candidates in order, keeping the first with the smallest score;
// stops early when the score reaches zero.
template <class Score>
std::pair<FuncElem, long> select(const CurvePtr& curve, const std::vector<FuncElem>& basis, Score score) {
    auto combos = candidate_combinations(basis.size(), kSelectionCap);
    std::optional<FuncElem> best;
    long best_score = 0;
    for (const auto& c : combos) {
        FuncElem h = combine(curve, basis, c);
        if (h.is_zero()) continue;
        long s = score(h);
        if (!best || s < best_score) {
            best = h;
            best_score = s;
            if (s == 0) break;
        }
    }
    if (!best) throw SearchExhausted("no nonzero candidate in a Riemann-Roch space");
    return {*best, best_score};
}

}  // namespace

Prop2Section prop2_section(const CurvePtr& curve, const Divisor& D, const Place& P) {
    require_basepoint(P);
    int k = static_cast<int>(curve->genus() - D.degree());
    Divisor target = D + Divisor(P, k);
    auto basis = rr_basis(curve, target);
    if (basis.empty()) throw SearchExhausted("L(" + target.to_string() + ") is zero");
    auto [h, s] = select(curve, basis, [&](const FuncElem& u) {
        return non_jet_points((divisor_of(u) + target).without(P));
    });
    (void)s;
    return Prop2Section{h, k, (divisor_of(h) + target).without(P)};
}

VanishingFunction vanishing_function(const CurvePtr& curve, const std::vector<Place>& points, const Place& P) {
    require_basepoint(P);
    require_jet_sites(points, P);
    if (points.empty()) return {FuncElem::constant(curve, 1), {}};
    Divisor D;
    for (const auto& z : points) D.add(z, -1);
    int k = static_cast<int>(curve->genus() - D.degree());
    Divisor target = D + Divisor(P, k);
    auto basis = rr_basis(curve, target);
    if (basis.empty()) throw SearchExhausted("L(" + target.to_string() + ") is zero");
    auto exceptional_of = [&](const FuncElem& u) {
        std::vector<Place> ex;
        for (const auto& z : points)
            if (ord(u, z) >= 2) ex.push_back(z);
        return ex;
    };
    auto [f, s] = select(curve, basis, [&](const FuncElem& u) { return static_cast<long>(exceptional_of(u).size()); });
    (void)s;
    return {f, exceptional_of(f)};
}

FuncElem selector_function(const CurvePtr& curve, const std::vector<Place>& points, std::size_t i, const Place& P,
                           int d) {
    require_basepoint(P);
    require_jet_sites(points, P);
    if (i >= points.size()) throw DomainError("selector index out of range");
    if (d < 1) throw DomainError("selector order must be positive");
    if (points.size() == 1) return FuncElem::constant(curve, 1);
    Divisor D;
    for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) D.add(points[j], -d);
    int g = curve->genus();
    for (int total = g; total <= 2 * g; ++total) {
        long k = total - D.degree();
        auto basis = rr_basis(curve, D + Divisor(P, k));
        if (basis.empty()) continue;
        for (const auto& c : candidate_combinations(basis.size(), kSelectionCap)) {
            FuncElem h = combine(curve, basis, c);
            if (h.is_zero()) continue;
            if (ord(h, points[i]) == 0) return h;
        }
    }
    throw SearchExhausted("no selector function nonvanishing at " + points[i].to_string());
}

ExactOrderFunction exact_order_function(const CurvePtr& curve, const std::map<Place, int>& weights, const Place& P) {
    require_basepoint(P);
    std::vector<Place> keys;
    for (const auto& [z, d] : weights) {
        if (d < 1) throw DomainError("exact order weights must be positive");
        keys.push_back(z);
    }
    require_jet_sites(keys, P);
    if (weights.empty()) return {FuncElem::constant(curve, 1), {}, Divisor()};
    Divisor D;
    for (const auto& [z, d] : weights) D.add(z, d);
    int k = static_cast<int>(curve->genus() - D.degree());
    Divisor target = D + Divisor(P, k);
    auto basis = rr_basis(curve, target);
    if (basis.empty()) throw SearchExhausted("L(" + target.to_string() + ") is zero");
    auto short_keys = [&](const FuncElem& u) {
        std::vector<Place> out;
        for (const auto& [z, d] : weights)
            if (ord(u, z) != -d) out.push_back(z);
        return out;
    };
    auto [h, s] = select(curve, basis, [&](const FuncElem& u) { return static_cast<long>(short_keys(u).size()); });
    (void)s;
    Divisor E = divisor_of(h) + target;
    Divisor qpp = E.restricted([&](const Place& p) { return p != P && !weights.count(p); });
    return {h, short_keys(h), qpp};
}

}  // namespace apparent_loci
