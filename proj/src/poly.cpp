#include "apparent_loci/poly.hpp"

#include "apparent_loci/errors.hpp"

#include <algorithm>

namespace apparent_loci {

Poly::Poly(const Rational& c) {
    if (!apparent_loci::is_zero(c)) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (apparent_loci::is_zero(c)) return {};
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& root) { return Poly(std::vector<Rational>{-root, 1}); }

void Poly::trim() {
    while (!c_.empty() && apparent_loci::is_zero(c_.back())) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty()) return {};
    Poly r = *this;
    Rational inv = 1 / lead();
    for (auto& v : r.c_) v *= inv;
    return r;
}

Poly Poly::taylor_shift(const Rational& x0) const {
    // Horner in t: p(x0 + t)
    Poly t_plus = Poly(std::vector<Rational>{x0, 1});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t_plus + Poly(*it);
    return acc;
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

int Poly::valuation(const Poly& m) const {
    if (is_zero()) throw DomainError("valuation of the zero polynomial");
    if (m.degree() < 1) throw DomainError("valuation with respect to a constant");
    int v = 0;
    Poly cur = *this;
    for (;;) {
        auto [q, r] = divmod(cur, m);
        if (!r.is_zero()) return v;
        cur = std::move(q);
        ++v;
    }
}

Poly Poly::shift_down(int k) const {
    if (k <= 0) return *this;
    for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
        if (!apparent_loci::is_zero(c_[static_cast<std::size_t>(i)]))
            throw DomainError("shift_down: not divisible by t^k");
    if (k >= static_cast<int>(c_.size())) return {};
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

std::pair<Rational, std::vector<Integer>> Poly::primitive_part() const {
    if (c_.empty()) return {Rational(0), {}};
    Integer den_lcm = 1;
    for (const auto& v : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> ints(c_.size());
    Integer content = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        ints[i] = c_[i].get_num() * (den_lcm / c_[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (ints.back() < 0) content = -content;
    for (auto& v : ints) v /= content;
    Rational scale(content, den_lcm);
    scale.canonicalize();
    return {scale, std::move(ints)};
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
    if (apparent_loci::is_zero(s)) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

int compare(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Poly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (apparent_loci::is_zero(c)) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (i == 0) {
            out += apparent_loci::to_string(mag);
            continue;
        }
        if (!unit) out += apparent_loci::to_string(mag) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    std::size_t db = bc.size() - 1;
    std::vector<Rational> quo(rem.size() - db);
    Rational inv = 1 / b.lead();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv;
        quo[k] = q;
        if (is_zero(q)) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("exact_div: remainder is nonzero");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
    Poly r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rational inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    ExtGcd e = ext_gcd(a % m, m);
    if (e.g.degree() != 0) throw DomainError("inverse_mod: not invertible");
    return e.s % m;
}

}  // namespace apparent_loci
