#include "apparent_loci/place.hpp"

#include "apparent_loci/errors.hpp"
#include "apparent_loci/factor.hpp"

#include <algorithm>
#include <set>

namespace apparent_loci {

Place Place::affine(const Curve& curve, const Rational& x, const Rational& y) {
    if (y * y != curve.f().eval(x))
        throw DomainError("point (" + apparent_loci::to_string(x) + "," + apparent_loci::to_string(y) + ") is not on " + curve.to_string());
    return raw_affine(x, y);
}

Place Place::closed(const Curve& curve, const Poly& minpoly, std::optional<Poly> branch) {
    if (minpoly.degree() < 1) throw DomainError("closed place needs a nonconstant minimal polynomial");
    Poly m = minpoly.monic();
    auto fac = factor(m);
    if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1)
        throw DomainError("closed place: " + m.to_string() + " is not irreducible over Q");
    bool ramified = (curve.f() % m).is_zero();
    if (m.degree() == 1) {
        Rational x0 = -m.coeff(0);
        if (branch || ramified || exact_sqrt(curve.f().eval(x0)))
            throw DomainError("closed place over x = " + apparent_loci::to_string(x0) + " consists of rational points; use (x,y)");
        return raw_closed(m, std::nullopt);
    }
    if (ramified) {
        if (branch && !(*branch % m).is_zero())
            throw DomainError("closed place over a factor of f must have y = 0");
        return raw_closed(m, Poly());
    }
    if (branch) {
        Poly r = *branch % m;
        if (!((r * r - curve.f()) % m).is_zero())
            throw DomainError("closed place: y = " + r.to_string() + " does not satisfy y^2 = f mod " + m.to_string());
        return raw_closed(m, r);
    }
    return raw_closed(m, std::nullopt);
}

bool Place::is_ramified() const {
    if (auto* a = std::get_if<AffinePlace>(&v_)) return sgn(a->y) == 0;
    if (auto* c = std::get_if<ClosedPlace>(&v_)) return c->branch && c->branch->is_zero();
    return false;
}

int Place::degree() const {
    if (auto* c = std::get_if<ClosedPlace>(&v_)) return c->branch ? c->minpoly.degree() : 2 * c->minpoly.degree();
    return 1;
}

Poly Place::x_poly() const {
    if (auto* a = std::get_if<AffinePlace>(&v_)) return Poly::linear(a->x);
    if (auto* c = std::get_if<ClosedPlace>(&v_)) return c->minpoly;
    throw DomainError("the place at infinity has no x-polynomial");
}

Place Place::conjugate() const {
    if (auto* a = std::get_if<AffinePlace>(&v_)) return raw_affine(a->x, -a->y);
    if (auto* c = std::get_if<ClosedPlace>(&v_)) {
        if (!c->branch) return *this;
        return raw_closed(c->minpoly, -*c->branch);
    }
    return *this;
}

int compare(const Place& a, const Place& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index() ? -1 : 1;
    if (a.is_affine()) {
        const auto& p = a.affine();
        const auto& q = b.affine();
        if (int c = cmp(p.x, q.x)) return c < 0 ? -1 : 1;
        if (int c = cmp(p.y, q.y)) return c < 0 ? -1 : 1;
        return 0;
    }
    if (a.is_closed()) {
        const auto& p = a.closed();
        const auto& q = b.closed();
        if (int c = compare(p.minpoly, q.minpoly)) return c;
        if (p.branch.has_value() != q.branch.has_value()) return p.branch.has_value() ? 1 : -1;
        if (p.branch) return compare(*p.branch, *q.branch);
        return 0;
    }
    return 0;
}

std::string Place::to_string() const {
    if (is_infinity()) return "inf";
    if (is_affine()) return "(" + apparent_loci::to_string(affine().x) + "," + apparent_loci::to_string(affine().y) + ")";
    const auto& c = closed();
    std::string s = "closed[" + c.minpoly.to_string();
    if (c.branch && !c.branch->is_zero()) s += "; y=" + c.branch->to_string();
    return s + "]";
}

// ---------------------------------------------------------------------------

Divisor::Divisor(const Place& p, long mult) { add(p, mult); }

long Divisor::operator[](const Place& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, k] : terms_) d += k * p.degree();
    return d;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> out;
    for (const auto& [p, k] : terms_) out.push_back(p);
    return out;
}

namespace {

bool is_split_candidate(const Place& p) {
    return p.is_closed() && p.closed().minpoly.degree() >= 2 && !p.is_ramified();
}

void put(std::map<Place, long>& t, const Place& p, long v) {
    if (v == 0)
        t.erase(p);
    else
        t[p] = v;
}

}  // namespace

void Divisor::canonicalize_fiber(const Poly& m) {
    Place fiber = Place::raw_closed(m, std::nullopt);
    std::optional<Poly> r;
    for (const auto& [p, k] : terms_) {
        if (p.is_closed() && p.closed().minpoly == m && p.closed().branch && !p.closed().branch->is_zero()) {
            r = *p.closed().branch;
            break;
        }
    }
    if (!r) return;
    Place plus = Place::raw_closed(m, *r);
    Place minus = Place::raw_closed(m, -*r);
    long c = (*this)[fiber];
    long np = c + (*this)[plus];
    long nm = c + (*this)[minus];
    long common = std::min(np, nm);
    put(terms_, fiber, common);
    put(terms_, plus, np - common);
    put(terms_, minus, nm - common);
}

Divisor& Divisor::add(const Place& p, long mult) {
    if (mult == 0) return *this;
    put(terms_, p, (*this)[p] + mult);
    if (is_split_candidate(p)) canonicalize_fiber(p.closed().minpoly);
    return *this;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, k] : o.terms_) add(p, k);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [p, k] : o.terms_) add(p, -k);
    return *this;
}

Divisor operator*(long k, const Divisor& d) {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [p, m] : d.terms_) r.terms_[p] = k * m;
    // negative scaling can flip which branch carries the excess
    std::set<Poly> ms;
    for (const auto& [p, m] : r.terms_)
        if (is_split_candidate(p)) ms.insert(p.closed().minpoly);
    for (const auto& m : ms) r.canonicalize_fiber(m);
    return r;
}

namespace {

// Multiplicities on individual points: fibers whose branch is known from
// either operand are split into their two branch places.
std::map<Place, long> expand(const Divisor& d, const std::map<Poly, Poly>& known) {
    std::map<Place, long> out;
    for (const auto& [p, k] : d.terms()) {
        if (p.is_closed() && !p.closed().branch) {
            auto it = known.find(p.closed().minpoly);
            if (it != known.end()) {
                out[Place::raw_closed(it->first, it->second)] += k;
                out[Place::raw_closed(it->first, -it->second)] += k;
                continue;
            }
        }
        out[p] += k;
    }
    return out;
}

template <class Op>
Divisor combine(const Divisor& a, const Divisor& b, Op op) {
    std::map<Poly, Poly> known;
    for (const Divisor* d : {&a, &b})
        for (const auto& [p, k] : d->terms())
            if (is_split_candidate(p) && p.closed().branch) known.emplace(p.closed().minpoly, *p.closed().branch);
    auto ea = expand(a, known);
    auto eb = expand(b, known);
    std::set<Place> keys;
    for (const auto& [p, k] : ea) keys.insert(p);
    for (const auto& [p, k] : eb) keys.insert(p);
    Divisor r;
    for (const auto& p : keys) {
        auto ia = ea.find(p);
        auto ib = eb.find(p);
        long va = ia == ea.end() ? 0 : ia->second;
        long vb = ib == eb.end() ? 0 : ib->second;
        r.add(p, op(va, vb));
    }
    return r;
}

}  // namespace

Divisor Divisor::positive_part() const {
    return combine(*this, Divisor(), [](long a, long) { return std::max(a, 0L); });
}

Divisor Divisor::negative_part() const {
    return combine(*this, Divisor(), [](long a, long) { return std::max(-a, 0L); });
}

Divisor inf(const Divisor& a, const Divisor& b) {
    return combine(a, b, [](long x, long y) { return std::min(x, y); });
}

Divisor sup(const Divisor& a, const Divisor& b) {
    return combine(a, b, [](long x, long y) { return std::max(x, y); });
}

Divisor Divisor::restricted(const std::function<bool(const Place&)>& pred) const {
    Divisor r;
    for (const auto& [p, k] : terms_)
        if (pred(p)) r.add(p, k);
    return r;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Place, long>> ordered;
    for (const auto& t : terms_)
        if (!t.first.is_infinity()) ordered.push_back(t);
    for (const auto& t : terms_)
        if (t.first.is_infinity()) ordered.push_back(t);
    std::string out;
    for (const auto& [p, k] : ordered) {
        long mag = k < 0 ? -k : k;
        if (out.empty())
            out += k < 0 ? "-" : "";
        else
            out += k < 0 ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag) + "*";
        out += p.to_string();
    }
    return out;
}

long geometric_count(const std::vector<Place>& places) {
    long n = 0;
    for (const auto& p : places) n += p.degree();
    return n;
}

}  // namespace apparent_loci
