#include "apparent_loci/ratfunc.hpp"

#include "apparent_loci/errors.hpp"

namespace apparent_loci {

RatFunc::RatFunc(const Poly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rational lc = den_.lead();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

int RatFunc::degree() const {
    if (num_.is_zero()) throw DomainError("degree of the zero rational function");
    return num_.degree() - den_.degree();
}

Rational RatFunc::eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (apparent_loci::is_zero(d)) throw DomainError("rational function has a pole at " + apparent_loci::to_string(at));
    return num_.eval(at) / d;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    // cross-cancel before multiplying to keep degrees down
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    Rational lc = den_.lead();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

int compare(const RatFunc& a, const RatFunc& b) {
    int c = compare(a.num_, b.num_);
    return c != 0 ? c : compare(a.den_, b.den_);
}

std::string RatFunc::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace apparent_loci
