#include "apparent_loci/func_elem.hpp"

#include "apparent_loci/errors.hpp"

namespace apparent_loci {

bool same_curve(const CurvePtr& a, const CurvePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

FuncElem::FuncElem(CurvePtr curve, RatFunc a, RatFunc b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {
    if (!curve_) throw DomainError("function field element without a curve");
}

void FuncElem::check_same(const FuncElem& o) const {
    if (!same_curve(curve_, o.curve_)) throw CurveMismatch();
}

bool FuncElem::is_constant() const { return b_.is_zero() && a_.den().degree() == 0 && a_.num().degree() <= 0; }

RatFunc FuncElem::norm() const { return a_ * a_ - b_ * b_ * RatFunc(curve_->f()); }

FuncElem FuncElem::conjugate() const { return FuncElem(curve_, a_, -b_); }

FuncElem FuncElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero function field element");
    RatFunc n = norm();
    return FuncElem(curve_, a_ / n, -b_ / n);
}

FuncElem FuncElem::pow(unsigned e) const {
    FuncElem result = constant(curve_, 1);
    FuncElem base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

FuncElem::Integral FuncElem::integral() const {
    // common denominator D = lcm(den a, den b)
    Poly g = gcd(a_.den(), b_.den());
    Poly D = exact_div(a_.den(), g) * b_.den();
    Poly A = a_.num() * exact_div(D, a_.den());
    Poly B = b_.num() * exact_div(D, b_.den());
    return {A, B, D};
}

FuncElem& FuncElem::operator+=(const FuncElem& o) {
    check_same(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FuncElem& FuncElem::operator-=(const FuncElem& o) {
    check_same(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FuncElem& FuncElem::operator*=(const FuncElem& o) {
    check_same(o);
    // (a + b y)(c + d y) = (ac + bd f) + (ad + bc) y
    RatFunc a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * RatFunc(curve_->f());
    RatFunc b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

bool operator==(const FuncElem& u, const FuncElem& v) {
    if (!same_curve(u.curve_, v.curve_)) return false;
    return u.a_ == v.a_ && u.b_ == v.b_;
}

std::string FuncElem::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string yb = b_ == RatFunc(1) ? "y" : "(" + b_.to_string() + ")*y";
    if (a_.is_zero()) return yb;
    return a_.to_string() + " + " + yb;
}

}  // namespace apparent_loci
