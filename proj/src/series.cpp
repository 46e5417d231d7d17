#include "apparent_loci/series.hpp"

#include "apparent_loci/errors.hpp"

#include <algorithm>

namespace apparent_loci {

Series::Series(int precision, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (precision < 0) throw DomainError("negative series precision");
    c_.resize(static_cast<std::size_t>(precision));
}

Series Series::constant(int precision, const Rational& c) {
    Series s(precision);
    if (precision > 0) s.c_[0] = c;
    return s;
}

Series Series::t(int precision) {
    Series s(precision);
    if (precision > 1) s.c_[1] = 1;
    return s;
}

int Series::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return precision();
}

Series& Series::operator+=(const Series& o) {
    if (o.c_.size() < c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.c_.size() < c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    Series r(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

Series operator*(const Rational& s, Series a) {
    for (auto& v : a.c_) v *= s;
    return a;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Series Series::inverse() const {
    if (!is_unit()) throw DomainError("series inverse: constant term is zero");
    std::size_t n = c_.size();
    Series r(static_cast<int>(n));
    Rational inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

Series Series::truncate(int precision) const {
    Series r = *this;
    r.c_.resize(static_cast<std::size_t>(std::min(precision, this->precision())));
    return r;
}

}  // namespace apparent_loci
