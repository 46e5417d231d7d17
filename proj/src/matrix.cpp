#include "apparent_loci/matrix.hpp"

#include "apparent_loci/errors.hpp"

#include <utility>

namespace apparent_loci {

FuncMatrix::FuncMatrix(CurvePtr curve, std::size_t rows, std::size_t cols)
    : curve_(std::move(curve)), rows_(rows), cols_(cols), a_(rows * cols, FuncElem(curve_)) {}

FuncMatrix FuncMatrix::identity(CurvePtr curve, std::size_t n) {
    FuncMatrix m(curve, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FuncElem::constant(curve, 1);
    return m;
}

FuncMatrix FuncMatrix::diagonal(CurvePtr curve, const std::vector<FuncElem>& d) {
    FuncMatrix m(std::move(curve), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

std::vector<FuncElem> FuncMatrix::column(std::size_t j) const {
    std::vector<FuncElem> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
}

void FuncMatrix::set_column(std::size_t j, const std::vector<FuncElem>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
}

FuncMatrix FuncMatrix::leading_columns(std::size_t k) const {
    FuncMatrix m(curve_, rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
    return m;
}

FuncMatrix FuncMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    FuncMatrix m(curve_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

FuncMatrix FuncMatrix::transpose() const {
    FuncMatrix m(curve_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

FuncElem FuncMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    const auto& m = *this;
    switch (rows_) {
        case 0:
            return FuncElem::constant(curve_, 1);
        case 1:
            return m(0, 0);
        case 2:
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 3:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        default:
            break;
    }
    FuncMatrix w = *this;
    FuncElem d = FuncElem::constant(curve_, 1);
    std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w(piv, c).is_zero()) ++piv;
        if (piv == n) return FuncElem(curve_);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(c, j));
            d = -d;
        }
        d *= w(c, c);
        FuncElem inv = w(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w(i, c).is_zero()) continue;
            FuncElem s = w(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) w(i, j) -= s * w(c, j);
        }
    }
    return d;
}

FuncMatrix FuncMatrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    std::size_t n = rows_;
    FuncMatrix w = *this;
    FuncMatrix r = identity(curve_, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w(piv, c).is_zero()) ++piv;
        if (piv == n) throw DomainError("matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(piv, j), w(c, j));
                std::swap(r(piv, j), r(c, j));
            }
        FuncElem inv = w(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w(c, j) *= inv;
            r(c, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c).is_zero()) continue;
            FuncElem s = w(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= s * w(c, j);
                r(i, j) -= s * r(c, j);
            }
        }
    }
    return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::vector<FuncElem> FuncMatrix::maximal_minors() const {
    std::vector<std::size_t> all(cols_);
    for (std::size_t j = 0; j < cols_; ++j) all[j] = j;
    std::vector<FuncElem> out;
    for (const auto& r : subsets(rows_, cols_)) out.push_back(submatrix(r, all).det());
    return out;
}

FuncMatrix& FuncMatrix::operator+=(const FuncMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

FuncMatrix& FuncMatrix::operator-=(const FuncMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

FuncMatrix operator*(const FuncMatrix& a, const FuncMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    FuncMatrix r(a.curve_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FuncElem& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

FuncMatrix operator*(const FuncElem& s, FuncMatrix m) {
    for (auto& e : m.a_) e = s * e;
    return m;
}

bool operator==(const FuncMatrix& a, const FuncMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

}  // namespace apparent_loci
