#pragma once

#include "apparent_loci/func_elem.hpp"

#include <cstddef>
#include <vector>

namespace apparent_loci {

/// Dense matrix over the function field, row-major.
class FuncMatrix {
public:
    FuncMatrix() = default;
    FuncMatrix(CurvePtr curve, std::size_t rows, std::size_t cols);
    static FuncMatrix identity(CurvePtr curve, std::size_t n);
    static FuncMatrix diagonal(CurvePtr curve, const std::vector<FuncElem>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CurvePtr& curve() const { return curve_; }
    FuncElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FuncElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<FuncElem> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<FuncElem>& c);
    /// Columns [0, k).
    FuncMatrix leading_columns(std::size_t k) const;
    FuncMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    FuncMatrix transpose() const;

    /// Laplace expansion up to 3x3, elimination over the field beyond.
    FuncElem det() const;
    /// Throws DomainError when singular.
    FuncMatrix inverse() const;
    /// All k x k minors of a p x k matrix (k <= p), row subsets in
    /// lexicographic order.
    std::vector<FuncElem> maximal_minors() const;

    FuncMatrix& operator+=(const FuncMatrix& o);
    FuncMatrix& operator-=(const FuncMatrix& o);
    friend FuncMatrix operator+(FuncMatrix a, const FuncMatrix& b) { return a += b; }
    friend FuncMatrix operator-(FuncMatrix a, const FuncMatrix& b) { return a -= b; }
    friend FuncMatrix operator*(const FuncMatrix& a, const FuncMatrix& b);
    friend FuncMatrix operator*(const FuncElem& s, FuncMatrix m);
    friend bool operator==(const FuncMatrix& a, const FuncMatrix& b);
    friend bool operator!=(const FuncMatrix& a, const FuncMatrix& b) { return !(a == b); }

    std::vector<FuncElem>& entries() { return a_; }
    const std::vector<FuncElem>& entries() const { return a_; }

private:
    CurvePtr curve_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FuncElem> a_;
};

/// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace apparent_loci
