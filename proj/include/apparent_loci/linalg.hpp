#pragma once

#include "apparent_loci/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace apparent_loci {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void append_row(const QVector& row);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Reduced row echelon form computed fraction-free: rows are cleared to
/// integers, Bareiss elimination produces the echelon form, and only the
/// final normalization divides.
struct Echelon {
    QMatrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Echelon row_reduce(const QMatrix& m);

/// Canonical kernel basis: one vector per non-pivot column, with 1 in that
/// column and 0 in the other free columns. Ordered by free column.
std::vector<QVector> nullspace(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Some solution of m*x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace apparent_loci
