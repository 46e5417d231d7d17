#include "apparent_loci/linalg.hpp"

#include "apparent_loci/errors.hpp"

namespace apparent_loci {

void QMatrix::append_row(const QVector& row) {
    if (row.size() != cols_) throw DomainError("append_row: width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Echelon row_reduce(const QMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    // clear denominators row by row
    std::vector<std::vector<Integer>> z(R, std::vector<Integer>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    // Bareiss: every entry below the current pivot row stays an integer minor
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && z[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(z[piv], z[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                Integer v = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                z[i][j] = std::move(v);
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        pivots.push_back(c);
        ++r;
    }

    // back substitution to reduced form over Q
    QMatrix out(pivots.size(), C);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < C; ++j) out(i, j) = Rational(z[i][j]);
    for (std::size_t i = pivots.size(); i-- > 0;) {
        std::size_t pc = pivots[i];
        Rational inv = 1 / out(i, pc);
        for (std::size_t j = pc; j < C; ++j) out(i, j) *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = out(k, pc);
            if (is_zero(f)) continue;
            for (std::size_t j = pc; j < C; ++j) out(k, j) -= f * out(i, j);
        }
    }
    return {std::move(out), std::move(pivots)};
}

std::vector<QVector> nullspace(const QMatrix& m) {
    Echelon e = row_reduce(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        QVector v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).pivots.size(); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (b.size() != m.rows()) throw DomainError("solve: right-hand side size mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    QVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, m.cols());
    return x;
}

}  // namespace apparent_loci
