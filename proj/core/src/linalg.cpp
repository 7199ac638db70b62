#include "lp2/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lp2 {

namespace {

// Integer rows with the same row space as m.
std::vector<std::vector<Integer>> clear_denominators(const QMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
    }
    return rows;
}

template <typename Field>
std::size_t rank_over(const Field& f, std::vector<std::vector<typename Field::Element>> a,
                      std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && f.is_zero(a[piv][c])) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const auto inv = f.inv(a[r][c]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (f.is_zero(a[i][c])) continue;
            const auto factor = f.mul(a[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank_bareiss(const QMatrix& m) {
    auto a = clear_denominators(m);
    const std::size_t nrows = a.size();
    const std::size_t ncols = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    Integer t;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && a[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[r], a[piv]);
        const Integer& p = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                t = p * a[i][j] - lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

std::size_t rank_mod_p(const QMatrix& m, std::uint64_t p) {
    const PrimeField f(p);
    std::vector<std::vector<PrimeField::Element>> a(m.rows(), std::vector<PrimeField::Element>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = f.from_rational(m(r, c));
    return rank_over(f, std::move(a), m.cols());
}

std::size_t rank(const QMatrix& m, const ScalarMode& mode) {
    if (const auto* pm = std::get_if<PrimeMode>(&mode)) return rank_mod_p(m, pm->p);
    return rank_bareiss(m);
}

RrefResult rref(const QMatrix& m) {
    QMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

QMatrix nullspace(const QMatrix& m) {
    const auto [red, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    QMatrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -red(i, fc);
    }
    return basis;
}

QMatrix left_nullspace(const QMatrix& m) {
    const QMatrix cols = nullspace(m.transpose());
    return rref(cols.transpose()).reduced;
}

QMatrix rref_section(const QMatrix& q) {
    const auto [red, pivots] = rref(q);
    if (pivots.size() != q.rows() || !(red == q)) {
        throw std::invalid_argument("rref_section expects a full-row-rank matrix in reduced echelon form");
    }
    QMatrix s(q.cols(), q.rows());
    for (std::size_t i = 0; i < pivots.size(); ++i) s(pivots[i], i) = 1;
    return s;
}

bool is_invertible(const QMatrix& m) {
    return m.rows() == m.cols() && rank_bareiss(m) == m.rows();
}

}  // namespace lp2
