#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dres/error.hpp"
#include "dres/rational.hpp"

namespace dres {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

namespace detail {

struct IntEchelon {
    Matrix<Int> a;
    std::vector<std::size_t> pivots;  ///< pivot column of row i
};

/// Fraction-free (Bareiss) row echelon form. Pivot: first column with a
/// nonzero entry at or below the current row, smallest such row index.
inline IntEchelon bareiss_echelon(Matrix<Int> a) {
    IntEchelon out;
    Int prev = 1;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < a.cols() && pr < a.rows(); ++col) {
        std::size_t piv = pr;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(pr, piv);
        for (std::size_t i = pr + 1; i < a.rows(); ++i) {
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                Int v = a(pr, col) * a(i, j) - a(i, col) * a(pr, j);
                a(i, j) = exact_div(v, prev);
            }
            a(i, col) = 0;
        }
        prev = a(pr, col);
        out.pivots.push_back(col);
        ++pr;
    }
    out.a = std::move(a);
    return out;
}

inline Matrix<Int> clear_row_denominators(const Matrix<Rat>& m) {
    Matrix<Int> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Int(m(i, j).get_den()));
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = exact_div(Int(m(i, j).get_num() * l), Int(m(i, j).get_den()));
    }
    return out;
}

struct IntGcdExt {
    Int g, s, t;
};

inline IntGcdExt gcdext(const Int& a, const Int& b) {
    IntGcdExt r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace detail

inline std::size_t rank(const Matrix<Rat>& m) {
    return detail::bareiss_echelon(detail::clear_row_denominators(m)).pivots.size();
}

/// Exact basis of {v : M v = 0}. One vector per free column, scaled so
/// its first nonzero entry is 1.
inline std::vector<RatVector> nullspace(const Matrix<Rat>& m) {
    const auto ech = detail::bareiss_echelon(detail::clear_row_denominators(m));
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(n, Rat(0));
        v[free] = 1;
        for (std::size_t r = ech.pivots.size(); r-- > 0;) {
            const std::size_t pc = ech.pivots[r];
            Rat acc = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (v[j] != 0) acc += Rat(ech.a(r, j)) * v[j];
            v[pc] = -acc / Rat(ech.a(r, pc));
        }
        for (const auto& c : v)
            if (c != 0) {
                const Rat lead = c;
                for (auto& e : v) e /= lead;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Hermite normal form of the lattice spanned by the given rows: nonzero
/// rows only, positive pivots, entries above each pivot reduced into
/// [0, pivot).
inline std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Int a = rows[r][col], b = rows[i][col];
            const auto [g, s, t] = detail::gcdext(a, b);
            const Int ua = exact_div(a, g), ub = exact_div(b, g);
            for (std::size_t j = 0; j < n; ++j) {
                Int top = s * rows[r][j] + t * rows[i][j];
                Int bottom = ua * rows[i][j] - ub * rows[r][j];
                rows[r][j] = std::move(top);
                rows[i][j] = std::move(bottom);
            }
        }
        if (rows[r][col] < 0)
            for (auto& e : rows[r]) e = -e;
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

/// Z-basis of {v in Z^n : M v = 0}, via unimodular column operations that
/// bring M to column echelon form; returned in Hermite normal form.
inline std::vector<IntVector> integer_kernel(Matrix<Int> m) {
    const std::size_t n = m.cols();
    Matrix<Int> u(n, n);
    for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;

    auto combine = [&](Matrix<Int>& a, std::size_t c0, std::size_t c1, const Int& s, const Int& t, const Int& p,
                       const Int& q) {
        // (col c0, col c1) <- (s c0 + t c1, p c0 + q c1)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Int x = s * a(i, c0) + t * a(i, c1);
            Int y = p * a(i, c0) + q * a(i, c1);
            a(i, c0) = std::move(x);
            a(i, c1) = std::move(y);
        }
    };

    std::size_t start = 0;
    for (std::size_t row = 0; row < m.rows() && start < n; ++row) {
        for (std::size_t j = start + 1; j < n; ++j) {
            if (m(row, j) == 0) continue;
            if (m(row, start) == 0) {
                m.swap_cols(start, j);
                u.swap_cols(start, j);
                continue;
            }
            const Int a = m(row, start), b = m(row, j);
            const auto [g, s, t] = detail::gcdext(a, b);
            const Int p = -exact_div(b, g), q = exact_div(a, g);
            combine(m, start, j, s, t, p, q);
            combine(u, start, j, s, t, p, q);
        }
        if (m(row, start) != 0) ++start;
    }
    std::vector<IntVector> kernel;
    for (std::size_t j = start; j < n; ++j) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u(i, j);
        kernel.push_back(std::move(v));
    }
    return hermite_normal_form(std::move(kernel), n);
}

}  // namespace dres
