#pragma once

// Exact integer and rational linear algebra: matrices over Z, Hermite and
// Smith normal forms, saturated kernels and sublattices of Z^k.
//
// Everything is arbitrary precision (GMP). No fixed-width integer ever holds
// a lattice coordinate.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bunchlab/errors.hpp"

namespace bunchlab {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

inline IntVector make_int_vector(std::initializer_list<long> xs) {
    IntVector v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

/// Divides by the gcd of the entries. Sign is preserved.
inline IntVector primitive(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw PreconditionError("ZeroVector", "primitive() of the zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// The zero vector is returned unchanged (as integers).
inline IntVector primitive_integer(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        out[i] = s.get_num();
    }
    if (is_zero(out)) return out;
    return primitive(out);
}

/// Dense integer matrix with row-major storage.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw PreconditionError("DimensionMismatch", "ragged matrix literal");
            for (long x : row) data_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw PreconditionError("DimensionMismatch", "column of wrong length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw PreconditionError("DimensionMismatch", "row of wrong length");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    IntVector column(std::size_t j) const {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<IntVector> columns() const {
        std::vector<IntVector> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix select_columns(std::span<const std::size_t> idx) const {
        IntMatrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    IntMatrix leading_columns(std::size_t n) const {
        IntMatrix m(rows_, n);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    IntVector operator*(const IntVector& v) const {
        if (v.size() != cols_) throw PreconditionError("DimensionMismatch", "matrix-vector size mismatch");
        IntVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("DimensionMismatch", "matrix product size mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }

    // Elementary column operations; used by the normal-form routines.
    void swap_columns(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void negate_column(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }
    // column dst += factor * column src
    void add_column(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
    }
    // row dst += factor * row src
    void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
    }
    // (col a, col b) <- (x*a + y*b, u*a + v*b)
    void combine_columns(std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                         const Integer& u, const Integer& v) {
        for (std::size_t i = 0; i < rows_; ++i) {
            Integer ca = (*this)(i, a);
            Integer cb = (*this)(i, b);
            (*this)(i, a) = x * ca + y * cb;
            (*this)(i, b) = u * ca + v * cb;
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (j) os << ' ';
                os << m(i, j);
            }
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// ---------------------------------------------------------------------------
// Rational elimination helpers

/// Reduced row echelon form over Q. Returns the nonzero rows and the pivot
/// column of each.
struct RowEchelon {
    std::vector<RatVector> rows;
    std::vector<std::size_t> pivots;
};

inline RowEchelon reduced_row_echelon(std::vector<RatVector> rows, std::size_t ncols) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

inline std::vector<RatVector> to_rational_rows(const std::vector<IntVector>& rows) {
    std::vector<RatVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(to_rational(r));
    return out;
}

inline std::size_t rational_rank(const std::vector<IntVector>& rows, std::size_t ncols) {
    return reduced_row_echelon(to_rational_rows(rows), ncols).pivots.size();
}

inline std::size_t rank(const IntMatrix& m) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rational_rank(rows, m.cols());
}

/// Basis of {x in Q^n : <row, x> = 0 for all rows}, as primitive integer
/// vectors in a canonical (RREF-derived) form.
inline std::vector<IntVector> rational_nullspace(const std::vector<IntVector>& rows, std::size_t n) {
    RowEchelon e = reduced_row_echelon(to_rational_rows(rows), n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

/// Canonical basis of the rational span of the given vectors: RREF rows scaled
/// to primitive integers.
inline std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& vs, std::size_t n) {
    RowEchelon e = reduced_row_echelon(to_rational_rows(vs), n);
    std::vector<IntVector> out;
    for (const auto& r : e.rows) out.push_back(primitive_integer(r));
    return out;
}

/// Solves sum_j c_j * cols[j] = v over Q; returns nullopt when v is outside
/// the span. The columns need not be independent.
inline std::optional<RatVector> solve_in_span(const std::vector<IntVector>& cols, const IntVector& v) {
    const std::size_t n = v.size();
    const std::size_t m = cols.size();
    // augmented system, rows = coordinates
    std::vector<RatVector> rows(n, RatVector(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) rows[i][j] = cols[j][i];
        rows[i][m] = v[i];
    }
    RowEchelon e = reduced_row_echelon(std::move(rows), m + 1);
    RatVector c(m);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == m) return std::nullopt;
        c[e.pivots[i]] = e.rows[i][m];
    }
    return c;
}

inline bool in_rational_span(const std::vector<IntVector>& cols, const IntVector& v) {
    return solve_in_span(cols, v).has_value();
}

inline Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("DimensionMismatch", "determinant of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<RatVector> a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det.get_num();
}

// ---------------------------------------------------------------------------
// Normal forms

/// Column Hermite normal form: `h == m * u` with `u` unimodular.
///
/// Convention: pivots step down the rows from left to right, every pivot is
/// positive, entries to the right of a pivot vanish and entries to its left
/// (in the pivot row) lie in [0, pivot). The first `rank` columns of `h` are
/// the canonical basis of the lattice spanned by the columns of `m`.
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

inline HermiteResult hnf(const IntMatrix& m) {
    HermiteResult res{m, IntMatrix::identity(m.cols()), 0, {}};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t c = 0;
    for (std::size_t i = 0; i < h.rows() && c < h.cols(); ++i) {
        for (std::size_t j = c + 1; j < h.cols(); ++j) {
            if (h(i, j) == 0) continue;
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(i, c).get_mpz_t(), h(i, j).get_mpz_t());
            Integer a_g = h(i, c) / g;
            Integer b_g = h(i, j) / g;
            Integer mb = -b_g;
            h.combine_columns(c, j, x, y, mb, a_g);
            u.combine_columns(c, j, x, y, mb, a_g);
        }
        if (h(i, c) == 0) continue;
        if (h(i, c) < 0) {
            h.negate_column(c);
            u.negate_column(c);
        }
        for (std::size_t j = 0; j < c; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, c).get_mpz_t());
            if (q == 0) continue;
            Integer mq = -q;
            h.add_column(j, c, mq);
            u.add_column(j, c, mq);
        }
        res.pivot_rows.push_back(i);
        ++c;
    }
    res.rank = c;
    return res;
}

/// Smith normal form `s == u * m * v`, diagonal with d_1 | d_2 | ..., d_i > 0.
/// `u` and `v` are only accumulated when `with_transforms` is set; otherwise
/// they are left empty.
struct SmithResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    std::vector<Integer> diagonal;
};

inline SmithResult snf(const IntMatrix& m, bool with_transforms = true) {
    SmithResult res;
    res.s = m;
    IntMatrix& s = res.s;
    const std::size_t R = m.rows();
    const std::size_t C = m.cols();
    if (with_transforms) {
        res.u = IntMatrix::identity(R);
        res.v = IntMatrix::identity(C);
    }
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        s.add_row(dst, src, f);
        if (with_transforms) res.u.add_row(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        s.add_column(dst, src, f);
        if (with_transforms) res.v.add_column(dst, src, f);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        s.swap_rows(a, b);
        if (with_transforms) res.u.swap_rows(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        s.swap_columns(a, b);
        if (with_transforms) res.v.swap_columns(a, b);
    };

    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (s(i, j) != 0 && (!best || abs(s(i, j)) < abs(s(best->first, best->second))))
                    best = {i, j};
        if (!best) break;
        row_swap(t, best->first);
        col_swap(t, best->second);

        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (s(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                row_add(i, t, Integer(-q));
                if (s(i, t) != 0) {
                    row_swap(i, t);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (s(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                col_add(j, t, Integer(-q));
                if (s(t, j) != 0) {
                    col_swap(j, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // enforce divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < R && !fixed; ++i)
                for (std::size_t j = t + 1; j < C && !fixed; ++j)
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        row_add(t, i, Integer(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            if (with_transforms) res.u.negate_row(t);
        }
        res.diagonal.push_back(s(t, t));
    }
    return res;
}

/// Nonzero invariant factors only.
inline std::vector<Integer> snf_diagonal(const IntMatrix& m) { return snf(m, false).diagonal; }

/// Saturated integer kernel {v in Z^cols : m v = 0}; columns of the result
/// form its basis in canonical Hermite form.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    HermiteResult h = hnf(m);
    const std::size_t n = m.cols();
    IntMatrix k(n, n - h.rank);
    for (std::size_t j = h.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - h.rank) = h.u(i, j);
    HermiteResult canon = hnf(k);
    return canon.h.leading_columns(canon.rank);
}

/// True iff the columns of `m` generate Z^rows.
inline bool is_surjective(const IntMatrix& m) {
    std::vector<Integer> d = snf_diagonal(m);
    if (d.size() != m.rows()) return false;
    return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

// ---------------------------------------------------------------------------
// Sublattices

/// A sublattice of Z^k, stored by its canonical column Hermite basis.
/// Two values are equal iff they describe the same subgroup.
class Sublattice {
public:
    Sublattice() = default;

    static Sublattice generated_by(const IntMatrix& generators) {
        HermiteResult h = hnf(generators);
        Sublattice l;
        l.ambient_ = generators.rows();
        l.basis_ = h.h.leading_columns(h.rank);
        l.pivots_ = h.pivot_rows;
        return l;
    }

    static Sublattice full(std::size_t k) { return generated_by(IntMatrix::identity(k)); }

    std::size_t ambient_rank() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return basis_.cols(); }
    const IntMatrix& basis() const noexcept { return basis_; }

    /// Coordinates of v in the stored basis, or nullopt when v is not a member.
    std::optional<IntVector> coordinates(const IntVector& v) const {
        if (v.size() != ambient_) throw PreconditionError("DimensionMismatch", "vector length differs from ambient rank");
        IntVector residual = v;
        IntVector coeff(rank());
        for (std::size_t j = 0; j < rank(); ++j) {
            const std::size_t p = pivots_[j];
            if (!mpz_divisible_p(residual[p].get_mpz_t(), basis_(p, j).get_mpz_t())) return std::nullopt;
            Integer c = residual[p] / basis_(p, j);
            coeff[j] = c;
            if (c == 0) continue;
            for (std::size_t i = p; i < ambient_; ++i) residual[i] -= c * basis_(i, j);
        }
        if (!bunchlab::is_zero(residual)) return std::nullopt;
        return coeff;
    }

    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

    friend bool operator==(const Sublattice& a, const Sublattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Sublattice image_lattice(const IntMatrix& m) { return Sublattice::generated_by(m); }

inline bool lattice_member(const Sublattice& l, const IntVector& v) { return l.contains(v); }

inline Sublattice lattice_intersection(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw PreconditionError("DimensionMismatch", "sublattices live in different ambient lattices");
    const std::size_t k = a.ambient_rank();
    const std::size_t ma = a.rank();
    const std::size_t mb = b.rank();
    // x = A s = B t  <=>  [A | -B] (s; t) = 0
    IntMatrix stacked(k, ma + mb);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < ma; ++j) stacked(i, j) = a.basis()(i, j);
        for (std::size_t j = 0; j < mb; ++j) stacked(i, ma + j) = -b.basis()(i, j);
    }
    IntMatrix ker = kernel_basis(stacked);
    IntMatrix gens(k, ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c)
        for (std::size_t i = 0; i < k; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < ma; ++j) s += a.basis()(i, j) * ker(j, c);
            gens(i, c) = s;
        }
    return Sublattice::generated_by(gens);
}

/// Index of a sublattice; `infinite` when the ranks differ.
struct LatticeIndex {
    bool infinite = false;
    Integer value = 0;

    static LatticeIndex finite(Integer v) { return {false, std::move(v)}; }
    static LatticeIndex unbounded() { return {true, 0}; }

    std::string to_string() const { return infinite ? std::string("infinite") : value.get_str(); }
    friend bool operator==(const LatticeIndex& a, const LatticeIndex& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

inline LatticeIndex lattice_index(const Sublattice& sub, const Sublattice& super) {
    if (sub.ambient_rank() != super.ambient_rank())
        throw PreconditionError("DimensionMismatch", "sublattices live in different ambient lattices");
    const std::size_t m = super.rank();
    IntMatrix coords(m, sub.rank());
    for (std::size_t j = 0; j < sub.rank(); ++j) {
        auto c = super.coordinates(sub.basis().column(j));
        if (!c) throw ValidationError("NotASublattice", "sublattice is not contained in the given superlattice");
        for (std::size_t i = 0; i < m; ++i) coords(i, j) = (*c)[i];
    }
    if (sub.rank() != m) return LatticeIndex::unbounded();
    return LatticeIndex::finite(abs(determinant(coords)));
}

} // namespace bunchlab
