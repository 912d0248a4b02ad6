/**
 * @file matrix.hpp
 * @brief Dense square matrices over any scalar ring.
 *
 * Determinants take three routes:
 *  - exact fields: Gaussian elimination with exact division, first nonzero pivot;
 *  - the float ring: partial-pivot elimination;
 *  - polynomial entries: expansion by minors with memoization on column
 *    subsets (division-free), limited to n <= 8.
 */
#pragma once

#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ring.hpp"

namespace hdlab {

template <Scalar R>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, ring_traits<R>::zero()) {
        if (n < 1) throw std::invalid_argument("SquareMatrix: side must be >= 1");
    }
    SquareMatrix(int n, std::vector<R> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(n) * n)
            throw std::invalid_argument("SquareMatrix: entry count != n^2");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_traits<R>::one();
        return m;
    }

    int side() const { return n_; }
    R& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<R>& data() const { return a_; }

    SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }
    SquareMatrix conjugate() const {
        SquareMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(i, j) = ring_traits<R>::conj(at(i, j));
        return t;
    }
    SquareMatrix conjugate_transpose() const { return conjugate().transpose(); }

    SquareMatrix scaled(const R& c) const {
        SquareMatrix t(n_);
        for (size_t k = 0; k < a_.size(); ++k) t.a_[k] = a_[k] * c;
        return t;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("SquareMatrix: side mismatch");
        SquareMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const R& aik = a.at(i, k);
                if (ring_traits<R>::is_zero(aik)) continue;
                for (int j = 0; j < a.n_; ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
            }
        return c;
    }
    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("SquareMatrix: side mismatch");
        SquareMatrix c(a.n_);
        for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
        return c;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("SquareMatrix: side mismatch");
        SquareMatrix c(a.n_);
        for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
        return c;
    }
    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    std::vector<R> apply(std::span<const R> v) const {
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("SquareMatrix::apply: dimension mismatch");
        std::vector<R> out(n_, ring_traits<R>::zero());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out[i] = out[i] + at(i, j) * v[j];
        return out;
    }

    double max_abs_dev(const SquareMatrix& o) const {
        double m = 0.0;
        for (size_t k = 0; k < a_.size(); ++k)
            m = std::max(m, ring_traits<R>::abs_approx(a_[k] - o.a_[k]));
        return m;
    }

private:
    int n_ = 0;
    std::vector<R> a_;
};

namespace detail {

template <Scalar R>
R det_elimination(SquareMatrix<R> m) {
    const int n = m.side();
    R det = ring_traits<R>::one();
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (ring_traits<R>::exact) {
            for (int r = col; r < n; ++r)
                if (!ring_traits<R>::is_zero(m.at(r, col))) {
                    pivot = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (int r = col; r < n; ++r) {
                double a = ring_traits<R>::abs_approx(m.at(r, col));
                if (a > best) {
                    best = a;
                    pivot = r;
                }
            }
        }
        if (pivot < 0) return ring_traits<R>::zero();
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            negate = !negate;
        }
        const R p = m.at(col, col);
        det = det * p;
        for (int r = col + 1; r < n; ++r) {
            if (ring_traits<R>::is_zero(m.at(r, col))) continue;
            R f = m.at(r, col) / p;
            for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return negate ? -det : det;
}

// Division-free determinant for rings without division (polynomials):
// Laplace expansion along rows with memoization keyed by the set of
// still-unused columns.
template <Scalar R>
R det_minor_expansion(const SquareMatrix<R>& m) {
    const int n = m.side();
    if (n > 8) throw std::invalid_argument("determinant: minor expansion limited to n <= 8");
    std::unordered_map<uint32_t, R> memo;
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

    auto rec = [&](auto&& self, uint32_t cols) -> R {
        if (cols == 0) return ring_traits<R>::one();
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        const int row = n - __builtin_popcount(cols);  // rows 0..row-1 consumed
        R acc = ring_traits<R>::zero();
        bool neg = false;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            const R& e = m.at(row, j);
            if (!ring_traits<R>::is_zero(e)) {
                R sub = self(self, cols & ~(1u << j));
                R term = e * sub;
                acc = neg ? acc - term : acc + term;
            }
            neg = !neg;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, full);
}

}  // namespace detail

/// det_2: exact over exact rings, partial-pivot over floats, division-free
/// minor expansion over polynomial entries.
template <Scalar R>
R determinant(const SquareMatrix<R>& m) {
    if constexpr (ring_traits<R>::is_field) {
        return detail::det_elimination(m);
    } else {
        return detail::det_minor_expansion(m);
    }
}

/// Exact inverse over a field; throws on singular input.
template <Scalar R>
SquareMatrix<R> inverse(const SquareMatrix<R>& m) {
    static_assert(ring_traits<R>::is_field, "inverse requires a field");
    const int n = m.side();
    SquareMatrix<R> a = m;
    SquareMatrix<R> inv = SquareMatrix<R>::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (ring_traits<R>::exact) {
            for (int r = col; r < n; ++r)
                if (!ring_traits<R>::is_zero(a.at(r, col))) {
                    pivot = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (int r = col; r < n; ++r) {
                double v = ring_traits<R>::abs_approx(a.at(r, col));
                if (v > best) {
                    best = v;
                    pivot = r;
                }
            }
        }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        R p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || ring_traits<R>::is_zero(a.at(r, col))) continue;
            R f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Parity of a permutation given as images; false = even.
inline bool permutation_parity(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    bool odd = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) odd = !odd;
    return odd;
}

inline int permutation_sign(std::span<const int> perm) { return permutation_parity(perm) ? -1 : 1; }

/// Matrix P with P[perm[j], j] = 1, i.e. P e_j = e_{perm[j]}.
template <Scalar R>
SquareMatrix<R> permutation_matrix(std::span<const int> perm) {
    SquareMatrix<R> p(static_cast<int>(perm.size()));
    for (int j = 0; j < static_cast<int>(perm.size()); ++j)
        p.at(perm[j], j) = ring_traits<R>::one();
    return p;
}

}  // namespace hdlab
