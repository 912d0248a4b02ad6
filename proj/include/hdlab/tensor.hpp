/**
 * @file tensor.hpp
 * @brief Dense order-d side-n hypermatrices and their structural operations:
 * mode actions, direct sums, point substitution.
 *
 * Index convention: row-major over (i_0,...,i_{d-1}), i_0 slowest. All sides
 * at desk scale are <= 9, so storage is always dense; sparsity is exploited
 * in the enumeration engine, not here.
 */
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "multipoly.hpp"
#include "ring.hpp"

namespace hdlab {

template <Scalar R>
class HyperTensor {
public:
    HyperTensor() = default;
    HyperTensor(int order, int side)
        : order_(order), side_(side), data_(pow_size(side, order), ring_traits<R>::zero()) {
        if (order < 1) throw std::invalid_argument("HyperTensor: order must be >= 1");
        if (side < 1) throw std::invalid_argument("HyperTensor: side must be >= 1");
    }
    HyperTensor(int order, int side, std::vector<R> entries)
        : order_(order), side_(side), data_(std::move(entries)) {
        if (data_.size() != pow_size(side, order))
            throw std::invalid_argument("HyperTensor: entry count != n^d");
    }

    int order() const { return order_; }
    int side() const { return side_; }
    size_t size() const { return data_.size(); }
    R& operator[](size_t flat) { return data_[flat]; }
    const R& operator[](size_t flat) const { return data_[flat]; }
    const std::vector<R>& data() const { return data_; }

    size_t flat_index(std::span<const int> idx) const {
        if (static_cast<int>(idx.size()) != order_)
            throw std::invalid_argument("HyperTensor: index arity mismatch");
        size_t f = 0;
        for (int k = 0; k < order_; ++k) {
            if (idx[k] < 0 || idx[k] >= side_) throw std::out_of_range("HyperTensor: index out of range");
            f = f * side_ + static_cast<size_t>(idx[k]);
        }
        return f;
    }
    R& at(std::span<const int> idx) { return data_[flat_index(idx)]; }
    const R& at(std::span<const int> idx) const { return data_[flat_index(idx)]; }
    R& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
    const R& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

    HyperTensor scaled(const R& c) const {
        HyperTensor t = *this;
        for (auto& e : t.data_) e = e * c;
        return t;
    }

    friend bool operator==(const HyperTensor& a, const HyperTensor& b) {
        return a.order_ == b.order_ && a.side_ == b.side_ && a.data_ == b.data_;
    }

    static size_t pow_size(int side, int order) {
        size_t s = 1;
        for (int k = 0; k < order; ++k) s *= static_cast<size_t>(side);
        return s;
    }

private:
    int order_ = 0;
    int side_ = 0;
    std::vector<R> data_;
};

namespace detail {

template <Scalar R>
HyperTensor<R> contract_mode(const HyperTensor<R>& x, const SquareMatrix<R>& m, int mode) {
    const int n = x.side();
    const int d = x.order();
    size_t stride = 1;
    for (int k = mode + 1; k < d; ++k) stride *= static_cast<size_t>(n);
    HyperTensor<R> out(d, n);
    const size_t total = x.size();
    std::vector<R> col(n, ring_traits<R>::zero());
    for (size_t base = 0; base < total; ++base) {
        if ((base / stride) % static_cast<size_t>(n) != 0) continue;
        for (int i = 0; i < n; ++i) col[i] = x[base + static_cast<size_t>(i) * stride];
        for (int j = 0; j < n; ++j) {
            R acc = ring_traits<R>::zero();
            for (int i = 0; i < n; ++i) {
                if (ring_traits<R>::is_zero(m.at(j, i))) continue;
                acc = acc + m.at(j, i) * col[i];  // fixed ascending-i order
            }
            out[base + static_cast<size_t>(j) * stride] = std::move(acc);
        }
    }
    return out;
}

}  // namespace detail

/// (g_0,...,g_{d-1}) . X : Y_{j_0..j_{d-1}} = sum prod_k mats[k]_{j_k i_k} X_{i_0..i_{d-1}},
/// computed one mode at a time.
template <Scalar R>
HyperTensor<R> mode_apply(const HyperTensor<R>& x, std::span<const SquareMatrix<R>> mats) {
    if (static_cast<int>(mats.size()) != x.order())
        throw std::invalid_argument("mode_apply: need one matrix per mode");
    for (const auto& m : mats)
        if (m.side() != x.side()) throw std::invalid_argument("mode_apply: matrix side mismatch");
    HyperTensor<R> cur = x;
    for (int k = 0; k < x.order(); ++k) cur = detail::contract_mode(cur, mats[k], k);
    return cur;
}

/// Same matrix in every mode.
template <Scalar R>
HyperTensor<R> mode_apply_uniform(const HyperTensor<R>& x, const SquareMatrix<R>& m) {
    std::vector<SquareMatrix<R>> mats(static_cast<size_t>(x.order()), m);
    return mode_apply(x, std::span<const SquareMatrix<R>>(mats));
}

/// Block-diagonal placement: Y occupies [0,a)^d, Z occupies [a,a+b)^d.
template <Scalar R>
HyperTensor<R> direct_sum(const HyperTensor<R>& y, const HyperTensor<R>& z) {
    if (y.order() != z.order()) throw std::invalid_argument("direct_sum: order mismatch");
    const int d = y.order();
    const int a = y.side(), b = z.side();
    HyperTensor<R> out(d, a + b);
    std::vector<int> idx(d, 0), shifted(d, 0);
    auto copy_block = [&](const HyperTensor<R>& src, int offset) {
        std::fill(idx.begin(), idx.end(), 0);
        const int n = src.side();
        while (true) {
            for (int k = 0; k < d; ++k) shifted[k] = idx[k] + offset;
            out.at(shifted) = src.at(idx);
            int k = d - 1;
            while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
            if (k < 0) break;
        }
    };
    copy_block(y, 0);
    copy_block(z, a);
    return out;
}

/// Evaluate a polynomial tensor at a point, entry by entry.
template <Scalar R>
HyperTensor<R> substitute_point(const HyperTensor<MultiPoly>& x, std::span<const R> point) {
    HyperTensor<R> out(x.order(), x.side());
    for (size_t f = 0; f < x.size(); ++f) out[f] = x[f].template eval<R>(point);
    return out;
}

/// Max entrywise |a-b| in the float view.
template <Scalar R>
double max_abs_dev(const HyperTensor<R>& a, const HyperTensor<R>& b) {
    if (a.order() != b.order() || a.side() != b.side())
        throw std::invalid_argument("max_abs_dev: shape mismatch");
    double m = 0.0;
    for (size_t f = 0; f < a.size(); ++f)
        m = std::max(m, ring_traits<R>::abs_approx(a[f] - b[f]));
    return m;
}

/// determinant() on a 2-way hypermatrix, for cross-checks against det_2.
template <Scalar R>
SquareMatrix<R> as_matrix(const HyperTensor<R>& x) {
    if (x.order() != 2) throw std::invalid_argument("as_matrix: order must be 2");
    return SquareMatrix<R>(x.side(), x.data());
}

}  // namespace hdlab
