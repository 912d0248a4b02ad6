/**
 * @file matmul.hpp
 * @brief The shifted iterated matrix multiplication tensor M^(d)_X and the
 * hook-product formulas for its hyperdeterminant.
 *
 * M^(d)_X has side n^2 with pair index (i,j) -> i*n + j; the entry at
 * ((i_1,j_1),...,(i_d,j_d)) is X_{i_1 j_d} when j_k = i_{k+1} for all k < d
 * and 0 otherwise. Its hyperdeterminant is +-(hook product of the n x n
 * square)^{d/2-1}.
 */
#pragma once

#include "hyperdet.hpp"
#include "tensor.hpp"

namespace hdlab {

/// M^(d)_X for an explicit matrix X over any scalar ring.
template <Scalar R>
HyperTensor<R> matmul_tensor(int n, int d, const SquareMatrix<R>& x) {
    if (d < 2) throw std::invalid_argument("matmul_tensor: d >= 2");
    if (x.side() != n) throw std::invalid_argument("matmul_tensor: X side mismatch");
    const int side = n * n;
    HyperTensor<R> t(d, side);
    // enumerate delta-chains: free i_1, j_1..j_d
    std::vector<int> pairs(d, 0);
    auto emit = [&](int i1, std::span<const int> js) {
        int prev = js[0];
        pairs[0] = i1 * n + js[0];
        for (int k = 1; k < d; ++k) {
            pairs[k] = prev * n + js[k];
            prev = js[k];
        }
        t.at(pairs) = x.at(i1, js[d - 1]);
    };
    std::vector<int> js(d, 0);
    for (int i1 = 0; i1 < n; ++i1) {
        std::fill(js.begin(), js.end(), 0);
        while (true) {
            emit(i1, js);
            int k = d - 1;
            while (k >= 0 && ++js[k] == n) js[k--] = 0;
            if (k < 0) break;
        }
    }
    return t;
}

/// M^(d)_n := M^(d)_{Id}.
template <Scalar R = Rational>
HyperTensor<R> matmul_tensor_identity(int n, int d) {
    return matmul_tensor<R>(n, d, SquareMatrix<R>::identity(n));
}

/// M^(d)_X with X the generic symbolic matrix (variables x_{ij}, pair order).
inline HyperTensor<MultiPoly> matmul_tensor_symbolic(int n, int d) {
    SquareMatrix<MultiPoly> x(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.at(i, j) = MultiPoly::variable(n * n, i * n + j);
    return matmul_tensor<MultiPoly>(n, d, x);
}

/// Dual form: contraction of M^(d)_X against matrices A_1..A_d, which equals
/// Tr(X^t A_1 ... A_d).
template <Scalar R>
R matmul_dual_form(const HyperTensor<R>& mx, std::span<const SquareMatrix<R>> as) {
    const int side = mx.side();
    const int d = mx.order();
    if (static_cast<int>(as.size()) != d) throw std::invalid_argument("matmul_dual_form: need d matrices");
    const int n = as[0].side();
    if (n * n != side) throw std::invalid_argument("matmul_dual_form: side mismatch");
    R acc = ring_traits<R>::zero();
    std::vector<int> idx(d, 0);
    while (true) {
        R term = mx.at(idx);
        if (!ring_traits<R>::is_zero(term)) {
            for (int k = 0; k < d; ++k) term = term * as[k].at(idx[k] / n, idx[k] % n);
            acc = acc + term;
        }
        int k = d - 1;
        while (k >= 0 && ++idx[k] == side) idx[k--] = 0;
        if (k < 0) break;
    }
    return acc;
}

/// Hook product of the n x n square partition: prod_{i=0}^{n-1} (n+i)!/i!.
inline BigInt hook_product(int n) {
    if (n < 1) throw std::invalid_argument("hook_product: n >= 1");
    BigInt acc = 1;
    for (int i = 0; i < n; ++i)
        acc *= factorial(static_cast<unsigned long>(n + i)) / factorial(static_cast<unsigned long>(i));
    return acc;
}

/// |det_d(M^(d)_n)| = hook_product(n)^{d/2-1}.
inline BigInt mmt_formula(int n, int d) {
    if (d % 2 != 0) throw std::invalid_argument("mmt_formula: d must be even");
    return pow_big(hook_product(n), static_cast<unsigned long>(d / 2 - 1));
}

/// Sign realized by the enumeration: sgn(transpose permutation)^{d/2}
/// = (-1)^{(d/2) C(n,2)}; det_d(M_n) = sign * hook^{d/2-1}.
inline int mmt_predicted_sign(int n, int d) {
    long e = static_cast<long>(d / 2) * (static_cast<long>(n) * (n - 1) / 2);
    return e % 2 == 0 ? 1 : -1;
}

struct MmtReport {
    bool pass = false;
    BigInt formula;       // |predicted|
    Rational enumerated;  // signed value from the engine
    int realized_sign = 0;
    int predicted_sign = 0;
    uint64_t tuples = 0;
    double millis = 0.0;
};

/// Theorem-2 verification: pruned enumeration of det_d(M_n) against the
/// closed hook-product formula. Budget: |C|^{d-1} = (n!^n)^{d-1} completed
/// tuples must stay within opts.budget.
inline MmtReport mmt_verify(int n, int d, HyperdetOptions opts = {}) {
    if (d % 2 != 0) throw std::invalid_argument("mmt_verify: d must be even");
    BigInt completed = pow_big(pow_big(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(n)),
                               static_cast<unsigned long>(d - 1));
    if (completed > BigInt(static_cast<unsigned long>(opts.budget)))
        throw BudgetExceeded(completed.get_str(), opts.budget);
    opts.strategy = Strategy::pruned;
    auto t = matmul_tensor_identity<Rational>(n, d);
    auto r = hyperdet(t, opts);
    MmtReport rep;
    rep.formula = mmt_formula(n, d);
    rep.enumerated = r.value;
    rep.tuples = r.tuples;
    rep.millis = r.millis;
    rep.realized_sign = r.value.sign();
    rep.predicted_sign = mmt_predicted_sign(n, d);
    rep.pass = (r.value.abs() == Rational(rep.formula));
    return rep;
}

struct ScaledMmtReport {
    bool pass = false;
    Rational lhs;        // det_d(M_X)
    Rational rhs;        // det(X)^n det_d(M_n)
    uint64_t tuples = 0;
};

/// Lemma: det_d(M_X) = det(X)^n det_d(M_n), exact over the rationals.
inline ScaledMmtReport scaled_mmt_check(int n, int d, const SquareMatrix<Rational>& x,
                                        HyperdetOptions opts = {}) {
    opts.strategy = Strategy::pruned;
    ScaledMmtReport rep;
    auto mx = matmul_tensor<Rational>(n, d, x);
    auto lhs = hyperdet(mx, opts);
    auto mn = hyperdet(matmul_tensor_identity<Rational>(n, d), opts);
    rep.lhs = lhs.value;
    rep.rhs = pow_rat(determinant(x), static_cast<unsigned long>(n)) * mn.value;
    rep.tuples = lhs.tuples;
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace hdlab
