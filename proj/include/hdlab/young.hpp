/**
 * @file young.hpp
 * @brief Group algebra of small symmetric groups and the Young symmetrizer
 * for the square partition -- the independent oracle behind the matrix
 * multiplication tensor hyperdeterminant.
 *
 * For lambda = n x n on the letters [n^2] (pair (i,j) at position i*n + j):
 *   a = sum_{g in C} g,  b = sum_{g in R} sgn(g) g,  c = a b,
 * with R/C the row/column stabilizers of the words "row" and "col". Then
 * c^2 = h_{n x n} c, c(id) = 1, and (c)^{d/2}(id) = (-1)^{(d/2) C(n,2)} det_d(M_n).
 */
#pragma once

#include <map>
#include <vector>

#include "matmul.hpp"

namespace hdlab {

using Perm = std::vector<int>;

inline Perm perm_identity(int m) {
    Perm p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    return p;
}

/// Composition (a.b)(x) = a(b(x)).
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
}

inline Perm perm_inverse(const Perm& a) {
    Perm inv(a.size());
    for (size_t x = 0; x < a.size(); ++x) inv[a[x]] = static_cast<int>(x);
    return inv;
}

/// Transpose permutation on [n]^2: position (i,j) -> (j,i).
inline Perm transpose_perm(int n) {
    Perm t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = j * n + i;
    return t;
}

/// The word "row": position p = (i,j) carries letter i.
inline std::vector<int> row_word(int n) {
    std::vector<int> w(static_cast<size_t>(n) * n);
    for (int p = 0; p < n * n; ++p) w[p] = p / n;
    return w;
}
/// The word "col": position p = (i,j) carries letter j.
inline std::vector<int> col_word(int n) {
    std::vector<int> w(static_cast<size_t>(n) * n);
    for (int p = 0; p < n * n; ++p) w[p] = p % n;
    return w;
}

/// All permutations of [n^2] stabilizing the given word (i.e. permuting
/// positions within each letter class). Class sizes are n, so the group has
/// order (n!)^n; n <= 3 keeps this enumerable.
inline std::vector<Perm> word_stabilizer(const std::vector<int>& word, int n) {
    const int m = static_cast<int>(word.size());
    std::vector<std::vector<int>> classes(n);
    for (int p = 0; p < m; ++p) classes[word[p]].push_back(p);
    std::vector<Perm> out;
    std::vector<std::vector<int>> arrangement = classes;
    // odometer over per-class permutations
    std::vector<Perm> class_perms(n);
    for (int c = 0; c < n; ++c) class_perms[c] = perm_identity(static_cast<int>(classes[c].size()));
    while (true) {
        Perm g = perm_identity(m);
        for (int c = 0; c < n; ++c)
            for (size_t k = 0; k < classes[c].size(); ++k)
                g[classes[c][k]] = classes[c][class_perms[c][k]];
        out.push_back(std::move(g));
        int c = n - 1;
        while (c >= 0 && !std::next_permutation(class_perms[c].begin(), class_perms[c].end())) --c;
        if (c < 0) break;
        for (int c2 = c + 1; c2 < n; ++c2)
            class_perms[c2] = perm_identity(static_cast<int>(classes[c2].size()));
    }
    return out;
}

/// Sparse element of the rational group algebra Q[S_m].
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(int letters) : m_(letters) {}

    static GroupAlgebraElement basis(const Perm& g) {
        GroupAlgebraElement e(static_cast<int>(g.size()));
        e.coeffs_[g] = Rational(1);
        return e;
    }

    int letters() const { return m_; }
    size_t support_size() const { return coeffs_.size(); }
    const std::map<Perm, Rational>& coeffs() const { return coeffs_; }

    Rational coefficient(const Perm& g) const {
        auto it = coeffs_.find(g);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    Rational coefficient_at_identity() const { return coefficient(perm_identity(m_)); }

    void add(const Perm& g, const Rational& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(g);
        if (it == coeffs_.end()) {
            coeffs_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    GroupAlgebraElement scaled(const Rational& c) const {
        GroupAlgebraElement r(m_);
        if (c.is_zero()) return r;
        for (const auto& [g, v] : coeffs_) r.coeffs_.emplace(g, v * c);
        return r;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement r(a.m_);
        for (const auto& [g, cg] : a.coeffs_)
            for (const auto& [h, ch] : b.coeffs_) r.add(perm_compose(g, h), cg * ch);
        return r;
    }
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement r = a;
        for (const auto& [g, c] : b.coeffs_) r.add(g, -c);
        return r;
    }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }

    GroupAlgebraElement pow(int e) const {
        GroupAlgebraElement acc = basis(perm_identity(m_));
        for (int k = 0; k < e; ++k) acc = acc * (*this);
        return acc;
    }

private:
    int m_ = 0;
    std::map<Perm, Rational> coeffs_;
};

/// a_lambda = sum_{g in C} g (column symmetrizer).
inline GroupAlgebraElement column_symmetrizer(int n) {
    GroupAlgebraElement a(n * n);
    for (const auto& g : word_stabilizer(col_word(n), n)) a.add(g, Rational(1));
    return a;
}
/// b_lambda = sum_{g in R} sgn(g) g (signed row antisymmetrizer).
inline GroupAlgebraElement row_antisymmetrizer(int n) {
    GroupAlgebraElement b(n * n);
    for (const auto& g : word_stabilizer(row_word(n), n)) b.add(g, Rational(permutation_sign(g)));
    return b;
}
/// c_lambda = a_lambda b_lambda for lambda = n x n.
inline GroupAlgebraElement young_symmetrizer(int n) {
    return column_symmetrizer(n) * row_antisymmetrizer(n);
}

/// Unsigned analog u_C u_R; the coefficient of the identity in its d/2 power
/// counts the nonvanishing sigma_1 = id permutation tuples of det_d(M_n).
inline GroupAlgebraElement unsigned_symmetrizer(int n) {
    GroupAlgebraElement u(n * n), v(n * n);
    for (const auto& g : word_stabilizer(col_word(n), n)) u.add(g, Rational(1));
    for (const auto& g : word_stabilizer(row_word(n), n)) v.add(g, Rational(1));
    return u * v;
}

struct YoungOracleReport {
    Rational value;            // (c_lambda)^{d/2}(id)
    Rational identity_coeff;   // c_lambda(id), expected 1
    bool quasi_idempotent;     // c^2 == h c
    BigInt hook;               // h_{n x n}
    int sign_factor;           // (-1)^{(d/2) C(n,2)}
};

/// Independent group-algebra oracle for det_d(M_n):
/// (c_lambda)^{d/2}(id) = (-1)^{(d/2) C(n,2)} det_d(M_n).
/// The convolution is feasible for n <= 2 (group algebra of S_4); n >= 3
/// exceeds the budget (S_9 support) and is refused.
inline YoungOracleReport young_symmetrizer_oracle(int n, int d) {
    if (n < 1) throw std::invalid_argument("young_symmetrizer_oracle: n >= 1");
    if (n > 2)
        throw std::invalid_argument("young_symmetrizer_oracle: dense convolution over S_{n^2} limited to n <= 2");
    if (d % 2 != 0) throw std::invalid_argument("young_symmetrizer_oracle: d must be even");
    YoungOracleReport rep;
    auto c = young_symmetrizer(n);
    rep.identity_coeff = c.coefficient_at_identity();
    rep.hook = hook_product(n);
    auto c2 = c * c;
    rep.quasi_idempotent = (c2 == c.scaled(Rational(rep.hook)));
    GroupAlgebraElement p = c;
    for (int k = 1; k < d / 2; ++k) p = p * c;
    rep.value = p.coefficient_at_identity();
    long e = static_cast<long>(d / 2) * (static_cast<long>(n) * (n - 1) / 2);
    rep.sign_factor = (e % 2 == 0) ? 1 : -1;
    return rep;
}

}  // namespace hdlab
