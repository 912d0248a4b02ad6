/**
 * @file algebra.hpp
 * @brief Associative algebras from binary structure constants, the algebra
 * tensor C^A(x), the Jacobson radical via the trace form of left
 * multiplication, the radical filtration, the explicit SL degeneration
 * g(t): a_i -> t^{w_i} a_i with w_i = n nu(i) - D, and the semisimplicity
 * classification det_d(C^A) != 0 <=> J(A) = 0 (even d > 2).
 */
#pragma once

#include <functional>
#include <optional>

#include "group.hpp"
#include "hyperdet.hpp"
#include "matmul.hpp"

namespace hdlab {

/// Finite-dimensional associative algebra over Q with a fixed basis:
/// a_i a_j = sum_k mu^k_{ij} a_k. Associativity is validated exhaustively.
class AssocAlgebra {
public:
    AssocAlgebra(int n, std::vector<Rational> mu, std::string name,
                 std::optional<std::vector<Rational>> unit = std::nullopt)
        : n_(n), mu_(std::move(mu)), name_(std::move(name)), unit_(std::move(unit)) {
        if (n < 1) throw std::invalid_argument("AssocAlgebra: dimension >= 1");
        if (mu_.size() != static_cast<size_t>(n) * n * n)
            throw std::invalid_argument("AssocAlgebra: need n^3 structure constants");
        validate();
    }

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::optional<std::vector<Rational>>& unit() const { return unit_; }

    /// mu^k_{ij}
    const Rational& mu(int i, int j, int k) const {
        return mu_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
    }

    /// Product of coordinate vectors.
    std::vector<Rational> multiply(std::span<const Rational> u, std::span<const Rational> v) const {
        std::vector<Rational> w(n_, Rational(0));
        for (int i = 0; i < n_; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (v[j].is_zero()) continue;
                Rational c = u[i] * v[j];
                for (int k = 0; k < n_; ++k) {
                    const Rational& m = mu(i, j, k);
                    if (!m.is_zero()) w[k] += c * m;
                }
            }
        }
        return w;
    }

    /// Left multiplication operator L_{a_i} as a matrix: (L_i)_{k j} = mu^k_{ij}.
    SquareMatrix<Rational> left_mult(int i) const {
        SquareMatrix<Rational> m(n_);
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) m.at(k, j) = mu(i, j, k);
        return m;
    }

    Rational trace_left_mult(int i) const {
        Rational t(0);
        for (int j = 0; j < n_; ++j) t += mu(i, j, j);
        return t;
    }

private:
    void validate() {
        // (a_i a_j) a_k == a_i (a_j a_k), exhaustive
        std::vector<Rational> e(n_, Rational(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                std::vector<Rational> ij(n_);
                for (int k = 0; k < n_; ++k) ij[k] = mu(i, j, k);
                for (int k = 0; k < n_; ++k) {
                    std::vector<Rational> ek(n_, Rational(0));
                    ek[k] = Rational(1);
                    auto lhs = multiply(ij, ek);
                    std::vector<Rational> jk(n_);
                    for (int m = 0; m < n_; ++m) jk[m] = mu(j, k, m);
                    std::vector<Rational> ei(n_, Rational(0));
                    ei[i] = Rational(1);
                    auto rhs = multiply(ei, jk);
                    if (lhs != rhs) throw std::invalid_argument("AssocAlgebra: associativity fails");
                }
            }
        if (unit_) {
            for (int i = 0; i < n_; ++i) {
                std::vector<Rational> ei(n_, Rational(0));
                ei[i] = Rational(1);
                if (multiply(*unit_, ei) != ei || multiply(ei, *unit_) != ei)
                    throw std::invalid_argument("AssocAlgebra: declared unit is not an identity");
            }
        }
    }

    int n_;
    std::vector<Rational> mu_;
    std::string name_;
    std::optional<std::vector<Rational>> unit_;
};

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

inline AssocAlgebra algebra_complex_line() {
    return AssocAlgebra(1, {Rational(1)}, "C", std::vector<Rational>{Rational(1)});
}

/// C x C on two orthogonal idempotents.
inline AssocAlgebra algebra_complex_pair() {
    std::vector<Rational> mu(8, Rational(0));
    auto set = [&](int i, int j, int k) { mu[(i * 2 + j) * 2 + k] = Rational(1); };
    set(0, 0, 0);
    set(1, 1, 1);
    return AssocAlgebra(2, std::move(mu), "CxC", std::vector<Rational>{Rational(1), Rational(1)});
}

/// Mat(2, C) on matrix units E11, E12, E21, E22 (pair order (i,j) -> 2i+j).
inline AssocAlgebra algebra_mat(int n) {
    const int dim = n * n;
    std::vector<Rational> mu(static_cast<size_t>(dim) * dim * dim, Rational(0));
    auto idx = [&](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        mu[(static_cast<size_t>(idx(i, j)) * dim + idx(k, l)) * dim + idx(i, l)] = Rational(1);
    std::vector<Rational> unit(dim, Rational(0));
    for (int i = 0; i < n; ++i) unit[idx(i, i)] = Rational(1);
    return AssocAlgebra(dim, std::move(mu), "Mat" + std::to_string(n), std::move(unit));
}

/// Group algebra C G on the basis of group elements.
inline AssocAlgebra group_algebra(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<Rational> mu(static_cast<size_t>(n) * n * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mu[(static_cast<size_t>(i) * n + j) * n + g.mul(i, j)] = Rational(1);
    std::vector<Rational> unit(n, Rational(0));
    unit[g.identity()] = Rational(1);
    return AssocAlgebra(n, std::move(mu), "C[" + g.name() + "]", std::move(unit));
}

/// Dual numbers C[eps]/(eps^2) on (1, eps).
inline AssocAlgebra algebra_dual_numbers() {
    std::vector<Rational> mu(8, Rational(0));
    auto set = [&](int i, int j, int k) { mu[(i * 2 + j) * 2 + k] = Rational(1); };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    return AssocAlgebra(2, std::move(mu), "dual", std::vector<Rational>{Rational(1), Rational(0)});
}

/// Upper-triangular 2x2 matrices on (E11, E22, E12).
inline AssocAlgebra algebra_upper_triangular2() {
    std::vector<Rational> mu(27, Rational(0));
    auto set = [&](int i, int j, int k) { mu[(i * 3 + j) * 3 + k] = Rational(1); };
    set(0, 0, 0);  // E11 E11 = E11
    set(1, 1, 1);  // E22 E22 = E22
    set(0, 2, 2);  // E11 E12 = E12
    set(2, 1, 2);  // E12 E22 = E12
    return AssocAlgebra(3, std::move(mu), "upper2",
                        std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
}

/// Truncated polynomials C[eps]/(eps^3) on (1, eps, eps^2); radical depth 3.
inline AssocAlgebra algebra_truncated_poly3() {
    std::vector<Rational> mu(27, Rational(0));
    auto set = [&](int i, int j, int k) { mu[(i * 3 + j) * 3 + k] = Rational(1); };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) set(i, j, i + j);
    return AssocAlgebra(3, std::move(mu), "trunc3",
                        std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
}

inline AssocAlgebra builtin_algebra(const std::string& name) {
    if (name == "c" || name == "C") return algebra_complex_line();
    if (name == "cxc" || name == "CxC") return algebra_complex_pair();
    if (name == "mat2") return algebra_mat(2);
    if (name == "cz2") return group_algebra(cyclic_group(2));
    if (name == "cz3") return group_algebra(cyclic_group(3));
    if (name == "cz4") return group_algebra(cyclic_group(4));
    if (name == "cq8") return group_algebra(quaternion8_group());
    if (name == "cs3") return group_algebra(symmetric3_group());
    if (name == "dual") return algebra_dual_numbers();
    if (name == "upper2") return algebra_upper_triangular2();
    if (name == "trunc3") return algebra_truncated_poly3();
    throw std::invalid_argument("builtin_algebra: unknown name '" + name + "'");
}

/// The seven-algebra classification corpus.
inline std::vector<AssocAlgebra> classification_catalog() {
    return {algebra_complex_line(), algebra_complex_pair(), algebra_mat(2),
            group_algebra(cyclic_group(2)), algebra_dual_numbers(), algebra_upper_triangular2(),
            algebra_truncated_poly3()};
}

// ---------------------------------------------------------------------------
// The algebra tensor
// ---------------------------------------------------------------------------

/// d-fold structure constants by left-nested binary products: coordinates of
/// a_{i_1} ... a_{i_d}, emitted as the visitor walks all n^d index tuples.
inline void for_each_dfold_constant(
    const AssocAlgebra& a, int d,
    const std::function<void(std::span<const int>, std::span<const Rational>)>& visit) {
    const int n = a.dim();
    std::vector<int> idx(d, 0);
    std::vector<std::vector<Rational>> prefix(d + 1);
    // prefix[k] = product of the first k basis elements in idx
    auto basis_vec = [&](int i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = Rational(1);
        return e;
    };
    auto recompute_from = [&](int k) {
        for (int m = k; m < d; ++m)
            prefix[m + 1] = (m == 0) ? basis_vec(idx[0]) : a.multiply(prefix[m], basis_vec(idx[m]));
    };
    recompute_from(0);
    while (true) {
        visit(idx, prefix[d]);
        int k = d - 1;
        while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
        if (k < 0) break;
        recompute_from(k);
    }
}

/// C^A(x): entry at (i_1..i_d) is the linear form sum_k mu^k_{i_1..i_d} x_k.
inline HyperTensor<MultiPoly> algebra_tensor(const AssocAlgebra& a, int d, bool allow_odd = false) {
    if (d < 2) throw std::invalid_argument("algebra_tensor: d >= 2");
    if (d % 2 != 0 && !allow_odd)
        throw std::invalid_argument("algebra_tensor: odd d makes det_d trivially zero (pass allow_odd to override)");
    const int n = a.dim();
    HyperTensor<MultiPoly> t(d, n);
    for_each_dfold_constant(a, d, [&](std::span<const int> idx, std::span<const Rational> coords) {
        MultiPoly entry(n);
        for (int k = 0; k < n; ++k)
            if (!coords[k].is_zero()) entry += MultiPoly::variable(n, k).scaled(GaussianRational(coords[k]));
        std::vector<int> iv(idx.begin(), idx.end());
        t.at(iv) = std::move(entry);
    });
    return t;
}

// ---------------------------------------------------------------------------
// Jacobson radical and filtration
// ---------------------------------------------------------------------------

namespace detail {

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Rational>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][c];
        for (int j = 0; j < cols; ++j) rows[r][j] *= inv;
        for (size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            Rational f = rows[q][c];
            for (int j = 0; j < cols; ++j) rows[q][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());  // drop zero rows
    return pivots;
}

/// Nullspace basis of an m x n matrix over Q (deterministic: free columns
/// ascending, unit coordinate in the free position).
inline std::vector<std::vector<Rational>> nullspace(const SquareMatrix<Rational>& m) {
    const int n = m.side();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row space basis in rref form.
inline std::vector<std::vector<Rational>> row_basis(std::vector<std::vector<Rational>> rows) {
    rref(rows);
    return rows;
}

/// Extends `inner` (a basis of a subspace) to a basis of the span of
/// inner + candidates, picking candidates in order (leftmost-pivot
/// tie-breaking through rref). Returns the chosen complement vectors.
inline std::vector<std::vector<Rational>> extend_basis(
    const std::vector<std::vector<Rational>>& inner,
    const std::vector<std::vector<Rational>>& candidates) {
    std::vector<std::vector<Rational>> acc = inner;
    std::vector<std::vector<Rational>> chosen;
    size_t rank = row_basis(acc).size();
    acc = inner;
    for (const auto& cand : candidates) {
        auto trial = acc;
        trial.push_back(cand);
        size_t r = row_basis(trial).size();
        if (r > rank) {
            acc.push_back(cand);
            chosen.push_back(cand);
            rank = r;
        }
    }
    return chosen;
}

}  // namespace detail

struct RadicalData {
    std::vector<std::vector<Rational>> radical_basis;  // basis of J = J^1
    int nilpotency_index = 1;                          // minimal r with J^r = 0 (1 iff semisimple)
    std::vector<int> filtration_dims;                  // dim J^0 = n, dim J^1, ..., 0
    SquareMatrix<Rational> adapted_basis;              // rows: new basis in old coordinates
    std::vector<int> nu;                               // filtration degree per adapted index
    bool semisimple() const { return radical_basis.empty(); }
};

/// Radical via the characteristic-zero trace-form criterion:
/// J(A) = kernel of T_{ij} = Tr(L_{a_i a_j}); filtration by repeated ideal
/// multiplication; complements chosen by deterministic pivoting.
inline RadicalData jacobson_radical(const AssocAlgebra& a) {
    const int n = a.dim();
    RadicalData out;
    out.adapted_basis = SquareMatrix<Rational>(n);

    std::vector<Rational> trl(n);
    for (int i = 0; i < n; ++i) trl[i] = a.trace_left_mult(i);
    SquareMatrix<Rational> t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) {
                const Rational& m = a.mu(i, j, k);
                if (!m.is_zero()) acc += m * trl[k];
            }
            t.at(i, j) = acc;
        }
    out.radical_basis = detail::nullspace(t);

    // powers J^k: J^{k+1} spanned by products (J basis) x (J^k basis)
    std::vector<std::vector<std::vector<Rational>>> powers;  // powers[k] = basis of J^{k+1}
    powers.push_back(detail::row_basis(out.radical_basis));
    while (!powers.back().empty()) {
        std::vector<std::vector<Rational>> prods;
        for (const auto& u : powers.front())
            for (const auto& v : powers.back()) prods.push_back(a.multiply(u, v));
        powers.push_back(detail::row_basis(prods));
    }
    // powers.back() is empty; nilpotency index r: J^r = 0 minimal
    out.nilpotency_index = static_cast<int>(powers.size());
    if (out.radical_basis.empty()) out.nilpotency_index = 1;

    out.filtration_dims.push_back(n);
    for (const auto& p : powers) out.filtration_dims.push_back(static_cast<int>(p.size()));

    // adapted basis: S_0 complements J in A (candidates: standard basis),
    // S_k complements J^{k+1} in J^k (candidates: J^k basis vectors)
    std::vector<std::vector<Rational>> std_basis;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = Rational(1);
        std_basis.push_back(std::move(e));
    }
    std::vector<std::vector<Rational>> new_basis;
    std::vector<int> nu;
    auto s0 = detail::extend_basis(powers.front(), std_basis);
    for (auto& v : s0) {
        new_basis.push_back(v);
        nu.push_back(0);
    }
    for (size_t k = 0; k + 1 < powers.size(); ++k) {
        auto sk = detail::extend_basis(powers[k + 1], powers[k]);
        for (auto& v : sk) {
            new_basis.push_back(v);
            nu.push_back(static_cast<int>(k) + 1);
        }
    }
    if (static_cast<int>(new_basis.size()) != n)
        throw std::logic_error("jacobson_radical: adapted basis construction failed");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.adapted_basis.at(i, j) = new_basis[i][j];
    out.nu = std::move(nu);
    return out;
}

/// Structure constants in a new basis a'_i = sum_j g_{ij} a_j.
inline AssocAlgebra change_basis(const AssocAlgebra& a, const SquareMatrix<Rational>& g,
                                 const std::string& name) {
    const int n = a.dim();
    if (g.side() != n) throw std::invalid_argument("change_basis: side mismatch");
    auto ginv = inverse(g);
    std::vector<Rational> mu(static_cast<size_t>(n) * n * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> u(n), v(n);
            for (int k = 0; k < n; ++k) {
                u[k] = g.at(i, k);
                v[k] = g.at(j, k);
            }
            auto w = a.multiply(u, v);  // old coordinates
            // new coordinates: mu' = w . g^{-1}  (w as a row vector)
            for (int c = 0; c < n; ++c) {
                Rational acc(0);
                for (int m = 0; m < n; ++m) acc += w[m] * ginv.at(m, c);
                mu[(static_cast<size_t>(i) * n + j) * n + c] = acc;
            }
        }
    std::optional<std::vector<Rational>> unit;
    if (a.unit()) {
        unit = std::vector<Rational>(n, Rational(0));
        for (int c = 0; c < n; ++c) {
            Rational acc(0);
            for (int m = 0; m < n; ++m) acc += (*a.unit())[m] * ginv.at(m, c);
            (*unit)[c] = acc;
        }
    }
    return AssocAlgebra(n, std::move(mu), name, std::move(unit));
}

// ---------------------------------------------------------------------------
// Degeneration
// ---------------------------------------------------------------------------

struct DegenerationWeights {
    std::vector<long> w;  // per adapted-basis index
    long total_degree = 0;  // D = sum nu(i)
};

/// w_i = n nu(i) - D; requires a nonzero radical (D > 0).
inline DegenerationWeights degeneration_weights(const AssocAlgebra& a, const RadicalData& rad) {
    DegenerationWeights out;
    long d_total = 0;
    for (int v : rad.nu) d_total += v;
    if (d_total == 0) throw std::domain_error("degeneration_weights: semisimple algebra, no degeneration exists");
    out.total_degree = d_total;
    const long n = a.dim();
    long sum = 0;
    for (int v : rad.nu) {
        out.w.push_back(n * v - d_total);
        sum += out.w.back();
    }
    if (sum != 0) throw std::logic_error("degeneration_weights: weights do not sum to zero");
    return out;
}

struct DegenerationReport {
    bool pass = false;
    long min_exponent = 0;      // over nonzero d-fold constants, must be > 0
    bool filtration_ok = true;  // Eq. (vanish): nu(k) >= sum nu(i_l)
    size_t nonzero_constants = 0;
};

/// For every nonzero d-fold structure constant (in the filtration-adapted
/// basis) the t-exponent w_k - sum w_{i_l} is strictly positive, certifying
/// lim_{t->0} g(t)^{x d} . C^A(x) = 0.
inline DegenerationReport degeneration_exponent_check(const AssocAlgebra& a, const RadicalData& rad,
                                                      int d) {
    DegenerationReport rep;
    auto weights = degeneration_weights(a, rad);
    auto adapted = change_basis(a, rad.adapted_basis, a.name() + "_adapted");
    bool first = true;
    for_each_dfold_constant(adapted, d, [&](std::span<const int> idx, std::span<const Rational> coords) {
        for (int k = 0; k < adapted.dim(); ++k) {
            if (coords[k].is_zero()) continue;
            ++rep.nonzero_constants;
            long nu_sum = 0;
            for (int l : idx) nu_sum += rad.nu[l];
            if (rad.nu[k] < nu_sum) rep.filtration_ok = false;
            long expo = weights.w[k];
            for (int l : idx) expo -= weights.w[l];
            if (first || expo < rep.min_exponent) rep.min_exponent = expo;
            first = false;
        }
    });
    rep.pass = rep.filtration_ok && (rep.nonzero_constants == 0 || rep.min_exponent > 0);
    return rep;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct ClassificationReport {
    bool pass = false;  // (J == 0) <=> (det != 0) confirmed
    bool semisimple = false;
    bool det_vanishes = false;
    bool symbolic = true;  // false when the PIT fallback was used
    uint64_t tuples = 0;
    std::string note;
};

/// J(A) != 0 <=> det_d(C^A(x)) == 0 as a polynomial (even d > 2). Symbolic
/// expansion within budget; otherwise PIT at exact points (nonvanishing is
/// certified by any nonzero point; vanishing is reported as
/// exponent-certified together with the degeneration check).
inline ClassificationReport semisimplicity_hyperdet_test(const AssocAlgebra& a, int d,
                                                         HyperdetOptions det_opts = {},
                                                         uint64_t seed = 0xC0FFEEu) {
    ClassificationReport rep;
    auto rad = jacobson_radical(a);
    rep.semisimple = rad.semisimple();
    auto tensor = algebra_tensor(a, d);
    det_opts.strategy = Strategy::fixed_first;
    try {
        auto det = hyperdet(tensor, det_opts);
        rep.tuples = det.tuples;
        rep.det_vanishes = det.value.is_zero();
        rep.symbolic = true;
    } catch (const BudgetExceeded&) {
        rep.symbolic = false;
        std::mt19937_64 rng(seed);
        bool any_nonzero = false;
        for (int t = 0; t < 10 && !any_nonzero; ++t) {
            auto pt = random_gaussian_point(rng, a.dim());
            auto sub = substitute_point<GaussianRational>(tensor, pt);
            auto det = hyperdet(sub, det_opts);
            rep.tuples += det.tuples;
            if (!det.value.is_zero()) any_nonzero = true;
        }
        rep.det_vanishes = !any_nonzero;
        if (rep.det_vanishes) {
            auto expo = rep.semisimple ? DegenerationReport{} : degeneration_exponent_check(a, rad, d);
            rep.note = rep.semisimple ? "PIT found no nonzero point on a semisimple algebra"
                                      : (expo.pass ? "vanishing probable, exponent-certified"
                                                   : "vanishing probable, exponent check FAILED");
        }
    }
    rep.pass = (rep.semisimple == !rep.det_vanishes);
    return rep;
}

// ---------------------------------------------------------------------------
// Basis invariance
// ---------------------------------------------------------------------------

struct BasisChangeReport {
    bool tensors_match = false;       // rebuilt constants vs the lemma's transform
    bool vanishing_equivalent = true; // dets both zero / both nonzero (when computed)
    bool dets_computed = false;
    bool pass() const { return tensors_match && vanishing_equivalent; }
};

/// Lemma (basis invariance): C^{A,a'}(x') = g^{x d} . C^{A,a}(g^{-1} x'),
/// verified entrywise symbolically; on small instances also checks that
/// hyperdeterminant vanishing agrees between the two bases.
inline BasisChangeReport basis_change_check(const AssocAlgebra& a, const SquareMatrix<Rational>& g,
                                            int d, HyperdetOptions det_opts = {}) {
    BasisChangeReport rep;
    const int n = a.dim();
    auto ainv = inverse(g);
    // route (i): rebuild structure constants in the new basis
    auto a2 = change_basis(a, g, a.name() + "'");
    auto direct = algebra_tensor(a2, d);
    // route (ii): substitute x = g^{-1} x' into C^{A,a}, then apply g in every mode
    auto base = algebra_tensor(a, d);
    std::vector<MultiPoly> images;
    for (int j = 0; j < n; ++j) {
        MultiPoly form(n);
        for (int k = 0; k < n; ++k)
            if (!ainv.at(j, k).is_zero())
                form += MultiPoly::variable(n, k).scaled(GaussianRational(ainv.at(j, k)));
        images.push_back(std::move(form));
    }
    HyperTensor<MultiPoly> substituted(d, n);
    for (size_t f = 0; f < base.size(); ++f) substituted[f] = base[f].substitute(images);
    SquareMatrix<MultiPoly> gp(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gp.at(i, j) = MultiPoly::constant(n, GaussianRational(g.at(i, j)));
    auto transformed = mode_apply_uniform(substituted, gp);
    rep.tensors_match = (direct == transformed);

    if (n <= 2 && d % 2 == 0) {
        auto d1 = hyperdet(direct, det_opts);
        auto d2 = hyperdet(base, det_opts);
        rep.dets_computed = true;
        rep.vanishing_equivalent = (d1.value.is_zero() == d2.value.is_zero());
    }
    return rep;
}

}  // namespace hdlab
