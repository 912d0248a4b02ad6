/**
 * @file fourier.hpp
 * @brief The non-commutative group Fourier transform
 *
 *     U_{(rho,i,j), g} = alpha_rho^{-1/2} rho(g)_{ij},  alpha_rho = |G|/n_rho,
 *
 * the tensor block-diagonalization check
 *
 *     (U,...,U) . C^G(x) = direct-sum_rho alpha_rho^{d/2-1} M^(d)_{rho(x)},
 *
 * and the sign lemma det_2(U)^2 = (-1)^{(|G|-t)/2 + sum C(n_rho,2)}.
 *
 * Row order is catalog order, then (i,j) lexicographic. The normalized U
 * needs sqrt(alpha) and lives on the float path; for exact catalogs the
 * unnormalized matrix Phi_{(rho,i,j),g} = rho(g)_{ij} carries the same
 * content exactly (Phi Phi* = diag(alpha), det(U)^2 = det(Phi)^2 / prod
 * alpha^{n^2}).
 */
#pragma once

#include <random>

#include "group.hpp"
#include "irreps.hpp"
#include "matmul.hpp"

namespace hdlab {

/// Row layout of the Fourier matrix: offset of each irrep's (i,j) block.
inline std::vector<int> fourier_row_offsets(const IrrepCatalog& cat) {
    std::vector<int> off;
    int acc = 0;
    for (const auto& r : cat.irreps) {
        off.push_back(acc);
        acc += r.dim * r.dim;
    }
    return off;
}

/// Unitary Fourier matrix (float path).
inline SquareMatrix<ComplexF> fourier_matrix(const FiniteGroup& g, const IrrepCatalog& cat) {
    const int n = g.order();
    if (cat.total_dim_sq() != n) throw std::invalid_argument("fourier_matrix: catalog incomplete");
    SquareMatrix<ComplexF> u(n);
    int row = 0;
    for (const auto& r : cat.irreps) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(n) / r.dim);
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j) {
                for (int e = 0; e < n; ++e) u.at(row, e) = scale * r.mats[e].at(i, j);
                ++row;
            }
    }
    return u;
}

/// Unnormalized exact Fourier matrix Phi (exact catalogs only).
inline SquareMatrix<GaussianRational> fourier_matrix_unnormalized(const FiniteGroup& g,
                                                                  const IrrepCatalog& cat) {
    const int n = g.order();
    if (cat.total_dim_sq() != n) throw std::invalid_argument("fourier_matrix_unnormalized: catalog incomplete");
    if (!cat.all_exact()) throw std::invalid_argument("fourier_matrix_unnormalized: catalog not exact");
    SquareMatrix<GaussianRational> u(n);
    int row = 0;
    for (const auto& r : cat.irreps) {
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j) {
                for (int e = 0; e < n; ++e) u.at(row, e) = r.exact_mats[e].at(i, j);
                ++row;
            }
    }
    return u;
}

struct FourierUnitarityReport {
    double float_residual = 0.0;  // ||U U* - I||_max
    bool exact_pass = true;       // Phi Phi* == diag(alpha), exact catalogs
    bool has_exact = false;
    double abs_det_dev = 0.0;     // | |det U| - 1 |
};

inline FourierUnitarityReport fourier_unitarity_check(const FiniteGroup& g, const IrrepCatalog& cat) {
    FourierUnitarityReport rep;
    auto u = fourier_matrix(g, cat);
    rep.float_residual = (u * u.conjugate_transpose()).max_abs_dev(SquareMatrix<ComplexF>::identity(g.order()));
    rep.abs_det_dev = std::abs(std::abs(determinant(u)) - 1.0);
    if (cat.all_exact()) {
        rep.has_exact = true;
        auto phi = fourier_matrix_unnormalized(g, cat);
        auto gram = phi * phi.conjugate_transpose();
        SquareMatrix<GaussianRational> want(g.order());
        int row = 0;
        for (const auto& r : cat.irreps)
            for (int k = 0; k < r.dim * r.dim; ++k, ++row)
                want.at(row, row) = GaussianRational(Rational(BigInt(g.order()), BigInt(r.dim)));
        rep.exact_pass = (gram == want);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem (block diagonalization)
// ---------------------------------------------------------------------------

/// Numeric group tensor at a point: entry (g_1..g_d) = point[g_1 ... g_d].
template <Scalar R>
HyperTensor<R> group_tensor_at(const FiniteGroup& g, int d, std::span<const R> point) {
    const int n = g.order();
    HyperTensor<R> t(d, n);
    std::vector<int> idx(d, 0);
    size_t flat = 0;
    while (true) {
        t[flat] = point[g.product(idx)];
        ++flat;
        int k = d - 1;
        while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
        if (k < 0) break;
    }
    return t;
}

/// rho(x) = sum_g x_g rho(g) on the float path.
inline SquareMatrix<ComplexF> irrep_at_point(const UnitaryIrrep& r, std::span<const ComplexF> x) {
    SquareMatrix<ComplexF> m(r.dim);
    for (size_t e = 0; e < r.mats.size(); ++e)
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j) m.at(i, j) += x[e] * r.mats[e].at(i, j);
    return m;
}

struct BlockDiagReport {
    bool pass = false;
    double max_dev = 0.0;
    int trials = 0;
    double tol = 0.0;
};

/// Checks (U,...,U) . C^G(x_hat) == direct-sum_rho alpha_rho^{d/2-1}
/// M^(d)_{rho(x_hat)} entrywise at random complex points.
inline BlockDiagReport block_diagonalize_check(const FiniteGroup& g, const IrrepCatalog& cat, int d,
                                               int trials = 3, double tol = 1e-9,
                                               uint64_t seed = 0xC0FFEEu) {
    if (cat.total_dim_sq() != g.order())
        throw std::invalid_argument("block_diagonalize_check: catalog incomplete");
    BlockDiagReport rep;
    rep.tol = tol;
    rep.trials = trials;
    auto u = fourier_matrix(g, cat);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        std::vector<ComplexF> x(g.order());
        for (auto& v : x) v = {dist(rng), dist(rng)};
        auto lhs = mode_apply_uniform(group_tensor_at<ComplexF>(g, d, x), u);
        // expected block direct sum
        HyperTensor<ComplexF> expected(d, 1);
        bool first = true;
        for (const auto& r : cat.irreps) {
            double alpha = static_cast<double>(g.order()) / r.dim;
            double gamma = std::pow(alpha, d / 2.0 - 1.0);
            auto block = matmul_tensor<ComplexF>(r.dim, d, irrep_at_point(r, x)).scaled(ComplexF(gamma, 0.0));
            expected = first ? std::move(block) : direct_sum(expected, block);
            first = false;
        }
        rep.max_dev = std::max(rep.max_dev, max_abs_dev(lhs, expected));
    }
    rep.pass = rep.max_dev < tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Sign lemma
// ---------------------------------------------------------------------------

struct SignLemmaReport {
    bool pass = false;
    int predicted_sign = 0;        // (-1)^{(|G|-t)/2 + sum C(n_rho,2)}
    ComplexF det_u_squared;        // float path
    double det_dev = 0.0;          // |det(U)^2 - predicted|
    bool decomposition_pass = false;  // conj(U) == R U C entrywise (1e-12)
    double decomposition_dev = 0.0;
    int row_perm_sign = 0;  // permutation (rho,i,j) -> (rho,j,i)
    int col_perm_sign = 0;  // permutation g -> g^{-1}
    bool row_sign_pass = false;  // == (-1)^{sum C(n_rho,2)}
    bool col_sign_pass = false;  // == (-1)^{(|G|-t)/2}
    bool exact_pass = true;      // exact-catalog route, when available
    bool has_exact = false;
};

inline SignLemmaReport sign_lemma_check(const FiniteGroup& g, const IrrepCatalog& cat,
                                        double tol = 1e-9, double decomp_tol = 1e-12) {
    const int n = g.order();
    SignLemmaReport rep;
    const int t = g.involution_count();
    long exponent = (n - t) / 2;
    long row_exp = 0;
    for (const auto& r : cat.irreps) row_exp += static_cast<long>(r.dim) * (r.dim - 1) / 2;
    rep.predicted_sign = ((exponent + row_exp) % 2 == 0) ? 1 : -1;

    auto u = fourier_matrix(g, cat);
    ComplexF det = determinant(u);
    rep.det_u_squared = det * det;
    rep.det_dev = std::abs(rep.det_u_squared - ComplexF(static_cast<double>(rep.predicted_sign), 0.0));

    // permutations: rows (rho,i,j) -> (rho,j,i); columns g -> g^{-1}
    auto offsets = fourier_row_offsets(cat);
    std::vector<int> row_perm(n), col_perm(n);
    for (size_t rdx = 0; rdx < cat.irreps.size(); ++rdx) {
        const int dim = cat.irreps[rdx].dim;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                row_perm[offsets[rdx] + i * dim + j] = offsets[rdx] + j * dim + i;
    }
    for (int e = 0; e < n; ++e) col_perm[e] = g.inverse(e);
    rep.row_perm_sign = permutation_sign(row_perm);
    rep.col_perm_sign = permutation_sign(col_perm);
    rep.row_sign_pass = (rep.row_perm_sign == ((row_exp % 2 == 0) ? 1 : -1));
    rep.col_sign_pass = (rep.col_perm_sign == ((exponent % 2 == 0) ? 1 : -1));

    // conj(U)_{r,c} = U_{rowperm(r), colperm(c)}
    double dev = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            dev = std::max(dev, std::abs(std::conj(u.at(r, c)) - u.at(row_perm[r], col_perm[c])));
    rep.decomposition_dev = dev;
    rep.decomposition_pass = dev < decomp_tol;

    if (cat.all_exact()) {
        rep.has_exact = true;
        auto phi = fourier_matrix_unnormalized(g, cat);
        // det(U)^2 = det(Phi)^2 / prod alpha_rho^{n_rho^2}
        GaussianRational det_phi = determinant(phi);
        Rational denom(1);
        for (const auto& r : cat.irreps)
            denom *= pow_rat(Rational(BigInt(n), BigInt(r.dim)), static_cast<unsigned long>(r.dim) * r.dim);
        GaussianRational det_u_sq = det_phi * det_phi;
        det_u_sq = GaussianRational(det_u_sq.re() / denom, det_u_sq.im() / denom);
        if (!(det_u_sq == GaussianRational(rep.predicted_sign))) rep.exact_pass = false;
        // exact decomposition conj(Phi) = R Phi C
        for (int r = 0; r < n && rep.exact_pass; ++r)
            for (int c = 0; c < n; ++c)
                if (!(phi.at(r, c).conj() == phi.at(row_perm[r], col_perm[c]))) {
                    rep.exact_pass = false;
                    break;
                }
    }

    rep.pass = rep.det_dev < tol && rep.decomposition_pass && rep.row_sign_pass && rep.col_sign_pass &&
               rep.exact_pass;
    return rep;
}

}  // namespace hdlab
