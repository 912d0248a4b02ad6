/**
 * @file irreps.hpp
 * @brief Unitary irreducible representation catalogs for the builtin groups.
 *
 * Entries are exact Gaussian rationals where the group allows it (powers of
 * i suffice for Z1/Z2/Z4 and their products, and for all of Q8); other
 * groups go through the float path. Where the unitary realization is
 * irrational but the character is rational (the 2-dim irrep of S3), the
 * catalog additionally carries an exact equivalent realization: determinant
 * factors and traces are conjugation-invariant, so symbolic work can use it
 * while unitarity-dependent checks stay on the float matrices.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace hdlab {

struct UnitaryIrrep {
    int dim = 1;
    bool exact = false;  // unitary matrices have exact Gaussian-rational entries
    std::vector<SquareMatrix<GaussianRational>> exact_mats;  // when exact
    std::vector<SquareMatrix<ComplexF>> mats;                // float view, always present
    /// Exact realization equivalent to the unitary one (not necessarily
    /// unitary itself); present whenever the character is Gaussian-rational.
    std::optional<std::vector<SquareMatrix<GaussianRational>>> symbolic_mats;
    std::string label;

    GaussianRational exact_trace(int g) const {
        const auto& m = (*symbolic_mats)[g];
        GaussianRational t(0);
        for (int i = 0; i < dim; ++i) t += m.at(i, i);
        return t;
    }
};

struct IrrepCatalog {
    std::vector<UnitaryIrrep> irreps;

    int total_dim_sq() const {
        int s = 0;
        for (const auto& r : irreps) s += r.dim * r.dim;
        return s;
    }
    bool all_exact() const {
        for (const auto& r : irreps)
            if (!r.exact) return false;
        return true;
    }
    bool all_symbolic() const {
        for (const auto& r : irreps)
            if (!r.symbolic_mats) return false;
        return true;
    }
};

namespace detail {

inline SquareMatrix<ComplexF> to_float(const SquareMatrix<GaussianRational>& m) {
    SquareMatrix<ComplexF> f(m.side());
    for (int i = 0; i < m.side(); ++i)
        for (int j = 0; j < m.side(); ++j) f.at(i, j) = gaussian_to<ComplexF>(m.at(i, j));
    return f;
}

inline UnitaryIrrep make_exact_irrep(std::vector<SquareMatrix<GaussianRational>> mats,
                                     std::string label) {
    UnitaryIrrep r;
    r.dim = mats.front().side();
    r.exact = true;
    r.exact_mats = std::move(mats);
    r.mats.reserve(r.exact_mats.size());
    for (const auto& m : r.exact_mats) r.mats.push_back(to_float(m));
    r.symbolic_mats = r.exact_mats;
    r.label = std::move(label);
    return r;
}

inline UnitaryIrrep make_float_irrep(std::vector<SquareMatrix<ComplexF>> mats, std::string label) {
    UnitaryIrrep r;
    r.dim = mats.front().side();
    r.exact = false;
    r.mats = std::move(mats);
    r.label = std::move(label);
    return r;
}

inline SquareMatrix<ComplexF> rotation2(double theta) {
    SquareMatrix<ComplexF> m(2);
    m.at(0, 0) = std::cos(theta);
    m.at(0, 1) = -std::sin(theta);
    m.at(1, 0) = std::sin(theta);
    m.at(1, 1) = std::cos(theta);
    return m;
}

}  // namespace detail

/// Catalog for the builtin groups. Ordering is fixed (it determines the
/// Fourier-matrix row order): trivial first, then remaining 1-dim irreps,
/// then 2-dim irreps.
inline IrrepCatalog builtin_irreps(const FiniteGroup& g) {
    IrrepCatalog cat;
    const int n = g.order();
    using GR = GaussianRational;

    switch (g.kind()) {
        case GroupKind::cyclic: {
            const bool exact = (n == 1 || n == 2 || n == 4);
            for (int a = 0; a < n; ++a) {
                if (exact) {
                    std::vector<SquareMatrix<GR>> mats;
                    for (int e = 0; e < n; ++e) {
                        SquareMatrix<GR> m(1);
                        m.at(0, 0) = GR::i_power(static_cast<long>(a) * e * (4 / n));
                        mats.push_back(m);
                    }
                    cat.irreps.push_back(detail::make_exact_irrep(std::move(mats), "chi" + std::to_string(a)));
                } else {
                    std::vector<SquareMatrix<ComplexF>> mats;
                    for (int e = 0; e < n; ++e) {
                        SquareMatrix<ComplexF> m(1);
                        double th = 2.0 * std::numbers::pi * a * e / n;
                        m.at(0, 0) = {std::cos(th), std::sin(th)};
                        mats.push_back(m);
                    }
                    cat.irreps.push_back(detail::make_float_irrep(std::move(mats), "chi" + std::to_string(a)));
                }
            }
            break;
        }
        case GroupKind::product_cyclic: {
            const auto& ns = g.params();
            bool exact = true;
            for (int f : ns)
                if (f != 1 && f != 2 && f != 4) exact = false;
            auto decode = [&](int e) {
                std::vector<int> digits(ns.size());
                for (size_t f = ns.size(); f-- > 0;) {
                    digits[f] = e % ns[f];
                    e /= ns[f];
                }
                return digits;
            };
            for (int a = 0; a < n; ++a) {
                auto da = decode(a);
                if (exact) {
                    std::vector<SquareMatrix<GR>> mats;
                    for (int e = 0; e < n; ++e) {
                        auto de = decode(e);
                        long ipow = 0;
                        for (size_t f = 0; f < ns.size(); ++f)
                            ipow += static_cast<long>(da[f]) * de[f] * (4 / ns[f]);
                        SquareMatrix<GR> m(1);
                        m.at(0, 0) = GR::i_power(ipow);
                        mats.push_back(m);
                    }
                    cat.irreps.push_back(detail::make_exact_irrep(std::move(mats), "chi" + std::to_string(a)));
                } else {
                    std::vector<SquareMatrix<ComplexF>> mats;
                    for (int e = 0; e < n; ++e) {
                        auto de = decode(e);
                        double th = 0.0;
                        for (size_t f = 0; f < ns.size(); ++f)
                            th += 2.0 * std::numbers::pi * da[f] * de[f] / ns[f];
                        SquareMatrix<ComplexF> m(1);
                        m.at(0, 0) = {std::cos(th), std::sin(th)};
                        mats.push_back(m);
                    }
                    cat.irreps.push_back(detail::make_float_irrep(std::move(mats), "chi" + std::to_string(a)));
                }
            }
            break;
        }
        case GroupKind::dihedral: {
            const int m = g.params()[0];  // order 2m
            auto rot_of = [&](int e) { return e % m; };
            auto ref_of = [&](int e) { return e / m; };
            auto one_dim = [&](int rsign, int ssign, const std::string& label) {
                std::vector<SquareMatrix<ComplexF>> mats;
                for (int e = 0; e < 2 * m; ++e) {
                    SquareMatrix<ComplexF> v(1);
                    double val = 1.0;
                    if (rsign < 0 && rot_of(e) % 2) val = -val;
                    if (ssign < 0 && ref_of(e)) val = -val;
                    v.at(0, 0) = val;
                    mats.push_back(v);
                }
                cat.irreps.push_back(detail::make_float_irrep(std::move(mats), label));
            };
            one_dim(+1, +1, "triv");
            one_dim(+1, -1, "det");
            if (m % 2 == 0) {
                one_dim(-1, +1, "alt1");
                one_dim(-1, -1, "alt2");
            }
            const int two_dims = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
            for (int h = 1; h <= two_dims; ++h) {
                std::vector<SquareMatrix<ComplexF>> mats;
                SquareMatrix<ComplexF> refl(2);
                refl.at(0, 0) = 1.0;
                refl.at(1, 1) = -1.0;
                for (int e = 0; e < 2 * m; ++e) {
                    auto r = detail::rotation2(2.0 * std::numbers::pi * h * rot_of(e) / m);
                    mats.push_back(ref_of(e) ? r * refl : r);
                }
                cat.irreps.push_back(detail::make_float_irrep(std::move(mats), "rho" + std::to_string(h)));
            }
            break;
        }
        case GroupKind::symmetric3: {
            const auto& elems = detail::s3_elements();
            // trivial and sign characters, exact
            std::vector<SquareMatrix<GR>> triv, sgn;
            for (int e = 0; e < 6; ++e) {
                SquareMatrix<GR> a(1), b(1);
                a.at(0, 0) = GR(1);
                std::vector<int> p(elems[e].begin(), elems[e].end());
                b.at(0, 0) = GR(permutation_sign(p));
                triv.push_back(a);
                sgn.push_back(b);
            }
            cat.irreps.push_back(detail::make_exact_irrep(std::move(triv), "triv"));
            cat.irreps.push_back(detail::make_exact_irrep(std::move(sgn), "sgn"));
            // standard 2-dim irrep: float unitary realization on the
            // sum-zero plane with orthonormal basis, plus the exact integral
            // realization in the basis (e0-e1, e1-e2).
            {
                const double u1[3] = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
                const double u2[3] = {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)};
                const double* basis[2] = {u1, u2};
                std::vector<SquareMatrix<ComplexF>> mats;
                std::vector<SquareMatrix<GR>> sym;
                for (int e = 0; e < 6; ++e) {
                    const auto& perm = elems[e];
                    int inv[3];
                    for (int x = 0; x < 3; ++x) inv[perm[x]] = x;
                    SquareMatrix<ComplexF> m(2);
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b) {
                            double acc = 0.0;  // <u_a, pi.u_b>, (pi.v)_x = v_{pi^{-1}(x)}
                            for (int x = 0; x < 3; ++x) acc += basis[a][x] * basis[b][inv[x]];
                            m.at(a, b) = acc;
                        }
                    mats.push_back(m);
                    // integral model: coords of v on (f1, f2) are (v0, -v2)
                    SquareMatrix<GR> s(2);
                    // pi.f1 = e_{pi(0)} - e_{pi(1)};  pi.f2 = e_{pi(1)} - e_{pi(2)}
                    auto coords = [&](int from, int to, int col) {
                        int v[3] = {0, 0, 0};
                        v[perm[from]] += 1;
                        v[perm[to]] -= 1;
                        s.at(0, col) = GR(v[0]);
                        s.at(1, col) = GR(-v[2]);
                    };
                    coords(0, 1, 0);
                    coords(1, 2, 1);
                    sym.push_back(s);
                }
                UnitaryIrrep two = detail::make_float_irrep(std::move(mats), "std");
                two.symbolic_mats = std::move(sym);
                cat.irreps.push_back(std::move(two));
            }
            break;
        }
        case GroupKind::quaternion8: {
            // element order 1,-1,i,-i,j,-j,k,-k; axis = g/2
            auto one_dim = [&](int ei, int ej, const std::string& label) {
                std::vector<SquareMatrix<GR>> mats;
                for (int e = 0; e < 8; ++e) {
                    int axis = e / 2;
                    int v = 1;
                    if (axis == 1) v = ei;
                    if (axis == 2) v = ej;
                    if (axis == 3) v = ei * ej;
                    SquareMatrix<GR> m(1);
                    m.at(0, 0) = GR(v);
                    mats.push_back(m);
                }
                cat.irreps.push_back(detail::make_exact_irrep(std::move(mats), label));
            };
            one_dim(+1, +1, "triv");
            one_dim(+1, -1, "chi_i");
            one_dim(-1, +1, "chi_j");
            one_dim(-1, -1, "chi_k");
            {
                std::vector<SquareMatrix<GR>> base(4, SquareMatrix<GR>(2));
                base[0] = SquareMatrix<GR>::identity(2);
                base[1].at(0, 0) = GR::i();
                base[1].at(1, 1) = -GR::i();
                base[2].at(0, 1) = GR(1);
                base[2].at(1, 0) = GR(-1);
                base[3].at(0, 1) = GR::i();
                base[3].at(1, 0) = GR::i();
                std::vector<SquareMatrix<GR>> mats;
                for (int e = 0; e < 8; ++e) {
                    auto m = base[e / 2];
                    if (e % 2) m = m.scaled(GR(-1));
                    mats.push_back(m);
                }
                cat.irreps.push_back(detail::make_exact_irrep(std::move(mats), "rho2"));
            }
            break;
        }
        case GroupKind::custom:
            throw std::invalid_argument("builtin_irreps: no catalog for custom groups; supply an irrep file");
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Catalog validation
// ---------------------------------------------------------------------------

struct CatalogValidation {
    bool complete = false;        // sum of dim^2 == |G|
    bool homomorphism = false;    // rho(g)rho(h) = rho(gh), all irreps
    bool unitary = false;         // rho(g) rho(g)* = I
    bool symbolic_equivalent = true;  // symbolic models are homomorphisms with matching traces
    double max_residual = 0.0;    // float paths
    bool pass() const { return complete && homomorphism && unitary && symbolic_equivalent; }
};

inline CatalogValidation validate_catalog(const FiniteGroup& g, const IrrepCatalog& cat,
                                          double tol = 1e-12) {
    CatalogValidation v;
    v.complete = (cat.total_dim_sq() == g.order());
    v.homomorphism = true;
    v.unitary = true;
    for (const auto& r : cat.irreps) {
        if (r.exact) {
            for (int a = 0; a < g.order(); ++a) {
                for (int b = 0; b < g.order(); ++b)
                    if (!(r.exact_mats[a] * r.exact_mats[b] == r.exact_mats[g.mul(a, b)]))
                        v.homomorphism = false;
                if (!(r.exact_mats[a] * r.exact_mats[a].conjugate_transpose() ==
                      SquareMatrix<GaussianRational>::identity(r.dim)))
                    v.unitary = false;
            }
        } else {
            auto ident = SquareMatrix<ComplexF>::identity(r.dim);
            for (int a = 0; a < g.order(); ++a) {
                for (int b = 0; b < g.order(); ++b) {
                    double dev = (r.mats[a] * r.mats[b]).max_abs_dev(r.mats[g.mul(a, b)]);
                    v.max_residual = std::max(v.max_residual, dev);
                    if (dev > tol) v.homomorphism = false;
                }
                double dev = (r.mats[a] * r.mats[a].conjugate_transpose()).max_abs_dev(ident);
                v.max_residual = std::max(v.max_residual, dev);
                if (dev > tol) v.unitary = false;
            }
        }
        if (r.symbolic_mats && !r.exact) {
            // exact model must itself be a homomorphism with the same traces
            const auto& sm = *r.symbolic_mats;
            for (int a = 0; a < g.order(); ++a) {
                for (int b = 0; b < g.order(); ++b)
                    if (!(sm[a] * sm[b] == sm[g.mul(a, b)])) v.symbolic_equivalent = false;
                ComplexF ft = 0.0;
                for (int i = 0; i < r.dim; ++i) ft += r.mats[a].at(i, i);
                GaussianRational st = r.exact_trace(a);
                double dev = std::abs(ft - gaussian_to<ComplexF>(st));
                v.max_residual = std::max(v.max_residual, dev);
                if (dev > tol) v.symbolic_equivalent = false;
            }
        }
    }
    return v;
}

/// Schur orthogonality, Eq. (orth): sum_g rho(g)_{ij} conj(sigma(g)_{kl}) =
/// delta_{rho sigma} delta_{ik} delta_{jl} |G|/n_rho.
struct OrthogonalityReport {
    bool exact_pass = true;   // meaningful when the catalog is exact
    double max_residual = 0;  // float path
};

inline OrthogonalityReport schur_orthogonality(const FiniteGroup& g, const IrrepCatalog& cat) {
    OrthogonalityReport rep;
    const int R = static_cast<int>(cat.irreps.size());
    const bool exact = cat.all_exact();
    for (int p = 0; p < R; ++p)
        for (int q = 0; q < R; ++q) {
            const auto& rho = cat.irreps[p];
            const auto& sig = cat.irreps[q];
            for (int i = 0; i < rho.dim; ++i)
                for (int j = 0; j < rho.dim; ++j)
                    for (int k = 0; k < sig.dim; ++k)
                        for (int l = 0; l < sig.dim; ++l) {
                            if (exact) {
                                GaussianRational acc(0);
                                for (int e = 0; e < g.order(); ++e)
                                    acc += rho.exact_mats[e].at(i, j) * sig.exact_mats[e].at(k, l).conj();
                                GaussianRational want(0);
                                if (p == q && i == k && j == l)
                                    want = GaussianRational(Rational(BigInt(g.order()), BigInt(rho.dim)));
                                if (!(acc == want)) rep.exact_pass = false;
                            } else {
                                ComplexF acc = 0.0;
                                for (int e = 0; e < g.order(); ++e)
                                    acc += rho.mats[e].at(i, j) * std::conj(sig.mats[e].at(k, l));
                                ComplexF want = 0.0;
                                if (p == q && i == k && j == l)
                                    want = static_cast<double>(g.order()) / rho.dim;
                                rep.max_residual = std::max(rep.max_residual, std::abs(acc - want));
                            }
                        }
        }
    return rep;
}

}  // namespace hdlab
