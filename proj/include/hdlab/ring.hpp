/**
 * @file ring.hpp
 * @brief The scalar-ring contract every module is generic over.
 *
 * Four instances: exact rationals, Gaussian rationals, sparse multivariate
 * polynomials (declared in multipoly.hpp) and complex doubles. Exact rings
 * compare exactly; the float ring only ever compares through an explicit
 * tolerance supplied by the caller.
 */
#pragma once

#include <cmath>
#include <complex>
#include <concepts>

#include "gaussian.hpp"
#include "rational.hpp"

namespace hdlab {

/// Double-precision complex scalar (the float path).
using ComplexF = std::complex<double>;

/// Default absolute tolerance for float comparisons where an operation does
/// not specify its own. Never applied implicitly to exact rings.
inline constexpr double kDefaultFloatTol = 1e-9;

template <class R>
struct ring_traits;  // specialized per ring below

template <>
struct ring_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool is_field = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long v) { return Rational(v); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational conj(const Rational& x) { return x; }
    static Rational divide_by_big(const Rational& x, const BigInt& m) {
        return x / Rational(m);
    }
    static double abs_approx(const Rational& x) { return std::abs(x.to_double()); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct ring_traits<GaussianRational> {
    static constexpr bool exact = true;
    static constexpr bool is_field = true;
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_long(long v) { return GaussianRational(v); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
    static GaussianRational divide_by_big(const GaussianRational& x, const BigInt& m) {
        Rational r(m);
        return {x.re() / r, x.im() / r};
    }
    static double abs_approx(const GaussianRational& x) { return std::sqrt(x.norm().to_double()); }
    static std::string to_string(const GaussianRational& x) { return x.to_string(); }
};

template <>
struct ring_traits<ComplexF> {
    static constexpr bool exact = false;
    static constexpr bool is_field = true;
    static ComplexF zero() { return {0.0, 0.0}; }
    static ComplexF one() { return {1.0, 0.0}; }
    static ComplexF from_long(long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const ComplexF& x) { return x.real() == 0.0 && x.imag() == 0.0; }
    static ComplexF conj(const ComplexF& x) { return std::conj(x); }
    static ComplexF divide_by_big(const ComplexF& x, const BigInt& m) { return x / m.get_d(); }
    static double abs_approx(const ComplexF& x) { return std::abs(x); }
    static std::string to_string(const ComplexF& x);  // defined in io.hpp
};

template <class R>
concept Scalar = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a* b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<R>::zero() } -> std::convertible_to<R>;
    { ring_traits<R>::one() } -> std::convertible_to<R>;
    { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::conj(a) } -> std::convertible_to<R>;
};

template <Scalar R>
R ring_pow(const R& base, unsigned long e) {
    R r = ring_traits<R>::one();
    R b = base;
    for (unsigned long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        b = b * b;
    }
    return r;
}

/// Lift an exact Gaussian rational into ring R (identity on Gaussians,
/// numeric conversion for the float path).
template <Scalar R>
R gaussian_to(const GaussianRational& z);

template <>
inline GaussianRational gaussian_to<GaussianRational>(const GaussianRational& z) {
    return z;
}
template <>
inline ComplexF gaussian_to<ComplexF>(const GaussianRational& z) {
    return {z.re().to_double(), z.im().to_double()};
}
template <>
inline Rational gaussian_to<Rational>(const GaussianRational& z) {
    if (!z.is_real()) throw std::domain_error("gaussian_to<Rational>: value not real");
    return z.re();
}

inline bool approx_eq(const ComplexF& a, const ComplexF& b, double abs_tol) {
    return std::abs(a - b) <= abs_tol;
}

inline double rel_dev(const ComplexF& got, const ComplexF& want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace hdlab
