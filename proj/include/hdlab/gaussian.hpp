/**
 * @file gaussian.hpp
 * @brief Gaussian rationals Q(i): exact complex numbers a + bi with rational
 * a, b. House the exact unitary irrep entries (e.g. the quaternion-group
 * 2-dim irrep) and all exact polynomial coefficients.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace hdlab {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT: implicit on purpose
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    /// i^k for any integer k.
    static GaussianRational i_power(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = *this;
        num *= o.conj();
        re_ = num.re_ / n;
        im_ = num.im_ / n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical form "a+bi": "0", "3", "-1/2", "2i", "1/2-3i".
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string im_part = im_.to_string() + "i";
        if (re_.is_zero()) return im_part;
        if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
        return re_.to_string() + im_part;  // minus sign comes with im
    }

    /// Parses the canonical "a+bi" forms produced by to_string.
    static GaussianRational from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("GaussianRational: empty string");
        if (s.back() != 'i') return GaussianRational(Rational::from_string(s));
        std::string body = s.substr(0, s.size() - 1);
        // split at the last '+'/'-' that is not the leading sign
        for (size_t p = body.size(); p-- > 1;) {
            if (body[p] == '+' || body[p] == '-') {
                std::string re_s = body.substr(0, p);
                std::string im_s = (body[p] == '+') ? body.substr(p + 1) : body.substr(p);
                return {Rational::from_string(re_s), Rational::from_string(im_s)};
            }
        }
        if (body.empty() || body == "+") return GaussianRational(Rational(0), Rational(1));
        if (body == "-") return GaussianRational(Rational(0), Rational(-1));
        return {Rational(0), Rational::from_string(body)};
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace hdlab
