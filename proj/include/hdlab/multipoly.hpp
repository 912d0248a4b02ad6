/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over the Gaussian rationals.
 *
 * Houses the formal variables x_g attached to group elements and x_ij
 * attached to matrix entries. Terms live in a map ordered by graded
 * lexicographic order (descending), which doubles as the canonical
 * serialization order for golden files.
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace hdlab {

/// Exponent vector; length equals the variable count of the polynomial.
using Monomial = std::vector<uint32_t>;

/// Graded lex, descending: higher total degree first, then lexicographically
/// larger exponent vector first.
struct GradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, GradedLexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, GaussianRational c) {
        MultiPoly p(nvars);
        p.add_term(Monomial(nvars, 0), std::move(c));
        return p;
    }
    static MultiPoly variable(int nvars, int k) {
        if (k < 0 || k >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
        MultiPoly p(nvars);
        Monomial m(nvars, 0);
        m[k] = 1;
        p.add_term(std::move(m), GaussianRational(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    uint64_t total_degree() const {  // 0 for the zero polynomial
        if (terms_.empty()) return 0;
        uint64_t d = 0;
        for (auto e : terms_.begin()->first) d += e;  // leading term has max degree
        return d;
    }

    void add_term(Monomial m, GaussianRational c) {
        if (static_cast<int>(m.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::add_term: exponent vector length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussianRational coefficient(const Monomial& m) const {
        if (static_cast<int>(m.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::coefficient: exponent vector length mismatch");
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    /// Variable-free polynomials act as constants over any variable set.
    MultiPoly lifted(int nvars) const {
        if (nvars_ == nvars) return *this;
        if (nvars_ != 0) throw std::invalid_argument("MultiPoly: variable count mismatch");
        MultiPoly r(nvars);
        for (const auto& [m, c] : terms_) r.add_term(Monomial(nvars, 0), c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        if (nvars_ != o.nvars_) {
            if (nvars_ == 0) return *this = lifted(o.nvars_) += o;
            return *this += o.lifted(nvars_);
        }
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        if (nvars_ != o.nvars_) {
            if (nvars_ == 0) return *this = lifted(o.nvars_) -= o;
            return *this -= o.lifted(nvars_);
        }
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) {
            if (a.nvars_ == 0) return a.lifted(b.nvars_) * b;
            return a * b.lifted(a.nvars_);
        }
        MultiPoly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (int k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) {
            if (a.nvars_ == 0) return a.lifted(b.nvars_) == b;
            if (b.nvars_ == 0) return a == b.lifted(a.nvars_);
            return false;
        }
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const GaussianRational& c) const {
        MultiPoly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    /// Value at a point; R is GaussianRational (exact) or ComplexF.
    /// Variable-free polynomials evaluate as constants at any point.
    template <Scalar R>
    R eval(std::span<const R> point) const {
        if (nvars_ != 0 && static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
        R acc = ring_traits<R>::zero();
        for (const auto& [m, c] : terms_) {
            R t = gaussian_to<R>(c);
            for (int k = 0; k < nvars_; ++k)
                if (m[k] > 0) t = t * ring_pow(point[k], m[k]);
            acc = acc + t;
        }
        return acc;
    }

    /// Substitute x_k -> images[k]; images share one variable count.
    MultiPoly substitute(std::span<const MultiPoly> images) const {
        if (nvars_ == 0) return *this;
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::substitute: image count mismatch");
        int out_vars = images.empty() ? 0 : images[0].nvars();
        MultiPoly acc(out_vars);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = MultiPoly::constant(out_vars, c);
            for (int k = 0; k < nvars_; ++k)
                for (uint32_t e = 0; e < m[k]; ++e) t = t * images[k];
            acc += t;
        }
        return acc;
    }

    /// Canonical text form: terms in graded-lex descending order, each as
    /// "coeff * x0^e0*x1^e1" (coefficient always explicit, zero exponents
    /// omitted); the zero polynomial prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_string();
            bool any = false;
            for (int k = 0; k < nvars_; ++k) {
                if (m[k] == 0) continue;
                os << (any ? "*" : " * ") << "x" << k;
                if (m[k] > 1) os << "^" << m[k];
                any = true;
            }
        }
        return os.str();
    }

    /// Parses the format produced by to_string.
    static MultiPoly parse(const std::string& s, int nvars) {
        MultiPoly p(nvars);
        if (s == "0") return p;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(" + ", pos);
            std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next == std::string::npos ? s.size() : next + 3;
            Monomial m(nvars, 0);
            GaussianRational coeff;
            size_t star = term.find(" * ");
            if (star == std::string::npos) {
                coeff = GaussianRational::from_string(term);
            } else {
                coeff = GaussianRational::from_string(term.substr(0, star));
                std::string vars = term.substr(star + 3);
                size_t vp = 0;
                while (vp < vars.size()) {
                    size_t ve = vars.find('*', vp);
                    std::string v = vars.substr(vp, ve == std::string::npos ? ve : ve - vp);
                    vp = ve == std::string::npos ? vars.size() : ve + 1;
                    if (v.empty() || v[0] != 'x') throw std::invalid_argument("MultiPoly::parse: bad variable '" + v + "'");
                    size_t caret = v.find('^');
                    int idx = std::stoi(v.substr(1, caret == std::string::npos ? caret : caret - 1));
                    uint32_t e = caret == std::string::npos ? 1 : static_cast<uint32_t>(std::stoul(v.substr(caret + 1)));
                    if (idx < 0 || idx >= nvars) throw std::invalid_argument("MultiPoly::parse: variable index out of range");
                    m[idx] += e;
                }
            }
            p.add_term(std::move(m), std::move(coeff));
        }
        return p;
    }

private:
    int nvars_ = 0;
    TermMap terms_;
};

template <>
struct ring_traits<MultiPoly> {
    static constexpr bool exact = true;
    static constexpr bool is_field = false;
    // The zero/one of the variable-free ring; tensors carry polynomials with
    // a uniform positive nvars and use make_* helpers below instead.
    static MultiPoly zero() { return MultiPoly(0); }
    static MultiPoly one() { return MultiPoly::constant(0, GaussianRational(1)); }
    static MultiPoly from_long(long v) { return MultiPoly::constant(0, GaussianRational(v)); }
    static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
    static MultiPoly conj(const MultiPoly& x) {
        MultiPoly r(x.nvars());
        for (const auto& [m, c] : x.terms()) r.add_term(m, c.conj());
        return r;
    }
    static MultiPoly divide_by_big(const MultiPoly& x, const BigInt& m) {
        return x.scaled(GaussianRational(Rational(BigInt(1), m)));
    }
    static double abs_approx(const MultiPoly&) = delete;  // no float view of a polynomial
    static std::string to_string(const MultiPoly& x) { return x.to_string(); }
};

/// poly_eval with an explicit dimension check, as the operation surface.
template <Scalar R>
R poly_eval(const MultiPoly& p, std::span<const R> point) {
    return p.template eval<R>(point);
}

/// Stored coefficient (or zero) of the given exponent vector.
inline GaussianRational poly_coefficient(const MultiPoly& p, const Monomial& m) {
    return p.coefficient(m);
}

}  // namespace hdlab
