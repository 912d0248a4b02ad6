/**
 * @file io.hpp
 * @brief File formats used by the CLI.
 *
 * Tensor file:  header "d n ring" (ring: rational | gaussian | complex |
 *               poly <vars>), then n^d entries in row-major order, one per
 *               line. rational "p/q", gaussian "a+bi", complex "(re,im)",
 *               poly in the canonical graded-lex form.
 * Group file:   line 1 "n", then n rows of n indices (entry g*h at row g,
 *               column h).
 * Irrep file:   blocks "rho <dim> <gaussian|complex>" followed by |G|
 *               matrices, dim lines of dim entries each.
 * Algebra file: line 1 "n", then n^2 lines of n rationals (mu^k_{ij} for
 *               row (i,j) lex, k ascending).
 *
 * Parse errors carry the offending line number.
 */
#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <variant>

#include "group.hpp"
#include "irreps.hpp"
#include "tensor.hpp"

namespace hdlab {

inline std::string ring_traits<ComplexF>::to_string(const ComplexF& x) {
    std::ostringstream os;
    os << std::setprecision(17) << "(" << x.real() << "," << x.imag() << ")";
    return os.str();
}

inline ComplexF parse_complex(const std::string& s) {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("complex entry must look like (re,im): '" + s + "'");
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("complex entry missing comma: '" + s + "'");
    return {std::stod(s.substr(1, comma - 1)), std::stod(s.substr(comma + 1, s.size() - comma - 2))};
}

struct ParseError : std::runtime_error {
    ParseError(const std::string& file, size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

enum class RingTag { rational, gaussian, complex_f, poly };

inline const char* ring_tag_name(RingTag t) {
    switch (t) {
        case RingTag::rational: return "rational";
        case RingTag::gaussian: return "gaussian";
        case RingTag::complex_f: return "complex";
        default: return "poly";
    }
}

using AnyTensor = std::variant<HyperTensor<Rational>, HyperTensor<GaussianRational>,
                               HyperTensor<ComplexF>, HyperTensor<MultiPoly>>;

namespace detail {
inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string l;
    while (std::getline(in, l)) {
        while (!l.empty() && (l.back() == '\r' || l.back() == '\n')) l.pop_back();
        lines.push_back(l);
    }
    return lines;
}
}  // namespace detail

inline AnyTensor read_tensor_file(const std::string& path) {
    auto lines = detail::read_lines(path);
    if (lines.empty()) throw ParseError(path, 1, "empty file");
    std::istringstream head(lines[0]);
    int d = 0, n = 0;
    std::string ring;
    head >> d >> n >> ring;
    if (d < 1 || n < 1 || ring.empty()) throw ParseError(path, 1, "header must be 'd n ring'");
    int vars = 0;
    if (ring == "poly" && !(head >> vars)) throw ParseError(path, 1, "poly header must be 'd n poly vars'");
    const size_t count = HyperTensor<Rational>::pow_size(n, d);
    if (lines.size() < count + 1) throw ParseError(path, lines.size(), "expected " + std::to_string(count) + " entries");
    auto entry = [&](size_t f) -> const std::string& { return lines[f + 1]; };
    auto guard = [&](size_t f, auto&& fn) {
        try {
            return fn();
        } catch (const std::exception& e) {
            throw ParseError(path, f + 2, e.what());
        }
    };
    if (ring == "rational") {
        HyperTensor<Rational> t(d, n);
        for (size_t f = 0; f < count; ++f) t[f] = guard(f, [&] { return Rational::from_string(entry(f)); });
        return t;
    }
    if (ring == "gaussian") {
        HyperTensor<GaussianRational> t(d, n);
        for (size_t f = 0; f < count; ++f)
            t[f] = guard(f, [&] { return GaussianRational::from_string(entry(f)); });
        return t;
    }
    if (ring == "complex") {
        HyperTensor<ComplexF> t(d, n);
        for (size_t f = 0; f < count; ++f) t[f] = guard(f, [&] { return parse_complex(entry(f)); });
        return t;
    }
    if (ring == "poly") {
        HyperTensor<MultiPoly> t(d, n);
        for (size_t f = 0; f < count; ++f)
            t[f] = guard(f, [&] { return MultiPoly::parse(entry(f), vars); });
        return t;
    }
    throw ParseError(path, 1, "unknown ring '" + ring + "'");
}

template <Scalar R>
void write_tensor_file(std::ostream& os, const HyperTensor<R>& t, RingTag tag, int poly_vars = 0) {
    os << t.order() << " " << t.side() << " " << ring_tag_name(tag);
    if (tag == RingTag::poly) os << " " << poly_vars;
    os << "\n";
    for (size_t f = 0; f < t.size(); ++f) os << ring_traits<R>::to_string(t[f]) << "\n";
}

inline FiniteGroup read_group_file(const std::string& path) {
    auto lines = detail::read_lines(path);
    if (lines.empty()) throw ParseError(path, 1, "empty file");
    int n = 0;
    try {
        n = std::stoi(lines[0]);
    } catch (...) {
        throw ParseError(path, 1, "first line must be the order n");
    }
    if (n < 1 || static_cast<int>(lines.size()) < n + 1) throw ParseError(path, 1, "expected n rows after the order");
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        std::istringstream row(lines[r + 1]);
        for (int c = 0; c < n; ++c) {
            int v;
            if (!(row >> v)) throw ParseError(path, r + 2, "expected " + std::to_string(n) + " entries");
            table.push_back(v);
        }
    }
    try {
        return FiniteGroup(std::move(table), path, GroupKind::custom);
    } catch (const std::exception& e) {
        throw ParseError(path, 1, std::string("invalid multiplication table: ") + e.what());
    }
}

inline void write_group_file(std::ostream& os, const FiniteGroup& g) {
    os << g.order() << "\n";
    for (int r = 0; r < g.order(); ++r) {
        for (int c = 0; c < g.order(); ++c) os << (c ? " " : "") << g.mul(r, c);
        os << "\n";
    }
}

inline IrrepCatalog read_irrep_file(const std::string& path, const FiniteGroup& g) {
    auto lines = detail::read_lines(path);
    IrrepCatalog cat;
    size_t ln = 0;
    const int n = g.order();
    while (ln < lines.size()) {
        if (lines[ln].empty()) {
            ++ln;
            continue;
        }
        std::istringstream head(lines[ln]);
        std::string kw, ring;
        int dim = 0;
        head >> kw >> dim >> ring;
        if (kw != "rho" || dim < 1) throw ParseError(path, ln + 1, "expected 'rho <dim> <gaussian|complex>'");
        ++ln;
        const bool exact = ring == "gaussian";
        if (!exact && ring != "complex") throw ParseError(path, ln, "ring must be gaussian or complex");
        std::vector<SquareMatrix<GaussianRational>> emats;
        std::vector<SquareMatrix<ComplexF>> fmats;
        for (int e = 0; e < n; ++e) {
            SquareMatrix<GaussianRational> em(dim);
            SquareMatrix<ComplexF> fm(dim);
            for (int i = 0; i < dim; ++i, ++ln) {
                if (ln >= lines.size()) throw ParseError(path, ln, "unexpected end of file in irrep block");
                std::istringstream row(lines[ln]);
                for (int j = 0; j < dim; ++j) {
                    std::string tok;
                    if (!(row >> tok)) throw ParseError(path, ln + 1, "expected " + std::to_string(dim) + " entries");
                    try {
                        if (exact) {
                            em.at(i, j) = GaussianRational::from_string(tok);
                            fm.at(i, j) = gaussian_to<ComplexF>(em.at(i, j));
                        } else {
                            fm.at(i, j) = parse_complex(tok);
                        }
                    } catch (const std::exception& ex) {
                        throw ParseError(path, ln + 1, ex.what());
                    }
                }
            }
            if (exact) emats.push_back(std::move(em));
            fmats.push_back(std::move(fm));
        }
        UnitaryIrrep r;
        r.dim = dim;
        r.exact = exact;
        r.mats = std::move(fmats);
        if (exact) {
            r.exact_mats = std::move(emats);
            r.symbolic_mats = r.exact_mats;
        }
        r.label = "rho" + std::to_string(cat.irreps.size());
        cat.irreps.push_back(std::move(r));
    }
    return cat;
}

inline AssocAlgebra read_algebra_file(const std::string& path) {
    auto lines = detail::read_lines(path);
    if (lines.empty()) throw ParseError(path, 1, "empty file");
    int n = 0;
    try {
        n = std::stoi(lines[0]);
    } catch (...) {
        throw ParseError(path, 1, "first line must be the dimension n");
    }
    if (n < 1 || static_cast<int>(lines.size()) < n * n + 1)
        throw ParseError(path, 1, "expected n^2 rows of structure constants");
    std::vector<Rational> mu(static_cast<size_t>(n) * n * n);
    for (int r = 0; r < n * n; ++r) {
        std::istringstream row(lines[r + 1]);
        for (int k = 0; k < n; ++k) {
            std::string tok;
            if (!(row >> tok)) throw ParseError(path, r + 2, "expected " + std::to_string(n) + " rationals");
            try {
                mu[static_cast<size_t>(r) * n + k] = Rational::from_string(tok);
            } catch (const std::exception& e) {
                throw ParseError(path, r + 2, e.what());
            }
        }
    }
    try {
        return AssocAlgebra(n, std::move(mu), path);
    } catch (const std::exception& e) {
        throw ParseError(path, 1, std::string("invalid structure constants: ") + e.what());
    }
}

inline void write_algebra_file(std::ostream& os, const AssocAlgebra& a) {
    const int n = a.dim();
    os << n << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) os << (k ? " " : "") << a.mu(i, j, k).to_string();
            os << "\n";
        }
}

}  // namespace hdlab
