/**
 * @file group.hpp
 * @brief Finite groups as validated multiplication tables on 0..n-1.
 *
 * Builtins cover the paper's desk-scale corpus: cyclic groups, products of
 * cyclics, dihedral groups, S3 and the quaternion group Q8. User tables
 * (order <= 24) are validated exhaustively before use.
 */
#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdlab {

enum class GroupKind { cyclic, product_cyclic, dihedral, symmetric3, quaternion8, custom };

class FiniteGroup {
public:
    FiniteGroup(std::vector<int> table, std::string name, GroupKind kind = GroupKind::custom,
                std::vector<int> params = {})
        : name_(std::move(name)), kind_(kind), params_(std::move(params)) {
        size_t n2 = table.size();
        n_ = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n2))));
        if (static_cast<size_t>(n_) * n_ != n2)
            throw std::invalid_argument("FiniteGroup: table is not square");
        if (n_ < 1 || n_ > 24) throw std::invalid_argument("FiniteGroup: order must be in 1..24");
        table_ = std::move(table);
        validate();
    }

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    GroupKind kind() const { return kind_; }
    const std::vector<int>& params() const { return params_; }
    int identity() const { return identity_; }
    int inverse(int g) const { return inverse_[g]; }
    int mul(int g, int h) const { return table_[static_cast<size_t>(g) * n_ + h]; }
    const std::vector<int>& table() const { return table_; }

    /// t = #{g : g = g^{-1}} (identity included).
    int involution_count() const { return involutions_; }

    /// Product g_1 ... g_k left to right.
    int product(std::span<const int> gs) const {
        int acc = identity_;
        for (int g : gs) acc = mul(acc, g);
        return acc;
    }

private:
    void validate() {
        const int n = n_;
        for (int v : table_)
            if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
        // Latin square
        for (int r = 0; r < n; ++r) {
            std::vector<bool> seen_row(n, false), seen_col(n, false);
            for (int c = 0; c < n; ++c) {
                if (seen_row[mul(r, c)]) throw std::invalid_argument("FiniteGroup: row not a permutation");
                seen_row[mul(r, c)] = true;
                if (seen_col[mul(c, r)]) throw std::invalid_argument("FiniteGroup: column not a permutation");
                seen_col[mul(c, r)] = true;
            }
        }
        // identity
        identity_ = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int g = 0; g < n; ++g)
                if (mul(e, g) != g || mul(g, e) != g) {
                    ok = false;
                    break;
                }
            if (ok) {
                identity_ = e;
                break;
            }
        }
        if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
        // associativity, exhaustive (n <= 24 keeps this at <= 13824 triples)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FiniteGroup: associativity fails");
        // inverses
        inverse_.assign(n, -1);
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                    inverse_[g] = h;
                    break;
                }
        for (int g = 0; g < n; ++g)
            if (inverse_[g] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
        involutions_ = 0;
        for (int g = 0; g < n; ++g)
            if (inverse_[g] == g) ++involutions_;
    }

    int n_ = 0;
    std::vector<int> table_;
    std::string name_;
    GroupKind kind_;
    std::vector<int> params_;
    int identity_ = 0;
    std::vector<int> inverse_;
    int involutions_ = 0;
};

inline FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1");
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup(std::move(t), "Z" + std::to_string(n), GroupKind::cyclic, {n});
}

/// Direct product of cyclic groups; elements in mixed-radix order, factor 0
/// most significant.
inline FiniteGroup product_of_cyclics(const std::vector<int>& ns) {
    if (ns.empty()) throw std::invalid_argument("product_of_cyclics: need at least one factor");
    int n = 1;
    for (int k : ns) {
        if (k < 1) throw std::invalid_argument("product_of_cyclics: factors >= 1");
        n *= k;
    }
    auto decode = [&](int g) {
        std::vector<int> digits(ns.size());
        for (size_t f = ns.size(); f-- > 0;) {
            digits[f] = g % ns[f];
            g /= ns[f];
        }
        return digits;
    };
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto da = decode(a), db = decode(b);
            int enc = 0;
            for (size_t f = 0; f < ns.size(); ++f) enc = enc * ns[f] + (da[f] + db[f]) % ns[f];
            t[static_cast<size_t>(a) * n + b] = enc;
        }
    std::string name;
    for (size_t f = 0; f < ns.size(); ++f) name += (f ? "x" : "") + ("Z" + std::to_string(ns[f]));
    return FiniteGroup(std::move(t), name, GroupKind::product_cyclic, ns);
}

/// Dihedral group of order 2n; element r^a s^b has index a + n*b.
inline FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_group: n >= 1");
    const int N = 2 * n;
    auto idx = [&](int a, int b) { return ((a % n) + n) % n + n * (((b % 2) + 2) % 2); };
    std::vector<int> t(static_cast<size_t>(N) * N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < 2; ++e) {
                    // (r^a s^b)(r^c s^e) = r^{a + c(-1)^b} s^{b+e}
                    int a2 = b == 0 ? a + c : a - c;
                    t[static_cast<size_t>(idx(a, b)) * N + idx(c, e)] = idx(a2, b + e);
                }
    return FiniteGroup(std::move(t), "D" + std::to_string(n), GroupKind::dihedral, {n});
}

namespace detail {
inline const std::vector<std::array<int, 3>>& s3_elements() {
    static const std::vector<std::array<int, 3>> elems = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return elems;
}
}  // namespace detail

/// S3 on {0,1,2}; elements are the six permutations in lexicographic order,
/// multiplication is composition (g.h)(x) = g(h(x)).
inline FiniteGroup symmetric3_group() {
    const auto& elems = detail::s3_elements();
    auto find = [&](const std::array<int, 3>& p) {
        for (size_t k = 0; k < elems.size(); ++k)
            if (elems[k] == p) return static_cast<int>(k);
        throw std::logic_error("symmetric3: lookup failed");
    };
    std::vector<int> t(36);
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = elems[g][elems[h][x]];
            t[static_cast<size_t>(g) * 6 + h] = find(comp);
        }
    return FiniteGroup(std::move(t), "S3", GroupKind::symmetric3);
}

/// Q8 = {1, -1, i, -i, j, -j, k, -k} in that order.
inline FiniteGroup quaternion8_group() {
    // element = (axis, sign): axis 0 -> 1, 1 -> i, 2 -> j, 3 -> k
    auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    auto axis_of = [](int g) { return g / 2; };
    auto sign_of = [](int g) { return g % 2 == 0 ? 1 : -1; };
    // axis multiplication table with structure signs: i*j = k etc.
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<int> t(64);
    for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h) {
            int a = axis_of(g), b = axis_of(h);
            int sign = sign_of(g) * sign_of(h) * sg[a][b];
            t[static_cast<size_t>(g) * 8 + h] = enc(ax[a][b], sign);
        }
    return FiniteGroup(std::move(t), "Q8", GroupKind::quaternion8);
}

/// Named constructor used by the CLI: cyclic(n), product(n1,n2,...),
/// dihedral(n), symmetric(3), quaternion8, and the aliases z<n>, s3, q8,
/// z<a>x<b> (e.g. z2x2).
inline FiniteGroup builtin_group(const std::string& name) {
    auto parse_args = [&](const std::string& s) {
        std::vector<int> args;
        size_t open = s.find('(');
        if (open == std::string::npos) return args;
        size_t close = s.find(')', open);
        std::string body = s.substr(open + 1, close - open - 1);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            args.push_back(std::stoi(body.substr(pos, comma == std::string::npos ? comma : comma - pos)));
            pos = comma == std::string::npos ? body.size() : comma + 1;
        }
        return args;
    };
    if (name.rfind("cyclic", 0) == 0) {
        auto a = parse_args(name);
        if (a.size() != 1) throw std::invalid_argument("cyclic(n) takes one argument");
        return cyclic_group(a[0]);
    }
    if (name.rfind("product", 0) == 0) {
        auto a = parse_args(name);
        if (a.empty()) throw std::invalid_argument("product(n1,...) takes arguments");
        return product_of_cyclics(a);
    }
    if (name.rfind("dihedral", 0) == 0) {
        auto a = parse_args(name);
        if (a.size() != 1) throw std::invalid_argument("dihedral(n) takes one argument");
        return dihedral_group(a[0]);
    }
    if (name == "symmetric(3)" || name == "s3" || name == "S3") return symmetric3_group();
    if (name == "quaternion8" || name == "q8" || name == "Q8") return quaternion8_group();
    if ((name[0] == 'z' || name[0] == 'Z') && name.size() > 1) {
        // z4 or z2x2x2
        std::vector<int> ns;
        size_t pos = 1;
        while (pos < name.size()) {
            size_t x = name.find('x', pos);
            ns.push_back(std::stoi(name.substr(pos, x == std::string::npos ? x : x - pos)));
            pos = x == std::string::npos ? name.size() : x + 1;
        }
        if (ns.size() == 1) return cyclic_group(ns[0]);
        return product_of_cyclics(ns);
    }
    throw std::invalid_argument("builtin_group: unsupported name '" + name + "'");
}

}  // namespace hdlab
