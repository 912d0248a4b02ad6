/**
 * @file acceptance.hpp
 * @brief The desk-scale verification suite: every published identity and
 * constant, reproduced at its stated tolerance, one pass/fail line per
 * criterion. Shared by the acceptance test binary and the CLI selftest.
 */
#pragma once

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "algebra_factor.hpp"
#include "group_checks.hpp"
#include "young.hpp"

namespace hdlab {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    double millis = 0.0;
    std::string detail;
};

namespace acceptance_detail {

class Runner {
public:
    Runner(int threads, std::ostream& log) : threads_(threads), log_(log) {}

    int threads() const { return threads_; }

    void run(int id, const std::string& label, double time_limit_ms,
             const std::function<bool(std::ostringstream&)>& body) {
        CriterionResult r;
        r.id = id;
        r.label = label;
        std::ostringstream detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail << " exception: " << e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (time_limit_ms > 0 && r.millis > time_limit_ms) {
            ok = false;
            detail << " [time limit " << time_limit_ms << " ms exceeded]";
        }
        r.pass = ok;
        r.detail = detail.str();
        log_ << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << label << " ("
             << static_cast<long>(r.millis) << " ms)" << (r.detail.empty() ? "" : " --" + r.detail)
             << std::endl;
        results.push_back(std::move(r));
    }

    std::vector<CriterionResult> results;

private:
    int threads_;
    std::ostream& log_;
};

inline HyperTensor<Rational> random_tensor(std::mt19937_64& rng, int d, int n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    HyperTensor<Rational> t(d, n);
    for (size_t f = 0; f < t.size(); ++f) t[f] = Rational(dist(rng));
    return t;
}

inline SquareMatrix<Rational> random_matrix(std::mt19937_64& rng, int n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    SquareMatrix<Rational> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(dist(rng));
    return m;
}

}  // namespace acceptance_detail

/// Runs the ten acceptance criteria; `threads` bounds the engine parallelism
/// (0 = auto). Progress lines go to `log`.
inline std::vector<CriterionResult> run_acceptance(int threads = 0, std::ostream& log = std::cerr) {
    using acceptance_detail::random_matrix;
    using acceptance_detail::random_tensor;
    const int resolved = resolve_threads(threads);
    acceptance_detail::Runner runner(resolved, log);
    HyperdetOptions par{.strategy = Strategy::fixed_first, .budget = 1'000'000'000, .threads = resolved};

    // 1. Theorem 2 golden values via pruned DFS
    runner.run(1, "Theorem 2: |det_d(M_n)| hook-product golden values", 0, [&](std::ostringstream& out) {
        bool ok = true;
        auto check = [&](int n, int d, const char* want, double limit_ms) {
            auto t0 = std::chrono::steady_clock::now();
            auto rep = mmt_verify(n, d, par);
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            double limit = limit_ms;
            if (n == 3 && d == 4) limit = (runner.threads() >= 8) ? 15000.0 : 60000.0;
            bool good = rep.pass && rep.formula == BigInt(want) && ms <= limit &&
                        rep.realized_sign == rep.predicted_sign;
            out << " (" << n << "," << d << ")=" << (rep.realized_sign < 0 ? "-" : "+")
                << rep.formula.get_str() << (good ? "" : " FAIL") << " " << static_cast<long>(ms) << "ms;";
            ok = ok && good;
        };
        check(2, 4, "12", 1000.0);
        check(2, 6, "144", 1000.0);
        check(1, 2, "1", 1000.0);
        check(2, 2, "1", 1000.0);
        check(3, 2, "1", 1000.0);
        check(3, 4, "8640", 60000.0);
        return ok;
    });

    // 2. Theorem 1 symbolic at Z2 and Z3
    runner.run(2, "Theorem 1: det_4(C^{Z2}) = +-4(x0^2-x1^2) exact; Z3 via PIT (1e-6)", 5000.0,
               [&](std::ostringstream& out) {
                   auto z2 = cyclic_group(2);
                   auto rep2 = factorization_check(z2, builtin_irreps(z2), 4, FactorizationMode::symbolic, par);
                   MultiPoly want = (MultiPoly::variable(2, 0) * MultiPoly::variable(2, 0) -
                                     MultiPoly::variable(2, 1) * MultiPoly::variable(2, 1))
                                        .scaled(GaussianRational(4));
                   auto lhs = hyperdet(group_tensor(z2, 4), par).value;
                   bool z2ok = rep2.pass && (lhs == want || lhs == -want);
                   auto rep3 = circulant_check(3, 4, 5, 1e-6, par);
                   bool z3ok = rep3.pass && rep3.prefactor == BigInt(27);
                   out << " Z2 sign=" << rep2.realized_sign << " Z3 dev=" << rep3.max_rel_dev;
                   return z2ok && z3ok;
               });

    // 3. Theorem 1 at S3, d=4, numeric enumeration of 720^3 tuples per point
    runner.run(3, "Theorem 1 at S3, d=4: 3 complex points vs H_{S3} prod det_2(rho)^{n_rho} (1e-6)",
               300000.0, [&](std::ostringstream& out) {
                   auto s3 = symmetric3_group();
                   auto cat = builtin_irreps(s3);
                   // 6^6 * (h_{2x2}/2^4) = 46656 * 3/4; t = 4 makes the sign +.
                   Rational h = h_g_constant(s3, cat, 4);
                   bool hok = (h == Rational(34992));
                   auto rep = factorization_check(s3, cat, 4, FactorizationMode::pit, par, 3, 1e-6);
                   out << " H=" << h.to_string() << " dev=" << rep.max_rel_dev << " tuples=" << rep.tuples
                       << " sign=" << rep.realized_sign;
                   return hok && rep.pass && rep.tuples == 3ull * 373248000ull;
               });

    // 4. Frobenius d=2 for Z2, Z3, Z4, Z2xZ2, S3 + character coefficients
    runner.run(4, "Frobenius d=2 (Z2,Z3,Z4,Z2xZ2 exact/PIT; S3 exact 720 terms) + character coefficients",
               10000.0, [&](std::ostringstream& out) {
                   bool ok = true;
                   for (const char* name : {"z2", "z4", "z2x2", "s3"}) {
                       auto g = builtin_group(name);
                       auto rep = factorization_check(g, builtin_irreps(g), 2, FactorizationMode::symbolic, par);
                       out << " " << name << ":sym" << (rep.pass ? "+" : "FAIL");
                       ok = ok && rep.pass;
                   }
                   for (const char* name : {"z2", "z3", "z4", "z2x2"}) {
                       auto g = builtin_group(name);
                       auto rep =
                           factorization_check(g, builtin_irreps(g), 2, FactorizationMode::pit, par, 5, 1e-9);
                       out << " " << name << ":pit" << (rep.pass ? "+" : "FAIL");
                       ok = ok && rep.pass;
                   }
                   auto s3 = symmetric3_group();
                   auto cc = character_coefficient_check(s3, builtin_irreps(s3));
                   out << " charcoef:" << (cc.pass && cc.irreps_checked == 3 ? "+" : "FAIL");
                   return ok && cc.pass && cc.irreps_checked == 3;
               });

    // 5. Block diagonalization at Z4, S3, Q8
    runner.run(5, "Theorem 3 block diagonalization (Z4,S3,Q8; d=4; dev < 1e-9)", 5000.0,
               [&](std::ostringstream& out) {
                   bool ok = true;
                   for (const char* name : {"z4", "s3", "q8"}) {
                       auto g = builtin_group(name);
                       auto rep = block_diagonalize_check(g, builtin_irreps(g), 4, 3, 1e-9);
                       out << " " << name << ":dev=" << rep.max_dev;
                       ok = ok && rep.pass;
                   }
                   return ok;
               });

    // 6. Sign lemma
    runner.run(6, "Sign lemma det(U)^2 = (-1)^{(|G|-t)/2 + sum C(n,2)} and Ubar = RUC", 0,
               [&](std::ostringstream& out) {
                   bool ok = true;
                   for (const char* name : {"z2", "z3", "z4", "s3", "q8"}) {
                       auto g = builtin_group(name);
                       auto rep = sign_lemma_check(g, builtin_irreps(g), 1e-9, 1e-12);
                       out << " " << name << ":" << (rep.predicted_sign > 0 ? "+" : "-")
                           << (rep.pass ? "" : "FAIL");
                       ok = ok && rep.pass;
                   }
                   return ok;
               });

    // 7. Schur orthogonality
    runner.run(7, "Schur orthogonality: exact 0 (Gaussian path) / residual < 1e-12 (float)", 0,
               [&](std::ostringstream& out) {
                   bool ok = true;
                   for (const char* name : {"z2", "z2x2", "z4", "q8"}) {
                       auto g = builtin_group(name);
                       auto rep = schur_orthogonality(g, builtin_irreps(g));
                       out << " " << name << ":exact" << (rep.exact_pass ? "+" : "FAIL");
                       ok = ok && rep.exact_pass;
                   }
                   for (const char* name : {"z3", "s3", "dihedral(4)", "z6"}) {
                       auto g = builtin_group(name);
                       auto rep = schur_orthogonality(g, builtin_irreps(g));
                       out << " " << name << ":res=" << rep.max_residual;
                       ok = ok && rep.max_residual < 1e-12;
                   }
                   return ok;
               });

    // 8. Nonsemisimple classification over the seven-algebra catalog
    runner.run(8, "Classification: (J(A)=0) <=> (det_4(C^A) != 0), exponents > 0, sum w = 0", 10000.0,
               [&](std::ostringstream& out) {
                   bool ok = true;
                   for (const auto& a : classification_catalog()) {
                       auto rep = semisimplicity_hyperdet_test(a, 4, par);
                       bool good = rep.pass && rep.symbolic;
                       auto rad = jacobson_radical(a);
                       if (!rad.semisimple()) {
                           auto w = degeneration_weights(a, rad);
                           long sum = 0;
                           for (long x : w.w) sum += x;
                           auto expo = degeneration_exponent_check(a, rad, 4);
                           good = good && sum == 0 && expo.pass && expo.min_exponent > 0;
                           out << " " << a.name() << ":minexp=" << expo.min_exponent;
                       } else {
                           out << " " << a.name() << ":ss";
                       }
                       ok = ok && good;
                   }
                   return ok;
               });

    // 9. Young-symmetrizer oracle in S_4 for lambda = 2x2
    runner.run(9, "Young symmetrizer: c(id)=1, c^2=12c, (c)^{d/2}(id)=12^{d/2-1} vs enumeration", 0,
               [&](std::ostringstream& out) {
                   bool ok = true;
                   for (int d : {4, 6}) {
                       auto oracle = young_symmetrizer_oracle(2, d);
                       auto enumd = mmt_verify(2, d, par);
                       BigInt want = pow_big(BigInt(12), static_cast<unsigned long>(d / 2 - 1));
                       bool good = oracle.identity_coeff == Rational(1) && oracle.quasi_idempotent &&
                                   oracle.value == Rational(want) &&
                                   oracle.value == Rational(oracle.sign_factor) * enumd.enumerated;
                       out << " d=" << d << ":" << oracle.value.to_string() << (good ? "" : " FAIL");
                       ok = ok && good;
                   }
                   return ok;
               });

    // 10. Randomized property suites, >= 100 cases each, exact rings
    runner.run(10, "Property suites (100+ cases): strategies, SL-invariance, direct sum, odd d, homogeneity, composition",
               0, [&](std::ostringstream& out) {
                   std::mt19937_64 rng(20240817);
                   HyperdetOptions seq{.strategy = Strategy::fixed_first, .budget = 1'000'000'000, .threads = 1};
                   bool ok = true;
                   // strategy agreement
                   for (int c = 0; c < 100 && ok; ++c) {
                       int n = 2 + (c % 2), d = 2 + 2 * ((c / 2) % 2);
                       auto x = random_tensor(rng, d, n);
                       auto b = hyperdet_bruteforce(x, seq).value;
                       auto f = hyperdet_fixed_first(x, seq).value;
                       auto p = hyperdet_pruned(x, seq).value;
                       ok = (b == f && f == p);
                   }
                   out << " strategies" << (ok ? "+" : "FAIL");
                   // SL relative invariance
                   for (int c = 0; c < 100 && ok; ++c) {
                       auto x = random_tensor(rng, 4, 2);
                       std::vector<SquareMatrix<Rational>> gs;
                       Rational dets(1);
                       for (int k = 0; k < 4; ++k) {
                           gs.push_back(random_matrix(rng, 2));
                           dets *= determinant(gs.back());
                       }
                       auto lhs = hyperdet_fixed_first(mode_apply(x, std::span<const SquareMatrix<Rational>>(gs)), seq).value;
                       ok = (lhs == dets * hyperdet_fixed_first(x, seq).value);
                   }
                   out << " sl" << (ok ? "+" : "FAIL");
                   // direct-sum multiplicativity
                   for (int c = 0; c < 100 && ok; ++c) {
                       auto y = random_tensor(rng, 4, 2);
                       auto z = random_tensor(rng, 4, 2);
                       auto whole = hyperdet_fixed_first(direct_sum(y, z), seq).value;
                       ok = (whole == hyperdet_fixed_first(y, seq).value * hyperdet_fixed_first(z, seq).value);
                   }
                   out << " dsum" << (ok ? "+" : "FAIL");
                   // odd-d vanishing
                   for (int c = 0; c < 100 && ok; ++c) {
                       auto x = random_tensor(rng, 3, 2 + (c % 2));
                       ok = hyperdet_bruteforce(x, seq).value.is_zero();
                   }
                   out << " odd" << (ok ? "+" : "FAIL");
                   // degree-n homogeneity
                   for (int c = 0; c < 100 && ok; ++c) {
                       int n = 2 + (c % 2), d = 2 + 2 * ((c / 2) % 2);
                       auto x = random_tensor(rng, d, n);
                       std::uniform_int_distribution<int> cd(-3, 3);
                       Rational scale(cd(rng));
                       auto lhs = hyperdet_fixed_first(x.scaled(scale), seq).value;
                       ok = (lhs == pow_rat(scale, static_cast<unsigned long>(n)) * hyperdet_fixed_first(x, seq).value);
                   }
                   out << " homog" << (ok ? "+" : "FAIL");
                   // mode_apply composition
                   for (int c = 0; c < 100 && ok; ++c) {
                       auto x = random_tensor(rng, 4, 2);
                       std::vector<SquareMatrix<Rational>> as, bs, ba;
                       for (int k = 0; k < 4; ++k) {
                           as.push_back(random_matrix(rng, 2));
                           bs.push_back(random_matrix(rng, 2));
                           ba.push_back(bs.back() * as.back());
                       }
                       auto two = mode_apply(mode_apply(x, std::span<const SquareMatrix<Rational>>(as)),
                                             std::span<const SquareMatrix<Rational>>(bs));
                       auto one = mode_apply(x, std::span<const SquareMatrix<Rational>>(ba));
                       ok = (two == one);
                   }
                   out << " compose" << (ok ? "+" : "FAIL");
                   return ok;
               });

    return runner.results;
}

inline bool acceptance_all_pass(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace hdlab
