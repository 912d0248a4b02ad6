/**
 * @file hyperdet.hpp
 * @brief The combinatorial hyperdeterminant
 *
 *   det_d(X) = (1/n!) sum_{s_1..s_d in S_n} sgn(s_1)...sgn(s_d) prod_i X_{s_1(i)..s_d(i)}
 *
 * evaluated by three interchangeable strategies:
 *  - brute:       all (n!)^d permutation tuples, then the 1/n! prefactor;
 *  - fixed_first: s_1 = id, no prefactor, (n!)^{d-1} tuples (equal to brute
 *                 for even d; for odd d and n >= 2 the sum is identically
 *                 zero and both shortcuts return exact 0);
 *  - pruned:      fixed_first restricted, per position, to image tuples that
 *                 hit a nonzero entry, with per-mode used-image bitmasks.
 *
 * Enumeration is a position-by-position DFS with incremental partial
 * products and incremental permutation parity. Work is partitioned over the
 * joint images of position 0 across the free modes; partition results are
 * reduced in ascending partition order, so values are deterministic for
 * every ring and thread count.
 *
 * Vanishing of the hyperdeterminant is NP-hard to decide in general, so a
 * tuple budget guards every call and refuses loudly instead of hanging.
 */
#pragma once

#include <array>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "tensor.hpp"

namespace hdlab {

enum class Strategy { brute, fixed_first, pruned };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::brute: return "brute";
        case Strategy::fixed_first: return "fixed";
        default: return "pruned";
    }
}

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(std::string estimate, uint64_t budget)
        : std::runtime_error("hyperdet: tuple estimate " + estimate + " exceeds budget " +
                             std::to_string(budget)),
          estimate(std::move(estimate)),
          budget(budget) {}
    std::string estimate;
    uint64_t budget;
};

struct HyperdetOptions {
    Strategy strategy = Strategy::fixed_first;
    uint64_t budget = 1'000'000'000;  // enumerated-tuple guard
    int threads = 0;                  // 0: HDLAB_THREADS env, else hardware
};

template <Scalar R>
struct HyperdetResult {
    R value{};
    Strategy strategy = Strategy::fixed_first;
    uint64_t tuples = 0;  // completed tuples visited
    double millis = 0.0;
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HDLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace detail {

template <Scalar R>
class HyperdetEngine {
public:
    HyperdetEngine(const HyperTensor<R>& x, Strategy strategy)
        : x_(x), n_(x.side()), d_(x.order()), strategy_(strategy) {
        free_ = (strategy == Strategy::brute) ? d_ : d_ - 1;
        if (free_ > kMaxFree) throw std::invalid_argument("hyperdet: order too large (d <= 9)");
        if (n_ > 24) throw std::invalid_argument("hyperdet: side limited to 24");
        full_mask_ = (n_ == 32) ? ~0u : ((1u << n_) - 1);
        for (int j = 0; j < n_; ++j) gt_mask_[j] = full_mask_ & ~((2u << j) - 1);
        // leaves below a node that has filled `pos` positions
        dead_leaves_.assign(n_ + 1, 1);
        for (int pos = n_ - 1; pos >= 0; --pos) {
            uint64_t branch = 1;
            for (int m = 0; m < free_; ++m) branch *= static_cast<uint64_t>(n_ - pos);
            dead_leaves_[pos] = branch * dead_leaves_[pos + 1];
        }
        if (strategy == Strategy::pruned) build_candidates();
    }

    BigInt dense_estimate() const {
        BigInt f = factorial(static_cast<unsigned long>(n_));
        return pow_big(f, static_cast<unsigned long>(free_));
    }
    BigInt pruned_estimate() const {
        BigInt prod = 1;
        for (const auto& c : cands_) prod *= BigInt(static_cast<unsigned long>(c.size()));
        BigInt dense = dense_estimate();
        return prod < dense ? prod : dense;
    }

    size_t task_count() const {
        if (strategy_ == Strategy::pruned) return cands_[0].size();
        size_t t = 1;
        for (int m = 0; m < free_; ++m) t *= static_cast<size_t>(n_);
        return t;
    }

    /// Runs one top-level partition (an assignment of position 0) to completion.
    void run_task(size_t task, R& out_sum, uint64_t& out_leaves) {
        State s(n_, free_);
        out_sum = ring_traits<R>::zero();
        out_leaves = 0;
        if (strategy_ == Strategy::pruned) {
            const Cand& c = cands_[0][task];
            for (int m = 0; m < free_; ++m) s.used[m] = 1u << c.js[m];
            s.prod[1] = s.prod[0] * x_[c.flat];
            pruned_pos(s, 1);
        } else {
            size_t offset = 0;  // position 0: the fixed sigma_1 digit contributes 0 either way
            size_t t = task;
            std::array<int, kMaxFree> js{};
            for (int m = free_ - 1; m >= 0; --m) {
                js[m] = static_cast<int>(t % n_);
                t /= n_;
            }
            for (int m = 0; m < free_; ++m) {
                s.used[m] = 1u << js[m];
                offset = offset * n_ + static_cast<size_t>(js[m]);
            }
            const R& e = x_[offset];
            if (ring_traits<R>::is_zero(e)) {
                out_leaves = dead_leaves_[1];
                return;
            }
            s.prod[1] = s.prod[0] * e;
            dense_pos(s, 1);
        }
        out_sum = std::move(s.acc);
        out_leaves = s.leaves + (strategy_ == Strategy::pruned ? 0 : s.skipped);
    }

private:
    static constexpr int kMaxFree = 9;

    struct Cand {
        std::array<uint8_t, kMaxFree> js{};
        size_t flat = 0;
    };

    struct State {
        State(int n, int) : prod(static_cast<size_t>(n) + 1, ring_traits<R>::one()) {}
        std::array<uint32_t, kMaxFree> used{};
        bool parity = false;
        std::vector<R> prod;
        R acc = ring_traits<R>::zero();
        uint64_t leaves = 0;
        uint64_t skipped = 0;  // leaves under zero-product subtrees (still counted)
    };

    void build_candidates() {
        cands_.assign(n_, {});
        size_t row = 1;
        for (int m = 0; m < free_; ++m) row *= static_cast<size_t>(n_);
        for (int i = 0; i < n_; ++i) {
            for (size_t off = 0; off < row; ++off) {
                size_t flat = static_cast<size_t>(i) * row + off;
                if (ring_traits<R>::is_zero(x_[flat])) continue;
                Cand c;
                c.flat = flat;
                size_t rem = off;
                for (int m = free_ - 1; m >= 0; --m) {
                    c.js[m] = static_cast<uint8_t>(rem % n_);
                    rem /= n_;
                }
                cands_[i].push_back(c);
            }
        }
    }

    void leaf(State& s) {
        ++s.leaves;
        if (s.parity)
            s.acc = s.acc - s.prod[n_];
        else
            s.acc = s.acc + s.prod[n_];
    }

    void dense_pos(State& s, int pos) {
        if (pos == n_) {
            leaf(s);
            return;
        }
        size_t seed = (strategy_ == Strategy::brute) ? 0 : static_cast<size_t>(pos);
        dense_mode(s, pos, 0, seed);
    }

    void dense_mode(State& s, int pos, int m, size_t offset) {
        const uint32_t avail = full_mask_ & ~s.used[m];
        if (m == free_ - 1) {
            const size_t base = offset * static_cast<size_t>(n_);
            for (uint32_t rest = avail; rest != 0; rest &= rest - 1) {
                const int j = std::countr_zero(rest);
                const R& e = x_[base + static_cast<size_t>(j)];
                if (ring_traits<R>::is_zero(e)) {
                    s.skipped += dead_leaves_[pos + 1];
                    continue;
                }
                const bool flip = std::popcount(s.used[m] & gt_mask_[j]) & 1;
                s.used[m] |= 1u << j;
                s.parity ^= flip;
                s.prod[pos + 1] = s.prod[pos] * e;
                dense_pos(s, pos + 1);
                s.used[m] &= ~(1u << j);
                s.parity ^= flip;
            }
            return;
        }
        for (uint32_t rest = avail; rest != 0; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            const bool flip = std::popcount(s.used[m] & gt_mask_[j]) & 1;
            s.used[m] |= 1u << j;
            s.parity ^= flip;
            dense_mode(s, pos, m + 1, offset * static_cast<size_t>(n_) + static_cast<size_t>(j));
            s.used[m] &= ~(1u << j);
            s.parity ^= flip;
        }
    }

    void pruned_pos(State& s, int pos) {
        if (pos == n_) {
            leaf(s);
            return;
        }
        for (const Cand& c : cands_[pos]) {
            bool ok = true;
            for (int m = 0; m < free_; ++m)
                if (s.used[m] & (1u << c.js[m])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            bool flip = false;
            for (int m = 0; m < free_; ++m) flip ^= std::popcount(s.used[m] & gt_mask_[c.js[m]]) & 1;
            for (int m = 0; m < free_; ++m) s.used[m] |= 1u << c.js[m];
            s.parity ^= flip;
            s.prod[pos + 1] = s.prod[pos] * x_[c.flat];
            pruned_pos(s, pos + 1);
            for (int m = 0; m < free_; ++m) s.used[m] &= ~(1u << c.js[m]);
            s.parity ^= flip;
        }
    }

    const HyperTensor<R>& x_;
    int n_, d_, free_;
    Strategy strategy_;
    uint32_t full_mask_ = 0;
    std::array<uint32_t, 32> gt_mask_{};
    std::vector<uint64_t> dead_leaves_;
    std::vector<std::vector<Cand>> cands_;
};

}  // namespace detail

template <Scalar R>
HyperdetResult<R> hyperdet(const HyperTensor<R>& x, const HyperdetOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    HyperdetResult<R> res;
    res.strategy = opt.strategy;

    const int n = x.side();
    const int d = x.order();

    // Odd d: the full signed sum vanishes identically (n >= 2). The brute
    // strategy still enumerates to exhibit the cancellation; the reduced
    // strategies are only definition-equivalent for even d, so they return
    // the exact zero directly.
    if (d % 2 == 1 && n >= 2 && opt.strategy != Strategy::brute) {
        res.value = ring_traits<R>::zero();
        res.tuples = 0;
        res.millis = 0.0;
        return res;
    }

    detail::HyperdetEngine<R> engine(x, opt.strategy);
    BigInt est = (opt.strategy == Strategy::pruned) ? engine.pruned_estimate() : engine.dense_estimate();
    if (est > BigInt(static_cast<unsigned long>(opt.budget)))
        throw BudgetExceeded(est.get_str(), opt.budget);

    const size_t tasks = engine.task_count();
    std::vector<R> sums(tasks, ring_traits<R>::zero());
    std::vector<uint64_t> counts(tasks, 0);

    int threads = resolve_threads(opt.threads);
    threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks)));
    if (est < 10000) threads = 1;  // not worth spawning

    if (threads == 1) {
        for (size_t t = 0; t < tasks; ++t) engine.run_task(t, sums[t], counts[t]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w]() {
                for (size_t t = static_cast<size_t>(w); t < tasks; t += threads)
                    engine.run_task(t, sums[t], counts[t]);
            });
        for (auto& th : pool) th.join();
    }

    R total = ring_traits<R>::zero();
    for (size_t t = 0; t < tasks; ++t) total = total + sums[t];  // ascending partition order
    uint64_t leaves = 0;
    for (uint64_t c : counts) leaves += c;

    if (opt.strategy == Strategy::brute)
        total = ring_traits<R>::divide_by_big(total, factorial(static_cast<unsigned long>(n)));

    res.value = std::move(total);
    res.tuples = leaves;
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

template <Scalar R>
HyperdetResult<R> hyperdet_bruteforce(const HyperTensor<R>& x, HyperdetOptions opt = {}) {
    opt.strategy = Strategy::brute;
    return hyperdet(x, opt);
}
template <Scalar R>
HyperdetResult<R> hyperdet_fixed_first(const HyperTensor<R>& x, HyperdetOptions opt = {}) {
    opt.strategy = Strategy::fixed_first;
    return hyperdet(x, opt);
}
template <Scalar R>
HyperdetResult<R> hyperdet_pruned(const HyperTensor<R>& x, HyperdetOptions opt = {}) {
    opt.strategy = Strategy::pruned;
    return hyperdet(x, opt);
}

// ---------------------------------------------------------------------------
// Polynomial-identity testing by random evaluation
// ---------------------------------------------------------------------------

struct PitOptions {
    int trials = 5;
    double rel_tol = 1e-6;       // float path only; exact path compares exactly
    bool up_to_sign = false;     // resolve a global sign on the first trial
    uint64_t seed = 0xC0FFEEu;
    HyperdetOptions det;         // strategy/budget/threads for the LHS
};

struct PitReport {
    bool pass = false;
    int trials_run = 0;
    double max_rel_dev = 0.0;  // 0 on the exact path
    int realized_sign = 0;     // +1/-1 once resolved, 0 if both sides vanish
    bool exact_path = true;
    std::string note;
};

/// Draw a Gaussian-rational point with integer components in [-10, 10].
inline std::vector<GaussianRational> random_gaussian_point(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<int> d(-10, 10);
    std::vector<GaussianRational> p;
    p.reserve(nvars);
    for (int k = 0; k < nvars; ++k) p.emplace_back(Rational(d(rng)), Rational(d(rng)));
    return p;
}

inline std::vector<ComplexF> random_complex_point(std::mt19937_64& rng, int nvars) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<ComplexF> p;
    p.reserve(nvars);
    for (int k = 0; k < nvars; ++k) p.emplace_back(d(rng), d(rng));
    return p;
}

/// Exact PIT: substitutes random Gaussian-rational points and compares the
/// enumerated hyperdeterminant against rhs(point) exactly.
inline PitReport hyperdet_pit_exact(
    const HyperTensor<MultiPoly>& x, int nvars,
    const std::function<GaussianRational(std::span<const GaussianRational>)>& rhs,
    const PitOptions& opt = {}) {
    PitReport rep;
    rep.exact_path = true;
    std::mt19937_64 rng(opt.seed);
    int sign = 0;
    for (int t = 0; t < opt.trials; ++t) {
        auto point = random_gaussian_point(rng, nvars);
        auto sub = substitute_point<GaussianRational>(x, point);
        GaussianRational lhs = hyperdet(sub, opt.det).value;
        GaussianRational want = rhs(point);
        ++rep.trials_run;
        bool ok;
        if (!opt.up_to_sign) {
            ok = (lhs == want);
            if (ok && sign == 0 && !want.is_zero()) sign = 1;
        } else if (sign == 0) {
            if (lhs == want && !want.is_zero()) {
                sign = 1;
                ok = true;
            } else if (lhs == -want && !want.is_zero()) {
                sign = -1;
                ok = true;
            } else {
                ok = lhs.is_zero() && want.is_zero();
            }
        } else {
            ok = (sign > 0) ? (lhs == want) : (lhs == -want);
        }
        if (!ok) {
            rep.pass = false;
            rep.note = "trial " + std::to_string(t) + " mismatch";
            rep.realized_sign = sign;
            return rep;
        }
    }
    rep.pass = true;
    rep.realized_sign = sign;
    return rep;
}

/// Float PIT: random complex points, relative tolerance.
inline PitReport hyperdet_pit_float(
    const HyperTensor<MultiPoly>& x, int nvars,
    const std::function<ComplexF(std::span<const ComplexF>)>& rhs, const PitOptions& opt = {}) {
    PitReport rep;
    rep.exact_path = false;
    std::mt19937_64 rng(opt.seed);
    int sign = 0;
    for (int t = 0; t < opt.trials; ++t) {
        auto point = random_complex_point(rng, nvars);
        auto sub = substitute_point<ComplexF>(x, point);
        ComplexF lhs = hyperdet(sub, opt.det).value;
        ComplexF want = rhs(point);
        ++rep.trials_run;
        double dev;
        if (!opt.up_to_sign) {
            dev = rel_dev(lhs, want);
        } else if (sign == 0) {
            double dp = rel_dev(lhs, want), dm = rel_dev(lhs, -want);
            if (dp <= dm) {
                sign = 1;
                dev = dp;
            } else {
                sign = -1;
                dev = dm;
            }
        } else {
            dev = rel_dev(lhs, (sign > 0) ? want : -want);
        }
        rep.max_rel_dev = std::max(rep.max_rel_dev, dev);
        if (dev > opt.rel_tol) {
            rep.pass = false;
            rep.note = "trial " + std::to_string(t) + " deviation " + std::to_string(dev);
            rep.realized_sign = sign;
            return rep;
        }
    }
    rep.pass = true;
    rep.realized_sign = sign;
    return rep;
}

/// The spec'd operation surface: rhs given as a polynomial in the same
/// variables; float_path selects the comparison ring.
inline PitReport hyperdet_pit(const HyperTensor<MultiPoly>& x, const MultiPoly& rhs,
                              const PitOptions& opt = {}, bool float_path = false) {
    const int nvars = rhs.nvars();
    if (float_path)
        return hyperdet_pit_float(
            x, nvars, [&](std::span<const ComplexF> p) { return rhs.eval<ComplexF>(p); }, opt);
    return hyperdet_pit_exact(
        x, nvars, [&](std::span<const GaussianRational> p) { return rhs.eval<GaussianRational>(p); },
        opt);
}

}  // namespace hdlab
