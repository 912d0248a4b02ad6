#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hdlab/hyperdet.hpp>
#include <hdlab/tensor.hpp>

using namespace hdlab;

namespace {
std::mt19937_64 rng(17);
Rational rnd() {
    static std::uniform_int_distribution<int> d(-4, 4);
    return Rational(d(rng));
}
SquareMatrix<Rational> rnd_mat(int n) {
    SquareMatrix<Rational> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rnd();
    return m;
}
HyperTensor<Rational> rnd_tensor(int d, int n) {
    HyperTensor<Rational> t(d, n);
    for (size_t f = 0; f < t.size(); ++f) t[f] = rnd();
    return t;
}
}  // namespace

TEST_CASE("determinant examples") {
    CHECK(determinant(SquareMatrix<Rational>::identity(4)) == Rational(1));
    // repeated row
    SquareMatrix<Rational> r(3);
    for (int j = 0; j < 3; ++j) {
        r.at(0, j) = Rational(j + 1);
        r.at(1, j) = Rational(j + 1);
        r.at(2, j) = rnd();
    }
    CHECK(determinant(r) == Rational(0));
    // polynomial entries via division-free expansion
    SquareMatrix<MultiPoly> m(2);
    m.at(0, 0) = MultiPoly::variable(2, 0);
    m.at(0, 1) = MultiPoly::variable(2, 1);
    m.at(1, 0) = MultiPoly::variable(2, 1);
    m.at(1, 1) = MultiPoly::variable(2, 0);
    MultiPoly want = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 0) -
                     MultiPoly::variable(2, 1) * MultiPoly::variable(2, 1);
    CHECK(determinant(m) == want);
}

TEST_CASE("determinant is multiplicative on random 3x3") {
    for (int c = 0; c < 50; ++c) {
        auto a = rnd_mat(3), b = rnd_mat(3);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("inverse round trip over exact fields") {
    for (int c = 0; c < 20; ++c) {
        auto a = rnd_mat(3);
        if (determinant(a).is_zero()) continue;
        CHECK(a * inverse(a) == SquareMatrix<Rational>::identity(3));
    }
}

TEST_CASE("mode_apply identity leaves the tensor unchanged") {
    auto x = rnd_tensor(4, 2);
    std::vector<SquareMatrix<Rational>> mats(4, SquareMatrix<Rational>::identity(2));
    CHECK(mode_apply(x, std::span<const SquareMatrix<Rational>>(mats)) == x);
}

TEST_CASE("mode_apply at d=2 is the bilinear action A X B^T") {
    for (int c = 0; c < 20; ++c) {
        auto x = rnd_tensor(2, 2);
        auto a = rnd_mat(2), b = rnd_mat(2);
        std::vector<SquareMatrix<Rational>> mats{a, b};
        auto y = mode_apply(x, std::span<const SquareMatrix<Rational>>(mats));
        auto want = a * as_matrix(x) * b.transpose();
        CHECK(as_matrix(y) == want);
    }
}

TEST_CASE("mode_apply moves basis tensors: swap sends e1 x e1 to e2 x e2") {
    HyperTensor<Rational> x(2, 2);
    x.at({0, 0}) = Rational(1);
    std::vector<int> swap{1, 0};
    auto p = permutation_matrix<Rational>(swap);
    std::vector<SquareMatrix<Rational>> mats{p, p};
    auto y = mode_apply(x, std::span<const SquareMatrix<Rational>>(mats));
    HyperTensor<Rational> want(2, 2);
    want.at({1, 1}) = Rational(1);
    CHECK(y == want);
}

TEST_CASE("direct_sum places blocks diagonally") {
    HyperTensor<Rational> y(2, 1), z(2, 1);
    y[0] = Rational(3);
    z[0] = Rational(-5);
    auto s = direct_sum(y, z);
    CHECK(s.side() == 2);
    CHECK(s.at({0, 0}) == Rational(3));
    CHECK(s.at({1, 1}) == Rational(-5));
    CHECK(s.at({0, 1}) == Rational(0));
    // classical 2x2 block determinant
    for (int c = 0; c < 20; ++c) {
        auto a = rnd_tensor(2, 2), b = rnd_tensor(2, 2);
        CHECK(determinant(as_matrix(direct_sum(a, b))) ==
              determinant(as_matrix(a)) * determinant(as_matrix(b)));
    }
}

TEST_CASE("direct_sum multiplicativity at d=4 against brute-force enumeration") {
    for (int c = 0; c < 10; ++c) {
        auto y = rnd_tensor(4, 2), z = rnd_tensor(4, 2);
        auto whole = hyperdet_bruteforce(direct_sum(y, z)).value;
        auto parts = hyperdet_bruteforce(y).value * hyperdet_bruteforce(z).value;
        CHECK(whole == parts);
    }
}

TEST_CASE("direct_sum is associative") {
    auto a = rnd_tensor(3, 1), b = rnd_tensor(3, 2), c = rnd_tensor(3, 1);
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
}

TEST_CASE("permutation parity") {
    std::vector<int> id{0, 1, 2, 3};
    CHECK(permutation_sign(id) == 1);
    std::vector<int> sw{1, 0, 2, 3};
    CHECK(permutation_sign(sw) == -1);
    std::vector<int> cyc{1, 2, 0};
    CHECK(permutation_sign(cyc) == 1);
}

TEST_CASE("tensor file shape validation") {
    CHECK_THROWS(HyperTensor<Rational>(2, 2, std::vector<Rational>(3)));
    HyperTensor<Rational> t(3, 2);
    CHECK(t.size() == 8);
    std::vector<int> bad{0, 1};
    CHECK_THROWS(t.at(bad));
}
