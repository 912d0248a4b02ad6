#include <catch2/catch_amalgamated.hpp>

#include <hdlab/group_checks.hpp>
#include <hdlab/io.hpp>

using namespace hdlab;

TEST_CASE("builtin group tables and involution counts") {
    auto z2 = cyclic_group(2);
    CHECK(z2.order() == 2);
    CHECK(z2.mul(0, 0) == 0);
    CHECK(z2.mul(0, 1) == 1);
    CHECK(z2.mul(1, 0) == 1);
    CHECK(z2.mul(1, 1) == 0);
    CHECK(z2.involution_count() == 2);

    auto s3 = symmetric3_group();
    CHECK(s3.order() == 6);
    CHECK(s3.involution_count() == 4);  // id + 3 transpositions

    auto q8 = quaternion8_group();
    CHECK(q8.order() == 8);
    CHECK(q8.involution_count() == 2);  // 1 and -1
    CHECK(q8.inverse(2) == 3);          // i^{-1} = -i

    CHECK(cyclic_group(3).involution_count() == 1);
    CHECK(product_of_cyclics({2, 2}).involution_count() == 4);
    CHECK(dihedral_group(4).order() == 8);
    CHECK_THROWS(builtin_group("nosuch"));
}

TEST_CASE("custom tables are validated exhaustively") {
    std::vector<int> z3_table{0, 1, 2, 1, 2, 0, 2, 0, 1};
    CHECK_NOTHROW(FiniteGroup(z3_table, "z3"));
    // a Latin square with identity that is not a group (1*1 = 0 would force
    // an order-2 element in an order-5 group)
    std::vector<int> loop5{
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 4, 0, 1, 3,
        3, 2, 4, 0, 1,
        4, 3, 1, 2, 0};
    CHECK_THROWS(FiniteGroup(loop5, "loop5"));
}

TEST_CASE("catalog invariants for every builtin group") {
    for (const char* name : {"z2", "z3", "z4", "z2x2", "z6", "s3", "q8", "dihedral(3)", "dihedral(4)"}) {
        auto g = builtin_group(name);
        auto cat = builtin_irreps(g);
        CAPTURE(name);
        CHECK(cat.total_dim_sq() == g.order());
        auto v = validate_catalog(g, cat);
        CHECK(v.pass());
        auto orth = schur_orthogonality(g, cat);
        if (cat.all_exact())
            CHECK(orth.exact_pass);
        else
            CHECK(orth.max_residual < 1e-12);
    }
    // For the symmetric group, sum of irrep dimensions equals the involution count
    auto s3 = symmetric3_group();
    auto cat = builtin_irreps(s3);
    int dim_sum = 0;
    for (const auto& r : cat.irreps) dim_sum += r.dim;
    CHECK(dim_sum == s3.involution_count());
}

TEST_CASE("group tensor entries follow the multiplication table") {
    auto z3 = cyclic_group(3);
    auto t2 = group_tensor(z3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t2.at({i, j}) == MultiPoly::variable(3, (i + j) % 3));  // circulant
    auto z2 = cyclic_group(2);
    auto t4 = group_tensor(z2, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(t4.at({i, j, k, l}) == MultiPoly::variable(2, (i + j + k + l) % 2));
    // slicing modes 3..d at the identity reproduces the d=2 pattern
    auto s3 = symmetric3_group();
    auto g2 = group_tensor(s3, 2);
    auto g4 = group_tensor(s3, 4);
    int e = s3.identity();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(g4.at({a, b, e, e}) == g2.at({a, b}));
    CHECK_THROWS(group_tensor(s3, 3));
    CHECK_NOTHROW(group_tensor(s3, 3, /*allow_odd=*/true));
}

TEST_CASE("Fourier matrix of Z2 is the normalized character table") {
    auto z2 = cyclic_group(2);
    auto u = fourier_matrix(z2, builtin_irreps(z2));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(u.at(0, 0) - ComplexF(s, 0)) < 1e-15);
    CHECK(std::abs(u.at(0, 1) - ComplexF(s, 0)) < 1e-15);
    CHECK(std::abs(u.at(1, 0) - ComplexF(s, 0)) < 1e-15);
    CHECK(std::abs(u.at(1, 1) - ComplexF(-s, 0)) < 1e-15);
}

TEST_CASE("Fourier unitarity: float residual and exact Gram identity") {
    for (const char* name : {"z2", "z3", "z4", "z2x2", "s3", "q8"}) {
        auto g = builtin_group(name);
        auto rep = fourier_unitarity_check(g, builtin_irreps(g));
        CAPTURE(name);
        CHECK(rep.float_residual < 1e-12);
        CHECK(rep.abs_det_dev < 1e-12);  // |det U| = 1
        CHECK(rep.exact_pass);
    }
}

TEST_CASE("sign lemma: predicted exponents and the R/C decomposition") {
    struct Want {
        const char* name;
        int sign;
    };
    // (|G|-t)/2 + sum C(n_rho,2): Z2 0+0, S3 1+1, Q8 3+1, Z3 1+0, Z4 1+0
    for (auto [name, sign] : {Want{"z2", 1}, Want{"s3", 1}, Want{"q8", 1}, Want{"z3", -1}, Want{"z4", -1}}) {
        auto g = builtin_group(name);
        auto rep = sign_lemma_check(g, builtin_irreps(g));
        CAPTURE(name);
        CHECK(rep.predicted_sign == sign);
        CHECK(rep.pass);
        CHECK(rep.decomposition_dev < 1e-12);
    }
}

TEST_CASE("H_G golden values") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    CHECK(h_g_constant(z2, builtin_irreps(z2), 4) == Rational(4));
    CHECK(h_g_constant(z3, builtin_irreps(z3), 4) == Rational(27));
    for (const char* name : {"z2", "z3", "z4", "s3", "q8", "z2x2"}) {
        auto g = builtin_group(name);
        auto h = h_g_constant(g, builtin_irreps(g), 2);
        CHECK(h.abs() == Rational(1));  // d = 2: H_G = +-1
    }
    // S3 at d=4: 6^6 * 12/2^4 = 34992 with positive sign (t = 4)
    auto s3 = symmetric3_group();
    CHECK(h_g_constant(s3, builtin_irreps(s3), 4) == Rational(34992));
}

TEST_CASE("factorization: symbolic exact groups and PIT groups") {
    for (auto [name, d] : std::initializer_list<std::pair<const char*, int>>{
             {"z2", 2}, {"z2", 4}, {"z4", 2}, {"z4", 4}, {"z2x2", 4}, {"s3", 2}, {"q8", 2}}) {
        auto g = builtin_group(name);
        auto rep = factorization_check(g, builtin_irreps(g), d, FactorizationMode::symbolic);
        CAPTURE(name, d);
        CHECK(rep.pass);
        CHECK(rep.realized_sign == 1);  // the signed H_G closes the identity exactly
    }
    for (auto [name, d] : std::initializer_list<std::pair<const char*, int>>{{"z3", 2}, {"z3", 4}, {"z5", 2}, {"z6", 2}, {"dihedral(4)", 2}}) {
        auto g = builtin_group(name);
        auto rep = factorization_check(g, builtin_irreps(g), d, FactorizationMode::pit, {}, 5, 1e-9);
        CAPTURE(name, d);
        CHECK(rep.pass);
    }
    // symbolic mode refuses float-only catalogs
    auto z3 = cyclic_group(3);
    CHECK_THROWS(factorization_check(z3, builtin_irreps(z3), 2, FactorizationMode::symbolic));
}

TEST_CASE("S3 Frobenius factor structure at d=2") {
    auto s3 = symmetric3_group();
    auto cat = builtin_irreps(s3);
    // the three symbolic factors: linear, alternating linear, quadratic
    auto f0 = determinant(irrep_symbolic_matrix(cat.irreps[0], 6));
    auto f1 = determinant(irrep_symbolic_matrix(cat.irreps[1], 6));
    auto f2 = determinant(irrep_symbolic_matrix(cat.irreps[2], 6));
    CHECK(f0.total_degree() == 1);
    CHECK(f1.total_degree() == 1);
    CHECK(f2.total_degree() == 2);
    MultiPoly sum(6), alt(6);
    for (int e = 0; e < 6; ++e) {
        sum += MultiPoly::variable(6, e);
        std::vector<int> p(detail::s3_elements()[e].begin(), detail::s3_elements()[e].end());
        alt += MultiPoly::variable(6, e).scaled(GaussianRational(permutation_sign(p)));
    }
    CHECK(f0 == sum);
    CHECK(f1 == alt);
    // degree bookkeeping: sum n_rho^2 = deg det_2(C^G) = |G|
    auto lhs = hyperdet_fixed_first(group_tensor(s3, 2));
    CHECK(lhs.value.total_degree() == 6);
    CHECK(lhs.tuples == 720);
    // dual-route determinant: memoized minor expansion agrees with the
    // 720-term Leibniz enumeration
    CHECK(determinant(as_matrix(group_tensor(s3, 2))) == lhs.value);
}

TEST_CASE("character coefficients on exact catalogs") {
    for (const char* name : {"z2", "z4", "z2x2", "s3", "q8"}) {
        auto g = builtin_group(name);
        auto rep = character_coefficient_check(g, builtin_irreps(g));
        CAPTURE(name);
        CHECK(rep.pass);
        CHECK(rep.irreps_skipped == 0);
    }
    // the S3 2-dim character values are {2, 0, -1}
    auto s3 = symmetric3_group();
    auto cat = builtin_irreps(s3);
    const auto& two = cat.irreps[2];
    CHECK(two.exact_trace(0) == GaussianRational(2));
    for (int e : {1, 2, 5}) CHECK(two.exact_trace(e) == GaussianRational(0));
    for (int e : {3, 4}) CHECK(two.exact_trace(e) == GaussianRational(-1));
    // float-only irreps are skipped with a note, not failed
    auto z3 = cyclic_group(3);
    auto rep3 = character_coefficient_check(z3, builtin_irreps(z3));
    CHECK(rep3.pass);
}

TEST_CASE("circulant identity") {
    auto r24 = circulant_check(2, 4);
    CHECK(r24.pass);
    CHECK(r24.prefactor == BigInt(4));
    auto r34 = circulant_check(3, 4);
    CHECK(r34.pass);
    CHECK(r34.prefactor == BigInt(27));
    CHECK(r34.tuples == 216);
    auto r32 = circulant_check(3, 2);
    CHECK(r32.pass);
    CHECK(r32.prefactor == BigInt(1));
}

TEST_CASE("block diagonalization at d=2 and d=4") {
    for (const char* name : {"z4", "s3", "q8"}) {
        auto g = builtin_group(name);
        for (int d : {2, 4}) {
            auto rep = block_diagonalize_check(g, builtin_irreps(g), d, 2, 1e-9);
            CAPTURE(name, d);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("group file round trip") {
    auto q8 = quaternion8_group();
    std::ostringstream os;
    write_group_file(os, q8);
    std::string path = "q8_roundtrip.group";
    {
        std::ofstream f(path);
        f << os.str();
    }
    auto back = read_group_file(path);
    CHECK(back.order() == 8);
    CHECK(back.table() == q8.table());
    CHECK(back.involution_count() == 2);
    std::remove(path.c_str());
}
