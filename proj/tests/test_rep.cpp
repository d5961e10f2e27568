#include <gtest/gtest.h>

#include <random>

#include "ncalg/rep.hpp"

using namespace ncalg;

namespace {

ScalarMatrix M(std::vector<std::vector<Scalar>> rows, const Field& f = Field::Q()) { return matrix_from_rows(rows, f); }

ScalarMatrix random_matrix(std::mt19937& rng, std::size_t n, int range = 5) {
    std::uniform_int_distribution<long> d(-range, range);
    ScalarMatrix m = zeros(n, n, Field::Q());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(d(rng));
    return m;
}

ScalarMatrix random_invertible(std::mt19937& rng, std::size_t n) {
    for (;;) {
        ScalarMatrix p = random_matrix(rng, n, 3);
        if (!determinant(p).is_zero()) return p;
    }
}

MatRep kq_minus_one_rep() {
    return MatRep(preset_kq_poly(Scalar(-1)), {M({{1, 0}, {0, -1}}), M({{0, 1}, {1, 0}})});
}

}  // namespace

TEST(Roots, CharacteristicPolynomial) {
    const SPoly p = characteristic_polynomial(M({{2, 1}, {0, 3}}));
    EXPECT_EQ(p.coeffs(), (std::vector<Scalar>{6, -5, 1}));
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        const ScalarMatrix a = random_matrix(rng, 4);
        EXPECT_TRUE(characteristic_polynomial(a).eval(a).is_zero());  // Cayley-Hamilton
        EXPECT_EQ(characteristic_polynomial(a).coeff(0), determinant(a));
    }
}

TEST(Roots, RationalAndCyclotomicRoots) {
    const Field Q = Field::Q();
    // (t - 2/3)(t + 5)(t^2 + 1)
    const SPoly f = SPoly(Q, {Scalar::rational(-2, 3), Scalar(1)}) * SPoly(Q, {Scalar(5), Scalar(1)}) *
                    SPoly(Q, {Scalar(1), Scalar(0), Scalar(1)});
    auto r = roots_in_field(f);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_TRUE(f.eval(r[0]).is_zero() && f.eval(r[1]).is_zero());
    // over Q(zeta_4) the quadratic factor splits
    const Field F = Field::cyclo(4);
    const SPoly g(F, {Scalar(1), Scalar(0), Scalar(1)});
    EXPECT_EQ(roots_in_field(g).size(), 2u);
    // t^3 - 1 over Q(zeta_3): three roots
    const Field F3 = Field::cyclo(3);
    EXPECT_EQ(roots_in_field(SPoly(F3, {Scalar(-1), Scalar(0), Scalar(0), Scalar(1)})).size(), 3u);
    // (t - (1 + 2z)/3)^2 (t - z^2) over Q(zeta_5)
    const Field F5 = Field::cyclo(5);
    const Scalar z = F5.generator();
    const Scalar a = (F5.one() + z * F5.from_int(2)) / F5.from_int(3);
    const SPoly h = SPoly(F5, {-a, F5.one()}) * SPoly(F5, {-a, F5.one()}) * SPoly(F5, {-(z * z), F5.one()});
    auto rs = roots_in_field(h);
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_TRUE((rs[0] == a || rs[1] == a) && (rs[0] == z * z || rs[1] == z * z));
}

TEST(Rep, Verification) {
    EXPECT_TRUE(verify_representation(kq_minus_one_rep()).ok);
    const Scalar q = Scalar(3);
    const Scalar alpha = Scalar(2), beta = (alpha * (Scalar(1) - q)).inv();
    EXPECT_TRUE(verify_representation(MatRep(preset_qweyl1(q), {M({{alpha}}), M({{beta}})})).ok);
    const auto bad = verify_representation(MatRep(preset_weyl(1), {M({{0, 1}, {0, 0}}), M({{0, 0}, {1, 0}})}));
    ASSERT_FALSE(bad.ok);
    EXPECT_EQ(*bad.residual, M({{-2, 0}, {0, 0}}));
}

TEST(Rep, WeylObstructionAndTruncation) {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto c = weyl_trace_obstruction(n);
        EXPECT_TRUE(c.obstructed());
        EXPECT_EQ(c.trace_identity, Scalar(static_cast<long>(n)));
    }
    EXPECT_EQ(weyl_trace_obstruction(3).text(), "tr(PQ-QP)=0 != 3=tr(I)");
    std::mt19937 rng(4);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 20; ++t) {
            const ScalarMatrix X = random_matrix(rng, n), Y = random_matrix(rng, n);
            EXPECT_EQ((X * Y).trace(), (Y * X).trace());
            EXPECT_FALSE(verify_representation(MatRep(preset_weyl(1), {X, Y})).ok);
        }
    const auto t2 = truncated_weyl_rep(2);
    EXPECT_EQ(t2.P, M({{0, 1}, {0, 0}}));
    EXPECT_EQ(t2.Q, M({{0, 0}, {1, 0}}));
    EXPECT_EQ(t2.defect, M({{0, 0}, {0, -2}}));
    EXPECT_EQ(truncated_weyl_rep(1).defect, M({{-1}}));
    const auto t10 = truncated_weyl_rep(10);
    ScalarMatrix expected = zeros(10, 10, Field::Q());
    expected(9, 9) = Scalar(-10);
    EXPECT_EQ(t10.defect, expected);
}

TEST(Rep, CommutantAndIrreducibility) {
    const MatRep r = kq_minus_one_rep();
    EXPECT_EQ(commutant(r).size(), 1u);
    EXPECT_TRUE(is_irreducible(r).irreducible);
    const MatRep rr = direct_sum(r, r);
    EXPECT_EQ(commutant(rr).size(), 4u);
    EXPECT_FALSE(is_irreducible(rr).irreducible);
    // two inequivalent irreducibles: commutant of the sum has dimension 2
    const MatRep r2(preset_kq_poly(Scalar(-1)), {M({{2, 0}, {0, -2}}), M({{0, 1}, {1, 0}})});
    EXPECT_EQ(commutant(direct_sum(r, r2)).size(), 2u);
    // scalar images: full matrix space
    const MatRep scal(preset_kq_poly(Scalar(1)), {M({{2, 0}, {0, 2}}), M({{3, 0}, {0, 3}})});
    EXPECT_EQ(commutant(scal).size(), 4u);
    // commutant dimension is invariant under conjugation
    std::mt19937 rng(8);
    for (int t = 0; t < 5; ++t) {
        const ScalarMatrix P = random_invertible(rng, 4);
        EXPECT_EQ(commutant(conjugate_rep(direct_sum(r, r2), P)).size(), 2u);
    }
}

TEST(Rep, CommutantOneDoesNotImplyIrreducible) {
    // x -> E11, y -> E12 generate the upper triangular algebra: trivial commutant, e1 invariant.
    const MatRep r(preset_free({"x", "y"}), {M({{1, 0}, {0, 0}}), M({{0, 1}, {0, 0}})});
    EXPECT_EQ(commutant(r).size(), 1u);
    EXPECT_FALSE(is_irreducible(r).irreducible);
    EXPECT_EQ(invariant_subspace_oracle(r).kind, OracleResult::Kind::found);
}

TEST(Rep, OracleAgreesWithIrreducibility) {
    EXPECT_EQ(invariant_subspace_oracle(kq_minus_one_rep()).kind, OracleResult::Kind::none);
    const MatRep diag(preset_kq_poly(Scalar(1)), {M({{1, 0}, {0, 2}}), M({{3, 0}, {0, 4}})});
    const auto o = invariant_subspace_oracle(diag);
    EXPECT_EQ(o.kind, OracleResult::Kind::found);
    const MatRep upper(preset_free({"x", "y"}), {M({{1, 2, 3}, {0, 4, 5}, {0, 0, 6}}), M({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}})});
    const auto u = invariant_subspace_oracle(upper);
    ASSERT_EQ(u.kind, OracleResult::Kind::found);
    ASSERT_EQ(u.basis.size(), 1u);
    EXPECT_TRUE(u.basis[0][1].is_zero() && u.basis[0][2].is_zero());
    std::mt19937 rng(10);
    for (std::size_t n = 2; n <= 3; ++n)
        for (int t = 0; t < 15; ++t) {
            const MatRep r(preset_free({"x", "y"}), {random_matrix(rng, n, 2), random_matrix(rng, n, 2)});
            const bool irr = is_irreducible(r).irreducible;
            const bool found = invariant_subspace_oracle(r).kind == OracleResult::Kind::found;
            EXPECT_FALSE(irr && found);
        }
    const MatRep big(preset_free({"x"}), {identity(5, Field::Q())});
    EXPECT_THROW(invariant_subspace_oracle(big), dimension_too_large);
}

TEST(Rep, Equivalence) {
    std::mt19937 rng(12);
    const MatRep r = kq_minus_one_rep();
    auto self = are_equivalent(r, r);
    ASSERT_TRUE(self.equivalent());
    for (int t = 0; t < 5; ++t) {
        const ScalarMatrix P0 = random_invertible(rng, 2);
        const MatRep c = conjugate_rep(r, P0);
        const auto e = are_equivalent(r, c);
        ASSERT_TRUE(e.equivalent());
        for (std::size_t g = 0; g < 2; ++g) EXPECT_EQ(*e.intertwiner * r[g], c[g] * *e.intertwiner);
        EXPECT_TRUE(are_equivalent(c, r).equivalent());
    }
    // reducible reps: direct sums in swapped order are equivalent
    const MatRep r2(preset_kq_poly(Scalar(-1)), {M({{2, 0}, {0, -2}}), M({{0, 1}, {1, 0}})});
    EXPECT_TRUE(are_equivalent(direct_sum(r, r2), direct_sum(r2, r)).equivalent());
    EXPECT_FALSE(are_equivalent(direct_sum(r, r), direct_sum(r, r2)).equivalent());
    EXPECT_EQ(are_equivalent(direct_sum(r, r), direct_sum(r, r2)).kind, EquivalenceResult::Kind::inequivalent);
    // one-dimensional QWEYL1 reps with different alpha
    const Scalar q = Scalar(3);
    auto one_dim = [&](long a) {
        const Scalar alpha(a), beta = (alpha * (Scalar(1) - q)).inv();
        return MatRep(preset_qweyl1(q), {M({{alpha}}), M({{beta}})});
    };
    EXPECT_FALSE(are_equivalent(one_dim(1), one_dim(2)).equivalent());
    EXPECT_TRUE(are_equivalent(one_dim(2), one_dim(2)).equivalent());
    // indecomposable reducible: Jordan block vs its semisimplification
    const MatRep jb(preset_free({"x"}), {M({{1, 1}, {0, 1}})});
    const MatRep ss(preset_free({"x"}), {M({{1, 0}, {0, 1}})});
    EXPECT_EQ(are_equivalent(jb, ss).kind, EquivalenceResult::Kind::inequivalent);
}

TEST(Rep, Decomposability) {
    const MatRep r = kq_minus_one_rep();
    const MatRep r2(preset_kq_poly(Scalar(-1)), {M({{2, 0}, {0, -2}}), M({{0, 1}, {1, 0}})});
    EXPECT_EQ(is_decomposable(r).kind, DecomposabilityResult::Kind::indecomposable);
    const auto d = is_decomposable(direct_sum(r, r2));
    ASSERT_EQ(d.kind, DecomposabilityResult::Kind::decomposable);
    const ScalarMatrix& E = *d.idempotent;
    EXPECT_EQ(E * E, E);
    EXPECT_FALSE(E.is_zero());
    EXPECT_NE(E, identity(4, Field::Q()));
    const MatRep sum = direct_sum(r, r2);
    for (const auto& m : sum.matrices()) EXPECT_EQ(E * m, m * E);
    // X = [[l,1],[0,l]] with Y = 0 in the free algebra: reducible but indecomposable
    const MatRep jb(preset_free({"x", "y"}), {M({{3, 1}, {0, 3}}), M({{0, 0}, {0, 0}})});
    EXPECT_EQ(is_decomposable(jb).kind, DecomposabilityResult::Kind::indecomposable);
    EXPECT_EQ(invariant_subspace_oracle(jb).kind, OracleResult::Kind::found);
    // rep + rep has a 4-dimensional commutant and splits
    EXPECT_EQ(is_decomposable(direct_sum(r, r)).kind, DecomposabilityResult::Kind::decomposable);
}

TEST(Rep, SolveYGivenX) {
    const Scalar q(3);
    auto s = solve_Y_given_X(q, M({{2}}));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->particular, M({{Scalar::rational(-1, 4)}}));
    EXPECT_TRUE(s->homogeneous.empty());
    EXPECT_FALSE(solve_Y_given_X(q, zeros(2, 2, Field::Q())));
    auto s2 = solve_Y_given_X(Scalar(-1), M({{5, 0}, {0, -5}}));
    ASSERT_TRUE(s2);
    EXPECT_EQ(s2->homogeneous.size(), 2u);
    const ScalarMatrix X = M({{5, 0}, {0, -5}});
    const ScalarMatrix Y = s2->particular + s2->homogeneous[0];
    EXPECT_EQ(Y * X + X * Y, identity(2, Field::Q()));
}

TEST(Classification, OrderTwo) {
    const auto rep = classify_a1q_irreducibles(2);
    EXPECT_EQ(rep.dims_found, (std::set<std::size_t>{1, 2}));
    EXPECT_TRUE(rep.max_dim_at_most_order());
    std::size_t one_dim = 0;
    for (const auto& c : rep.representatives) {
        EXPECT_TRUE(verify_representation(c.rep).ok);
        EXPECT_EQ(c.commutant_dim, 1u);
        if (c.rep.dim() == 1) {
            ++one_dim;
            EXPECT_EQ(c.rep[0](0, 0) * c.rep[1](0, 0), Field::cyclo(2).from_rational(mpq_class(1, 2)));
        }
        ASSERT_TRUE(c.oracle);
        EXPECT_EQ(*c.oracle, OracleResult::Kind::none);
    }
    EXPECT_GE(one_dim, 3u);
    EXPECT_THROW(classify_a1q_irreducibles(1), bad_order);
}

TEST(Classification, OrderThreeAndPermutation) {
    const auto a = classify_a1q_irreducibles(3);
    for (auto d : a.dims_found) EXPECT_TRUE(d == 1 || d == 3) << d;
    EXPECT_TRUE(a.dims_found.count(3));
    for (std::size_t i = 0; i < a.representatives.size(); ++i)
        for (std::size_t j = i + 1; j < a.representatives.size(); ++j)
            EXPECT_FALSE(are_equivalent(a.representatives[i].rep, a.representatives[j].rep).equivalent());
    ClassifyConfig cfg;
    cfg.seed = 17;
    const auto b = classify_a1q_irreducibles(3, cfg);
    ASSERT_EQ(a.representatives.size(), b.representatives.size());
    for (const auto& x : a.representatives) {
        std::size_t matches = 0;
        for (const auto& y : b.representatives)
            if (are_equivalent(x.rep, y.rep).equivalent()) ++matches;
        EXPECT_EQ(matches, 1u);
    }
}
