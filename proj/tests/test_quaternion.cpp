#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ncalg/quaternion.hpp"
#include "ncalg/rewrite.hpp"

using namespace ncalg;

namespace {

QuatElem q4(long a0, long a1, long a2, long a3, const QuatParams& p = QuatParams::hamilton()) {
    return QuatElem({Scalar(a0), Scalar(a1), Scalar(a2), Scalar(a3)}, p);
}

QuatElem random_rational(std::mt19937& rng, const QuatParams& p) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    std::array<Scalar, 4> c;
    for (auto& x : c) x = Scalar(mpq_class(num(rng), den(rng)));
    return QuatElem(c, p);
}

// Hamilton's product written out coordinatewise.
QuatElem long_product(const QuatElem& a, const QuatElem& b) {
    const auto& x = a.c;
    const auto& y = b.c;
    return QuatElem({x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                     x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                     x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                     x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]},
                    a.params);
}

}  // namespace

TEST(Quaternion, HamiltonTable) {
    const auto i = q4(0, 1, 0, 0), j = q4(0, 0, 1, 0), k = q4(0, 0, 0, 1), one = q4(1, 0, 0, 0);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * j, q4(0, -1, 0, 0));
    for (const auto& g : {i, j, k}) EXPECT_EQ(g * g, q4(-1, 0, 0, 0));
    EXPECT_EQ(i * j * k, q4(-1, 0, 0, 0));
    EXPECT_EQ(one * k, k);
}

TEST(Quaternion, GeneralTableAgreesWithRewriting) {
    // Structure constants re-derived through the QUAT presentation.
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {2, 5}, {-3, 7}, {1, -1}}) {
        const QuatParams p{Scalar(a), Scalar(b)};
        const Presentation pres = preset_quat(Scalar(a), Scalar(b));
        const RewriteSystem rs = orient(pres);
        const char* names[4] = {"1", "i", "j", "k"};
        auto to_quat = [&](const NcPoly& nf) {
            // basis {1, i, j, ij} with k = ij
            return QuatElem({nf.coeff(Word{}), nf.coeff(Word{0}), nf.coeff(Word{1}), nf.coeff(Word{0, 1})}, p);
        };
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t) {
                const NcPoly prod = rs.normal_form(pres.parse(std::string(names[s]) + "*" + names[t]));
                EXPECT_EQ(to_quat(prod), QuatElem::basis(s, p) * QuatElem::basis(t, p)) << names[s] << names[t];
            }
        const auto k = QuatElem::basis(3, p);
        EXPECT_EQ(k * k, QuatElem::scalar(-(p.a * p.b), p));
        EXPECT_EQ(QuatElem::basis(1, p) * QuatElem::basis(2, p) * k, QuatElem::scalar(-(p.a * p.b), p));
    }
}

TEST(Quaternion, CompactProductMatchesLongForm) {
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto x = random_rational(rng, QuatParams::hamilton()), y = random_rational(rng, QuatParams::hamilton());
        EXPECT_EQ(qmul(x, y), long_product(x, y));
        EXPECT_EQ(qmul_compact(x, y), qmul(x, y));
    }
    EXPECT_THROW(qmul_compact(q4(1, 0, 0, 0, {Scalar(2), Scalar(3)}), q4(1, 0, 0, 0, {Scalar(2), Scalar(3)})),
                 param_mismatch);
}

TEST(Quaternion, NormProperties) {
    std::mt19937 rng(5);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {-1, 1}, {3, -7}}) {
        const QuatParams p{Scalar(a), Scalar(b)};
        for (int t = 0; t < 100; ++t) {
            const auto x = random_rational(rng, p), y = random_rational(rng, p);
            EXPECT_EQ(norm(x * y), norm(x) * norm(y));
            EXPECT_EQ(x * conjugate(x), QuatElem::scalar(norm(x), p));
            if (!norm(x).is_zero()) {
                EXPECT_EQ(x * inverse(x), QuatElem::scalar(Scalar(1), p));
            }
        }
    }
    EXPECT_EQ(norm(q4(1, 1, 1, 1)), Scalar(4));
    EXPECT_EQ(norm(q4(1, 0, 1, 0, {Scalar(-1), Scalar(1)})), Scalar(0));
    EXPECT_EQ(inverse(q4(0, 1, 0, 0)), q4(0, -1, 0, 0));
    EXPECT_THROW(inverse(q4(1, 0, 1, 0, {Scalar(-1), Scalar(1)})), zero_norm);
}

TEST(Quaternion, DotCross) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int t = 0; t < 50; ++t) {
        Vector3 u{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))}, v{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
        EXPECT_TRUE(dot(u, cross(u, v)).is_zero());
        EXPECT_EQ(cross(u, u), (Vector3{Scalar(0), Scalar(0), Scalar(0)}));
        const Vector3 c1 = cross(u, v), c2 = cross(v, u);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(c1[i], -c2[i]);
    }
}

TEST(Quaternion, HilbertSymbolProductFormula) {
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            if (a == 0 || b == 0) continue;
            const auto d = is_division_over_Q(QuatParams(Scalar(a), Scalar(b)));
            int prod = 1;
            for (const auto& [p, s] : d.local_symbols) prod *= s;
            EXPECT_EQ(prod, 1) << a << "," << b;
            if (!d.division) {
                ASSERT_TRUE(d.witness) << a << "," << b;
                EXPECT_TRUE(norm(*d.witness).is_zero());
                EXPECT_NE(*d.witness, QuatElem::scalar(Scalar(0), d.witness->params));
            }
        }
}

TEST(Quaternion, DivisionDecisions) {
    EXPECT_TRUE(is_division_over_Q({Scalar(-1), Scalar(-1)}).division);
    EXPECT_TRUE(is_division_over_Q({Scalar(-1), Scalar(-3)}).division);
    EXPECT_TRUE(is_division_over_Q({Scalar(2), Scalar(5)}).division);  // 2 is not a norm from Q(sqrt 5)
    EXPECT_FALSE(is_division_over_Q({Scalar(-1), Scalar(1)}).division);
    EXPECT_FALSE(is_division_over_Q({Scalar(-1), Scalar(2)}).division);
    // only square classes matter
    EXPECT_EQ(is_division_over_Q({Scalar::rational(1, 3), Scalar::rational(-5, 7)}).division,
              is_division_over_Q({Scalar(3), Scalar(-35)}).division);
    const auto d = is_division_over_Q({Scalar::rational(2, 9), Scalar::rational(-7, 4)});
    if (!d.division) {
        ASSERT_TRUE(d.witness);
        EXPECT_TRUE(norm(*d.witness).is_zero());
    }
}

TEST(Rotation, QuarterTurnAboutJ) {
    const double pi = std::numbers::pi;
    const Versor u = axis_angle_to_versor(pi / 2, vec3(0, 1, 0));
    EXPECT_NEAR(u[0], std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(u[2], std::sqrt(0.5), 1e-15);
    const Vector3 r = rotate_vector(u, vec3(0, 0, 1));
    EXPECT_NEAR(r[0].as_double(), 1.0, 1e-12);
    EXPECT_NEAR(r[1].as_double(), 0.0, 1e-12);
    EXPECT_NEAR(r[2].as_double(), 0.0, 1e-12);
    // exact: (1 + j) k (1 - j) / 2 = i
    const auto one_j = q4(1, 0, 1, 0), k = q4(0, 0, 0, 1);
    EXPECT_EQ((one_j * k * conjugate(one_j)).scaled(Scalar::rational(1, 2)), q4(0, 1, 0, 0));
}

TEST(Rotation, VersorBasics) {
    const double pi = std::numbers::pi;
    const Versor id = axis_angle_to_versor(0, vec3(0, 0, 1));
    EXPECT_EQ(id.quat(), Versor(1, 0, 0, 0).quat());
    const Versor full = axis_angle_to_versor(2 * pi, vec3(1, 0, 0));
    EXPECT_NEAR(full[0], -1.0, 1e-12);
    EXPECT_THROW(axis_angle_to_versor(1.0, vec3(1, 1, 0)), non_unit_axis);
    EXPECT_THROW(Versor(1, 1, 0, 0), non_unit_versor);
    const ScalarMatrix Ri = versor_to_matrix(Versor(0, 1, 0, 0));
    const ScalarMatrix expected = matrix_from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, Field::approx());
    EXPECT_EQ(Ri, expected);
    const Vector3 n = vec3(0.6, 0, 0.8);
    const Vector3 r = rotate_vector(axis_angle_to_versor(pi, n), n);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(r[i].as_double(), n[i].as_double(), 1e-12);
}

TEST(Rotation, HomomorphismProperty) {
    std::mt19937 rng(11);
    std::normal_distribution<double> g;
    auto random_versor = [&] {
        double a[4], s = 0;
        for (double& x : a) {
            x = g(rng);
            s += x * x;
        }
        s = std::sqrt(s);
        return Versor(a[0] / s, a[1] / s, a[2] / s, a[3] / s);
    };
    for (int t = 0; t < 500; ++t) {
        const Versor u1 = random_versor(), u2 = random_versor();
        const ScalarMatrix R1 = versor_to_matrix(u1), R2 = versor_to_matrix(u2);
        EXPECT_EQ(versor_to_matrix(u1 * u2), R1 * R2);
        EXPECT_EQ(R1.transpose() * R1, identity(3, Field::approx()));
        EXPECT_NEAR(determinant(R1).as_double(), 1.0, 1e-12);
        const Versor neg(-u1[0], -u1[1], -u1[2], -u1[3]);
        EXPECT_EQ(versor_to_matrix(neg), R1);
        const Vector3 v = vec3(g(rng), g(rng), g(rng));
        const auto Rv = R1.apply({v[0], v[1], v[2]});
        const Vector3 w = rotate_vector(u1, v);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(Rv[i].as_double(), w[i].as_double(), 1e-12);
        EXPECT_NEAR(euclidean_length(w), euclidean_length(v), 1e-12);
    }
}
