// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncalg/ncalg.hpp"

using namespace ncalg;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure; later checks still run so the detail names the earliest one.
struct Checker {
    Outcome out;
    void require(bool cond, const std::string& what) {
        if (!cond && out.ok) {
            out.ok = false;
            out.detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds, 0 when unbounded
    std::function<Outcome()> run;
};

std::mt19937 make_rng(int id) { return std::mt19937(1000u + static_cast<unsigned>(id)); }

Scalar random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    return Scalar(mpq_class(num(rng), den(rng)));
}

QuatElem random_quat(std::mt19937& rng, const QuatParams& p) {
    return QuatElem({random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)}, p);
}

QuatElem hq(long a0, long a1, long a2, long a3) {
    return QuatElem({Scalar(a0), Scalar(a1), Scalar(a2), Scalar(a3)}, QuatParams::hamilton());
}

double max_abs_diff(const ScalarMatrix& a, const ScalarMatrix& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j).as_double() - b(i, j).as_double()));
    return m;
}

NcPoly random_poly(const Presentation& p, std::mt19937& rng, int maxlen, int terms) {
    std::uniform_int_distribution<int> len(0, maxlen), letter(0, static_cast<int>(p.alphabet->size()) - 1), coef(-3, 3);
    NcPoly out = p.zero();
    for (int t = 0; t < terms; ++t) {
        Word w;
        for (int i = len(rng); i > 0; --i) w.push_back(static_cast<Letter>(letter(rng)));
        out.add_term(w, p.field.from_int(coef(rng)));
    }
    return out;
}

Outcome quaternion_table() {
    Checker c;
    const auto i = hq(0, 1, 0, 0), j = hq(0, 0, 1, 0), k = hq(0, 0, 0, 1), m1 = hq(-1, 0, 0, 0);
    c.require(j * k == i, "jk != i");
    c.require(k * j == hq(0, -1, 0, 0), "kj != -i");
    c.require(i * i == m1 && j * j == m1 && k * k == m1, "squares != -1");
    c.require(i * j * k == m1, "ijk != -1");
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {2, 5}, {-3, 7}, {1, -1}, {3, 3}}) {
        const QuatParams p{Scalar(a), Scalar(b)};
        const QuatElem minus_ab = QuatElem::scalar(-(p.a * p.b), p), kk = QuatElem::basis(3, p);
        c.require(kk * kk == minus_ab, "k^2 != -ab in Q(" + std::to_string(a) + "," + std::to_string(b) + ")");
        c.require(QuatElem::basis(1, p) * QuatElem::basis(2, p) * kk == minus_ab, "ijk != -ab");
    }
    return c.out;
}

Outcome compact_product() {
    Checker c;
    auto rng = make_rng(2);
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_quat(rng, QuatParams::hamilton()), y = random_quat(rng, QuatParams::hamilton());
        c.require(qmul(x, y) == qmul_compact(x, y), "qmul != qmul_compact for " + to_string(x) + ", " + to_string(y));
    }
    return c.out;
}

Outcome figure_rotation() {
    Checker c;
    const Versor u = axis_angle_to_versor(std::numbers::pi / 2, vec3(0, 1, 0));
    const Vector3 r = rotate_vector(u, vec3(0, 0, 1));
    const double err = std::max({std::abs(r[0].as_double() - 1), std::abs(r[1].as_double()), std::abs(r[2].as_double())});
    c.require(err <= 1e-12, "numeric rotation error " + std::to_string(err));
    // (1 + j)/sqrt2 conjugating k, expanded exactly: (1 + j) k (1 - j) / 2 = i
    const auto one_j = hq(1, 0, 1, 0);
    c.require((one_j * hq(0, 0, 0, 1) * conjugate(one_j)).scaled(Scalar::rational(1, 2)) == hq(0, 1, 0, 0),
              "symbolic expansion != i");
    return c.out;
}

Outcome rotation_homomorphism() {
    Checker c;
    auto rng = make_rng(4);
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
    const ScalarMatrix I = identity(3, Field::approx());
    double worst = 0;
    for (int t = 0; t < 10000; ++t) {
        const Versor u1 = random_versor(), u2 = random_versor();
        const ScalarMatrix R1 = versor_to_matrix(u1), R2 = versor_to_matrix(u2);
        worst = std::max({worst, max_abs_diff(versor_to_matrix(u1 * u2), R1 * R2), max_abs_diff(R1.transpose() * R1, I),
                          std::abs(determinant(R1).as_double() - 1)});
    }
    std::ostringstream s;
    s << "max deviation " << worst;
    c.require(worst <= 1e-12, s.str());
    if (c.out.ok) c.out.detail = s.str();
    return c.out;
}

Outcome weyl_obstruction() {
    Checker c;
    for (std::size_t n = 1; n <= 50; ++n) {
        const auto cert = weyl_trace_obstruction(n);
        c.require(cert.obstructed() && cert.trace_commutator.is_zero() && cert.trace_identity == Scalar(static_cast<long>(n)),
                  "no certificate for n=" + std::to_string(n));
    }
    auto rng = make_rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    const auto pres = std::make_shared<const Presentation>(preset_weyl(1));
    for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 100; ++t) {
            ScalarMatrix X = zeros(n, n, Field::Q()), Y = zeros(n, n, Field::Q());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    X(i, j) = Scalar(d(rng));
                    Y(i, j) = Scalar(d(rng));
                }
            c.require(!verify_representation(MatRep(pres, {X, Y})).ok, "random pair accepted at n=" + std::to_string(n));
        }
    return c.out;
}

Outcome weyl_truncations() {
    Checker c;
    for (std::size_t N = 1; N <= 100; ++N) {
        ScalarMatrix expected = zeros(N, N, Field::Q());
        expected(N - 1, N - 1) = Scalar(-static_cast<long>(N));
        c.require(truncated_weyl_rep(N).defect == expected, "defect wrong at N=" + std::to_string(N));
    }
    return c.out;
}

Outcome ideal_trichotomy() {
    Checker c;
    auto rng = make_rng(7);
    // case 0: general invertible, 1: diagonal, 2: antidiagonal
    std::size_t checked = 0;
    for (int qi : {1, -1, 2}) {
        const Presentation p = preset_kq_poly(Scalar(qi));
        for (int kind = 0; kind < 3; ++kind)
            for (int t = 0; t < 1000;) {
                Scalar a = random_rational(rng), b = random_rational(rng), g = random_rational(rng), d = random_rational(rng);
                if (kind == 1) b = g = Scalar(0);
                if (kind == 2) a = d = Scalar(0);
                const ScalarMatrix m = matrix_from_rows({{a, b}, {g, d}}, Field::Q());
                const Scalar det = a * d - b * g;
                if (det.is_zero()) continue;
                ++t;
                const bool diag = b.is_zero() && g.is_zero();
                const bool anti = a.is_zero() && d.is_zero();
                const bool expected = qi == 1 || diag || (qi == -1 && anti);
                const IdealPreservation r = ideal_preserved_by_linear_map(p, m);
                ++checked;
                c.require(r.preserved == expected, "q=" + std::to_string(qi) + " mismatch for " + to_string(m));
                if (qi == 1) c.require(r.lambdas && (*r.lambdas)[0] == det, "lambda != det for " + to_string(m));
            }
    }
    if (c.out.ok) c.out.detail = std::to_string(checked) + " maps";
    return c.out;
}

Outcome dual_numbers() {
    Checker c;
    const AxiomCheck g = check_coproduct_algebra_map(*hopf_dual_numbers_grouplike());
    c.require(!g.ok && g.witness == "epsilon(h^2) = 1 != 0", "grouplike witness: " + g.witness);
    const HopfPtr P = hopf_dual_numbers_primitive();
    for (const AxiomCheck& a : {check_coproduct_algebra_map(*P), check_counit(*P, 6), check_coassociativity(*P, 6)})
        c.require(a.ok, "primitive structure, " + a.check + ": " + a.witness);
    return c.out;
}

Outcome hq_checks() {
    Checker c;
    const Scalar q = Field::Qq().generator();
    const HopfReport r = check_hopf(*hopf_hq(q), 6);
    c.require(r.checks.size() == 4, "expected four axiom checks");
    for (const auto& a : r.checks) c.require(a.ok, a.check + ": " + a.witness);
    const ActionSpec spec = hq_action(q);
    const AxiomCheck m = check_module_algebra(spec, 6);
    c.require(m.ok, "module-algebra: " + m.witness);
    const auto& A = spec.target();
    const auto& Hp = spec.hopf().presentation();
    // (i) every H-relation acts by zero; (ii) each generator sends y x - q x y into the ideal
    for (const auto& rho : Hp.relations)
        for (const char* w : {"x", "y", "x*y", "x^3*y^2"})
            c.require(act(spec, rho, A.parse(w)).is_zero(), "(" + to_string(rho) + ")(" + w + ") != 0");
    for (const char* h : {"g", "ginv", "h"})
        c.require(act(spec, Hp.parse(h), A.parse("y*x - q*x*y")).is_zero(), std::string(h) + "(y*x - q*x*y) != 0");
    return c.out;
}

Outcome hecke_flip() {
    Checker c;
    for (std::size_t m : {2u, 3u}) {
        const ScalarMatrix F = flip_matrix(m);
        c.require(check_braid(F), "braid fails for dim " + std::to_string(m));
        c.require(check_hecke(F, Scalar(1)).ok(), "Hecke fails for dim " + std::to_string(m));
    }
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto counts = basis_counts_by_degree(orient(hecke_symmetric_algebra(flip_matrix(m), Scalar(1), m)), 4);
        for (std::size_t d = 0; d <= 4; ++d) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), m + d - 1, d);
            c.require(counts[d] == binom.get_ui(), "count m=" + std::to_string(m) + " d=" + std::to_string(d));
        }
    }
    return c.out;
}

Outcome classification_two() {
    Checker c;
    const auto rep = classify_a1q_irreducibles(2);
    const Scalar half = Field::cyclo(2).from_rational(mpq_class(1, 2));
    std::size_t one = 0, two = 0;
    for (const auto& r : rep.representatives) {
        c.require(verify_representation(r.rep).ok, "unverified representative");
        c.require(r.commutant_dim == 1, "commutant dimension " + std::to_string(r.commutant_dim));
        c.require(r.oracle && *r.oracle == OracleResult::Kind::none, "oracle disagrees on a representative");
        if (r.rep.dim() == 1) {
            ++one;
            c.require(r.rep[0](0, 0) * r.rep[1](0, 0) == half, "alpha*beta != 1/2");
        }
        if (r.rep.dim() == 2) ++two;
        c.require(r.rep.dim() <= 2, "irreducible of dimension " + std::to_string(r.rep.dim()));
    }
    c.require(rep.max_dim >= 3, "search space stops below dimension 3");
    c.require(one > 0 && two > 0, "missing the 1- or 2-dimensional irreducibles");
    if (c.out.ok)
        c.out.detail = std::to_string(one) + " one-dim, " + std::to_string(two) + " two-dim, searched to dim " +
                       std::to_string(rep.max_dim);
    return c.out;
}

Outcome classification_three() {
    Checker c;
    const auto a = classify_a1q_irreducibles(3);
    for (auto d : a.dims_found) c.require(d == 1 || d == 3, "dimension " + std::to_string(d) + " found");
    for (std::size_t i = 0; i < a.representatives.size(); ++i)
        for (std::size_t j = i + 1; j < a.representatives.size(); ++j)
            c.require(are_equivalent(a.representatives[i].rep, a.representatives[j].rep).kind ==
                          EquivalenceResult::Kind::inequivalent,
                      "representatives " + std::to_string(i) + ", " + std::to_string(j) + " not certified inequivalent");
    ClassifyConfig cfg;
    cfg.seed = 17;
    const auto b = classify_a1q_irreducibles(3, cfg);
    c.require(a.representatives.size() == b.representatives.size(), "permuted run found a different number");
    for (const auto& x : a.representatives) {
        std::size_t matches = 0;
        for (const auto& y : b.representatives)
            if (are_equivalent(x.rep, y.rep).equivalent()) ++matches;
        c.require(matches == 1, "no bijection with the permuted run");
    }
    if (c.out.ok) c.out.detail = std::to_string(a.representatives.size()) + " representatives";
    return c.out;
}

Outcome division_decision() {
    Checker c;
    c.require(is_division_over_Q({Scalar(-1), Scalar(-1)}).division, "Q(-1,-1) not division");
    auto split = [&](long a, long b) {
        const auto d = is_division_over_Q({Scalar(a), Scalar(b)});
        const std::string name = "Q(" + std::to_string(a) + "," + std::to_string(b) + ")";
        c.require(!d.division, name + " not split");
        c.require(d.witness && norm(*d.witness).is_zero() && *d.witness != QuatElem::scalar(Scalar(0), d.witness->params),
                  name + " lacks a norm-0 witness");
    };
    split(-1, 1);
    for (long b : {1, -1, 2, -2}) split(1, b);
    auto rng = make_rng(13);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {-1, 1}, {2, -5}}) {
        const QuatParams p{Scalar(a), Scalar(b)};
        for (int t = 0; t < 1000; ++t) {
            const auto x = random_quat(rng, p), y = random_quat(rng, p);
            c.require(norm(x * y) == norm(x) * norm(y), "N(xy) != N(x)N(y)");
        }
    }
    return c.out;
}

Outcome rewriting_soundness() {
    Checker c;
    const Scalar q = Field::Qq().generator();
    const std::vector<Presentation> presets{preset_kq_poly(q),   preset_weyl(1),         preset_weyl(2),
                                            preset_qweyl1(q),    preset_qweyl(2, q),     preset_hq(q),
                                            preset_dual_numbers(), preset_laurent(),     preset_quat(Scalar(-1), Scalar(-1)),
                                            preset_free({"x", "y"})};
    auto rng = make_rng(14);
    for (const auto& p : presets) {
        const RewriteSystem rs = orient(p);
        const ConfluenceStatus s = check_local_confluence(rs, std::max(4, rs.max_rule_degree()));
        c.require(s.kind == ConfluenceStatus::Kind::locally_confluent_up_to, p.name + " not locally confluent");
        for (int t = 0; t < 1000; ++t) {
            const NcPoly a = random_poly(p, rng, 3, 3), b = random_poly(p, rng, 3, 3);
            const NcPoly na = rs.normal_form(a), nb = rs.normal_form(b);
            c.require(rs.normal_form(na) == na, p.name + ": normal form not idempotent on " + to_string(a));
            c.require(rs.normal_form(a + b) == na + nb, p.name + ": not additive");
            c.require(rs.normal_form(a * b) == rs.normal_form(na * nb), p.name + ": not multiplicative");
        }
    }
    return c.out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "quaternion multiplication table", 1, quaternion_table},
        {2, "qmul agrees with qmul_compact on 1000 rational pairs", 5, compact_product},
        {3, "rotating k about j by pi/2 gives i", 0, figure_rotation},
        {4, "versor to rotation matrix is a homomorphism (10000 pairs)", 0, rotation_homomorphism},
        {5, "Weyl trace obstruction n=1..50, random pairs rejected", 0, weyl_obstruction},
        {6, "truncation defect is -N E_NN for N=1..100", 0, weyl_truncations},
        {7, "ideal-map trichotomy for q in {1,-1,2}", 0, ideal_trichotomy},
        {8, "dual numbers: grouplike rejected, primitive is a bialgebra", 0, dual_numbers},
        {9, "H_q Hopf axioms and module algebra to degree 6", 60, hq_checks},
        {10, "flip is a Hecke symmetry, symmetric algebra counts", 0, hecke_flip},
        {11, "classification at l=2", 120, classification_two},
        {12, "classification at l=3", 0, classification_three},
        {13, "division/split decision and norm multiplicativity", 0, division_decision},
        {14, "rewriting soundness on all presets", 0, rewriting_soundness},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && cr.time_limit > 0 && secs >= cr.time_limit) {
            o.ok = false;
            o.detail = "exceeded " + std::to_string(static_cast<int>(cr.time_limit)) + " s";
        }
        if (!o.ok) ++failed;
        std::printf("%s %2d  %-60s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
