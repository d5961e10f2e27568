#pragma once

// Finite-dimensional matrix representations of finitely presented algebras:
// verification, commutants, irreducibility, equivalence, decomposability,
// the Weyl trace obstruction and the search for irreducible representations
// of the quantum Weyl algebra A_1^q at roots of unity.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncalg/error.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/roots.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

inline ScalarMatrix lift_matrix(const ScalarMatrix& m, const Field& f) {
    if (field_of(m) == f) return m;
    ScalarMatrix out = zeros(m.rows(), m.cols(), f);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.lift(m(i, j));
    return out;
}

/// One square matrix per generator of a presentation.
class MatRep {
public:
    MatRep(PresentationPtr pres, std::vector<ScalarMatrix> mats) : pres_(std::move(pres)), mats_(std::move(mats)) {
        if (mats_.size() != pres_->alphabet->size()) throw size_mismatch("representation needs one matrix per generator");
        if (mats_.empty()) throw size_mismatch("representation of an algebra without generators");
        const std::size_t n = mats_[0].rows();
        for (auto& m : mats_) {
            if (!m.is_square() || m.rows() != n) throw size_mismatch("representation matrices must be square of equal size");
            m = lift_matrix(m, pres_->field);
        }
    }
    MatRep(const Presentation& pres, std::vector<ScalarMatrix> mats)
        : MatRep(std::make_shared<const Presentation>(pres), std::move(mats)) {}

    const Presentation& presentation() const { return *pres_; }
    const PresentationPtr& presentation_ptr() const { return pres_; }
    const std::vector<ScalarMatrix>& matrices() const { return mats_; }
    const ScalarMatrix& operator[](std::size_t g) const { return mats_[g]; }
    const ScalarMatrix& operator[](const std::string& name) const { return mats_[pres_->alphabet->at(name)]; }
    std::size_t dim() const { return mats_[0].rows(); }
    Field field() const { return pres_->field; }

    /// Image of an element of the free algebra on the generators.
    ScalarMatrix evaluate(const NcPoly& p) const { return evaluate_on_matrices(p, mats_); }

private:
    PresentationPtr pres_;
    std::vector<ScalarMatrix> mats_;
};

struct RepVerification {
    bool ok = true;
    std::optional<std::size_t> relation;  // first violated relation
    std::optional<ScalarMatrix> residual;
};

inline RepVerification verify_representation(const MatRep& rep) {
    const auto& rels = rep.presentation().relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        ScalarMatrix r = rep.evaluate(rels[i]);
        if (!r.is_zero()) return {false, i, std::move(r)};
    }
    return {};
}

inline MatRep direct_sum(const MatRep& a, const MatRep& b) {
    const std::size_t n = a.dim(), m = b.dim();
    const Field f = a.field();
    std::vector<ScalarMatrix> out;
    for (std::size_t g = 0; g < a.matrices().size(); ++g) {
        ScalarMatrix s = zeros(n + m, n + m, f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) = a[g](i, j);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b[g](i, j);
        out.push_back(std::move(s));
    }
    return MatRep(a.presentation_ptr(), std::move(out));
}

/// Simultaneous conjugation X -> P X P^-1.
inline MatRep conjugate_rep(const MatRep& r, const ScalarMatrix& p) {
    auto pinv = inverse(lift_matrix(p, r.field()));
    if (!pinv) throw bad_parameter("conjugating matrix is singular");
    const ScalarMatrix P = lift_matrix(p, r.field());
    std::vector<ScalarMatrix> out;
    for (const auto& m : r.matrices()) out.push_back(P * m * *pinv);
    return MatRep(r.presentation_ptr(), std::move(out));
}

// ---------------------------------------------------------------------------
// Weyl algebra: trace obstruction and truncations
// ---------------------------------------------------------------------------

/// 0 = tr(PQ - QP) versus tr(I) = n: no n x n solution of PQ - QP = I.
struct ObstructionCertificate {
    std::size_t n = 0;
    Scalar trace_commutator;  // always 0
    Scalar trace_identity;    // n
    bool obstructed() const { return trace_commutator != trace_identity; }
    std::string text() const {
        return "tr(PQ-QP)=" + to_string_in_field(trace_commutator) + " != " + to_string_in_field(trace_identity) + "=tr(I)";
    }
};

inline ObstructionCertificate weyl_trace_obstruction(std::size_t n) {
    if (n < 1) throw bad_parameter("matrix size must be positive");
    // tr(PQ) = tr(QP) for all P, Q, so the commutator is traceless
    return {n, Scalar(0), Scalar(static_cast<long>(n))};
}

struct TruncatedWeyl {
    ScalarMatrix P;  // superdiagonal 1, 2, ..., N-1 (the image of y)
    ScalarMatrix Q;  // subdiagonal 1, 1, ..., 1 (the image of x)
    ScalarMatrix defect;  // PQ - QP - I
};

inline TruncatedWeyl truncated_weyl_rep(std::size_t N) {
    if (N < 1) throw bad_parameter("truncation size must be positive");
    const Field f = Field::Q();
    ScalarMatrix P = zeros(N, N, f), Q = zeros(N, N, f);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        P(i, i + 1) = Scalar(static_cast<long>(i + 1));
        Q(i + 1, i) = Scalar(1);
    }
    ScalarMatrix d = P * Q - Q * P - identity(N, f);
    return {std::move(P), std::move(Q), std::move(d)};
}

// ---------------------------------------------------------------------------
// Commutant, generated algebra, irreducibility
// ---------------------------------------------------------------------------

/// Span of vectors kept in echelon form for cheap membership tests.
class IncrementalSpan {
public:
    IncrementalSpan(std::size_t dim, Field f) : dim_(dim), f_(f) {}

    /// Adds v if it is independent of the current span; returns whether it was added.
    bool add(ScalarVector v) {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Scalar c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!basis_[i][j].is_zero()) v[j] = v[j] - c * basis_[i][j];
        }
        std::size_t p = 0;
        while (p < dim_ && v[p].is_zero()) ++p;
        if (p == dim_) return false;
        const Scalar inv = v[p].inv();
        for (auto& x : v) x = x * inv;
        basis_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    std::size_t size() const { return basis_.size(); }
    const std::vector<ScalarVector>& basis() const { return basis_; }

private:
    std::size_t dim_;
    Field f_;
    std::vector<ScalarVector> basis_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

/// Rows of the linear system A X - X B = 0 in the n*m unknowns X (n x m, row-major).
inline void append_sylvester_rows(std::vector<ScalarVector>& rows, const ScalarMatrix& A, const ScalarMatrix& B) {
    const std::size_t n = A.rows(), m = B.rows();
    const Field f = field_of(A);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            ScalarVector row(n * m, f.zero());
            for (std::size_t k = 0; k < n; ++k)
                if (!A(i, k).is_zero()) row[k * m + j] = row[k * m + j] + A(i, k);
            for (std::size_t k = 0; k < m; ++k)
                if (!B(k, j).is_zero()) row[i * m + k] = row[i * m + k] - B(k, j);
            rows.push_back(std::move(row));
        }
}

inline ScalarMatrix rows_to_matrix(const std::vector<ScalarVector>& rows, std::size_t cols, const Field& f) {
    ScalarMatrix m = zeros(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

/// Solutions X (n x m) of A_g X = X B_g for all g.
inline std::vector<ScalarMatrix> intertwiner_basis(const std::vector<ScalarMatrix>& A, const std::vector<ScalarMatrix>& B) {
    const std::size_t n = A[0].rows(), m = B[0].rows();
    const Field f = field_of(A[0]);
    std::vector<ScalarVector> rows;
    for (std::size_t g = 0; g < A.size(); ++g) append_sylvester_rows(rows, A[g], B[g]);
    std::vector<ScalarMatrix> out;
    for (const auto& v : nullspace(rows_to_matrix(rows, n * m, f))) out.push_back(unflatten(v, n, m, f));
    return out;
}

}  // namespace detail

/// Basis of {X : X M_g = M_g X for all g}; the identity comes first.
inline std::vector<ScalarMatrix> commutant(const MatRep& rep) {
    const std::size_t n = rep.dim();
    const Field f = rep.field();
    IncrementalSpan span(n * n, f);
    std::vector<ScalarMatrix> out{identity(n, f)};
    span.add(flatten(out[0]));
    for (auto& x : detail::intertwiner_basis(rep.matrices(), rep.matrices()))
        if (span.add(flatten(x))) out.push_back(std::move(x));
    return out;
}

/// Dimension of the subalgebra of n x n matrices generated by the images.
inline std::size_t generated_algebra_dimension(const MatRep& rep) {
    const std::size_t n = rep.dim();
    const Field f = rep.field();
    IncrementalSpan span(n * n, f);
    std::vector<ScalarMatrix> queue{identity(n, f)};
    span.add(flatten(queue[0]));
    for (std::size_t head = 0; head < queue.size() && span.size() < n * n; ++head) {
        for (const auto& g : rep.matrices()) {
            ScalarMatrix next = queue[head] * g;
            if (span.add(flatten(next))) queue.push_back(std::move(next));
        }
    }
    return span.size();
}

struct IrreducibilityResult {
    bool irreducible = false;  // absolutely irreducible
    std::size_t algebra_dim = 0;
    std::size_t commutant_dim = 0;
    std::vector<ScalarMatrix> commutant_basis;  // evidence when reducible
};

/// Absolute irreducibility: the images generate all n x n matrices (Burnside).
/// The commutant dimension is reported alongside; it is 1 whenever the
/// representation is absolutely irreducible.
inline IrreducibilityResult is_irreducible(const MatRep& rep) {
    IrreducibilityResult r;
    r.algebra_dim = generated_algebra_dimension(rep);
    r.irreducible = r.algebra_dim == rep.dim() * rep.dim();
    auto c = commutant(rep);
    r.commutant_dim = c.size();
    if (!r.irreducible) r.commutant_basis = std::move(c);
    return r;
}

// ---------------------------------------------------------------------------
// Invariant subspaces (independent oracle, n <= 4)
// ---------------------------------------------------------------------------

struct OracleResult {
    enum class Kind { none, found, inconclusive };
    Kind kind = Kind::none;
    std::vector<ScalarVector> basis;
};

namespace detail {

inline ScalarMatrix stack_shifted(const std::vector<ScalarMatrix>& ms, const std::vector<Scalar>& lambdas) {
    const std::size_t n = ms[0].rows();
    const Field f = field_of(ms[0]);
    ScalarMatrix out = zeros(n * ms.size(), n, f);
    for (std::size_t g = 0; g < ms.size(); ++g)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(g * n + i, j) = ms[g](i, j) - (i == j ? lambdas[g] : f.zero());
    return out;
}

/// A common eigenvector of all matrices with eigenvalues in the field.
inline std::optional<ScalarVector> common_eigenvector(const std::vector<ScalarMatrix>& ms) {
    std::vector<std::vector<Scalar>> eig;
    for (const auto& m : ms) {
        eig.push_back(eigenvalues_in_field(m));
        if (eig.back().empty()) return std::nullopt;
    }
    std::vector<std::size_t> pick(ms.size(), 0);
    for (;;) {
        std::vector<Scalar> lambdas;
        for (std::size_t g = 0; g < ms.size(); ++g) lambdas.push_back(eig[g][pick[g]]);
        auto ns = nullspace(stack_shifted(ms, lambdas));
        if (!ns.empty()) return ns[0];
        std::size_t i = 0;
        while (i < ms.size() && ++pick[i] == eig[i].size()) pick[i++] = 0;
        if (i == ms.size()) return std::nullopt;
    }
}

/// Smallest invariant subspace containing v.
inline std::vector<ScalarVector> spin(const std::vector<ScalarMatrix>& ms, const ScalarVector& v) {
    const std::size_t n = v.size();
    const Field f = field_of(ms[0]);
    IncrementalSpan span(n, f);
    std::vector<ScalarVector> queue{v}, out;
    if (span.add(v)) out.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& m : ms) {
            ScalarVector w = m.apply(queue[head]);
            if (span.add(w)) {
                out.push_back(w);
                queue.push_back(std::move(w));
            }
        }
    return out;
}

/// Annihilator of a functional: the hyperplane {v : phi . v = 0}.
inline std::vector<ScalarVector> hyperplane(const ScalarVector& phi) {
    const Field f = Field::of(phi[0]);
    ScalarMatrix m = zeros(1, phi.size(), f);
    for (std::size_t j = 0; j < phi.size(); ++j) m(0, j) = phi[j];
    return nullspace(m);
}

}  // namespace detail

inline constexpr std::size_t oracle_max_dim = 4;

/// Searches for a proper nonzero invariant subspace defined over the field.
/// Lines come from common eigenvectors, hyperplanes from common eigenvectors
/// of the transposes; in dimension 4 two-dimensional subspaces are searched by
/// spinning eigenvectors and may end inconclusive.
inline OracleResult invariant_subspace_oracle(const MatRep& rep) {
    const std::size_t n = rep.dim();
    if (n > oracle_max_dim) throw dimension_too_large("the invariant-subspace oracle handles n <= 4");
    const auto& ms = rep.matrices();
    if (n == 1) return {};
    if (auto v = detail::common_eigenvector(ms)) return {OracleResult::Kind::found, {*v}};
    std::vector<ScalarMatrix> tr;
    for (const auto& m : ms) tr.push_back(m.transpose());
    if (auto phi = detail::common_eigenvector(tr)) return {OracleResult::Kind::found, detail::hyperplane(*phi)};
    if (n <= 3) return {};
    // n = 4: look for a two-dimensional invariant subspace
    std::vector<ScalarMatrix> probes = ms;
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b) {
            probes.push_back(ms[a] + ms[b]);
            probes.push_back(ms[a] * ms[b]);
        }
    const Field f = rep.field();
    for (const auto& p : probes) {
        for (const auto& lambda : eigenvalues_in_field(p)) {
            ScalarMatrix shifted = p - identity(n, f).scaled(lambda);
            for (const auto& v : nullspace(shifted)) {
                auto w = detail::spin(ms, v);
                if (w.size() < n) return {OracleResult::Kind::found, w};
            }
        }
    }
    return {OracleResult::Kind::inconclusive, {}};
}

// ---------------------------------------------------------------------------
// Equivalence and decomposability
// ---------------------------------------------------------------------------

struct EquivalenceResult {
    enum class Kind { equivalent, inequivalent, unknown };
    Kind kind = Kind::inequivalent;
    std::optional<ScalarMatrix> intertwiner;  // P with P X_i = X'_i P
    std::vector<ScalarMatrix> intertwiner_basis;
    bool equivalent() const { return kind == Kind::equivalent; }
};

inline constexpr std::size_t intertwiner_sweep_limit = 100000;

/// Looks for an invertible P with P X_i P^-1 = X'_i. When both sides are
/// absolutely irreducible any nonzero intertwiner is invertible. Otherwise the
/// coefficient grid {0..n}^k over the intertwiner basis is swept: det of a
/// generic combination is a nonzero polynomial of degree n, so it cannot
/// vanish on the whole grid and an exhaustive sweep is a complete test.
inline EquivalenceResult are_equivalent(const MatRep& r1, const MatRep& r2) {
    if (!(*r1.presentation().alphabet == *r2.presentation().alphabet) || r1.field() != r2.field())
        throw alphabet_mismatch("representations of different presentations");
    EquivalenceResult out;
    if (r1.dim() != r2.dim()) return out;
    const std::size_t n = r1.dim();
    // P X_i = X'_i P  <=>  X'_i P - P X_i = 0
    out.intertwiner_basis = detail::intertwiner_basis(r2.matrices(), r1.matrices());
    const auto& B = out.intertwiner_basis;
    if (B.empty()) return out;
    if (is_irreducible(r1).irreducible && is_irreducible(r2).irreducible) {
        out.kind = EquivalenceResult::Kind::equivalent;
        out.intertwiner = B[0];
        return out;
    }
    const std::size_t k = B.size();
    double combos = std::pow(static_cast<double>(n + 1), static_cast<double>(k));
    if (combos > static_cast<double>(intertwiner_sweep_limit)) {
        out.kind = EquivalenceResult::Kind::unknown;
        return out;
    }
    const Field f = r1.field();
    std::vector<std::size_t> c(k, 0);
    for (;;) {
        ScalarMatrix P = zeros(n, n, f);
        for (std::size_t i = 0; i < k; ++i)
            if (c[i]) P = P + B[i].scaled(f.from_int(static_cast<long>(c[i])));
        if (!determinant(P).is_zero()) {
            out.kind = EquivalenceResult::Kind::equivalent;
            out.intertwiner = std::move(P);
            return out;
        }
        std::size_t i = 0;
        while (i < k && ++c[i] == n + 1) c[i++] = 0;
        if (i == k) break;
    }
    return out;  // certified inequivalent
}

struct DecomposabilityResult {
    enum class Kind { decomposable, indecomposable, unknown };
    Kind kind = Kind::unknown;
    std::optional<ScalarMatrix> idempotent;  // non-scalar idempotent in the commutant
};

inline constexpr std::size_t decomposability_max_commutant = 4;

namespace detail {

/// Projection onto the generalized eigenspace of c at lambda along the rest.
inline std::optional<ScalarMatrix> spectral_projection(const ScalarMatrix& c, const Scalar& lambda) {
    const std::size_t n = c.rows();
    const Field f = field_of(c);
    ScalarMatrix shifted = c - identity(n, f).scaled(lambda);
    ScalarMatrix power = identity(n, f);
    for (std::size_t i = 0; i < n; ++i) power = power * shifted;
    auto ker = nullspace(power);
    if (ker.empty() || ker.size() == n) return std::nullopt;
    // image of power is the complementary invariant subspace
    auto img = span_basis([&] {
        std::vector<ScalarVector> cols;
        const ScalarMatrix t = power.transpose();
        for (std::size_t j = 0; j < n; ++j) cols.emplace_back(t.data().begin() + static_cast<std::ptrdiff_t>(j * n),
                                                              t.data().begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
        return cols;
    }(), n, f);
    ScalarMatrix basis = zeros(n, n, f);
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) basis(i, j) = ker[j][i];
    for (std::size_t j = 0; j < img.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) basis(i, ker.size() + j) = img[j][i];
    auto inv = inverse(basis);
    if (!inv) return std::nullopt;
    ScalarMatrix d = zeros(n, n, f);
    for (std::size_t i = 0; i < ker.size(); ++i) d(i, i) = f.one();
    return basis * d * *inv;
}

/// Dimension of the trace-form radical {x in C : tr(xy) = 0 for all y in C}.
inline std::size_t trace_radical_dim(const std::vector<ScalarMatrix>& c) {
    const Field f = field_of(c[0]);
    ScalarMatrix gram = zeros(c.size(), c.size(), f);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) gram(i, j) = (c[i] * c[j]).trace();
    return c.size() - rank(gram);
}

}  // namespace detail

/// Searches the commutant for a non-scalar idempotent. A commutant whose
/// quotient by its trace-form radical is one-dimensional is local, which
/// certifies indecomposability.
inline DecomposabilityResult is_decomposable(const MatRep& rep) {
    const auto c = commutant(rep);
    if (c.size() == 1 || c.size() - detail::trace_radical_dim(c) == 1) return {DecomposabilityResult::Kind::indecomposable, {}};
    if (c.size() > decomposability_max_commutant) return {};
    std::vector<ScalarMatrix> probes(c.begin() + 1, c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) probes.push_back(c[i] + c[j]);
    for (const auto& p : probes)
        for (const auto& lambda : eigenvalues_in_field(p))
            if (auto e = detail::spectral_projection(p, lambda)) return {DecomposabilityResult::Kind::decomposable, e};
    return {};
}

// ---------------------------------------------------------------------------
// A_1^q: solving for y and classifying irreducibles at roots of unity
// ---------------------------------------------------------------------------

struct MatrixAffineSolution {
    ScalarMatrix particular;
    std::vector<ScalarMatrix> homogeneous;
};

/// All Y with Y X - q X Y = I.
inline std::optional<MatrixAffineSolution> solve_Y_given_X(const Scalar& q, const ScalarMatrix& X) {
    if (!X.is_square()) throw size_not_square("X must be square");
    const std::size_t n = X.rows();
    const Field f = field_of(X);
    const Scalar qq = f.lift(q);
    ScalarMatrix A = zeros(n * n, n * n, f);
    ScalarVector b(n * n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                A(row, i * n + k) = A(row, i * n + k) + X(k, j);       // (Y X)_ij
                A(row, k * n + j) = A(row, k * n + j) - qq * X(i, k);  // (q X Y)_ij
            }
            if (i == j) b[row] = f.one();
        }
    auto sol = solve_affine(A, b);
    if (!sol) return std::nullopt;
    MatrixAffineSolution out{unflatten(sol->particular, n, n, f), {}};
    for (const auto& h : sol->homogeneous) out.homogeneous.push_back(unflatten(h, n, n, f));
    return out;
}

struct ClassifyConfig {
    std::optional<std::vector<Scalar>> grid;  // default {1, z, 1 + z, 2, 1/2}
    int max_dim = 0;                          // default: order + 1
    std::uint64_t seed = 0;                   // 0 keeps the canonical candidate order
    int max_free_parameters = 6;              // {0,1} combinations over at most this many homogeneous solutions
};

struct ClassifiedRep {
    MatRep rep;
    std::string form;       // candidate family of X
    std::string parameter;  // grid value and combination used
    std::size_t commutant_dim = 0;
    std::size_t algebra_dim = 0;
    std::optional<OracleResult::Kind> oracle;
};

struct ClassificationReport {
    int order = 0;
    Scalar q;
    std::vector<Scalar> grid;
    int max_dim = 0;
    std::uint64_t seed = 0;
    std::vector<ClassifiedRep> representatives;
    std::vector<std::string> dedup_log;
    std::map<std::size_t, std::size_t> candidates_by_dim;
    std::map<std::size_t, std::size_t> irreducible_candidates_by_dim;
    std::set<std::size_t> dims_found;
    std::string one_dim_family = "x = (alpha), y = (beta) with alpha*beta = 1/(1 - q)";
    std::string completeness = "search-complete within the declared candidate forms and grid";

    bool max_dim_at_most_order() const { return dims_found.empty() || *dims_found.rbegin() <= static_cast<std::size_t>(order); }
};

inline std::vector<Scalar> default_classification_grid(int order) {
    const Field f = Field::cyclo(order);
    const Scalar z = f.generator();
    return {f.one(), z, f.one() + z, f.from_int(2), f.from_rational(mpq_class(1, 2))};
}

namespace detail {

struct XCandidate {
    std::size_t dim;
    std::string form;
    Scalar lambda;
    ScalarMatrix X;
};

inline std::vector<XCandidate> x_candidates(const Scalar& q, const std::vector<Scalar>& grid, int max_dim) {
    const Field f = Field::of(q);
    std::vector<XCandidate> out;
    for (int k = 2; k <= max_dim; ++k) {
        const std::size_t n = static_cast<std::size_t>(k);
        for (const auto& lambda : grid) {
            if (lambda.is_zero()) continue;
            ScalarMatrix diag = zeros(n, n, f), jordan = zeros(n, n, f), comp = zeros(n, n, f);
            Scalar pw = lambda;
            for (std::size_t i = 0; i < n; ++i) {
                diag(i, i) = pw;
                pw = pw * q;
                jordan(i, i) = lambda;
                if (i + 1 < n) {
                    jordan(i, i + 1) = f.one();
                    comp(i + 1, i) = f.one();
                }
            }
            comp(0, n - 1) = lambda;  // companion matrix of t^n - lambda
            out.push_back({n, "diagonal lambda*q^i", lambda, diag});
            out.push_back({n, "jordan block", lambda, jordan});
            out.push_back({n, "companion of t^n - lambda", lambda, comp});
        }
    }
    return out;
}

}  // namespace detail

/// Irreducible representations of A_1^q with q = zeta, a primitive l-th root
/// of unity, found among the declared candidate forms for X.
inline ClassificationReport classify_a1q_irreducibles(int order, const ClassifyConfig& cfg = {}) {
    if (order < 2) throw bad_order("classification needs order >= 2");
    const Field f = Field::cyclo(order);
    ClassificationReport rep;
    rep.order = order;
    rep.q = f.generator();
    rep.grid = cfg.grid ? *cfg.grid : default_classification_grid(order);
    for (auto& g : rep.grid) g = f.lift(g);
    rep.max_dim = cfg.max_dim > 0 ? cfg.max_dim : order + 1;
    rep.seed = cfg.seed;
    const auto pres = std::make_shared<const Presentation>(preset_qweyl1(rep.q));
    const Scalar one_minus_q = f.one() - rep.q;

    auto accept = [&](MatRep r, std::string form, std::string param) {
        const std::size_t n = r.dim();
        ++rep.candidates_by_dim[n];
        if (!verify_representation(r).ok) throw verification_failed("candidate does not satisfy yx - qxy - 1");
        const IrreducibilityResult irr = is_irreducible(r);
        if (!irr.irreducible) return;
        ++rep.irreducible_candidates_by_dim[n];
        for (std::size_t i = 0; i < rep.representatives.size(); ++i) {
            const auto& existing = rep.representatives[i];
            if (existing.rep.dim() != n) continue;
            if (are_equivalent(existing.rep, r).equivalent()) {
                rep.dedup_log.push_back(form + " [" + param + "] ~ representative " + std::to_string(i));
                return;
            }
        }
        ClassifiedRep c{std::move(r), std::move(form), std::move(param), irr.commutant_dim, irr.algebra_dim, std::nullopt};
        if (n <= oracle_max_dim) c.oracle = invariant_subspace_oracle(c.rep).kind;
        rep.dims_found.insert(n);
        rep.representatives.push_back(std::move(c));
    };

    // one-dimensional family: beta = 1/(alpha (1 - q))
    std::vector<Scalar> alphas;
    for (const auto& a : rep.grid)
        if (!a.is_zero()) alphas.push_back(a);
    std::vector<detail::XCandidate> cands = detail::x_candidates(rep.q, rep.grid, rep.max_dim);
    if (cfg.seed != 0) {
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(alphas.begin(), alphas.end(), rng);
        std::shuffle(cands.begin(), cands.end(), rng);
    }
    for (const auto& a : alphas) {
        const Scalar b = (a * one_minus_q).inv();
        MatRep r(pres, {matrix_from_rows({{a}}, f), matrix_from_rows({{b}}, f)});
        accept(std::move(r), "one-dimensional", "alpha=" + to_string_in_field(a));
    }
    for (const auto& c : cands) {
        auto sol = solve_Y_given_X(rep.q, c.X);
        if (!sol) {
            ++rep.candidates_by_dim[c.dim];
            continue;
        }
        const std::size_t free = std::min<std::size_t>(sol->homogeneous.size(), static_cast<std::size_t>(cfg.max_free_parameters));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
            ScalarMatrix Y = sol->particular;
            for (std::size_t i = 0; i < free; ++i)
                if (mask >> i & 1) Y = Y + sol->homogeneous[i];
            accept(MatRep(pres, {c.X, Y}), c.form, "lambda=" + to_string_in_field(c.lambda) + ", mask=" + std::to_string(mask));
        }
    }
    return rep;
}

}  // namespace ncalg
