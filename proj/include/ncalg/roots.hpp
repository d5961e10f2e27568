#pragma once

// Univariate polynomials over a Scalar field, characteristic polynomials,
// and roots lying in the field itself. Roots over Q and Q(zeta_l) are located
// numerically through the complex embeddings, recovered as exact field
// elements, and kept only after exact verification.

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "ncalg/error.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

/// Dense univariate polynomial, coefficients low to high.
class SPoly {
public:
    explicit SPoly(Field f, std::vector<Scalar> c = {}) : f_(f), c_(std::move(c)) {
        for (auto& x : c_) x = f_.lift(x);
        trim();
    }

    const Field& field() const { return f_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& lead() const { return c_.back(); }
    Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : f_.zero(); }

    Scalar eval(const Scalar& x) const {
        Scalar acc = f_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    ScalarMatrix eval(const ScalarMatrix& m) const {
        ScalarMatrix acc = zeros(m.rows(), m.cols(), f_);
        const ScalarMatrix id = identity(m.rows(), f_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + id.scaled(*it);
        return acc;
    }

    SPoly derivative() const {
        std::vector<Scalar> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * f_.from_int(static_cast<long>(i)));
        return SPoly(f_, d);
    }

    SPoly monic() const { return is_zero() ? *this : scaled(lead().inv()); }
    SPoly scaled(const Scalar& s) const {
        std::vector<Scalar> d;
        for (const auto& x : c_) d.push_back(x * s);
        return SPoly(f_, d);
    }

    friend SPoly operator-(const SPoly& a, const SPoly& b) {
        std::vector<Scalar> d(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = d[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] = d[i] - b.c_[i];
        return SPoly(a.f_, d);
    }
    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        if (a.is_zero() || b.is_zero()) return SPoly(a.f_);
        std::vector<Scalar> d(a.c_.size() + b.c_.size() - 1, a.f_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
        return SPoly(a.f_, d);
    }

    static std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b) {
        if (b.is_zero()) throw division_by_zero("polynomial division by zero");
        std::vector<Scalar> quot(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), a.f_.zero());
        std::vector<Scalar> rem = a.c_;
        const Scalar inv = b.lead().inv();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            const Scalar c = rem[static_cast<std::size_t>(i + b.degree())] * inv;
            quot[static_cast<std::size_t>(i)] = c;
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<std::size_t>(i + j)] = rem[static_cast<std::size_t>(i + j)] - c * b.c_[static_cast<std::size_t>(j)];
        }
        return {SPoly(a.f_, quot), SPoly(a.f_, rem)};
    }

    static SPoly gcd(SPoly a, SPoly b) {
        while (!b.is_zero()) {
            SPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Product of the distinct irreducible factors.
    SPoly squarefree() const {
        if (degree() <= 0) return *this;
        return divmod(*this, gcd(*this, derivative())).first.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Field f_;
    std::vector<Scalar> c_;
};

/// det(t I - A) by Faddeev-LeVerrier (characteristic 0).
inline SPoly characteristic_polynomial(const ScalarMatrix& a) {
    if (!a.is_square()) throw size_not_square("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    const Field f = field_of(a);
    std::vector<Scalar> c(n + 1, f.zero());
    c[n] = f.one();
    ScalarMatrix m = zeros(n, n, f);
    const ScalarMatrix id = identity(n, f);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + id.scaled(c[n - k + 1]);
        c[n - k] = -(a * m).trace() / f.from_int(static_cast<long>(k));
    }
    return SPoly(f, c);
}

namespace detail {

using cplx = std::complex<double>;

inline cplx embed(const Scalar& s, int order, int m) {
    switch (s.kind()) {
        case FieldKind::rational: return {s.as_rational().get_d(), 0.0};
        case FieldKind::approx_real: return {s.as_double(), 0.0};
        case FieldKind::cyclotomic: {
            const auto& p = s.as_cyclotomic().poly().coeffs();
            cplx acc = 0;
            for (std::size_t k = 0; k < p.size(); ++k)
                acc += p[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * m * static_cast<double>(k) / order);
            return acc;
        }
        default: throw unsupported_field("no complex embedding for rational functions");
    }
}

inline std::vector<cplx> complex_roots(const std::vector<cplx>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    if (n == 1) return {-coeffs[0] / coeffs[1]};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs[static_cast<std::size_t>(n)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

inline mpz_class coefficient_denominator_lcm(const Scalar& s) {
    mpz_class l = 1;
    auto take = [&](const mpq_class& r) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t()); };
    if (s.is_rational()) take(s.as_rational());
    if (s.kind() == FieldKind::cyclotomic)
        for (const auto& c : s.as_cyclotomic().poly().coeffs()) take(c);
    return l;
}

inline void push_unique(std::vector<Scalar>& v, const Scalar& s) {
    for (const auto& x : v)
        if (x == s) return;
    v.push_back(s);
}

inline constexpr std::size_t max_embedding_combinations = 200000;

/// Roots of f in Q or Q(zeta_l) via conjugate embeddings.
inline std::vector<Scalar> roots_number_field(const SPoly& f0) {
    const Field F = f0.field();
    const int order = F.kind == FieldKind::cyclotomic ? F.order : 1;
    SPoly f = f0.squarefree();
    // clear denominators: coefficients in Z[zeta]
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coefficient_denominator_lcm(c).get_mpz_t());
    f = f.scaled(F.from_rational(mpq_class(l)));
    const Scalar lead = f.lead();

    std::vector<int> units;
    for (int m = 1; m <= order; ++m)
        if (std::gcd(m, order) == 1) units.push_back(m);
    const std::size_t d = units.size();

    std::vector<std::vector<cplx>> roots_at;
    std::vector<cplx> lead_at;
    for (int m : units) {
        std::vector<cplx> cs;
        for (const auto& c : f.coeffs()) cs.push_back(embed(c, order, m));
        roots_at.push_back(complex_roots(cs));
        lead_at.push_back(embed(lead, order, m));
    }
    std::vector<Scalar> out;
    const std::size_t deg = static_cast<std::size_t>(f.degree());
    if (deg == 0) return out;
    double combos = std::pow(static_cast<double>(deg), static_cast<double>(d));
    if (combos > static_cast<double>(max_embedding_combinations)) throw unsupported_field("root search too large");

    // Vandermonde-type system: sum_k c_k w^{m k} = lead_m * z_m, unknown integer c_k
    Eigen::MatrixXcd V(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k)
            V(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
                std::polar(1.0, 2 * std::numbers::pi * units[r] * static_cast<double>(k) / order);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(V);
    std::vector<std::size_t> pick(d, 0);
    for (;;) {
        Eigen::VectorXcd rhs(static_cast<Eigen::Index>(d));
        for (std::size_t r = 0; r < d; ++r) rhs(static_cast<Eigen::Index>(r)) = lead_at[r] * roots_at[r][pick[r]];
        const Eigen::VectorXcd sol = lu.solve(rhs);
        bool ok = true;
        std::vector<mpq_class> coords;
        for (std::size_t k = 0; k < d && ok; ++k) {
            const cplx v = sol(static_cast<Eigen::Index>(k));
            const double rounded = std::round(v.real());
            if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - rounded) > 1e-6 || std::abs(rounded) > 1e15) ok = false;
            coords.emplace_back(mpz_class(static_cast<long>(rounded)));
        }
        if (ok) {
            const Scalar num = order == 1 ? Scalar(coords[0]) : Scalar(Cyclotomic(order, QPoly(coords)));
            const Scalar r = F.lift(num) / lead;
            if (f.eval(r).is_zero()) push_unique(out, r);
        }
        std::size_t i = 0;
        while (i < d && ++pick[i] == deg) pick[i++] = 0;
        if (i == d) break;
    }
    return out;
}

/// Rational-function fields: test a fixed list of candidates.
inline std::vector<Scalar> roots_by_candidates(const SPoly& f) {
    const Field F = f.field();
    const Scalar q = F.generator();
    std::vector<Scalar> cands{F.zero()};
    for (long num : {1L, 2L, 3L})
        for (long den : {1L, 2L, 3L}) {
            const Scalar base = F.from_rational(mpq_class(num, den));
            for (int e = -4; e <= 4; ++e) {
                cands.push_back(base * q.pow(e));
                cands.push_back(-(base * q.pow(e)));
            }
        }
    std::vector<Scalar> out;
    for (const auto& c : cands)
        if (f.eval(c).is_zero()) push_unique(out, c);
    return out;
}

}  // namespace detail

/// Distinct roots of f lying in its coefficient field. Complete over Q and
/// Q(zeta_l); over Q(q) only candidates c q^e (small c, |e| <= 4) are tried.
inline std::vector<Scalar> roots_in_field(const SPoly& f) {
    if (f.is_zero()) throw bad_parameter("roots of the zero polynomial");
    if (f.degree() == 0) return {};
    switch (f.field().kind) {
        case FieldKind::rational:
        case FieldKind::cyclotomic: return detail::roots_number_field(f);
        case FieldKind::rational_function: return detail::roots_by_candidates(f);
        default: throw unsupported_field("exact roots are not available over approximate reals");
    }
}

inline std::vector<Scalar> eigenvalues_in_field(const ScalarMatrix& m) { return roots_in_field(characteristic_polynomial(m)); }

}  // namespace ncalg
