#pragma once

// Quaternion algebras Q(a,b) over a Scalar field: i^2 = a, j^2 = b,
// ij = -ji = k. Hamilton's quaternions are Q(-1,-1). Includes the norm-form
// division/split decision over Q and the rotation engine on unit quaternions.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ncalg/error.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

struct QuatParams {
    Scalar a, b;

    QuatParams(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.is_zero() || b.is_zero()) throw bad_parameter("quaternion parameters must be nonzero");
        if (Field::of(a) != Field::of(b)) throw variant_mismatch("quaternion parameters from different fields");
    }
    static QuatParams hamilton() { return {Scalar(-1), Scalar(-1)}; }
    static QuatParams hamilton_real() { return {Scalar::approx(-1), Scalar::approx(-1)}; }

    Field field() const { return Field::of(a); }
    friend bool operator==(const QuatParams& x, const QuatParams& y) { return x.a == y.a && x.b == y.b; }
};

/// a0 + a1 i + a2 j + a3 k.
struct QuatElem {
    std::array<Scalar, 4> c;
    QuatParams params;

    QuatElem(std::array<Scalar, 4> coeffs, QuatParams p) : c(std::move(coeffs)), params(std::move(p)) {
        const Field f = params.field();
        for (auto& x : c) {
            if (!f.contains(x)) {
                if (!x.is_rational()) throw variant_mismatch("quaternion coefficient outside the parameter field");
                x = f.lift(x);
            }
        }
    }
    static QuatElem scalar(const Scalar& s, const QuatParams& p) {
        const Field f = p.field();
        return QuatElem({s, f.zero(), f.zero(), f.zero()}, p);
    }
    static QuatElem basis(int idx, const QuatParams& p) {
        const Field f = p.field();
        std::array<Scalar, 4> c{f.zero(), f.zero(), f.zero(), f.zero()};
        c[static_cast<std::size_t>(idx)] = f.one();
        return QuatElem(c, p);
    }

    const Scalar& operator[](std::size_t i) const { return c[i]; }
    friend bool operator==(const QuatElem& x, const QuatElem& y) { return x.params == y.params && x.c == y.c; }
    friend bool operator!=(const QuatElem& x, const QuatElem& y) { return !(x == y); }

    friend QuatElem operator+(const QuatElem& x, const QuatElem& y) {
        check_params(x, y);
        return QuatElem({x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}, x.params);
    }
    friend QuatElem operator-(const QuatElem& x, const QuatElem& y) {
        check_params(x, y);
        return QuatElem({x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]}, x.params);
    }
    QuatElem scaled(const Scalar& s) const { return QuatElem({c[0] * s, c[1] * s, c[2] * s, c[3] * s}, params); }

    static void check_params(const QuatElem& x, const QuatElem& y) {
        if (!(x.params == y.params)) throw param_mismatch("quaternions with different parameters");
    }
};

/// Product from the multiplication table of Q(a,b), derived from i^2 = a,
/// j^2 = b, ij = -ji = k and associativity:
///   k^2 = -ab, ik = -ki = a j, jk = -kj = -b i.
inline QuatElem qmul(const QuatElem& x, const QuatElem& y) {
    QuatElem::check_params(x, y);
    const Scalar& a = x.params.a;
    const Scalar& b = x.params.b;
    const auto& p = x.c;
    const auto& r = y.c;
    const Scalar ab = a * b;
    return QuatElem({p[0] * r[0] + a * p[1] * r[1] + b * p[2] * r[2] - ab * p[3] * r[3],
                     p[0] * r[1] + p[1] * r[0] - b * p[2] * r[3] + b * p[3] * r[2],
                     p[0] * r[2] + p[2] * r[0] + a * p[1] * r[3] - a * p[3] * r[1],
                     p[0] * r[3] + p[3] * r[0] + p[1] * r[2] - p[2] * r[1]},
                    x.params);
}

inline QuatElem operator*(const QuatElem& x, const QuatElem& y) { return qmul(x, y); }

using Vector3 = std::array<Scalar, 3>;

inline Scalar dot(const Vector3& u, const Vector3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

inline Vector3 cross(const Vector3& u, const Vector3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Vector3 vector_part(const QuatElem& x) { return {x.c[1], x.c[2], x.c[3]}; }

/// Scalar/vector split form of the Hamilton product.
inline QuatElem qmul_compact(const QuatElem& x, const QuatElem& y) {
    QuatElem::check_params(x, y);
    const Field f = x.params.field();
    if (!(x.params.a == -f.one() && x.params.b == -f.one()))
        throw param_mismatch("the dot/cross form applies to Hamilton's quaternions only");
    const Vector3 u = vector_part(x), v = vector_part(y);
    const Vector3 w = cross(u, v);
    const Scalar& a0 = x.c[0];
    const Scalar& b0 = y.c[0];
    return QuatElem({a0 * b0 - dot(u, v), a0 * v[0] + b0 * u[0] + w[0], a0 * v[1] + b0 * u[1] + w[1],
                     a0 * v[2] + b0 * u[2] + w[2]},
                    x.params);
}

inline QuatElem conjugate(const QuatElem& x) { return QuatElem({x.c[0], -x.c[1], -x.c[2], -x.c[3]}, x.params); }

/// N(x) = a0^2 - a a1^2 - b a2^2 + ab a3^2 = x * conjugate(x).
inline Scalar norm(const QuatElem& x) {
    const Scalar& a = x.params.a;
    const Scalar& b = x.params.b;
    return x.c[0] * x.c[0] - a * x.c[1] * x.c[1] - b * x.c[2] * x.c[2] + a * b * x.c[3] * x.c[3];
}

inline QuatElem inverse(const QuatElem& x) {
    const Scalar n = norm(x);
    if (n.is_zero()) throw zero_norm("quaternion of norm zero has no inverse");
    return conjugate(x).scaled(n.inv());
}

/// Euclidean length sqrt(N) for Hamilton's quaternions, as an approximate real.
inline Scalar length(const QuatElem& x) {
    const Field f = x.params.field();
    if (!(x.params.a == -f.one() && x.params.b == -f.one())) throw param_mismatch("length is defined for Hamilton's quaternions");
    return Scalar::approx(std::sqrt(norm(x).as_double()));
}

inline std::string to_string(const QuatElem& x) {
    static const char* names[4] = {"", "i", "j", "k"};
    std::string out;
    for (int t = 0; t < 4; ++t) {
        const Scalar& s = x.c[static_cast<std::size_t>(t)];
        if (s.is_zero()) continue;
        std::string cs = to_string_in_field(s);
        bool neg = false;
        if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos) {
            cs = "(" + cs + ")";
        } else if (cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        std::string term = t == 0 ? cs : (cs == "1" ? std::string(names[t]) : cs + "*" + names[t]);
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Division/split decision over Q
// ---------------------------------------------------------------------------

/// Local Hilbert symbol (a,b)_p for nonzero integers a, b; p = 0 means the real place.
inline int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
    if (a == 0 || b == 0) throw bad_parameter("Hilbert symbol of zero");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    auto split = [&](mpz_class v, int& e) {
        e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        return v;
    };
    int alpha = 0, beta = 0;
    const mpz_class u = split(a, alpha), v = split(b, beta);
    if (p == 2) {
        auto mod8 = [](const mpz_class& x) {
            mpz_class r = x % 8;
            if (r < 0) r += 8;
            return static_cast<int>(r.get_si());
        };
        auto eps = [&](const mpz_class& x) { return ((mod8(x) - 1) / 2) % 2; };
        auto omega = [&](const mpz_class& x) {
            const int r = mod8(x);
            return ((r * r - 1) / 8) % 2;
        };
        const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    const mpz_class pm1_half = (p - 1) / 2;
    int sign = (alpha * beta % 2 == 1 && pm1_half % 2 == 1) ? -1 : 1;
    if (beta % 2 == 1) sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2 == 1) sign *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
    return sign;
}

namespace detail {

inline void collect_primes(mpz_class n, std::vector<mpz_class>& out) {
    if (n < 0) n = -n;
    auto add = [&](const mpz_class& p) {
        for (const auto& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            add(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) add(n);
}

}  // namespace detail

/// Outcome of deciding whether Q(a,b) over Q is a division algebra.
struct DivisionDecision {
    bool division = false;
    std::vector<std::pair<mpz_class, int>> local_symbols;  // place (0 = real) and (a,b)_v
    std::optional<QuatElem> witness;                       // nonzero element of norm 0 when split
};

inline constexpr int split_witness_height = 100;

inline DivisionDecision is_division_over_Q(const QuatParams& params) {
    if (!params.a.is_rational() || !params.b.is_rational())
        throw unsupported_field("the division decision is implemented over Q");
    const mpq_class& a = params.a.as_rational();
    const mpq_class& b = params.b.as_rational();
    // a = a_n/a_d has the square class of a_n a_d
    const mpz_class ai = a.get_num() * a.get_den();
    const mpz_class bi = b.get_num() * b.get_den();
    std::vector<mpz_class> primes{2};
    detail::collect_primes(ai, primes);
    detail::collect_primes(bi, primes);
    std::sort(primes.begin(), primes.end());
    DivisionDecision out;
    out.local_symbols.emplace_back(mpz_class(0), hilbert_symbol(ai, bi, 0));
    for (const auto& p : primes) out.local_symbols.emplace_back(p, hilbert_symbol(ai, bi, p));
    for (const auto& [p, s] : out.local_symbols)
        if (s == -1) out.division = true;
    if (out.division) return out;

    // N(x0, a_d t1, b_d t2, a_d b_d t3) = x0^2 - ai t1^2 - bi t2^2 + ai bi t3^2
    const mpz_class ad = a.get_den(), bd = b.get_den();
    for (int h = 0; h <= split_witness_height; ++h) {
        for (int t1 = 0; t1 <= h; ++t1)
            for (int t2 = 0; t2 <= h; ++t2)
                for (int t3 = 0; t3 <= h; ++t3) {
                    if (std::max({t1, t2, t3}) != h) continue;
                    const mpz_class s = ai * t1 * t1 + bi * t2 * t2 - ai * bi * t3 * t3;
                    if (s < 0 || (h == 0)) continue;
                    if (!mpz_perfect_square_p(s.get_mpz_t())) continue;
                    const mpz_class x0 = sqrt(s);
                    QuatElem w({Scalar(mpq_class(x0)), Scalar(mpq_class(ad * t1)), Scalar(mpq_class(bd * t2)),
                                Scalar(mpq_class(ad * bd * t3))},
                               params);
                    if (norm(w).is_zero()) {
                        out.witness = w;
                        return out;
                    }
                }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rotations
// ---------------------------------------------------------------------------

inline constexpr double axis_tolerance = 1e-9;

inline Vector3 vec3(double x, double y, double z) { return {Scalar::approx(x), Scalar::approx(y), Scalar::approx(z)}; }

inline double euclidean_length(const Vector3& v) {
    return std::sqrt(v[0].as_double() * v[0].as_double() + v[1].as_double() * v[1].as_double() +
                     v[2].as_double() * v[2].as_double());
}

/// Unit Hamilton quaternion over the approximate reals.
class Versor {
public:
    explicit Versor(const QuatElem& q) : q_(q) {
        if (q.params.field().kind != FieldKind::approx_real || !(q.params == QuatParams::hamilton_real()))
            throw param_mismatch("versors are Hamilton quaternions over the reals");
        if (std::abs(std::sqrt(norm(q).as_double()) - 1.0) > approx_tolerance())
            throw non_unit_versor("quaternion is not of unit length");
    }
    Versor(double a0, double a1, double a2, double a3)
        : Versor(QuatElem({Scalar::approx(a0), Scalar::approx(a1), Scalar::approx(a2), Scalar::approx(a3)},
                          QuatParams::hamilton_real())) {}

    const QuatElem& quat() const { return q_; }
    double operator[](std::size_t i) const { return q_.c[i].as_double(); }
    friend Versor operator*(const Versor& x, const Versor& y) { return Versor(qmul(x.q_, y.q_)); }

private:
    QuatElem q_;
};

/// cos(theta/2) + sin(theta/2) n.
inline Versor axis_angle_to_versor(double theta, const Vector3& n) {
    if (std::abs(euclidean_length(n) - 1.0) > axis_tolerance) throw non_unit_axis("rotation axis must have unit length");
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return Versor(c, s * n[0].as_double(), s * n[1].as_double(), s * n[2].as_double());
}

/// Vector part of u v u^-1 (u^-1 = conjugate(u) for a versor).
inline Vector3 rotate_vector(const Versor& u, const Vector3& v) {
    const QuatElem pure({Scalar::approx(0), v[0], v[1], v[2]}, QuatParams::hamilton_real());
    const QuatElem r = qmul(qmul(u.quat(), pure), conjugate(u.quat()));
    return vector_part(r);
}

/// The rotation matrix R(u) with R(u) v = rotate_vector(u, v).
inline ScalarMatrix versor_to_matrix(const Versor& u) {
    const double a0 = u[0], a1 = u[1], a2 = u[2], a3 = u[3];
    const std::vector<std::vector<double>> m = {
        {a0 * a0 + a1 * a1 - a2 * a2 - a3 * a3, 2 * a1 * a2 - 2 * a0 * a3, 2 * a1 * a3 + 2 * a0 * a2},
        {2 * a1 * a2 + 2 * a0 * a3, a0 * a0 - a1 * a1 + a2 * a2 - a3 * a3, 2 * a2 * a3 - 2 * a0 * a1},
        {2 * a1 * a3 - 2 * a0 * a2, 2 * a2 * a3 + 2 * a0 * a1, a0 * a0 - a1 * a1 - a2 * a2 + a3 * a3}};
    ScalarMatrix r = zeros(3, 3, Field::approx());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = Scalar::approx(m[i][j]);
    return r;
}

}  // namespace ncalg
