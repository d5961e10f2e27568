#pragma once

// Exact scalar fields: Q, cyclotomic fields Q(zeta_l), the rational function
// field Q(q), plus a tolerance-compared double for the rotation engine.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ncalg/error.hpp"

namespace ncalg {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficients low to high, no trailing 0.
// ---------------------------------------------------------------------------
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
    QPoly(const mpq_class& constant) {  // NOLINT(implicit)
        if (constant != 0) c_.push_back(constant);
    }

    static QPoly monomial(int degree, const mpq_class& coeff = 1) {
        std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1, mpq_class(0));
        c.back() = coeff;
        return QPoly(std::move(c));
    }
    static QPoly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : mpq_class(0);
    }
    const mpq_class& lead() const { return c_.back(); }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly(std::move(r));
    }
    QPoly scaled(const mpq_class& s) const {
        if (s == 0) return {};
        QPoly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw division_by_zero("polynomial division by zero");
        if (a.degree() < b.degree()) return {QPoly{}, a};
        std::vector<mpq_class> rem = a.c_;
        std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpq_class(0));
        const mpq_class inv_lead = 1 / b.lead();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            const mpq_class f = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
            quot[static_cast<std::size_t>(k)] = f;
            if (f == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(b.degree()));
        return {QPoly(std::move(quot)), QPoly(std::move(rem))};
    }
    friend QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
    friend QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

    QPoly monic() const { return is_zero() ? *this : scaled(1 / lead()); }

    /// Monic gcd.
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a % b;
            a = std::move(b);
            b = r.monic();  // keeps coefficient growth in check
        }
        return a.monic();
    }

    /// Returns (g, s, t) with s*a + t*b = g monic.
    static std::tuple<QPoly, QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& b) {
        QPoly r0 = a, r1 = b, s0 = mpq_class(1), s1, t0, t1 = mpq_class(1);
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        const mpq_class inv = 1 / r0.lead();
        return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Text with variable name `var`, highest degree first, e.g. "z^2 - 1/2*z + 3".
    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const mpq_class& a = c_[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            const bool neg = a < 0;
            const mpq_class mag = neg ? mpq_class(-a) : a;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            if (k == 0)
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

/// The l-th cyclotomic polynomial, cached.
inline const QPoly& cyclotomic_polynomial(int order) {
    if (order < 1) throw bad_parameter("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    QPoly p = QPoly::monomial(order) - QPoly(mpq_class(1));
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        // Recursion would re-lock; compute divisors' polynomials from the cache.
        auto it = cache.find(d);
        QPoly phi_d;
        if (it == cache.end()) {
            // build bottom-up without recursion
            QPoly t = QPoly::monomial(d) - QPoly(mpq_class(1));
            for (int e = 1; e < d; ++e)
                if (d % e == 0) t = t / cache.at(e);
            phi_d = cache.emplace(d, t).first->second;
        } else {
            phi_d = it->second;
        }
        p = p / phi_d;
    }
    return cache.emplace(order, p).first->second;
}

inline int euler_phi(int n) { return cyclotomic_polynomial(n).degree(); }

// ---------------------------------------------------------------------------
// Field element payloads
// ---------------------------------------------------------------------------

/// Element of Q(zeta_l), stored reduced modulo Phi_l in the power basis.
class Cyclotomic {
public:
    Cyclotomic(int order, const QPoly& p) : order_(order), p_(p % cyclotomic_polynomial(order)) {}
    int order() const { return order_; }
    const QPoly& poly() const { return p_; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.order_ == b.order_ && a.p_ == b.p_; }

private:
    int order_;
    QPoly p_;
};

/// Element of Q(q): coprime numerator and monic denominator.
class RatFunc {
public:
    RatFunc() : den_(mpq_class(1)) {}
    explicit RatFunc(QPoly num) : num_(std::move(num)), den_(mpq_class(1)) {}
    RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void normalize() {
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(mpq_class(1));
            return;
        }
        if (!den_.is_constant()) {
            QPoly g = QPoly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        const mpq_class inv = 1 / den_.lead();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    QPoly num_, den_;
};

/// Tolerance used when comparing approximate reals.
inline double& approx_tolerance() {
    static double tol = 1e-12;
    return tol;
}

struct ApproxReal {
    double v = 0.0;
};

enum class FieldKind { rational, cyclotomic, rational_function, approx_real };

/// A tagged field element. Values of different exact kinds never mix.
class Scalar {
public:
    using Payload = std::variant<mpq_class, Cyclotomic, RatFunc, ApproxReal>;

    Scalar() : v_(mpq_class(0)) {}
    Scalar(long n) : v_(mpq_class(n)) {}  // NOLINT(implicit)
    Scalar(int n) : v_(mpq_class(n)) {}   // NOLINT(implicit)
    Scalar(mpq_class r) : v_(std::move(r)) { std::get<mpq_class>(v_).canonicalize(); }  // NOLINT
    Scalar(Cyclotomic c) : v_(std::move(c)) {}  // NOLINT
    Scalar(RatFunc f) : v_(std::move(f)) {}     // NOLINT
    Scalar(ApproxReal a) : v_(a) {}             // NOLINT

    static Scalar rational(long num, long den = 1) {
        if (den == 0) throw division_by_zero("zero denominator");
        mpq_class r(num, den);
        r.canonicalize();
        return Scalar(r);
    }
    static Scalar approx(double v) { return Scalar(ApproxReal{v}); }

    FieldKind kind() const { return static_cast<FieldKind>(v_.index()); }
    const Payload& payload() const { return v_; }
    bool is_rational() const { return kind() == FieldKind::rational; }
    const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
    const Cyclotomic& as_cyclotomic() const { return std::get<Cyclotomic>(v_); }
    const RatFunc& as_ratfunc() const { return std::get<RatFunc>(v_); }
    double as_double() const;

    bool is_zero() const;
    bool is_one() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

private:
    Payload v_;
};

namespace detail {

inline const char* kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::rational: return "Q";
        case FieldKind::cyclotomic: return "cyclo";
        case FieldKind::rational_function: return "Qq";
        case FieldKind::approx_real: return "approx";
    }
    return "?";
}

[[noreturn]] inline void mismatch(const Scalar& a, const Scalar& b) {
    throw variant_mismatch(std::string("cannot combine scalars of kinds ") + kind_name(a.kind()) + " and " +
                           kind_name(b.kind()));
}

inline void check_same(const Scalar& a, const Scalar& b) {
    if (a.kind() != b.kind()) mismatch(a, b);
    if (a.kind() == FieldKind::cyclotomic && a.as_cyclotomic().order() != b.as_cyclotomic().order())
        throw variant_mismatch("cyclotomic orders differ: " + std::to_string(a.as_cyclotomic().order()) + " vs " +
                               std::to_string(b.as_cyclotomic().order()));
}

}  // namespace detail

inline double Scalar::as_double() const {
    switch (kind()) {
        case FieldKind::rational: return as_rational().get_d();
        case FieldKind::approx_real: return std::get<ApproxReal>(v_).v;
        default: throw variant_mismatch("scalar has no real value");
    }
}

inline bool Scalar::is_zero() const {
    switch (kind()) {
        case FieldKind::rational: return as_rational() == 0;
        case FieldKind::cyclotomic: return as_cyclotomic().poly().is_zero();
        case FieldKind::rational_function: return as_ratfunc().num().is_zero();
        case FieldKind::approx_real: return std::abs(std::get<ApproxReal>(v_).v) <= approx_tolerance();
    }
    return false;
}

inline bool Scalar::is_one() const {
    switch (kind()) {
        case FieldKind::rational: return as_rational() == 1;
        case FieldKind::cyclotomic: return as_cyclotomic().poly() == QPoly(mpq_class(1));
        case FieldKind::rational_function:
            return as_ratfunc().num() == QPoly(mpq_class(1)) && as_ratfunc().den() == QPoly(mpq_class(1));
        case FieldKind::approx_real: return std::abs(std::get<ApproxReal>(v_).v - 1.0) <= approx_tolerance();
    }
    return false;
}

inline bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case FieldKind::rational: return a.as_rational() == b.as_rational();
        case FieldKind::cyclotomic: return a.as_cyclotomic() == b.as_cyclotomic();
        case FieldKind::rational_function: return a.as_ratfunc() == b.as_ratfunc();
        case FieldKind::approx_real:
            return std::abs(std::get<ApproxReal>(a.v_).v - std::get<ApproxReal>(b.v_).v) <= approx_tolerance();
    }
    return false;
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
    detail::check_same(a, b);
    switch (a.kind()) {
        case FieldKind::rational: return Scalar(mpq_class(a.as_rational() + b.as_rational()));
        case FieldKind::cyclotomic:
            return Scalar(Cyclotomic(a.as_cyclotomic().order(), a.as_cyclotomic().poly() + b.as_cyclotomic().poly()));
        case FieldKind::rational_function: {
            const auto& x = a.as_ratfunc();
            const auto& y = b.as_ratfunc();
            if (x.den() == y.den()) return Scalar(RatFunc(x.num() + y.num(), x.den()));
            return Scalar(RatFunc(x.num() * y.den() + y.num() * x.den(), x.den() * y.den()));
        }
        case FieldKind::approx_real: return Scalar::approx(a.as_double() + b.as_double());
    }
    return {};
}

inline Scalar Scalar::operator-() const {
    switch (kind()) {
        case FieldKind::rational: return Scalar(mpq_class(-as_rational()));
        case FieldKind::cyclotomic: return Scalar(Cyclotomic(as_cyclotomic().order(), -as_cyclotomic().poly()));
        case FieldKind::rational_function: return Scalar(RatFunc(-as_ratfunc().num(), as_ratfunc().den()));
        case FieldKind::approx_real: return Scalar::approx(-as_double());
    }
    return {};
}

inline Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

inline Scalar operator*(const Scalar& a, const Scalar& b) {
    detail::check_same(a, b);
    switch (a.kind()) {
        case FieldKind::rational: return Scalar(mpq_class(a.as_rational() * b.as_rational()));
        case FieldKind::cyclotomic:
            return Scalar(Cyclotomic(a.as_cyclotomic().order(), a.as_cyclotomic().poly() * b.as_cyclotomic().poly()));
        case FieldKind::rational_function: {
            const auto& x = a.as_ratfunc();
            const auto& y = b.as_ratfunc();
            if (x.num().is_zero() || y.num().is_zero()) return Scalar(RatFunc());
            return Scalar(RatFunc(x.num() * y.num(), x.den() * y.den()));
        }
        case FieldKind::approx_real: return Scalar::approx(a.as_double() * b.as_double());
    }
    return {};
}

inline Scalar Scalar::inv() const {
    if (kind() != FieldKind::approx_real && is_zero()) throw division_by_zero("inverse of zero");
    switch (kind()) {
        case FieldKind::rational: return Scalar(mpq_class(1 / as_rational()));
        case FieldKind::cyclotomic: {
            const auto& c = as_cyclotomic();
            auto [g, s, t] = QPoly::ext_gcd(c.poly(), cyclotomic_polynomial(c.order()));
            (void)t;
            // Phi_l is irreducible, so g = 1 for any nonzero residue.
            return Scalar(Cyclotomic(c.order(), s));
        }
        case FieldKind::rational_function: return Scalar(RatFunc(as_ratfunc().den(), as_ratfunc().num()));
        case FieldKind::approx_real: {
            const double v = as_double();
            if (v == 0.0) throw division_by_zero("inverse of zero");
            return Scalar::approx(1.0 / v);
        }
    }
    return {};
}

inline Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc;
    switch (kind()) {
        case FieldKind::rational: acc = Scalar(1); break;
        case FieldKind::cyclotomic: acc = Scalar(Cyclotomic(as_cyclotomic().order(), QPoly(mpq_class(1)))); break;
        case FieldKind::rational_function: acc = Scalar(RatFunc(QPoly(mpq_class(1)))); break;
        case FieldKind::approx_real: acc = Scalar::approx(1.0); break;
    }
    while (n) {
        if (n & 1u) acc = acc * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

/// Identifies which scalar field a computation lives in.
struct Field {
    FieldKind kind = FieldKind::rational;
    int order = 0;  // cyclotomic order, else 0

    static Field Q() { return {FieldKind::rational, 0}; }
    static Field cyclo(int l) {
        if (l < 1) throw bad_parameter("cyclotomic order must be >= 1");
        return {FieldKind::cyclotomic, l};
    }
    static Field Qq() { return {FieldKind::rational_function, 0}; }
    static Field approx() { return {FieldKind::approx_real, 0}; }

    static Field of(const Scalar& s) {
        if (s.kind() == FieldKind::cyclotomic) return cyclo(s.as_cyclotomic().order());
        return {s.kind(), 0};
    }

    friend bool operator==(const Field& a, const Field& b) { return a.kind == b.kind && a.order == b.order; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    bool contains(const Scalar& s) const { return Field::of(s) == *this; }

    Scalar from_rational(const mpq_class& r) const {
        switch (kind) {
            case FieldKind::rational: return Scalar(r);
            case FieldKind::cyclotomic: return Scalar(Cyclotomic(order, QPoly(r)));
            case FieldKind::rational_function: return Scalar(RatFunc(QPoly(r)));
            case FieldKind::approx_real: return Scalar::approx(r.get_d());
        }
        return {};
    }
    Scalar from_int(long n) const { return from_rational(mpq_class(n)); }
    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }

    /// Embeds a scalar from Q (or the field itself) into this field.
    Scalar lift(const Scalar& s) const {
        if (contains(s)) return s;
        if (s.is_rational()) return from_rational(s.as_rational());
        throw variant_mismatch("scalar does not belong to field " + to_string());
    }

    /// The distinguished generator: zeta for Q(zeta_l), q for Q(q).
    Scalar generator() const {
        switch (kind) {
            case FieldKind::cyclotomic: return Scalar(Cyclotomic(order, QPoly::x()));
            case FieldKind::rational_function: return Scalar(RatFunc(QPoly::x()));
            default: throw bad_parameter("field " + to_string() + " has no generator");
        }
    }
    /// Name of the generator symbol in text syntax.
    std::string generator_name() const {
        if (kind == FieldKind::cyclotomic) return "z";
        if (kind == FieldKind::rational_function) return "q";
        return "";
    }

    std::string to_string() const {
        switch (kind) {
            case FieldKind::rational: return "Q";
            case FieldKind::cyclotomic: return "cyclo " + std::to_string(order);
            case FieldKind::rational_function: return "Qq";
            case FieldKind::approx_real: return "R";
        }
        return "?";
    }
};

/// Reduces a polynomial in zeta modulo Phi_l.
inline Scalar cyclotomic_reduce(const QPoly& coeffs, int order) {
    if (order < 1) throw bad_parameter("cyclotomic order must be >= 1");
    return Scalar(Cyclotomic(order, coeffs));
}

// ---------------------------------------------------------------------------
// q-numbers
// ---------------------------------------------------------------------------

struct QNumberContext {
    Scalar q;
    std::optional<int> order;  // nullopt = generic

    QNumberContext(Scalar q_, std::optional<int> order_ = std::nullopt) : q(std::move(q_)), order(order_) {
        if (q.is_zero()) throw zero_scalar_q("q must be invertible");
        if (order) {
            if (*order < 1) throw bad_parameter("root of unity order must be positive");
            for (int m = 1; m < *order; ++m)
                if (q.pow(m).is_one()) throw bad_parameter("q is not a primitive root of unity of the given order");
            if (!q.pow(*order).is_one()) throw bad_parameter("q^order != 1");
        }
    }
};

/// [j]_q = q^{j-1} + q^{j-3} + ... + q^{1-j}; [-j]_q = -[j]_q.
inline Scalar q_number(long j, const Scalar& q) {
    if (q.is_zero()) throw zero_scalar_q("q-number needs q != 0");
    const Field f = Field::of(q);
    if (j == 0) return f.zero();
    const long n = j < 0 ? -j : j;
    Scalar acc = f.zero();
    const Scalar q2inv = (q * q).inv();
    Scalar term = q.pow(n - 1);
    for (long t = 0; t < n; ++t) {
        acc += term;
        term *= q2inv;
    }
    return j < 0 ? -acc : acc;
}

inline Scalar q_number(long j, const QNumberContext& ctx) { return q_number(j, ctx.q); }

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

/// Text of a scalar inside a known field: no field suffix.
inline std::string to_string_in_field(const Scalar& s) {
    switch (s.kind()) {
        case FieldKind::rational: return s.as_rational().get_str();
        case FieldKind::cyclotomic: return s.as_cyclotomic().poly().to_string("z");
        case FieldKind::rational_function: {
            const auto& f = s.as_ratfunc();
            auto wrap = [](const QPoly& p) {
                std::string t = p.to_string("q");
                bool compound = t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos ||
                                t.find('/') != std::string::npos || (t[0] == '-' && p.degree() > 0);
                return compound ? "(" + t + ")" : t;
            };
            if (f.den() == QPoly(mpq_class(1))) return f.num().to_string("q");
            return wrap(f.num()) + "/" + wrap(f.den());
        }
        case FieldKind::approx_real: return format_double(s.as_double());
    }
    return "?";
}

/// Standalone text: cyclotomic values carry their "@ cyclo l" suffix.
inline std::string to_string(const Scalar& s) {
    if (s.kind() == FieldKind::cyclotomic)
        return to_string_in_field(s) + " @ cyclo " + std::to_string(s.as_cyclotomic().order());
    return to_string_in_field(s);
}

}  // namespace ncalg
