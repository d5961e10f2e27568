#pragma once

// Finitely presented algebras k<X>/(R) handled as rewrite systems under the
// weighted deglex order: orientation, normal forms, overlap (diamond) checks,
// monomial bases and the named presentations used throughout the library.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/error.hpp"
#include "ncalg/expr.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

/// Generators, relations (each read as "relation = 0") and the scalar field.
struct Presentation {
    std::string name;
    AlphabetPtr alphabet;
    Field field;
    std::vector<NcPoly> relations;
    ScalarSymbols symbols;  // extra named scalars used by the text form (e.g. q)

    Presentation(std::string name_, AlphabetPtr alphabet_, Field field_, std::vector<NcPoly> relations_ = {},
                 ScalarSymbols symbols_ = {})
        : name(std::move(name_)),
          alphabet(std::move(alphabet_)),
          field(field_),
          relations(std::move(relations_)),
          symbols(std::move(symbols_)) {
        for (const auto& r : relations) {
            if (r.is_zero()) throw bad_parameter("presentation: zero relation");
            if (r.alphabet_ptr() != alphabet && !(r.alphabet() == *alphabet))
                throw alphabet_mismatch("presentation: relation over another alphabet");
            if (r.field() != field) throw variant_mismatch("presentation: relation over another field");
        }
    }

    NcPoly zero() const { return NcPoly(alphabet, field); }
    NcPoly one() const { return NcPoly::one(alphabet, field); }
    NcPoly gen(const std::string& n) const { return NcPoly::generator(alphabet, field, n); }
    NcPoly constant(const Scalar& s) const { return NcPoly::constant(alphabet, field, field.lift(s)); }
    NcPoly parse(std::string_view text) const {
        ScalarSymbols syms = default_symbols(field);
        for (const auto& [k, v] : symbols) syms[k] = v;
        return parse_expression(text, alphabet, field, syms);
    }
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Oriented rule: lhs -> rhs with rhs strictly smaller than lhs.
struct Rule {
    Word lhs;
    NcPoly rhs;
};

/// An overlap or inclusion ambiguity between two rules that did not resolve.
struct Ambiguity {
    Word word;
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    NcPoly reduct_a;
    NcPoly reduct_b;
};

struct ConfluenceStatus {
    enum class Kind { unknown, locally_confluent_up_to, counterexample_found };
    Kind kind = Kind::unknown;
    int degree = 0;
    std::optional<Ambiguity> counterexample;

    bool confluent_up_to(int d) const { return kind == Kind::locally_confluent_up_to && degree >= d; }
};

inline constexpr std::size_t default_step_limit = 1'000'000;

class RewriteSystem {
public:
    RewriteSystem(AlphabetPtr alphabet, Field field, std::vector<Rule> rules, std::size_t step_limit = default_step_limit)
        : alphabet_(std::move(alphabet)),
          field_(field),
          rules_(std::move(rules)),
          step_limit_(step_limit),
          cache_(std::make_shared<Cache>()) {
        const DegLex less{alphabet_.get()};
        for (const auto& r : rules_) {
            if (!r.rhs.is_zero() && !less(r.rhs.leading_word(), r.lhs))
                throw non_orientable("rule does not decrease the monomial order");
        }
    }

    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const Alphabet& alphabet() const { return *alphabet_; }
    const Field& field() const { return field_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const ConfluenceStatus& status() const { return status_; }
    std::size_t step_limit() const { return step_limit_; }

    RewriteSystem with_status(ConfluenceStatus s) const {
        RewriteSystem r = *this;
        r.status_ = std::move(s);
        return r;
    }
    RewriteSystem with_step_limit(std::size_t limit) const {
        RewriteSystem r(alphabet_, field_, rules_, limit);
        r.status_ = status_;
        return r;
    }

    int max_rule_degree() const {
        int d = 0;
        for (const auto& r : rules_) d = std::max(d, alphabet_->degree(r.lhs));
        return d;
    }

    /// First (position, rule) at which a rule's lhs occurs in w.
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
                const Word& l = rules_[ri].lhs;
                if (l.empty() || pos + l.size() > w.size()) continue;
                if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return std::make_pair(pos, ri);
            }
        return std::nullopt;
    }
    bool is_reducible(const Word& w) const { return find_redex(w).has_value(); }

    /// Canonical representative of p modulo the rules.
    NcPoly normal_form(const NcPoly& p) const {
        if (p.alphabet_ptr() != alphabet_ && !(p.alphabet() == *alphabet_))
            throw alphabet_mismatch("normal_form: polynomial over another alphabet");
        std::size_t steps = 0;
        NcPoly out(alphabet_, field_);
        for (const auto& [w, c] : p.terms()) out.add_scaled(word_normal_form(w, steps), c);
        return out;
    }

    /// Normal form of u * rhs * v for the given rule (one rewrite step at a position).
    NcPoly rewrite_at(const Word& w, std::size_t pos, std::size_t rule) const {
        const Rule& r = rules_[rule];
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
        NcPoly out(alphabet_, field_);
        for (const auto& [m, c] : r.rhs.terms()) out.add_term(concat(concat(prefix, m), suffix), c);
        return out;
    }

    NcPoly word_normal_form(const Word& w) const {
        std::size_t steps = 0;
        return word_normal_form(w, steps);
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<Word, NcPoly> words;
    };

    NcPoly word_normal_form(const Word& w, std::size_t& steps) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            if (auto it = cache_->words.find(w); it != cache_->words.end()) return it->second;
        }
        auto redex = find_redex(w);
        NcPoly result(alphabet_, field_);
        if (!redex) {
            result.add_term(w, field_.one());
        } else {
            if (++steps > step_limit_) throw step_limit_exceeded("normal form exceeded the rewrite step limit");
            const NcPoly once = rewrite_at(w, redex->first, redex->second);
            for (const auto& [m, c] : once.terms()) result.add_scaled(word_normal_form(m, steps), c);
        }
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->words.emplace(w, result);
        return result;
    }

    AlphabetPtr alphabet_;
    Field field_;
    std::vector<Rule> rules_;
    std::size_t step_limit_;
    ConfluenceStatus status_;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

inline Rule rule_from(const NcPoly& monic_rel) {
    Rule r{monic_rel.leading_word(), NcPoly(monic_rel.alphabet_ptr(), monic_rel.field())};
    r.rhs = NcPoly::monomial(monic_rel.alphabet_ptr(), monic_rel.field(), r.lhs) - monic_rel;
    return r;
}

inline NcPoly make_monic(const NcPoly& p) { return p.scaled(p.leading_coeff().inv()); }

}  // namespace detail

/// Orients every relation into lhs -> rhs and inter-reduces the rules.
inline RewriteSystem orient(const Presentation& pres) {
    std::vector<NcPoly> g;
    for (const auto& r : pres.relations) g.push_back(detail::make_monic(r));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Rule> others;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(detail::rule_from(g[j]));
            RewriteSystem rs(pres.alphabet, pres.field, std::move(others));
            NcPoly h = rs.normal_form(g[i]);
            if (h.is_zero()) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (h.leading_word().empty())
                throw non_orientable("relations reduce to a nonzero constant; the quotient is the zero algebra");
            h = detail::make_monic(h);
            if (h != g[i]) {
                g[i] = std::move(h);
                changed = true;
            }
        }
    }
    std::vector<Rule> rules;
    for (const auto& p : g) rules.push_back(detail::rule_from(p));
    std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) {
        return DegLex{pres.alphabet.get()}(a.lhs, b.lhs);
    });
    return RewriteSystem(pres.alphabet, pres.field, std::move(rules));
}

/// Resolves every overlap and inclusion ambiguity whose word has weighted
/// degree <= maxdeg. The least failing ambiguity (deglex on the word, then
/// rule indices) is reported.
inline ConfluenceStatus check_local_confluence(const RewriteSystem& rs, int maxdeg) {
    if (maxdeg < rs.max_rule_degree()) throw bad_parameter("maxdeg below the largest rule degree");
    const auto& rules = rs.rules();
    const Alphabet& alpha = rs.alphabet();
    const DegLex less{&alpha};
    std::optional<Ambiguity> worst;
    auto consider = [&](Word w, std::size_t a, std::size_t b, NcPoly ra, NcPoly rb) {
        NcPoly na = rs.normal_form(ra), nb = rs.normal_form(rb);
        if (na == nb) return;
        Ambiguity amb{std::move(w), a, b, std::move(na), std::move(nb)};
        if (!worst || less(amb.word, worst->word) ||
            (amb.word == worst->word && std::make_pair(a, b) < std::make_pair(worst->rule_a, worst->rule_b)))
            worst = std::move(amb);
    };
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const Word& u = rules[a].lhs;
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const Word& v = rules[b].lhs;
            // proper overlaps: suffix of u == prefix of v
            for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
                if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) continue;
                Word w = concat(u, Word(v.begin() + static_cast<std::ptrdiff_t>(k), v.end()));
                if (alpha.degree(w) > maxdeg) continue;
                consider(w, a, b, rs.rewrite_at(w, 0, a), rs.rewrite_at(w, u.size() - k, b));
            }
            // inclusions: v occurs inside u
            if (a != b && v.size() <= u.size()) {
                for (std::size_t p = 0; p + v.size() <= u.size(); ++p) {
                    if (!std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(p))) continue;
                    if (alpha.degree(u) > maxdeg) continue;
                    consider(u, a, b, rs.rewrite_at(u, 0, a), rs.rewrite_at(u, p, b));
                }
            }
        }
    }
    ConfluenceStatus s;
    if (worst) {
        s.kind = ConfluenceStatus::Kind::counterexample_found;
        s.degree = maxdeg;
        s.counterexample = std::move(worst);
    } else {
        s.kind = ConfluenceStatus::Kind::locally_confluent_up_to;
        s.degree = maxdeg;
    }
    return s;
}

/// Orients and records the overlap check up to maxdeg.
inline RewriteSystem orient_checked(const Presentation& pres, int maxdeg) {
    RewriteSystem rs = orient(pres);
    const int d = std::max(maxdeg, rs.max_rule_degree());
    return rs.with_status(check_local_confluence(rs, d));
}

struct MonomialBasis {
    std::vector<Word> words;  // deglex ascending
    bool provisional = true;  // overlaps not checked up to 2d
};

/// Irreducible words of weighted degree <= d.
inline MonomialBasis basis_up_to_degree(const RewriteSystem& rs, int d) {
    const Alphabet& alpha = rs.alphabet();
    std::vector<Word> out;
    auto ends_with_lhs = [&](const Word& w) {
        for (const auto& r : rs.rules()) {
            const Word& l = r.lhs;
            if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.end() - static_cast<std::ptrdiff_t>(l.size())))
                return true;
        }
        return false;
    };
    std::vector<Word> stack{Word{}};
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        const int deg = alpha.degree(w);
        out.push_back(w);
        for (std::size_t l = 0; l < alpha.size(); ++l) {
            if (deg + alpha.weight(static_cast<Letter>(l)) > d) continue;
            Word next = w;
            next.push_back(static_cast<Letter>(l));
            if (!ends_with_lhs(next)) stack.push_back(std::move(next));
        }
    }
    // an empty-lhs rule kills everything
    for (const auto& r : rs.rules())
        if (r.lhs.empty()) out.clear();
    std::sort(out.begin(), out.end(), DegLex{&alpha});
    return {std::move(out), !rs.status().confluent_up_to(2 * d)};
}

/// Number of basis words of weighted degree exactly k, for k = 0..d.
inline std::vector<std::size_t> basis_counts_by_degree(const RewriteSystem& rs, int d) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& w : basis_up_to_degree(rs, d).words) ++counts[static_cast<std::size_t>(rs.alphabet().degree(w))];
    return counts;
}

// ---------------------------------------------------------------------------
// Named presentations
// ---------------------------------------------------------------------------

struct PresetParams {
    std::optional<Scalar> q;  // defaults to the generic q of Q(q)
    int m = 1;
    std::optional<Scalar> a, b;
};

namespace detail {

inline Scalar q_or_generic(const PresetParams& p) { return p.q ? *p.q : Field::Qq().generator(); }

inline std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline ScalarSymbols q_binding(const Field& f, const Scalar& q) {
    if (f.kind == FieldKind::rational_function && q == f.generator()) return {};
    return {{"q", q}};
}

}  // namespace detail

/// k_q[x,y] = k<x,y>/(yx - q xy).
inline Presentation preset_kq_poly(const Scalar& q) {
    if (q.is_zero()) throw bad_parameter("q must be invertible");
    const Field f = Field::of(q);
    auto a = make_alphabet({"x", "y"});
    Presentation p("KQ_POLY", a, f, {}, detail::q_binding(f, q));
    p.relations.push_back(p.gen("y") * p.gen("x") - (p.gen("x") * p.gen("y")).scaled(q));
    return p;
}

/// A_m(k): commuting x's, commuting y's, y_i x_j - x_j y_i = delta_ij.
inline Presentation preset_weyl(int m, const Field& f = Field::Q()) {
    if (m < 1) throw bad_parameter("Weyl algebra needs m >= 1");
    std::vector<std::string> names;
    if (m == 1) {
        names = {"x", "y"};
    } else {
        for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
        for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
    }
    auto a = make_alphabet(names);
    Presentation p(m == 1 ? "WEYL1" : "WEYL", a, f);
    auto X = [&](int i) { return NcPoly::monomial(a, f, Word{static_cast<Letter>(i)}); };
    auto Y = [&](int i) { return NcPoly::monomial(a, f, Word{static_cast<Letter>(m + i)}); };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            p.relations.push_back(X(i) * X(j) - X(j) * X(i));
            p.relations.push_back(Y(i) * Y(j) - Y(j) * Y(i));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            NcPoly r = Y(i) * X(j) - X(j) * Y(i);
            if (i == j) r -= p.one();
            p.relations.push_back(r);
        }
    return p;
}

/// A_1^q(k) = k<x,y>/(yx - q xy - 1).
inline Presentation preset_qweyl1(const Scalar& q) {
    if (q.is_zero()) throw bad_parameter("q must be invertible");
    const Field f = Field::of(q);
    auto a = make_alphabet({"x", "y"});
    Presentation p("QWEYL1", a, f, {}, detail::q_binding(f, q));
    p.relations.push_back(p.gen("y") * p.gen("x") - (p.gen("x") * p.gen("y")).scaled(q) - p.one());
    return p;
}

/// One-parameter quantum Weyl algebra A_m^q(k), m >= 2.
inline Presentation preset_qweyl(int m, const Scalar& q) {
    if (m < 2) throw bad_parameter("QWEYL needs m >= 2 (use QWEYL1 for m = 1)");
    if (q.is_zero()) throw bad_parameter("q must be invertible");
    const Field f = Field::of(q);
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
    auto a = make_alphabet(names);
    Presentation p("QWEYL", a, f, {}, detail::q_binding(f, q));
    auto X = [&](int i) { return NcPoly::monomial(a, f, Word{static_cast<Letter>(i)}); };
    auto Y = [&](int i) { return NcPoly::monomial(a, f, Word{static_cast<Letter>(m + i)}); };
    const Scalar q2 = q * q;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            p.relations.push_back(X(i) * X(j) - (X(j) * X(i)).scaled(q));
            p.relations.push_back(Y(i) * Y(j) - (Y(j) * Y(i)).scaled(q.inv()));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) p.relations.push_back(Y(i) * X(j) - (X(j) * Y(i)).scaled(q));
    for (int i = 0; i < m; ++i) {
        NcPoly r = Y(i) * X(i) - p.one() - (X(i) * Y(i)).scaled(q2);
        for (int j = i + 1; j < m; ++j) r -= (X(j) * Y(j)).scaled(q2 - f.one());
        p.relations.push_back(r);
    }
    return p;
}

/// H_q = k<g, ginv, h>/(g ginv - 1, ginv g - 1, gh - q^2 hg). The consequence
/// h ginv - q^2 ginv h is listed too so that the oriented system is confluent.
inline Presentation preset_hq(const Scalar& q) {
    if (q.is_zero()) throw bad_parameter("q must be invertible");
    const Field f = Field::of(q);
    auto a = make_alphabet({"g", "ginv", "h"});
    Presentation p("HQ", a, f, {}, detail::q_binding(f, q));
    const NcPoly g = p.gen("g"), gi = p.gen("ginv"), h = p.gen("h");
    const Scalar q2 = q * q;
    p.relations.push_back(g * gi - p.one());
    p.relations.push_back(gi * g - p.one());
    p.relations.push_back(g * h - (h * g).scaled(q2));
    p.relations.push_back(h * gi - (gi * h).scaled(q2));
    return p;
}

/// k[h]/(h^2).
inline Presentation preset_dual_numbers(const Field& f = Field::Q()) {
    auto a = make_alphabet({"h"});
    Presentation p("DUAL_NUMBERS", a, f);
    p.relations.push_back(p.gen("h") * p.gen("h"));
    return p;
}

/// Group algebra of Z: k<g, ginv>/(g ginv - 1, ginv g - 1).
inline Presentation preset_laurent(const Field& f = Field::Q()) {
    auto a = make_alphabet({"g", "ginv"});
    Presentation p("LAURENT", a, f);
    p.relations.push_back(p.gen("g") * p.gen("ginv") - p.one());
    p.relations.push_back(p.gen("ginv") * p.gen("g") - p.one());
    return p;
}

/// Q(a,b): i^2 = a, j^2 = b, ij = k, ji = -k. The generator k has weight 2
/// so that it is rewritten to ij, leaving the basis {1, i, j, ij}.
inline Presentation preset_quat(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) throw bad_parameter("quaternion parameters must be nonzero");
    if (Field::of(a) != Field::of(b)) throw variant_mismatch("quaternion parameters from different fields");
    const Field f = Field::of(a);
    auto al = make_alphabet({"i", "j", "k"}, {1, 1, 2});
    Presentation p("QUAT", al, f);
    const NcPoly i = p.gen("i"), j = p.gen("j"), k = p.gen("k");
    p.relations.push_back(i * i - p.constant(a));
    p.relations.push_back(j * j - p.constant(b));
    p.relations.push_back(i * j - k);
    p.relations.push_back(j * i + k);
    return p;
}

/// Free algebra on the given generators (no relations).
inline Presentation preset_free(std::vector<std::string> gens, const Field& f = Field::Q()) {
    return Presentation("FREE", make_alphabet(std::move(gens)), f);
}

/// Dispatch by name: KQ_POLY, WEYL, WEYL1, QWEYL1, QWEYL, HQ, DUAL_NUMBERS,
/// LAURENT, QUAT, FREE (case-insensitive; "kq" and "weyl1" style aliases).
inline Presentation preset(const std::string& name, const PresetParams& params = {}) {
    const std::string n = detail::lower(name);
    if (n == "kq_poly" || n == "kq") return preset_kq_poly(detail::q_or_generic(params));
    if (n == "weyl1") return preset_weyl(1, params.q ? Field::of(*params.q) : Field::Q());
    if (n == "weyl") return preset_weyl(params.m, params.q ? Field::of(*params.q) : Field::Q());
    if (n == "qweyl1") return preset_qweyl1(detail::q_or_generic(params));
    if (n == "qweyl") return preset_qweyl(params.m, detail::q_or_generic(params));
    if (n == "hq") return preset_hq(detail::q_or_generic(params));
    if (n == "dual_numbers" || n == "dual") return preset_dual_numbers();
    if (n == "laurent" || n == "group_z") return preset_laurent();
    if (n == "quat") {
        if (!params.a || !params.b) throw bad_parameter("QUAT needs parameters a and b");
        return preset_quat(*params.a, *params.b);
    }
    if (n == "free") {
        std::vector<std::string> gens;
        for (int i = 1; i <= params.m; ++i) gens.push_back("x" + std::to_string(i));
        return preset_free(gens);
    }
    throw bad_parameter("unknown preset " + name);
}

// ---------------------------------------------------------------------------
// Linear substitutions on quadratic relations
// ---------------------------------------------------------------------------

/// Outcome of testing whether g(span R) lies in span R for the degree-2
/// relations R, with g acting diagonally on tensors of generators.
struct IdealPreservation {
    bool preserved = false;
    std::vector<ScalarVector> coordinates;    // per relation: g(r_i) in terms of the relations
    std::optional<std::vector<Scalar>> lambdas;  // when the span is one-dimensional: g(r_i) = lambda_i r_i
    std::optional<std::size_t> witness_relation;  // first relation whose image leaves the span
    std::optional<NcPoly> witness_image;
};

/// g acts on generators by g(x_a) = sum_b g(a, b) x_b and on words letterwise.
inline NcPoly apply_linear_substitution(const NcPoly& p, const ScalarMatrix& g) {
    const std::size_t n = p.alphabet().size();
    if (g.rows() != n || g.cols() != n) throw size_mismatch("substitution matrix must be n x n for n generators");
    std::vector<NcPoly> images;
    for (std::size_t a = 0; a < n; ++a) {
        NcPoly img(p.alphabet_ptr(), p.field());
        for (std::size_t b = 0; b < n; ++b) img.add_term(Word{static_cast<Letter>(b)}, g(a, b));
        images.push_back(std::move(img));
    }
    NcPoly out(p.alphabet_ptr(), p.field());
    for (const auto& [w, c] : p.terms()) {
        NcPoly t = NcPoly::one(p.alphabet_ptr(), p.field());
        for (Letter l : w) t = t * images[l];
        out.add_scaled(t, c);
    }
    return out;
}

inline IdealPreservation ideal_preserved_by_linear_map(const Presentation& pres, const ScalarMatrix& g) {
    const std::size_t n = pres.alphabet->size();
    if (!pres.alphabet->has_unit_weights()) throw non_quadratic_relation("generators must all have degree 1");
    for (const auto& r : pres.relations)
        if (!r.is_homogeneous(2)) throw non_quadratic_relation("relation " + to_string(r) + " is not quadratic");
    if (g.rows() != n || g.cols() != n) throw size_mismatch("substitution matrix must be n x n for n generators");
    const Field f = pres.field;
    auto coords = [&](const NcPoly& p) {
        ScalarVector v(n * n, f.zero());
        for (const auto& [w, c] : p.terms()) v[w[0] * n + w[1]] = c;
        return v;
    };
    const std::size_t k = pres.relations.size();
    ScalarMatrix span = zeros(n * n, k, f);  // columns are relations
    std::vector<ScalarVector> rel_coords;
    for (std::size_t i = 0; i < k; ++i) {
        rel_coords.push_back(coords(pres.relations[i]));
        for (std::size_t j = 0; j < n * n; ++j) span(j, i) = rel_coords[i][j];
    }
    IdealPreservation out;
    out.preserved = true;
    for (std::size_t i = 0; i < k; ++i) {
        const NcPoly img = apply_linear_substitution(pres.relations[i], g);
        auto sol = solve_affine(span, coords(img));
        if (!sol) {
            out.preserved = false;
            out.witness_relation = i;
            out.witness_image = img;
            out.coordinates.clear();
            return out;
        }
        out.coordinates.push_back(sol->particular);
    }
    if (rank(span) == 1) {
        std::vector<Scalar> lambdas;
        for (std::size_t i = 0; i < k; ++i) {
            const NcPoly img = apply_linear_substitution(pres.relations[i], g);
            const Word& w = pres.relations[i].leading_word();
            lambdas.push_back(img.coeff(w) / pres.relations[i].coeff(w));
        }
        out.lambdas = std::move(lambdas);
    }
    return out;
}

}  // namespace ncalg
