#pragma once

// Bialgebra and Hopf structures on finitely presented algebras: tensor
// powers with normal-form components, degree-bounded axiom checks, module
// algebra actions, tensor and dual modules, braid and Hecke symmetries.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/error.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/rep.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

using RewriteSystemPtr = std::shared_ptr<const RewriteSystem>;

/// Element of H^{(x)k}: sum of c * (w_1 (x) ... (x) w_k) with every w_i a
/// normal-form word, so equality is structural.
class Tensor {
public:
    using Key = std::vector<Word>;

    Tensor(RewriteSystemPtr rs, std::size_t arity) : rs_(std::move(rs)), arity_(arity) {}

    static Tensor pure(RewriteSystemPtr rs, const std::vector<NcPoly>& factors) {
        Tensor t(rs, factors.size());
        std::vector<NcPoly> nf;
        for (const auto& f : factors) nf.push_back(rs->normal_form(f));
        Key key(factors.size());
        t.expand(nf, 0, key, rs->field().one());
        return t;
    }
    static Tensor unit(RewriteSystemPtr rs, std::size_t arity) {
        Tensor t(rs, arity);
        t.terms_[Key(arity)] = rs->field().one();
        return t;
    }

    std::size_t arity() const { return arity_; }
    const RewriteSystem& rewrite_system() const { return *rs_; }
    const RewriteSystemPtr& rewrite_system_ptr() const { return rs_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const Tensor& o, const Scalar& s) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c * s);
    }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }
    friend Tensor operator+(Tensor a, const Tensor& b) {
        a.add_scaled(b, a.rs_->field().one());
        return a;
    }
    friend Tensor operator-(Tensor a, const Tensor& b) {
        a.add_scaled(b, -a.rs_->field().one());
        return a;
    }
    Tensor scaled(const Scalar& s) const {
        Tensor t(rs_, arity_);
        t.add_scaled(*this, s);
        return t;
    }

    /// Componentwise product, each component reduced to normal form.
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        a.check(b);
        Tensor out(a.rs_, a.arity_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                std::vector<NcPoly> parts;
                for (std::size_t i = 0; i < a.arity_; ++i) parts.push_back(a.rs_->word_normal_form(concat(ka[i], kb[i])));
                Key key(a.arity_);
                out.expand(parts, 0, key, ca * cb);
            }
        return out;
    }

private:
    void check(const Tensor& o) const {
        if (arity_ != o.arity_) throw size_mismatch("tensors of different arity");
    }
    void expand(const std::vector<NcPoly>& parts, std::size_t i, Key& key, const Scalar& c) {
        if (i == parts.size()) {
            add_term(key, c);
            return;
        }
        for (const auto& [w, cw] : parts[i].terms()) {
            key[i] = w;
            expand(parts, i + 1, key, c * cw);
        }
    }

    RewriteSystemPtr rs_;
    std::size_t arity_;
    std::map<Key, Scalar> terms_;
};

inline std::string to_string(const Tensor& t) {
    if (t.is_zero()) return "0";
    const Alphabet& a = t.rewrite_system().alphabet();
    std::string out;
    for (const auto& [k, c] : t.terms()) {
        std::string factors;
        for (std::size_t i = 0; i < k.size(); ++i) factors += (i ? " (x) " : "") + word_to_string(a, k[i]);
        std::string cs = to_string_in_field(c);
        bool neg = false;
        if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos) {
            cs = "(" + cs + ")";
        } else if (cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        const std::string term = cs == "1" ? factors : cs + "*" + factors;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

/// Coproduct and counit on generators, optional antipode; all extended
/// (anti-)multiplicatively.
class HopfStructure {
public:
    HopfStructure(PresentationPtr pres, std::vector<Tensor> coproduct, std::vector<Scalar> counit,
                  std::optional<std::vector<NcPoly>> antipode = std::nullopt, int confluence_degree = 8)
        : pres_(std::move(pres)),
          rs_(std::make_shared<const RewriteSystem>(orient_checked(*pres_, confluence_degree))),
          coproduct_(std::move(coproduct)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)) {
        const std::size_t n = pres_->alphabet->size();
        if (coproduct_.size() != n || counit_.size() != n) throw size_mismatch("coproduct and counit need one entry per generator");
        if (antipode_ && antipode_->size() != n) throw size_mismatch("antipode needs one entry per generator");
        // rebuild the tensors over this structure's rewrite system
        for (auto& t : coproduct_) {
            if (t.arity() != 2) throw size_mismatch("coproduct values must lie in H (x) H");
            Tensor r(rs_, 2);
            for (const auto& [k, c] : t.terms())
                r.add_scaled(Tensor::pure(rs_, {NcPoly::monomial(pres_->alphabet, pres_->field, k[0]),
                                                NcPoly::monomial(pres_->alphabet, pres_->field, k[1])}),
                             c);
            t = std::move(r);
        }
        for (auto& e : counit_) e = pres_->field.lift(e);
    }

    const Presentation& presentation() const { return *pres_; }
    const PresentationPtr& presentation_ptr() const { return pres_; }
    const RewriteSystem& rewrite_system() const { return *rs_; }
    const RewriteSystemPtr& rewrite_system_ptr() const { return rs_; }
    const std::vector<Tensor>& coproduct() const { return coproduct_; }
    const std::vector<Scalar>& counit() const { return counit_; }
    const std::optional<std::vector<NcPoly>>& antipode() const { return antipode_; }
    const Field& field() const { return pres_->field; }

    NcPoly normal_form(const NcPoly& p) const { return rs_->normal_form(p); }

    Tensor delta(const Word& w) const {
        Tensor t = Tensor::unit(rs_, 2);
        for (Letter l : w) t = t * coproduct_[l];
        return t;
    }
    Tensor delta(const NcPoly& p) const {
        Tensor t(rs_, 2);
        for (const auto& [w, c] : p.terms()) t.add_scaled(delta(w), c);
        return t;
    }

    Scalar epsilon(const Word& w) const {
        Scalar s = field().one();
        for (Letter l : w) s = s * counit_[l];
        return s;
    }
    Scalar epsilon(const NcPoly& p) const {
        Scalar s = field().zero();
        for (const auto& [w, c] : p.terms()) s = s + c * epsilon(w);
        return s;
    }

    NcPoly antipode_of(const Word& w) const {
        if (!antipode_) throw missing_antipode("no antipode given");
        NcPoly r = NcPoly::one(pres_->alphabet, field());
        for (auto it = w.rbegin(); it != w.rend(); ++it) r = rs_->normal_form(r * (*antipode_)[*it]);
        return r;
    }
    NcPoly antipode_of(const NcPoly& p) const {
        NcPoly r(pres_->alphabet, field());
        for (const auto& [w, c] : p.terms()) r.add_scaled(antipode_of(w), c);
        return r;
    }

    /// Normal-form basis words of H up to the given degree.
    std::vector<Word> basis(int maxdeg) const { return basis_up_to_degree(*rs_, maxdeg).words; }

private:
    PresentationPtr pres_;
    RewriteSystemPtr rs_;
    std::vector<Tensor> coproduct_;
    std::vector<Scalar> counit_;
    std::optional<std::vector<NcPoly>> antipode_;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

/// Outcome of a degree-bounded axiom check.
struct AxiomCheck {
    bool ok = true;
    std::string check;
    int degree = 0;  // bound used (0 for relation-level checks)
    std::optional<std::size_t> relation;
    std::optional<Word> word;
    std::string witness;
};

inline constexpr int default_axiom_degree = 6;

/// Delta(r) = 0 in H (x) H and epsilon(r) = 0 for every relation r.
inline AxiomCheck check_coproduct_algebra_map(const HopfStructure& H) {
    AxiomCheck out{true, "coproduct-algebra-map", 0, {}, {}, {}};
    const auto& rels = H.presentation().relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const Tensor d = H.delta(rels[i]);
        if (!d.is_zero()) {
            out.ok = false;
            out.relation = i;
            out.witness = "Delta(" + to_string(rels[i]) + ") = " + to_string(d) + " != 0";
            return out;
        }
        const Scalar e = H.epsilon(rels[i]);
        if (!e.is_zero()) {
            out.ok = false;
            out.relation = i;
            out.witness = "epsilon(" + to_string(rels[i]) + ") = " + to_string_in_field(e) + " != 0";
            return out;
        }
    }
    return out;
}

namespace detail {

/// (eps (x) id) or (id (x) eps) applied to an element of H (x) H.
inline NcPoly counit_contract(const HopfStructure& H, const Tensor& t, bool left) {
    NcPoly out(H.presentation().alphabet, H.field());
    for (const auto& [k, c] : t.terms()) out.add_term(left ? k[1] : k[0], c * H.epsilon(left ? k[0] : k[1]));
    return out;
}

/// Applies Delta to one tensor slot, raising the arity by one.
inline Tensor delta_at(const HopfStructure& H, const Tensor& t, std::size_t slot) {
    Tensor out(H.rewrite_system_ptr(), t.arity() + 1);
    for (const auto& [k, c] : t.terms()) {
        const Tensor d = H.delta(k[slot]);
        for (const auto& [dk, dc] : d.terms()) {
            Tensor::Key key;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (i == slot) {
                    key.push_back(dk[0]);
                    key.push_back(dk[1]);
                } else {
                    key.push_back(k[i]);
                }
            }
            out.add_term(key, c * dc);
        }
    }
    return out;
}

}  // namespace detail

inline AxiomCheck check_counit(const HopfStructure& H, int maxdeg = default_axiom_degree) {
    AxiomCheck out{true, "counit", maxdeg, {}, {}, {}};
    for (const Word& w : H.basis(maxdeg)) {
        const NcPoly expect = NcPoly::monomial(H.presentation().alphabet, H.field(), w);
        const Tensor d = H.delta(w);
        for (bool left : {true, false}) {
            const NcPoly got = detail::counit_contract(H, d, left);
            if (got != expect) {
                out.ok = false;
                out.word = w;
                out.witness = std::string(left ? "(eps (x) id)" : "(id (x) eps)") + "Delta(" +
                              word_to_string(*H.presentation().alphabet, w) + ") = " + to_string(got);
                return out;
            }
        }
    }
    return out;
}

inline AxiomCheck check_coassociativity(const HopfStructure& H, int maxdeg = default_axiom_degree) {
    AxiomCheck out{true, "coassociativity", maxdeg, {}, {}, {}};
    for (const Word& w : H.basis(maxdeg)) {
        const Tensor d = H.delta(w);
        const Tensor left = detail::delta_at(H, d, 0), right = detail::delta_at(H, d, 1);
        if (left != right) {
            out.ok = false;
            out.word = w;
            out.witness = "(Delta (x) id)Delta(" + word_to_string(*H.presentation().alphabet, w) + ") = " + to_string(left) +
                          " but (id (x) Delta)Delta = " + to_string(right);
            return out;
        }
    }
    return out;
}

/// S(r) = 0 for every relation, then m(S (x) id)Delta(w) = eps(w)1 = m(id (x) S)Delta(w).
inline AxiomCheck check_antipode(const HopfStructure& H, int maxdeg = default_axiom_degree) {
    if (!H.antipode()) throw missing_antipode("no antipode given");
    AxiomCheck out{true, "antipode", maxdeg, {}, {}, {}};
    const auto& rels = H.presentation().relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const NcPoly s = H.antipode_of(rels[i]);
        if (!s.is_zero()) {
            out.ok = false;
            out.relation = i;
            out.witness = "S(" + to_string(rels[i]) + ") = " + to_string(s) + " != 0";
            return out;
        }
    }
    const auto& A = H.presentation().alphabet;
    for (const Word& w : H.basis(maxdeg)) {
        const Tensor d = H.delta(w);
        const NcPoly expect = NcPoly::constant(A, H.field(), H.epsilon(w));
        for (bool left : {true, false}) {
            NcPoly got(A, H.field());
            for (const auto& [k, c] : d.terms()) {
                const NcPoly a = NcPoly::monomial(A, H.field(), k[0]), b = NcPoly::monomial(A, H.field(), k[1]);
                got.add_scaled(left ? H.antipode_of(k[0]) * b : a * H.antipode_of(k[1]), c);
            }
            got = H.normal_form(got);
            if (got != expect) {
                out.ok = false;
                out.word = w;
                out.witness = std::string(left ? "m(S (x) id)" : "m(id (x) S)") + "Delta(" + word_to_string(*A, w) +
                              ") = " + to_string(got) + " != " + to_string(expect);
                return out;
            }
        }
    }
    return out;
}

struct HopfReport {
    std::vector<AxiomCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Runs the bialgebra checks and, when an antipode is present, the antipode check.
inline HopfReport check_hopf(const HopfStructure& H, int maxdeg = default_axiom_degree) {
    HopfReport r;
    r.checks.push_back(check_coproduct_algebra_map(H));
    if (!r.checks.back().ok) return r;
    r.checks.push_back(check_counit(H, maxdeg));
    r.checks.push_back(check_coassociativity(H, maxdeg));
    if (H.antipode()) r.checks.push_back(check_antipode(H, maxdeg));
    return r;
}

// ---------------------------------------------------------------------------
// Module-algebra actions
// ---------------------------------------------------------------------------

/// Closed-form action of one H-generator on a word of A; nullopt defers to
/// the table and the Sweedler rule.
using ClosedFormRule = std::function<std::optional<NcPoly>(const Word&)>;

class ActionSpec {
public:
    ActionSpec(HopfPtr H, PresentationPtr A, std::vector<std::map<Word, NcPoly>> table,
               std::vector<ClosedFormRule> closed_form = {})
        : H_(std::move(H)),
          A_(std::move(A)),
          rsA_(std::make_shared<const RewriteSystem>(orient(*A_))),
          table_(std::move(table)),
          closed_(std::move(closed_form)),
          cache_(std::make_shared<Cache>()) {
        const std::size_t n = H_->presentation().alphabet->size();
        if (table_.empty()) table_.resize(n);
        if (table_.size() != n) throw size_mismatch("action table needs one entry per H-generator");
        if (!closed_.empty() && closed_.size() != n) throw size_mismatch("closed-form rules need one entry per H-generator");
        if (H_->field() != A_->field) throw variant_mismatch("H and A over different fields");
    }

    const HopfStructure& hopf() const { return *H_; }
    const HopfPtr& hopf_ptr() const { return H_; }
    const Presentation& target() const { return *A_; }
    const PresentationPtr& target_ptr() const { return A_; }
    const RewriteSystem& target_rewrite() const { return *rsA_; }

    /// Action of an H-generator on a word of A (not necessarily normal).
    NcPoly act_generator(Letter h, const Word& w) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            if (auto it = cache_->values.find({h, w}); it != cache_->values.end()) return it->second;
        }
        NcPoly r = compute(h, w);
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->values.emplace(std::make_pair(h, w), r);
        return r;
    }

    /// Action of an H-word (composition, rightmost letter first) on an element of A.
    NcPoly act_word(const Word& u, const NcPoly& a) const {
        NcPoly cur = a;
        for (auto it = u.rbegin(); it != u.rend(); ++it) {
            NcPoly next(A_->alphabet, A_->field);
            for (const auto& [w, c] : cur.terms()) next.add_scaled(act_generator(*it, w), c);
            cur = std::move(next);
        }
        return rsA_->normal_form(cur);
    }

private:
    NcPoly compute(Letter h, const Word& w) const {
        if (!closed_.empty() && closed_[h])
            if (auto v = closed_[h](w)) return rsA_->normal_form(*v);
        if (auto it = table_[h].find(w); it != table_[h].end()) return rsA_->normal_form(it->second);
        const auto& F = A_->field;
        if (w.empty()) return NcPoly::constant(A_->alphabet, F, H_->counit()[h]);
        if (w.size() == 1)
            throw action_table_incomplete("no action given for " + H_->presentation().alphabet->name(h) + " on " +
                                          A_->alphabet->name(w[0]));
        // h(u a) = sum h1(u) h2(a)
        const Word u(w.begin(), w.end() - 1), last{w.back()};
        const NcPoly mu = NcPoly::monomial(A_->alphabet, F, u), ma = NcPoly::monomial(A_->alphabet, F, last);
        NcPoly out(A_->alphabet, F);
        for (const auto& [k, c] : H_->coproduct()[h].terms()) out.add_scaled(act_word(k[0], mu) * act_word(k[1], ma), c);
        return rsA_->normal_form(out);
    }

    struct Cache {
        std::mutex mu;
        std::map<std::pair<Letter, Word>, NcPoly> values;
    };

    HopfPtr H_;
    PresentationPtr A_;
    RewriteSystemPtr rsA_;
    std::vector<std::map<Word, NcPoly>> table_;
    std::vector<ClosedFormRule> closed_;
    std::shared_ptr<Cache> cache_;
};

/// h . a for h in the free algebra on H's generators (not reduced in H) and a in A.
inline NcPoly act(const ActionSpec& spec, const NcPoly& h, const NcPoly& a) {
    const auto& A = spec.target();
    NcPoly out(A.alphabet, A.field);
    for (const auto& [u, c] : h.terms()) out.add_scaled(spec.act_word(u, a), c);
    return spec.target_rewrite().normal_form(out);
}

/// (i) every H-relation acts by zero on A-basis words up to maxdeg;
/// (ii) every H-generator sends every A-relation into the ideal of A.
inline AxiomCheck check_module_algebra(const ActionSpec& spec, int maxdeg = default_axiom_degree) {
    AxiomCheck out{true, "module-algebra", maxdeg, {}, {}, {}};
    const auto& H = spec.hopf();
    const auto& A = spec.target();
    const auto basis = basis_up_to_degree(spec.target_rewrite(), maxdeg).words;
    const auto& hrels = H.presentation().relations;
    for (std::size_t i = 0; i < hrels.size(); ++i)
        for (const Word& w : basis) {
            const NcPoly r = act(spec, hrels[i], NcPoly::monomial(A.alphabet, A.field, w));
            if (!r.is_zero()) {
                out.ok = false;
                out.relation = i;
                out.word = w;
                out.witness = "(" + to_string(hrels[i]) + ")(" + word_to_string(*A.alphabet, w) + ") = " + to_string(r) + " != 0";
                return out;
            }
        }
    const std::size_t nh = H.presentation().alphabet->size();
    for (std::size_t i = 0; i < A.relations.size(); ++i)
        for (std::size_t h = 0; h < nh; ++h) {
            const NcPoly gen = NcPoly::monomial(H.presentation().alphabet, H.field(), Word{static_cast<Letter>(h)});
            const NcPoly r = act(spec, gen, A.relations[i]);
            if (!r.is_zero()) {
                out.ok = false;
                out.relation = i;
                out.witness = H.presentation().alphabet->name(static_cast<Letter>(h)) + "(" + to_string(A.relations[i]) +
                              ") = " + to_string(r) + " != 0 in A";
                return out;
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Representations of H: tensor, dual, trivial
// ---------------------------------------------------------------------------

inline ScalarMatrix evaluate_word(const MatRep& r, const Word& w) {
    ScalarMatrix m = identity(r.dim(), r.field());
    for (Letter l : w) m = m * r[l];
    return m;
}

inline MatRep trivial_module(const HopfPtr& H) {
    std::vector<ScalarMatrix> ms;
    for (const auto& e : H->counit()) ms.push_back(matrix_from_rows({{e}}, H->field()));
    return MatRep(H->presentation_ptr(), std::move(ms));
}

/// g acts on V1 (x) V2 by sum r1(g_1) (x) r2(g_2).
inline MatRep tensor_module(const HopfStructure& H, const MatRep& r1, const MatRep& r2) {
    const std::size_t n = r1.dim() * r2.dim();
    std::vector<ScalarMatrix> ms;
    for (const auto& d : H.coproduct()) {
        ScalarMatrix m = zeros(n, n, H.field());
        for (const auto& [k, c] : d.terms()) m = m + kron(evaluate_word(r1, k[0]), evaluate_word(r2, k[1])).scaled(c);
        ms.push_back(std::move(m));
    }
    MatRep out(H.presentation_ptr(), std::move(ms));
    if (!verify_representation(out).ok) throw verification_failed("tensor product is not a representation");
    return out;
}

/// g acts on V* by the transpose of r(S(g)).
inline MatRep dual_module(const HopfStructure& H, const MatRep& r) {
    if (!H.antipode()) throw missing_antipode("dual module needs an antipode");
    std::vector<ScalarMatrix> ms;
    for (const auto& s : *H.antipode()) ms.push_back(r.evaluate(s).transpose());
    MatRep out(H.presentation_ptr(), std::move(ms));
    if (!verify_representation(out).ok) throw verification_failed("dual is not a representation");
    return out;
}

// ---------------------------------------------------------------------------
// Braidings and Hecke symmetries on V (x) V, basis index i*m + j for x_i (x) x_j
// ---------------------------------------------------------------------------

inline std::size_t tensor_square_root(const ScalarMatrix& c) {
    if (!c.is_square()) throw size_not_square("operator on V (x) V must be square");
    std::size_t n = 0;
    while (n * n < c.rows()) ++n;
    if (n * n != c.rows() || n == 0) throw size_not_square("matrix size is not a perfect square");
    return n;
}

inline bool check_braid(const ScalarMatrix& c) {
    const std::size_t n = tensor_square_root(c);
    const Field f = field_of(c);
    const ScalarMatrix c12 = kron(c, identity(n, f)), c23 = kron(identity(n, f), c);
    return c12 * c23 * c12 == c23 * c12 * c23;
}

struct HeckeCheck {
    bool quadratic = false;  // (H - q)(H + q^-1) = 0
    bool braid = false;
    bool ok() const { return quadratic && braid; }
};

inline HeckeCheck check_hecke(const ScalarMatrix& Hm, const Scalar& q) {
    if (q.is_zero()) throw zero_q("Hecke parameter must be invertible");
    const std::size_t n = tensor_square_root(Hm);
    const Field f = field_of(Hm);
    const Scalar qq = f.lift(q);
    const ScalarMatrix id = identity(n * n, f);
    HeckeCheck r;
    r.quadratic = ((Hm - id.scaled(qq)) * (Hm + id.scaled(qq.inv()))).is_zero();
    r.braid = check_braid(Hm);
    return r;
}

inline ScalarMatrix flip_matrix(std::size_t m, const Field& f = Field::Q()) {
    ScalarMatrix F = zeros(m * m, m * m, f);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) F(j * m + i, i * m + j) = f.one();
    return F;
}

/// One-parameter Hecke operator: x_i(x)x_i -> q x_i(x)x_i, and for i < j
/// x_i(x)x_j -> x_j(x)x_i, x_j(x)x_i -> x_i(x)x_j + (q - q^-1) x_j(x)x_i.
inline ScalarMatrix standard_hecke_matrix(std::size_t m, const Scalar& q) {
    if (q.is_zero()) throw zero_q("Hecke parameter must be invertible");
    const Field f = Field::of(q);
    ScalarMatrix H = zeros(m * m, m * m, f);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t col = i * m + j;
            if (i == j) {
                H(col, col) = q;
            } else if (i < j) {
                H(j * m + i, col) = f.one();
            } else {
                H(j * m + i, col) = f.one();
                H(col, col) = q - q.inv();
            }
        }
    return H;
}

/// T(V)/(Image(H - q id)) as a quadratic presentation on x1..xm.
inline Presentation hecke_symmetric_algebra(const ScalarMatrix& Hm, const Scalar& q, std::size_t m) {
    if (tensor_square_root(Hm) != m) throw size_mismatch("operator size does not match dim V");
    if (!check_hecke(Hm, q).ok()) throw hecke_violation("operator is not a Hecke symmetry for this q");
    const Field f = field_of(Hm);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    Presentation p("S_H", make_alphabet(names), f);
    const ScalarMatrix img = Hm - identity(m * m, f).scaled(f.lift(q));
    std::vector<ScalarVector> cols;
    const ScalarMatrix t = img.transpose();
    for (std::size_t c = 0; c < m * m; ++c)
        cols.emplace_back(t.data().begin() + static_cast<std::ptrdiff_t>(c * m * m),
                          t.data().begin() + static_cast<std::ptrdiff_t>((c + 1) * m * m));
    for (const auto& v : span_basis(cols, m * m, f)) {
        NcPoly r(p.alphabet, f);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                r.add_term(Word{static_cast<Letter>(i), static_cast<Letter>(j)}, v[i * m + j]);
        p.relations.push_back(std::move(r));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Named Hopf structures and actions
// ---------------------------------------------------------------------------

namespace detail {

inline Tensor tensor2(const Presentation& p, const RewriteSystemPtr& rs, const std::string& a, const std::string& b) {
    auto parse = [&](const std::string& s) { return p.parse(s); };
    return Tensor::pure(rs, {parse(a), parse(b)});
}

}  // namespace detail

/// H_q: g grouplike, Delta(h) = 1 (x) h + h (x) g, eps(h) = 0, S(g) = ginv, S(h) = -h ginv.
inline HopfPtr hopf_hq(const Scalar& q) {
    auto pres = std::make_shared<const Presentation>(preset_hq(q));
    auto rs = std::make_shared<const RewriteSystem>(orient(*pres));
    const Field f = pres->field;
    std::vector<Tensor> d{detail::tensor2(*pres, rs, "g", "g"), detail::tensor2(*pres, rs, "ginv", "ginv"),
                          detail::tensor2(*pres, rs, "1", "h") + detail::tensor2(*pres, rs, "h", "g")};
    std::vector<Scalar> e{f.one(), f.one(), f.zero()};
    std::vector<NcPoly> s{pres->parse("ginv"), pres->parse("g"), pres->parse("-h*ginv")};
    return std::make_shared<const HopfStructure>(pres, d, e, s);
}

/// k[h]/(h^2) with h primitive: Delta(h) = h (x) 1 + 1 (x) h, eps(h) = 0, S(h) = -h.
/// Delta(h^2) = 2 h (x) h, so this is a bialgebra only in characteristic 2.
inline HopfPtr hopf_dual_numbers_primitive(const Field& f = Field::Q()) {
    auto pres = std::make_shared<const Presentation>(preset_dual_numbers(f));
    auto rs = std::make_shared<const RewriteSystem>(orient(*pres));
    std::vector<Tensor> d{detail::tensor2(*pres, rs, "h", "1") + detail::tensor2(*pres, rs, "1", "h")};
    return std::make_shared<const HopfStructure>(pres, d, std::vector<Scalar>{f.zero()},
                                                 std::vector<NcPoly>{pres->parse("-h")});
}

/// k[h]/(h^2) with h grouplike: not a bialgebra since eps(h^2) = eps(h)^2 = 1.
inline HopfPtr hopf_dual_numbers_grouplike(const Field& f = Field::Q()) {
    auto pres = std::make_shared<const Presentation>(preset_dual_numbers(f));
    auto rs = std::make_shared<const RewriteSystem>(orient(*pres));
    return std::make_shared<const HopfStructure>(pres, std::vector<Tensor>{detail::tensor2(*pres, rs, "h", "h")},
                                                 std::vector<Scalar>{f.one()});
}

/// Group algebra of Z: g, ginv grouplike and mutually antipodal.
inline HopfPtr hopf_group_z(const Field& f = Field::Q()) {
    auto pres = std::make_shared<const Presentation>(preset_laurent(f));
    auto rs = std::make_shared<const RewriteSystem>(orient(*pres));
    std::vector<Tensor> d{detail::tensor2(*pres, rs, "g", "g"), detail::tensor2(*pres, rs, "ginv", "ginv")};
    return std::make_shared<const HopfStructure>(pres, d, std::vector<Scalar>{f.one(), f.one()},
                                                 std::vector<NcPoly>{pres->parse("ginv"), pres->parse("g")});
}

namespace detail {

/// Exponents (i, j) when w = x^i y^j, else nullopt.
inline std::optional<std::pair<long, long>> xy_exponents(const Word& w) {
    long i = 0, j = 0;
    std::size_t p = 0;
    while (p < w.size() && w[p] == 0) ++i, ++p;
    while (p < w.size() && w[p] == 1) ++j, ++p;
    if (p != w.size()) return std::nullopt;
    return std::make_pair(i, j);
}

inline Word xy_word(long i, long j) {
    Word w(static_cast<std::size_t>(i), 0);
    w.insert(w.end(), static_cast<std::size_t>(j), 1);
    return w;
}

}  // namespace detail

/// Generator values of H_q on k_q[x,y]: g(x) = q x, g(y) = q^-1 y, h(x) = 0, h(y) = x.
inline std::vector<std::map<Word, NcPoly>> hq_generator_table(const Presentation& A, const Scalar& q) {
    const Field f = A.field;
    auto gen = [&](Letter l, const Scalar& c) { return NcPoly::monomial(A.alphabet, f, Word{l}, c); };
    std::vector<std::map<Word, NcPoly>> t(3);
    t[0] = {{Word{0}, gen(0, q)}, {Word{1}, gen(1, q.inv())}};
    t[1] = {{Word{0}, gen(0, q.inv())}, {Word{1}, gen(1, q)}};
    t[2] = {{Word{0}, A.zero()}, {Word{1}, gen(0, f.one())}};
    return t;
}

/// Closed forms on x^i y^j: g -> q^{i-j}, ginv -> q^{j-i}, h -> [j]_q x^{i+1} y^{j-1}.
inline std::vector<ClosedFormRule> hq_closed_forms(const PresentationPtr& A, const Scalar& q) {
    const Field f = A->field;
    auto scale_rule = [A, f, q](int sign) -> ClosedFormRule {
        return [A, f, q, sign](const Word& w) -> std::optional<NcPoly> {
            auto e = detail::xy_exponents(w);
            if (!e) return std::nullopt;
            return NcPoly::monomial(A->alphabet, f, w, q.pow(sign * (e->first - e->second)));
        };
    };
    ClosedFormRule h = [A, f, q](const Word& w) -> std::optional<NcPoly> {
        auto e = detail::xy_exponents(w);
        if (!e) return std::nullopt;
        const auto [i, j] = *e;
        if (j == 0) return NcPoly(A->alphabet, f);
        return NcPoly::monomial(A->alphabet, f, detail::xy_word(i + 1, j - 1), q_number(j, q));
    };
    return {scale_rule(1), scale_rule(-1), h};
}

/// H_q acting on k_q[x,y]; closed forms first, Sweedler rule otherwise.
inline ActionSpec hq_action(const Scalar& q, bool use_closed_forms = true) {
    HopfPtr H = hopf_hq(q);
    auto A = std::make_shared<const Presentation>(preset_kq_poly(q));
    auto table = hq_generator_table(*A, q);
    return ActionSpec(H, A, std::move(table), use_closed_forms ? hq_closed_forms(A, q) : std::vector<ClosedFormRule>{});
}

}  // namespace ncalg
