#pragma once

// Free algebras k<x1,...,xn>: words over an ordered alphabet and finitely
// supported linear combinations of words with concatenation product.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/error.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Ordered generator names. The order (and optional integer weights) fixes
/// the monomial order: weighted degree first, then lexicographic.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names, std::vector<int> weights = {})
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (weights_.empty()) weights_.assign(names_.size(), 1);
        if (weights_.size() != names_.size()) throw bad_parameter("alphabet: one weight per generator");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (weights_[i] < 1) throw bad_parameter("alphabet: weights must be positive");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw bad_parameter("alphabet: duplicate generator " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Letter i) const { return names_.at(i); }
    const std::vector<int>& weights() const { return weights_; }
    int weight(Letter i) const { return weights_[i]; }
    bool has_unit_weights() const {
        for (int w : weights_)
            if (w != 1) return false;
        return true;
    }

    std::optional<Letter> index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<Letter>(i);
        return std::nullopt;
    }
    Letter at(const std::string& n) const {
        auto i = index_of(n);
        if (!i) throw bad_parameter("unknown generator " + n);
        return *i;
    }

    int degree(const Word& w) const {
        int d = 0;
        for (Letter l : w) d += weights_[l];
        return d;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> weights = {}) {
    return std::make_shared<const Alphabet>(std::move(names), std::move(weights));
}

/// Weighted degree-lexicographic order.
struct DegLex {
    const Alphabet* alphabet = nullptr;
    bool operator()(const Word& a, const Word& b) const {
        const int da = alphabet->degree(a), db = alphabet->degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline std::string word_to_string(const Alphabet& a, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += "*";
        s += a.name(w[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

/// Element of the free algebra over a fixed alphabet and scalar field.
class NcPoly {
public:
    using Terms = std::map<Word, Scalar, DegLex>;

    NcPoly(AlphabetPtr alphabet, Field field)
        : alphabet_(std::move(alphabet)), field_(field), terms_(DegLex{alphabet_.get()}) {}

    static NcPoly constant(AlphabetPtr a, Field f, const Scalar& c) {
        NcPoly p(std::move(a), f);
        p.add_term({}, c);
        return p;
    }
    static NcPoly one(AlphabetPtr a, Field f) { return constant(std::move(a), f, f.one()); }
    static NcPoly monomial(AlphabetPtr a, Field f, Word w, const Scalar& c) {
        NcPoly p(std::move(a), f);
        p.add_term(std::move(w), c);
        return p;
    }
    static NcPoly monomial(AlphabetPtr a, Field f, Word w) {
        Scalar one = f.one();
        return monomial(std::move(a), f, std::move(w), one);
    }
    static NcPoly generator(AlphabetPtr a, Field f, const std::string& name) {
        Letter l = a->at(name);
        return monomial(std::move(a), f, Word{l});
    }

    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const Alphabet& alphabet() const { return *alphabet_; }
    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Largest word in the monomial order; requires nonzero.
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
    int degree() const { return is_zero() ? -1 : alphabet_->degree(leading_word()); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    /// Adds c * w in place.
    void add_term(Word w, const Scalar& c) {
        if (!field_.contains(c)) {
            if (c.is_rational())
                return add_term(std::move(w), field_.lift(c));
            throw variant_mismatch("coefficient outside field " + field_.to_string());
        }
        if (c.is_zero()) return;
        for (Letter l : w)
            if (l >= alphabet_->size()) throw alphabet_mismatch("letter out of range");
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const NcPoly& o, const Scalar& s) {
        check_compatible(o);
        if (s.is_zero()) return;
        for (const auto& [w, c] : o.terms_) add_term(w, c * s);
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        if (a.alphabet_ != b.alphabet_ && !(*a.alphabet_ == *b.alphabet_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [w, c] : a.terms_) {
            if (w != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) {
        a.add_scaled(b, a.field_.one());
        return a;
    }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) {
        a.add_scaled(b, -a.field_.one());
        return a;
    }
    NcPoly operator-() const { return scaled(-field_.one()); }
    NcPoly scaled(const Scalar& s) const {
        NcPoly r(alphabet_, field_);
        r.add_scaled(*this, field_.lift(s));
        return r;
    }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        a.check_compatible(b);
        NcPoly r(a.alphabet_, a.field_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }
    NcPoly& operator+=(const NcPoly& o) {
        add_scaled(o, field_.one());
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        add_scaled(o, -field_.one());
        return *this;
    }

    NcPoly pow(unsigned e) const {
        NcPoly r = one(alphabet_, field_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// True when every word has the same weighted degree d.
    bool is_homogeneous(int d) const {
        for (const auto& [w, c] : terms_)
            if (alphabet_->degree(w) != d) return false;
        return true;
    }

    void check_compatible(const NcPoly& o) const {
        if (alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_))
            throw alphabet_mismatch("polynomials over different alphabets");
        if (field_ != o.field_) throw variant_mismatch("polynomials over different fields");
    }

private:
    AlphabetPtr alphabet_;
    Field field_;
    Terms terms_;
};

/// Text form, highest word first: e.g. "x*y^2 + 2*y".
inline std::string to_string(const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = to_string_in_field(c);
        const bool additive = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        bool neg = false;
        if (additive) {
            cs = "(" + cs + ")";
        } else if (cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        std::string term;
        if (w.empty())
            term = cs;
        else if (cs == "1")
            term = word_to_string(p.alphabet(), w);
        else
            term = cs + "*" + word_to_string(p.alphabet(), w);
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

/// Algebra map from the free algebra to n x n matrices determined by the
/// images of the generators (one matrix per alphabet letter).
inline ScalarMatrix evaluate_on_matrices(const NcPoly& p, const std::vector<ScalarMatrix>& images) {
    if (images.size() != p.alphabet().size()) throw size_mismatch("one matrix per generator required");
    if (images.empty()) throw size_mismatch("empty assignment");
    const std::size_t n = images[0].rows();
    for (const auto& m : images)
        if (m.rows() != n || m.cols() != n) throw size_mismatch("matrices must be square of equal size");
    const Field f = p.field();
    for (const auto& m : images)
        if (field_of(m) != f) throw variant_mismatch("matrix entries outside the polynomial's field");
    ScalarMatrix acc = zeros(n, n, f);
    for (const auto& [w, c] : p.terms()) {
        ScalarMatrix m = identity(n, f);
        for (Letter l : w) m = m * images[l];
        acc = acc + m.scaled(c);
    }
    return acc;
}

}  // namespace ncalg
