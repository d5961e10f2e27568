#pragma once

// Text and JSON formats: presentation files, Hopf-structure files, matrices,
// representations and classification reports.
//
// Presentation file:
//   # comment
//   name: WEYL1
//   field: Q | cyclo <l> | Qq
//   q: <scalar>          (optional binding for the symbol q)
//   gens: x y
//   weights: 1 1         (optional)
//   relations:           (optional marker)
//   y*x - x*y - 1
//
// A Hopf file adds `coproduct:`, `counit:` and `antipode:` blocks with lines
// `g = g (x) g`, and optionally a module algebra: `module-gens:`,
// `module-weights:`, a `module-relations:` block, an `action:` block with
// lines `h(y) = x`, and `closed-form: hq` for the quantum-plane formulas.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ncalg/error.hpp"
#include "ncalg/expr.hpp"
#include "ncalg/hopf.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/rep.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bad_parameter("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Field parse_field(std::string_view text, int line = 1) {
    const std::string t = detail::trim(text);
    if (t == "Q") return Field::Q();
    if (t == "Qq") return Field::Qq();
    if (t == "R") return Field::approx();
    if (t.rfind("cyclo", 0) == 0) {
        const std::string n = detail::trim(std::string_view(t).substr(5));
        if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos && n.size() < 6) return Field::cyclo(std::stoi(n));
    }
    throw parse_error("unknown field '" + t + "' (expected Q, cyclo <l>, Qq)", line, 1);
}

namespace detail {

struct FileLine {
    int number;
    std::string text;
};

/// Non-empty lines with comments removed.
inline std::vector<FileLine> content_lines(std::string_view text) {
    std::vector<FileLine> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string t = trim(line);
        if (!t.empty()) out.push_back({n, std::move(t)});
    }
    return out;
}

/// Splits "key: value" when the line starts with a keyword followed by ':'.
inline std::optional<std::pair<std::string, std::string>> key_value(const std::string& line) {
    const auto c = line.find(':');
    if (c == std::string::npos) return std::nullopt;
    const std::string key = trim(std::string_view(line).substr(0, c));
    if (key.empty() || key.find_first_not_of("abcdefghijklmnopqrstuvwxyz-") != std::string::npos) return std::nullopt;
    return std::make_pair(key, trim(std::string_view(line).substr(c + 1)));
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline std::vector<int> parse_weights(const std::string& s, std::size_t n, int line) {
    std::vector<int> w;
    for (const auto& t : split_ws(s)) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6)
            throw parse_error("weights must be positive integers", line, 1);
        w.push_back(std::stoi(t));
        if (w.back() < 1) throw parse_error("weights must be positive integers", line, 1);
    }
    if (w.size() != n) throw parse_error("one weight per generator expected", line, 1);
    return w;
}

/// Sections of a presentation-style file: inline keys and block bodies.
struct Sections {
    std::map<std::string, FileLine> values;
    std::map<std::string, std::vector<FileLine>> blocks;
};

inline Sections split_sections(std::string_view text, const std::set<std::string>& value_keys,
                               const std::set<std::string>& block_keys, const std::string& default_block) {
    Sections s;
    std::string current = default_block;
    for (auto& l : content_lines(text)) {
        if (auto kv = key_value(l.text)) {
            const auto& [k, v] = *kv;
            if (block_keys.count(k)) {
                if (!v.empty()) throw parse_error("block '" + k + ":' takes its entries on the following lines", l.number, 1);
                current = k;
                s.blocks[k];
                continue;
            }
            if (value_keys.count(k)) {
                if (s.values.count(k)) throw parse_error("duplicate key '" + k + "'", l.number, 1);
                s.values.emplace(k, FileLine{l.number, v});
                continue;
            }
            throw parse_error("unknown key '" + k + "'", l.number, 1);
        }
        s.blocks[current].push_back(std::move(l));
    }
    return s;
}

inline Presentation presentation_from_sections(const Sections& s, const std::string& gens_key, const std::string& weights_key,
                                               const std::string& relations_key, const std::string& default_name,
                                               std::optional<Field> field_override = std::nullopt) {
    Field f = Field::Q();
    if (field_override)
        f = *field_override;
    else if (auto it = s.values.find("field"); it != s.values.end())
        f = parse_field(it->second.text, it->second.number);
    auto g = s.values.find(gens_key);
    if (g == s.values.end()) throw parse_error("missing '" + gens_key + ":' line", 1, 1);
    const auto names = split_ws(g->second.text);
    if (names.empty()) throw parse_error("no generators", g->second.number, 1);
    for (const auto& n : names)
        if (!std::isalpha(static_cast<unsigned char>(n[0])) ||
            n.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") != std::string::npos)
            throw parse_error("bad generator name '" + n + "'", g->second.number, 1);
    std::vector<int> weights;
    if (auto w = s.values.find(weights_key); w != s.values.end())
        weights = parse_weights(w->second.text, names.size(), w->second.number);
    AlphabetPtr alpha;
    try {
        alpha = make_alphabet(names, weights);
    } catch (const error& e) {
        throw parse_error(e.what(), g->second.number, 1);
    }
    ScalarSymbols symbols;
    if (auto q = s.values.find("q"); q != s.values.end()) {
        const Scalar qv = parse_scalar_in(q->second.text, f, default_symbols(f));
        if (qv.is_zero()) throw parse_error("q must be invertible", q->second.number, 1);
        symbols["q"] = qv;
    }
    std::string name = default_name;
    if (auto n = s.values.find("name"); n != s.values.end()) name = n->second.text;
    Presentation p(name, alpha, f, {}, symbols);
    if (auto b = s.blocks.find(relations_key); b != s.blocks.end())
        for (const auto& l : b->second) {
            NcPoly r = parse_expression(l.text, alpha, f, [&] {
                ScalarSymbols syms = default_symbols(f);
                for (const auto& [k, v] : symbols) syms[k] = v;
                return syms;
            }(), l.number);
            if (r.is_zero()) throw parse_error("relation is zero", l.number, 1);
            p.relations.push_back(std::move(r));
        }
    return p;
}

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
    const auto s = detail::split_sections(text, {"name", "field", "q", "gens", "weights"}, {"relations"}, "relations");
    return detail::presentation_from_sections(s, "gens", "weights", "relations", "custom");
}

inline std::string presentation_to_text(const Presentation& p) {
    std::string out = "name: " + p.name + "\nfield: " + p.field.to_string() + "\n";
    if (auto q = p.symbols.find("q"); q != p.symbols.end()) out += "q: " + to_string_in_field(q->second) + "\n";
    out += "gens:";
    for (const auto& n : p.alphabet->names()) out += " " + n;
    out += "\n";
    if (!p.alphabet->has_unit_weights()) {
        out += "weights:";
        for (int w : p.alphabet->weights()) out += " " + std::to_string(w);
        out += "\n";
    }
    out += "relations:\n";
    for (const auto& r : p.relations) out += to_string(r) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Tensors and Hopf files
// ---------------------------------------------------------------------------

/// Parses "p (x) r + s (x) t"; summands split at top-level + and -, so factors
/// with several terms need parentheses.
inline Tensor parse_tensor(std::string_view text, const Presentation& pres, const RewriteSystemPtr& rs, std::size_t arity,
                           int line = 1) {
    static constexpr std::string_view sep = "(x)";
    std::vector<std::string> summands;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, sep.size()) == sep) {
            cur += '\x01';
            i += sep.size() - 1;
            continue;
        }
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw parse_error("unbalanced ')'", line, static_cast<int>(i) + 1);
        if ((c == '+' || c == '-') && depth == 0) {
            const std::string t = detail::trim(cur);
            const char prev = t.empty() ? '\0' : t.back();
            if (!t.empty() && prev != '^' && prev != '*' && prev != '/' && prev != '\x01') {
                summands.push_back(cur);
                cur.clear();
            }
        }
        cur += c;
    }
    if (depth != 0) throw parse_error("unbalanced '('", line, static_cast<int>(text.size()));
    summands.push_back(cur);
    Tensor out(rs, arity);
    for (const auto& s : summands) {
        std::vector<NcPoly> factors;
        std::size_t start = 0;
        for (;;) {
            const auto pos = s.find('\x01', start);
            const std::string part = detail::trim(std::string_view(s).substr(start, pos == std::string::npos ? std::string::npos : pos - start));
            if (part.empty()) throw parse_error("empty tensor factor", line, 1);
            ScalarSymbols syms = default_symbols(pres.field);
            for (const auto& [k, v] : pres.symbols) syms[k] = v;
            factors.push_back(parse_expression(part, pres.alphabet, pres.field, syms, line));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        if (factors.size() != arity)
            throw parse_error("expected " + std::to_string(arity) + " tensor factors separated by (x)", line, 1);
        // a leading sign on the first factor carries the summand's sign
        out = out + Tensor::pure(rs, factors);
    }
    return out;
}

struct HopfFile {
    HopfPtr hopf;
    std::optional<ActionSpec> action;
};

namespace detail {

inline std::pair<std::string, std::string> split_assignment(const FileLine& l) {
    const auto eq = l.text.find('=');
    if (eq == std::string::npos) throw parse_error("expected 'name = value'", l.number, 1);
    return {trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

inline Letter generator_at(const Presentation& p, const std::string& name, const FileLine& l) {
    auto i = p.alphabet->index_of(name);
    if (!i) throw parse_error("unknown generator '" + name + "'", l.number, 1);
    return *i;
}

}  // namespace detail

inline HopfFile parse_hopf(std::string_view text) {
    using detail::FileLine;
    const auto s = detail::split_sections(text, {"name", "field", "q", "gens", "weights", "module-gens", "module-weights", "closed-form"},
                                          {"relations", "coproduct", "counit", "antipode", "module-relations", "action"}, "relations");
    auto pres = std::make_shared<const Presentation>(detail::presentation_from_sections(s, "gens", "weights", "relations", "custom"));
    auto rs = std::make_shared<const RewriteSystem>(orient(*pres));
    const std::size_t n = pres->alphabet->size();
    const Field f = pres->field;
    ScalarSymbols syms = default_symbols(f);
    for (const auto& [k, v] : pres->symbols) syms[k] = v;

    auto block = [&](const std::string& k) -> const std::vector<FileLine>* {
        auto it = s.blocks.find(k);
        return it == s.blocks.end() ? nullptr : &it->second;
    };
    auto per_generator = [&](const std::string& k, bool required) {
        std::vector<std::optional<FileLine>> out(n);
        const auto* b = block(k);
        if (!b) {
            if (required) throw parse_error("missing '" + k + ":' block", 1, 1);
            return out;
        }
        for (const auto& l : *b) {
            const auto [lhs, rhs] = detail::split_assignment(l);
            const Letter g = detail::generator_at(*pres, lhs, l);
            if (out[g]) throw parse_error("duplicate entry for '" + lhs + "'", l.number, 1);
            out[g] = FileLine{l.number, rhs};
        }
        for (std::size_t g = 0; g < n; ++g)
            if (!out[g]) throw parse_error("'" + k + ":' has no entry for " + pres->alphabet->name(static_cast<Letter>(g)), b->empty() ? 1 : b->front().number, 1);
        return out;
    };

    std::vector<Tensor> delta;
    for (const auto& e : per_generator("coproduct", true)) delta.push_back(parse_tensor(e->text, *pres, rs, 2, e->number));
    std::vector<Scalar> eps;
    for (const auto& e : per_generator("counit", true)) eps.push_back(parse_scalar_in(e->text, f, syms));
    std::optional<std::vector<NcPoly>> antipode;
    if (block("antipode")) {
        antipode.emplace();
        for (const auto& e : per_generator("antipode", true)) antipode->push_back(parse_expression(e->text, pres->alphabet, f, syms, e->number));
    }
    HopfFile out{std::make_shared<const HopfStructure>(pres, delta, eps, antipode), std::nullopt};

    if (!s.values.count("module-gens")) {
        if (block("action") || block("module-relations")) throw parse_error("action given without 'module-gens:'", 1, 1);
        return out;
    }
    auto A = std::make_shared<const Presentation>(
        detail::presentation_from_sections(s, "module-gens", "module-weights", "module-relations", "module", f));
    std::vector<std::map<Word, NcPoly>> table(n);
    if (const auto* b = block("action"))
        for (const auto& l : *b) {
            const auto [lhs, rhs] = detail::split_assignment(l);
            const auto open = lhs.find('(');
            if (open == std::string::npos || lhs.back() != ')') throw parse_error("expected 'h(word) = value'", l.number, 1);
            const Letter g = detail::generator_at(*pres, detail::trim(std::string_view(lhs).substr(0, open)), l);
            const NcPoly w = parse_expression(std::string_view(lhs).substr(open + 1, lhs.size() - open - 2), A->alphabet, f, syms, l.number);
            if (w.size() != 1 || !w.terms().begin()->second.is_one()) throw parse_error("action argument must be a word", l.number, 1);
            table[g].insert_or_assign(w.terms().begin()->first, parse_expression(rhs, A->alphabet, f, syms, l.number));
        }
    std::vector<ClosedFormRule> closed;
    if (auto c = s.values.find("closed-form"); c != s.values.end()) {
        if (c->second.text != "hq") throw parse_error("unknown closed form '" + c->second.text + "'", c->second.number, 1);
        if (pres->alphabet->names() != std::vector<std::string>{"g", "ginv", "h"} ||
            A->alphabet->names() != std::vector<std::string>{"x", "y"} || (!pres->symbols.count("q") && f != Field::Qq()))
            throw parse_error("closed-form hq needs gens g ginv h, module-gens x y and a q", c->second.number, 1);
        const Scalar qv = pres->symbols.count("q") ? pres->symbols.at("q") : f.generator();
        closed = hq_closed_forms(A, qv);
    }
    out.action.emplace(out.hopf, A, std::move(table), std::move(closed));
    return out;
}

inline std::string hopf_to_text(const HopfStructure& H) {
    std::string out = presentation_to_text(H.presentation());
    const auto& a = *H.presentation().alphabet;
    out += "coproduct:\n";
    for (std::size_t g = 0; g < a.size(); ++g) out += a.name(static_cast<Letter>(g)) + " = " + to_string(H.coproduct()[g]) + "\n";
    out += "counit:\n";
    for (std::size_t g = 0; g < a.size(); ++g) out += a.name(static_cast<Letter>(g)) + " = " + to_string_in_field(H.counit()[g]) + "\n";
    if (H.antipode()) {
        out += "antipode:\n";
        for (std::size_t g = 0; g < a.size(); ++g) out += a.name(static_cast<Letter>(g)) + " = " + to_string((*H.antipode())[g]) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// Exact scalars as strings; reals as strings with 17 significant digits.
inline json scalar_to_json(const Scalar& s) { return to_string(s); }

inline Scalar scalar_from_json(const json& j, std::optional<Field> field = std::nullopt) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
    if (j.is_number_integer()) {
        const Scalar r = Scalar::rational(j.get<long>());
        return field ? field->lift(r) : r;
    }
    if (j.is_number_float()) {
        if (field && *field != Field::approx()) throw parse_error("real number in an exact field", 1, 1);
        return Scalar::approx(j.get<double>());
    }
    throw parse_error("scalar must be a string or a number", 1, 1);
}

inline json matrix_to_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Array of arrays of scalars. Without a field hint the entries decide: any
/// cyclotomic, q-rational or real entry fixes the field and rationals lift.
inline ScalarMatrix matrix_from_json(const json& j, std::optional<Field> field = std::nullopt) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) throw parse_error("matrix must be a non-empty array of arrays", 1, 1);
    const std::size_t r = j.size(), c = j[0].size();
    std::vector<Scalar> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != c) throw parse_error("matrix rows differ in length", 1, 1);
        for (const auto& e : row) entries.push_back(scalar_from_json(e, field));
    }
    Field f = field.value_or(Field::Q());
    if (!field)
        for (const auto& e : entries)
            if (!e.is_rational()) {
                const Field g = Field::of(e);
                if (f != Field::Q() && f != g) throw variant_mismatch("matrix entries from different fields");
                f = g;
            }
    ScalarMatrix m = zeros(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < c; ++k) m(i, k) = f.lift(entries[i * c + k]);
    return m;
}

inline ScalarMatrix read_matrix_file(const std::string& path, std::optional<Field> field = std::nullopt) {
    try {
        return matrix_from_json(json::parse(read_file(path)), field);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
    }
}

inline json rep_to_json(const MatRep& r) {
    json mats = json::object();
    const auto& a = *r.presentation().alphabet;
    for (std::size_t g = 0; g < a.size(); ++g) mats[a.name(static_cast<Letter>(g))] = matrix_to_json(r[g]);
    return {{"schema_version", schema_version}, {"presentation", r.presentation().name}, {"field", r.field().to_string()},
            {"dim", r.dim()}, {"matrices", mats}};
}

/// {"matrices": {"x": [[...]], ...}} or {"matrices": [[[...]], ...]} in generator order.
inline MatRep rep_from_json(const json& j, const PresentationPtr& pres) {
    if (!j.is_object() || !j.contains("matrices")) throw parse_error("representation needs a 'matrices' entry", 1, 1);
    const auto& m = j["matrices"];
    std::vector<ScalarMatrix> ms;
    const auto& a = *pres->alphabet;
    if (m.is_object()) {
        if (m.size() != a.size()) throw parse_error("one matrix per generator expected", 1, 1);
        for (std::size_t g = 0; g < a.size(); ++g) {
            const auto& name = a.name(static_cast<Letter>(g));
            if (!m.contains(name)) throw parse_error("no matrix for generator '" + name + "'", 1, 1);
            ms.push_back(matrix_from_json(m[name], pres->field));
        }
    } else if (m.is_array()) {
        for (const auto& e : m) ms.push_back(matrix_from_json(e, pres->field));
    } else {
        throw parse_error("'matrices' must be an object or an array", 1, 1);
    }
    return MatRep(pres, std::move(ms));
}

inline MatRep read_rep_file(const std::string& path, const PresentationPtr& pres) {
    try {
        return rep_from_json(json::parse(read_file(path)), pres);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
    }
}

inline const char* oracle_name(OracleResult::Kind k) {
    switch (k) {
        case OracleResult::Kind::none: return "no-invariant-subspace";
        case OracleResult::Kind::found: return "invariant-subspace-found";
        case OracleResult::Kind::inconclusive: return "inconclusive";
    }
    return "?";
}

inline json classification_to_json(const ClassificationReport& r) {
    json grid = json::array();
    for (const auto& g : r.grid) grid.push_back(scalar_to_json(g));
    json reps = json::array();
    for (const auto& c : r.representatives) {
        json e = {{"dim", c.rep.dim()},
                  {"form", c.form},
                  {"parameter", c.parameter},
                  {"x", matrix_to_json(c.rep[0])},
                  {"y", matrix_to_json(c.rep[1])},
                  {"verified", verify_representation(c.rep).ok},
                  {"commutant_dim", c.commutant_dim},
                  {"algebra_dim", c.algebra_dim}};
        e["oracle"] = c.oracle ? json(oracle_name(*c.oracle)) : json(nullptr);
        reps.push_back(std::move(e));
    }
    json cand = json::object(), irr = json::object();
    for (const auto& [d, k] : r.candidates_by_dim) cand[std::to_string(d)] = k;
    for (const auto& [d, k] : r.irreducible_candidates_by_dim) irr[std::to_string(d)] = k;
    return {{"schema_version", schema_version},
            {"order", r.order},
            {"q", scalar_to_json(r.q)},
            {"grid", grid},
            {"max_dim", r.max_dim},
            {"seed", r.seed},
            {"dims_found", r.dims_found},
            {"max_dim_at_most_order", r.max_dim_at_most_order()},
            {"one_dim_family", r.one_dim_family},
            {"completeness", r.completeness},
            {"candidates_by_dim", cand},
            {"irreducible_candidates_by_dim", irr},
            {"representatives", reps},
            {"dedup_log", r.dedup_log}};
}

}  // namespace ncalg
