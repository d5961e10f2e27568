// Command-line front end. Exit codes: 0 success, 1 negative verdict, 2 usage
// or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncalg/ncalg.hpp"

using namespace ncalg;

namespace {

struct Options {
    bool json_out = false;
    std::uint64_t seed = 0;
    int maxdeg = 4;
    std::string grid;

    // presentation source
    std::string preset;
    std::string pres_file;
    std::string q, a, b;
    int m = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    const Options& opt;
    json doc;
    std::ostringstream text;
    int code = 0;

    Output(const Options& o, const std::string& command) : opt(o), doc({{"schema_version", schema_version}, {"command", command}}) {}

    void emit() const {
        if (opt.json_out)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

std::string real17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(detail::trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(detail::trim(cur));
    return out;
}

std::vector<double> parse_reals(const std::string& s, std::size_t n, const char* what) {
    auto parts = split_commas(s);
    if (parts.size() != n) throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated numbers");
    std::vector<double> out;
    for (const auto& p : parts) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(p, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad number '") + p + "' in " + what);
        }
        if (used != p.size()) throw UsageError(std::string("bad number '") + p + "' in " + what);
        out.push_back(v);
    }
    return out;
}

std::optional<Scalar> opt_scalar(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_scalar(s);
}

PresentationPtr load_presentation(const Options& o) {
    if (!o.pres_file.empty() && !o.preset.empty()) throw UsageError("give either --preset or --pres, not both");
    if (!o.pres_file.empty()) return std::make_shared<const Presentation>(parse_presentation(read_file(o.pres_file)));
    if (o.preset.empty()) throw UsageError("a presentation is required (--preset NAME or --pres FILE)");
    PresetParams p;
    p.q = opt_scalar(o.q);
    p.m = o.m;
    p.a = opt_scalar(o.a);
    p.b = opt_scalar(o.b);
    if (p.a && p.b && Field::of(*p.a) != Field::of(*p.b)) {
        const Field f = p.a->is_rational() ? Field::of(*p.b) : Field::of(*p.a);
        p.a = f.lift(*p.a);
        p.b = f.lift(*p.b);
    }
    return std::make_shared<const Presentation>(preset(o.preset, p));
}

void add_presentation_options(CLI::App* c, Options& o) {
    c->add_option("--preset", o.preset, "named presentation: kq, weyl1, weyl, qweyl1, qweyl, hq, dual, laurent, quat, free");
    c->add_option("--pres", o.pres_file, "presentation file");
    c->add_option("--q", o.q, "parameter q, e.g. -1, 2, 'z @ cyclo 3' (default: generic q)");
    c->add_option("--m", o.m, "number of variable pairs or generators");
    c->add_option("--a", o.a, "quaternion parameter a");
    c->add_option("--b", o.b, "quaternion parameter b");
}

RewriteSystem rewrite_for(const Presentation& p, int maxdeg) {
    RewriteSystem rs = orient(p);
    return rs.with_status(check_local_confluence(rs, std::max(maxdeg, rs.max_rule_degree())));
}

json poly_json(const NcPoly& p) { return to_string(p); }

// ---------------------------------------------------------------------------
// rewriting
// ---------------------------------------------------------------------------

int cmd_nf(const Options& o, const std::string& expr) {
    auto pres = load_presentation(o);
    const RewriteSystem rs = orient(*pres);
    const NcPoly nf = rs.normal_form(pres->parse(expr));
    Output out(o, "nf");
    out.doc["presentation"] = pres->name;
    out.doc["input"] = expr;
    out.doc["normal_form"] = poly_json(nf);
    out.text << to_string(nf) << "\n";
    out.emit();
    return 0;
}

int cmd_basis(const Options& o) {
    auto pres = load_presentation(o);
    const RewriteSystem rs = rewrite_for(*pres, 2 * o.maxdeg);
    const MonomialBasis b = basis_up_to_degree(rs, o.maxdeg);
    const auto counts = basis_counts_by_degree(rs, o.maxdeg);
    Output out(o, "basis");
    json words = json::array();
    for (const auto& w : b.words) words.push_back(word_to_string(*pres->alphabet, w));
    out.doc["presentation"] = pres->name;
    out.doc["maxdeg"] = o.maxdeg;
    out.doc["words"] = words;
    out.doc["counts_by_degree"] = counts;
    out.doc["provisional"] = b.provisional;
    for (const auto& w : words) out.text << w.get<std::string>() << "\n";
    out.text << "counts:";
    for (auto c : counts) out.text << " " << c;
    out.text << "\n";
    if (b.provisional) out.text << "provisional: overlaps not checked up to degree " << 2 * o.maxdeg << "\n";
    out.emit();
    return 0;
}

int cmd_confluence(const Options& o) {
    auto pres = load_presentation(o);
    const RewriteSystem rs = orient(*pres);
    const ConfluenceStatus st = check_local_confluence(rs, o.maxdeg);
    Output out(o, "confluence");
    out.doc["presentation"] = pres->name;
    out.doc["maxdeg"] = o.maxdeg;
    json rules = json::array();
    for (const auto& r : rs.rules()) rules.push_back(word_to_string(*pres->alphabet, r.lhs) + " -> " + to_string(r.rhs));
    out.doc["rules"] = rules;
    if (st.kind == ConfluenceStatus::Kind::locally_confluent_up_to) {
        out.doc["status"] = "locally-confluent";
        out.text << "locally confluent up to degree " << o.maxdeg << "\n";
    } else {
        const auto& c = *st.counterexample;
        out.doc["status"] = "counterexample";
        out.doc["counterexample"] = {{"word", word_to_string(*pres->alphabet, c.word)},
                                     {"rules", {c.rule_a, c.rule_b}},
                                     {"reduct_a", poly_json(c.reduct_a)},
                                     {"reduct_b", poly_json(c.reduct_b)}};
        out.text << "counterexample at " << word_to_string(*pres->alphabet, c.word) << " (rules " << c.rule_a << ", " << c.rule_b
                 << "): " << to_string(c.reduct_a) << " vs " << to_string(c.reduct_b) << "\n";
        out.code = 1;
    }
    out.emit();
    return out.code;
}

int cmd_ideal_map(const Options& o, const std::string& matrix_file) {
    auto pres = load_presentation(o);
    const ScalarMatrix g = read_matrix_file(matrix_file, pres->field);
    const IdealPreservation r = ideal_preserved_by_linear_map(*pres, g);
    Output out(o, "ideal-map");
    out.doc["presentation"] = pres->name;
    out.doc["preserved"] = r.preserved;
    if (r.preserved) {
        json coords = json::array();
        for (const auto& v : r.coordinates) {
            json row = json::array();
            for (const auto& s : v) row.push_back(scalar_to_json(s));
            coords.push_back(row);
        }
        out.doc["coordinates"] = coords;
        out.text << "preserved\n";
        if (r.lambdas) {
            json l = json::array();
            for (const auto& s : *r.lambdas) {
                l.push_back(scalar_to_json(s));
                out.text << "lambda = " << to_string(s) << "\n";
            }
            out.doc["lambdas"] = l;
        }
    } else {
        out.doc["witness_relation"] = *r.witness_relation;
        out.doc["witness_image"] = poly_json(*r.witness_image);
        out.text << "not preserved: relation " << *r.witness_relation << " maps to " << to_string(*r.witness_image) << "\n";
        out.code = 1;
    }
    out.emit();
    return out.code;
}

int cmd_pres(const Options& o) {
    auto pres = load_presentation(o);
    Output out(o, "pres");
    out.doc["text"] = presentation_to_text(*pres);
    out.text << presentation_to_text(*pres);
    out.emit();
    return 0;
}

// ---------------------------------------------------------------------------
// quaternions
// ---------------------------------------------------------------------------

struct QuatOptions {
    std::string a = "-1", b = "-1", x, y;
};

QuatParams quat_params(const QuatOptions& q) {
    Scalar a = parse_scalar(q.a), b = parse_scalar(q.b);
    if (Field::of(a) != Field::of(b)) {
        const Field f = a.is_rational() ? Field::of(b) : Field::of(a);
        a = f.lift(a);
        b = f.lift(b);
    }
    return {a, b};
}

QuatElem parse_quat(const std::string& s, const QuatParams& p) {
    auto parts = split_commas(s);
    if (parts.size() != 4) throw UsageError("a quaternion is four comma-separated coefficients a0,a1,a2,a3");
    std::array<Scalar, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = parse_scalar_in(parts[i], p.field());
    return QuatElem(c, p);
}

json quat_json(const QuatElem& x) {
    json c = json::array();
    for (const auto& s : x.c) c.push_back(scalar_to_json(s));
    return c;
}

int cmd_quat_mul(const Options& o, const QuatOptions& q) {
    const QuatParams p = quat_params(q);
    const QuatElem x = parse_quat(q.x, p), y = parse_quat(q.y, p);
    const QuatElem r = qmul(x, y);
    Output out(o, "quat mul");
    out.doc["a"] = scalar_to_json(p.a);
    out.doc["b"] = scalar_to_json(p.b);
    out.doc["product"] = quat_json(r);
    out.doc["text"] = to_string(r);
    out.text << to_string(r) << "\n";
    out.emit();
    return 0;
}

int cmd_quat_norm(const Options& o, const QuatOptions& q) {
    const QuatParams p = quat_params(q);
    const QuatElem x = parse_quat(q.x, p);
    const Scalar n = norm(x);
    Output out(o, "quat norm");
    out.doc["norm"] = scalar_to_json(n);
    out.text << to_string(n) << "\n";
    out.emit();
    return 0;
}

int cmd_quat_split(const Options& o, const std::string& a, const std::string& b) {
    const QuatParams p{parse_scalar(a, Field::Q()), parse_scalar(b, Field::Q())};
    const DivisionDecision d = is_division_over_Q(p);
    Output out(o, "quat split-test");
    out.doc["a"] = scalar_to_json(p.a);
    out.doc["b"] = scalar_to_json(p.b);
    out.doc["verdict"] = d.division ? "division" : "split";
    json local = json::array();
    for (const auto& [place, s] : d.local_symbols) local.push_back({{"place", place == 0 ? std::string("inf") : place.get_str()}, {"symbol", s}});
    out.doc["local_symbols"] = local;
    out.text << (d.division ? "division" : "split") << "\n";
    for (const auto& [place, s] : d.local_symbols) out.text << "(a,b)_" << (place == 0 ? std::string("inf") : place.get_str()) << " = " << s << "\n";
    if (d.witness) {
        out.doc["witness"] = quat_json(*d.witness);
        out.text << "witness: " << to_string(*d.witness) << " with norm 0\n";
    }
    out.emit();
    return 0;
}

int cmd_quat_rotate(const Options& o, const std::string& axis, double angle, const std::string& vec) {
    const auto n = parse_reals(axis, 3, "--axis"), v = parse_reals(vec, 3, "--vec");
    const Versor u = axis_angle_to_versor(angle, vec3(n[0], n[1], n[2]));
    const Vector3 r = rotate_vector(u, vec3(v[0], v[1], v[2]));
    Output out(o, "quat rotate");
    out.doc["versor"] = {real17(u[0]), real17(u[1]), real17(u[2]), real17(u[3])};
    out.doc["result"] = {real17(r[0].as_double()), real17(r[1].as_double()), real17(r[2].as_double())};
    out.text << real17(r[0].as_double()) << "," << real17(r[1].as_double()) << "," << real17(r[2].as_double()) << "\n";
    out.emit();
    return 0;
}

int cmd_quat_matrix(const Options& o, const std::string& versor) {
    const auto c = parse_reals(versor, 4, "--versor");
    const Versor u(c[0], c[1], c[2], c[3]);
    const ScalarMatrix R = versor_to_matrix(u);
    Output out(o, "quat matrix");
    out.doc["matrix"] = matrix_to_json(R);
    for (std::size_t i = 0; i < 3; ++i) out.text << real17(R(i, 0).as_double()) << "," << real17(R(i, 1).as_double()) << "," << real17(R(i, 2).as_double()) << "\n";
    out.emit();
    return 0;
}

// ---------------------------------------------------------------------------
// representations
// ---------------------------------------------------------------------------

std::string matrix_text(const ScalarMatrix& m) { return to_string(m); }

int cmd_rep_verify(const Options& o, const std::string& file) {
    auto pres = load_presentation(o);
    const MatRep r = read_rep_file(file, pres);
    const RepVerification v = verify_representation(r);
    Output out(o, "rep verify");
    out.doc["presentation"] = pres->name;
    out.doc["dim"] = r.dim();
    out.doc["verified"] = v.ok;
    if (v.ok) {
        out.text << "verified\n";
    } else {
        out.doc["failed_relation"] = *v.relation;
        out.doc["residual"] = matrix_to_json(*v.residual);
        out.text << "not a representation: relation " << to_string(pres->relations[*v.relation]) << " has residual\n"
                 << matrix_text(*v.residual) << "\n";
        out.code = 1;
    }
    out.emit();
    return out.code;
}

int cmd_rep_irreducible(const Options& o, const std::string& file) {
    auto pres = load_presentation(o);
    const MatRep r = read_rep_file(file, pres);
    if (!verify_representation(r).ok) throw verification_failed("matrices do not satisfy the relations");
    const IrreducibilityResult ir = is_irreducible(r);
    Output out(o, "rep irreducible");
    out.doc["dim"] = r.dim();
    out.doc["irreducible"] = ir.irreducible;
    out.doc["algebra_dim"] = ir.algebra_dim;
    out.doc["commutant_dim"] = ir.commutant_dim;
    out.text << (ir.irreducible ? "irreducible" : "reducible") << "\n";
    out.text << "generated algebra dimension " << ir.algebra_dim << " of " << r.dim() * r.dim() << "\n";
    out.text << "commutant dimension " << ir.commutant_dim << "\n";
    if (r.dim() <= oracle_max_dim) {
        const OracleResult oracle = invariant_subspace_oracle(r);
        out.doc["oracle"] = oracle_name(oracle.kind);
        out.text << "oracle: " << oracle_name(oracle.kind) << "\n";
    }
    if (!ir.irreducible) out.code = 1;
    out.emit();
    return out.code;
}

int cmd_rep_equivalent(const Options& o, const std::string& f1, const std::string& f2) {
    auto pres = load_presentation(o);
    const MatRep r1 = read_rep_file(f1, pres), r2 = read_rep_file(f2, pres);
    const EquivalenceResult e = are_equivalent(r1, r2);
    Output out(o, "rep equivalent");
    const char* verdict = e.kind == EquivalenceResult::Kind::equivalent     ? "equivalent"
                          : e.kind == EquivalenceResult::Kind::inequivalent ? "inequivalent"
                                                                            : "unknown";
    out.doc["verdict"] = verdict;
    out.doc["intertwiner_space_dim"] = e.intertwiner_basis.size();
    out.text << verdict << "\n";
    if (e.intertwiner) {
        out.doc["intertwiner"] = matrix_to_json(*e.intertwiner);
        out.text << "P =\n" << matrix_text(*e.intertwiner) << "\n";
    }
    if (!e.equivalent()) out.code = 1;
    out.emit();
    return out.code;
}

int cmd_rep_classify(const Options& o, int order, int max_dim) {
    ClassifyConfig cfg;
    cfg.seed = o.seed;
    cfg.max_dim = max_dim;
    if (!o.grid.empty()) {
        std::vector<Scalar> g;
        for (const auto& s : split_commas(o.grid)) g.push_back(parse_scalar_in(s, Field::cyclo(order)));
        cfg.grid = g;
    }
    const ClassificationReport r = classify_a1q_irreducibles(order, cfg);
    Output out(o, "rep classify-a1q");
    out.doc["report"] = classification_to_json(r);
    out.text << "order " << r.order << ", q = " << to_string(r.q) << ", max_dim " << r.max_dim << ", seed " << r.seed << "\n";
    out.text << "one-dimensional family: " << r.one_dim_family << "\n";
    out.text << "dimensions found:";
    for (auto d : r.dims_found) out.text << " " << d;
    out.text << "\n";
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
        const auto& c = r.representatives[i];
        out.text << "[" << i << "] dim " << c.rep.dim() << " " << c.form << " " << c.parameter << " commutant " << c.commutant_dim
                 << " oracle " << (c.oracle ? oracle_name(*c.oracle) : "n/a") << "\n";
        out.text << "x =\n" << matrix_text(c.rep[0]) << "\ny =\n" << matrix_text(c.rep[1]) << "\n";
    }
    for (const auto& l : r.dedup_log) out.text << "dedup: " << l << "\n";
    out.text << r.completeness << "\n";
    out.emit();
    return 0;
}

int cmd_rep_obstruction(const Options& o, std::size_t n) {
    const ObstructionCertificate c = weyl_trace_obstruction(n);
    Output out(o, "rep weyl-obstruction");
    out.doc["n"] = n;
    out.doc["trace_commutator"] = scalar_to_json(c.trace_commutator);
    out.doc["trace_identity"] = scalar_to_json(c.trace_identity);
    out.doc["certificate"] = c.text();
    out.text << c.text() << "\n";
    out.emit();
    return 0;
}

int cmd_rep_truncate(const Options& o, std::size_t n) {
    const TruncatedWeyl t = truncated_weyl_rep(n);
    Output out(o, "rep weyl-truncate");
    out.doc["n"] = n;
    out.doc["P"] = matrix_to_json(t.P);
    out.doc["Q"] = matrix_to_json(t.Q);
    out.doc["defect"] = matrix_to_json(t.defect);
    out.text << "P =\n" << matrix_text(t.P) << "\nQ =\n" << matrix_text(t.Q) << "\nPQ - QP - I =\n" << matrix_text(t.defect) << "\n";
    out.emit();
    return 0;
}

// ---------------------------------------------------------------------------
// Hopf structures
// ---------------------------------------------------------------------------

HopfFile load_hopf(const std::string& file, const std::string& name, const std::string& q) {
    if (!file.empty() && !name.empty()) throw UsageError("give either --file or --preset, not both");
    if (!file.empty()) return parse_hopf(read_file(file));
    const Scalar qv = q.empty() ? Field::Qq().generator() : parse_scalar(q);
    const std::string n = detail::lower(name);
    if (n == "hq") {
        ActionSpec a = hq_action(qv);
        return {a.hopf_ptr(), a};
    }
    if (n == "dual-primitive") return {hopf_dual_numbers_primitive(), std::nullopt};
    if (n == "dual-grouplike") return {hopf_dual_numbers_grouplike(), std::nullopt};
    if (n == "group-z") return {hopf_group_z(), std::nullopt};
    if (n.empty()) throw UsageError("a Hopf structure is required (--file F or --preset hq|dual-primitive|dual-grouplike|group-z)");
    throw UsageError("unknown Hopf preset " + name);
}

json axiom_json(const AxiomCheck& c, const HopfStructure& H) {
    json j = {{"check", c.check}, {"ok", c.ok}, {"degree", c.degree}};
    if (c.relation) j["relation"] = *c.relation;
    if (c.word) j["word"] = word_to_string(*H.presentation().alphabet, *c.word);
    if (!c.ok) j["witness"] = c.witness;
    return j;
}

int cmd_hopf_check(const Options& o, const std::string& file, const std::string& name, const std::string& q, bool module) {
    const HopfFile hf = load_hopf(file, name, q);
    const HopfStructure& H = *hf.hopf;
    std::vector<AxiomCheck> checks = check_hopf(H, o.maxdeg).checks;
    const bool bialgebra_ok = std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
    if (module) {
        if (!hf.action) throw UsageError("--module needs an action in the Hopf file");
        if (bialgebra_ok) checks.push_back(check_module_algebra(*hf.action, o.maxdeg));
    }
    Output out(o, "hopf check");
    out.doc["structure"] = H.presentation().name;
    out.doc["maxdeg"] = o.maxdeg;
    json arr = json::array();
    for (const auto& c : checks) {
        arr.push_back(axiom_json(c, H));
        out.text << c.check << ": " << (c.ok ? "OK" : "VIOLATION");
        if (c.degree) out.text << " (degree <= " << c.degree << ")";
        out.text << "\n";
        if (!c.ok) {
            out.text << "  " << c.witness << "\n";
            out.code = 1;
        }
    }
    if (!H.antipode()) out.text << "antipode: not given\n";
    out.doc["checks"] = arr;
    out.doc["ok"] = out.code == 0;
    out.emit();
    return out.code;
}

int cmd_hopf_act(const Options& o, const std::string& file, const std::string& name, const std::string& q, const std::string& h,
                 const std::string& a) {
    const HopfFile hf = load_hopf(file, name, q);
    if (!hf.action) throw UsageError("the Hopf structure has no module algebra");
    const ActionSpec& spec = *hf.action;
    const NcPoly hp = hf.hopf->presentation().parse(h);
    const NcPoly ap = spec.target().parse(a);
    const NcPoly r = act(spec, hp, ap);
    Output out(o, "hopf act");
    out.doc["h"] = h;
    out.doc["a"] = a;
    out.doc["result"] = poly_json(r);
    out.text << to_string(r) << "\n";
    out.emit();
    return 0;
}

int cmd_hopf_hecke(const Options& o, const std::string& matrix, const std::string& q, bool algebra) {
    const Scalar qv = parse_scalar(q);
    ScalarMatrix Hm = read_matrix_file(matrix);
    const Field f = field_of(Hm) == Field::Q() ? Field::of(qv) : field_of(Hm);
    if (field_of(Hm) != f) Hm = lift_matrix(Hm, f);
    const HeckeCheck c = check_hecke(Hm, qv);
    Output out(o, "hopf hecke");
    out.doc["quadratic"] = c.quadratic;
    out.doc["braid"] = c.braid;
    out.doc["ok"] = c.ok();
    out.text << "quadratic: " << (c.quadratic ? "OK" : "VIOLATION") << "\nbraid: " << (c.braid ? "OK" : "VIOLATION") << "\n";
    if (!c.ok()) out.code = 1;
    if (algebra && c.ok()) {
        const Presentation S = hecke_symmetric_algebra(Hm, qv, tensor_square_root(Hm));
        out.doc["symmetric_algebra"] = presentation_to_text(S);
        out.text << presentation_to_text(S);
    }
    out.emit();
    return out.code;
}

int cmd_hopf_braid(const Options& o, const std::string& matrix) {
    const ScalarMatrix c = read_matrix_file(matrix);
    const bool ok = check_braid(c);
    Output out(o, "hopf braid");
    out.doc["braid"] = ok;
    out.text << "braid: " << (ok ? "OK" : "VIOLATION") << "\n";
    out.code = ok ? 0 : 1;
    out.emit();
    return out.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncalg: exact computations in finitely presented noncommutative algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "JSON output");
    app.add_option("--seed", o.seed, "seed for randomized search order (default 0)");

    std::function<int()> run;

    // rewriting
    std::string expr, matrix_file;
    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    add_presentation_options(nf, o);
    nf->add_option("--expr", expr, "expression")->required();
    nf->callback([&] { run = [&] { return cmd_nf(o, expr); }; });

    auto* basis = app.add_subcommand("basis", "monomial basis up to a degree");
    add_presentation_options(basis, o);
    basis->add_option("--maxdeg", o.maxdeg, "degree bound")->check(CLI::NonNegativeNumber);
    basis->callback([&] { run = [&] { return cmd_basis(o); }; });

    auto* conf = app.add_subcommand("confluence", "local confluence check");
    add_presentation_options(conf, o);
    conf->add_option("--maxdeg", o.maxdeg, "degree bound")->check(CLI::PositiveNumber);
    conf->callback([&] { run = [&] { return cmd_confluence(o); }; });

    auto* imap = app.add_subcommand("ideal-map", "does a linear substitution preserve the quadratic relations");
    add_presentation_options(imap, o);
    imap->add_option("--matrix", matrix_file, "JSON matrix; row a is the image of generator a")->required();
    imap->callback([&] { run = [&] { return cmd_ideal_map(o, matrix_file); }; });

    auto* pres = app.add_subcommand("pres", "print a presentation in file format");
    add_presentation_options(pres, o);
    pres->callback([&] { run = [&] { return cmd_pres(o); }; });

    // quaternions
    QuatOptions qo;
    std::string axis, vec, versor, split_a, split_b;
    double angle = 0;
    auto* quat = app.add_subcommand("quat", "quaternion algebras and rotations");
    quat->require_subcommand(1);
    auto add_params = [&](CLI::App* c) {
        c->add_option("--a", qo.a, "parameter a (default -1)");
        c->add_option("--b", qo.b, "parameter b (default -1)");
    };
    auto* qmul_c = quat->add_subcommand("mul", "product of two quaternions");
    add_params(qmul_c);
    qmul_c->add_option("--x", qo.x, "a0,a1,a2,a3")->required();
    qmul_c->add_option("--y", qo.y, "b0,b1,b2,b3")->required();
    qmul_c->callback([&] { run = [&] { return cmd_quat_mul(o, qo); }; });
    auto* qnorm = quat->add_subcommand("norm", "reduced norm");
    add_params(qnorm);
    qnorm->add_option("--x", qo.x, "a0,a1,a2,a3")->required();
    qnorm->callback([&] { run = [&] { return cmd_quat_norm(o, qo); }; });
    auto* qsplit = quat->add_subcommand("split-test", "division or split over Q");
    qsplit->add_option("a", split_a, "parameter a")->required();
    qsplit->add_option("b", split_b, "parameter b")->required();
    qsplit->callback([&] { run = [&] { return cmd_quat_split(o, split_a, split_b); }; });
    auto* qrot = quat->add_subcommand("rotate", "rotate a vector about an axis");
    qrot->add_option("--axis", axis, "nx,ny,nz (unit)")->required();
    qrot->add_option("--angle", angle, "angle in radians")->required();
    qrot->add_option("--vec", vec, "vx,vy,vz")->required();
    qrot->callback([&] { run = [&] { return cmd_quat_rotate(o, axis, angle, vec); }; });
    auto* qmat = quat->add_subcommand("matrix", "rotation matrix of a versor");
    qmat->add_option("--versor", versor, "a0,a1,a2,a3 (unit)")->required();
    qmat->callback([&] { run = [&] { return cmd_quat_matrix(o, versor); }; });

    // representations
    std::string rep_file, rep_file2;
    int order = 0, max_dim = 0;
    std::size_t n = 0;
    auto* rep = app.add_subcommand("rep", "matrix representations");
    rep->require_subcommand(1);
    auto* rverify = rep->add_subcommand("verify", "check the relations on matrices");
    add_presentation_options(rverify, o);
    rverify->add_option("--rep", rep_file, "JSON representation file")->required();
    rverify->callback([&] { run = [&] { return cmd_rep_verify(o, rep_file); }; });
    auto* rirr = rep->add_subcommand("irreducible", "absolute irreducibility");
    add_presentation_options(rirr, o);
    rirr->add_option("--rep", rep_file, "JSON representation file")->required();
    rirr->callback([&] { run = [&] { return cmd_rep_irreducible(o, rep_file); }; });
    auto* requiv = rep->add_subcommand("equivalent", "equivalence of two representations");
    add_presentation_options(requiv, o);
    requiv->add_option("--rep", rep_file, "first JSON representation")->required();
    requiv->add_option("--rep2", rep_file2, "second JSON representation")->required();
    requiv->callback([&] { run = [&] { return cmd_rep_equivalent(o, rep_file, rep_file2); }; });
    auto* rclass = rep->add_subcommand("classify-a1q", "search for irreducibles of the quantum Weyl algebra at a root of unity");
    rclass->add_option("--order", order, "order l of q = zeta_l")->required()->check(CLI::Range(2, 12));
    rclass->add_option("--grid", o.grid, "comma-separated grid values in z");
    rclass->add_option("--max-dim", max_dim, "largest dimension searched (default l + 1)");
    rclass->callback([&] { run = [&] { return cmd_rep_classify(o, order, max_dim); }; });
    auto* robs = rep->add_subcommand("weyl-obstruction", "trace certificate against n x n Weyl representations");
    robs->add_option("--n", n, "matrix size")->required()->check(CLI::PositiveNumber);
    robs->callback([&] { run = [&] { return cmd_rep_obstruction(o, n); }; });
    auto* rtrunc = rep->add_subcommand("weyl-truncate", "N x N truncation of the polynomial representation");
    rtrunc->add_option("--n", n, "truncation size")->required()->check(CLI::PositiveNumber);
    rtrunc->callback([&] { run = [&] { return cmd_rep_truncate(o, n); }; });

    // Hopf
    std::string hopf_file, hopf_preset, hopf_q, h_expr, a_expr, hecke_q;
    bool module = false, algebra = false;
    auto* hopf = app.add_subcommand("hopf", "bialgebra and Hopf structures");
    hopf->require_subcommand(1);
    auto add_source = [&](CLI::App* c) {
        c->add_option("--file", hopf_file, "Hopf structure file");
        c->add_option("--preset", hopf_preset, "hq, dual-primitive, dual-grouplike, group-z");
        c->add_option("--q", hopf_q, "q for the hq preset (default: generic q)");
    };
    auto* hcheck = hopf->add_subcommand("check", "bialgebra, antipode and module-algebra checks");
    add_source(hcheck);
    hcheck->add_option("--maxdeg", o.maxdeg, "degree bound")->check(CLI::NonNegativeNumber);
    hcheck->add_flag("--module", module, "also check the module algebra");
    hcheck->callback([&] { run = [&] { return cmd_hopf_check(o, hopf_file, hopf_preset, hopf_q, module); }; });
    auto* hact = hopf->add_subcommand("act", "apply an element of H to an element of the module algebra");
    hact->set_help_flag("--help", "Print this help message and exit");
    add_source(hact);
    hact->add_option("--h", h_expr, "element of H")->required();
    hact->add_option("--a", a_expr, "element of the module algebra")->required();
    hact->callback([&] { run = [&] { return cmd_hopf_act(o, hopf_file, hopf_preset, hopf_q, h_expr, a_expr); }; });
    auto* hhecke = hopf->add_subcommand("hecke", "Hecke condition and braid relation");
    hhecke->add_option("--matrix", matrix_file, "JSON operator on V (x) V")->required();
    hhecke->add_option("--q", hecke_q, "parameter q")->required();
    hhecke->add_flag("--algebra", algebra, "print the quadratic algebra T(V)/(Image(H - q))");
    hhecke->callback([&] { run = [&] { return cmd_hopf_hecke(o, matrix_file, hecke_q, algebra); }; });
    auto* hbraid = hopf->add_subcommand("braid", "braid relation");
    hbraid->add_option("--matrix", matrix_file, "JSON operator on V (x) V")->required();
    hbraid->callback([&] { run = [&] { return cmd_hopf_braid(o, matrix_file); }; });

    o.maxdeg = -1;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (o.maxdeg < 0) o.maxdeg = hcheck->parsed() ? default_axiom_degree : 4;
    try {
        return run();
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
