// fuchsforge: exact local analysis of Fuchsian differential operators at t=0.
//
// Subcommands: normalize, mul, divrem, gcd, lcm, conjugate, invert-conjugacy,
// fuchsian-check, resonances, nf euler|poly|minimal|reducible, factor, solve,
// classify, verify.
//
// Exit codes: 0 success, 2 parse error, 3 precondition/precision error,
// 4 obstruction reported (logarithmic solution required), 5 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fuchsforge/analysis.hpp"
#include "fuchsforge/dsl.hpp"
#include "fuchsforge/euclidean.hpp"
#include "fuchsforge/normal_forms.hpp"
#include "fuchsforge/roots.hpp"
#include "fuchsforge/solutions.hpp"

using namespace fuchsforge;

namespace {

struct Options {
    std::optional<int> trunc;
    std::string field_name = "Q";
    std::string format = "text";
    std::string roots;

    Field field() const { return field_from_name(field_name); }
    bool json() const { return format == "json"; }
};

int default_trunc_env() {
    if (const char* env = std::getenv("FUCHSFORGE_TRUNC")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw PreconditionError("FUCHSFORGE_TRUNC is not an integer");
        }
    }
    return -1;
}

// Default truncation rule: T = max(16, 2N + 2) with N the resonance bound of
// the Eulerization, so every resonant order is tracked with headroom.
int resolve_trunc(const Options& opt, const AstPtr& ast) {
    if (opt.trunc) return *opt.trunc;
    int env = default_trunc_env();
    if (env >= 0) return env;
    int N = 0;
    try {
        OperatorSeries probe = evaluate(ast, 16, opt.field());
        if (is_fuchsian(probe) && probe.term(0).degree() >= 1)
            N = resonance_orders(probe.term(0)).bound;
    } catch (const Error&) {
        // fall back to the flat default; the real command will re-raise
    }
    return std::max(16, 2 * N + 2);
}

std::vector<FieldScalar> parse_roots(const Options& opt) {
    std::vector<FieldScalar> out;
    std::stringstream ss(opt.roots);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(FieldScalar::parse(opt.field(), item.substr(a, b - a + 1)));
    }
    return out;
}

std::optional<std::vector<FieldScalar>> maybe_roots(const Options& opt) {
    if (opt.roots.empty()) return std::nullopt;
    return parse_roots(opt);
}

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string laurent_text(const LaurentSeries& s) {
    return print_text(OperatorSeries::from_laurent(s));
}

Json report_json(const ConjugacyReport& rep) {
    Json j;
    j["pass"] = rep.pass();
    j["identity_ok"] = rep.identity_ok;
    j["gcd_ok"] = rep.gcd_ok;
    j["shape_ok"] = rep.shape_ok;
    j["checked_through"] = rep.checked_through;
    if (rep.first_defect_order)
        j["first_defect_order"] = *rep.first_defect_order;
    else
        j["first_defect_order"] = nullptr;
    j["flavor"] = rep.flavor == EquivalenceFlavor::Weyl ? "weyl" : "fuchsian";
    return j;
}

std::string report_text(const ConjugacyReport& rep) {
    std::ostringstream os;
    os << (rep.pass() ? "PASS" : "FAIL") << " (identity " << (rep.identity_ok ? "ok" : "failed");
    if (rep.first_defect_order) os << " at t-order " << *rep.first_defect_order;
    os << ", gcd " << (rep.gcd_ok ? "ok" : "failed") << ", shape "
       << (rep.shape_ok ? "ok" : "failed") << ", checked through t^" << rep.checked_through
       << ")";
    return os.str();
}

Json resonance_json(const ResonanceStructure& rs) {
    Json j;
    Json orders = Json::array();
    for (int o : rs.res_orders) orders.push_back(o);
    j["orders"] = std::move(orders);
    j["N"] = rs.bound;
    Json w = Json::object(), nu = Json::object();
    for (const auto& [k, p] : rs.w) w[std::to_string(k)] = poly_text(p);
    for (const auto& [k, d] : rs.nu) nu[std::to_string(k)] = d;
    j["w"] = std::move(w);
    j["nu"] = std::move(nu);
    if (rs.roots) {
        Json roots = Json::array();
        for (const auto& r : *rs.roots) roots.push_back(r.to_string());
        j["roots"] = std::move(roots);
        Json lj = Json::object(), ij = Json::object(), jj = Json::object();
        for (const auto& [k, lam] : rs.lambda_j) {
            Json arr = Json::array();
            for (const auto& l : lam) arr.push_back(l.to_string());
            lj[std::to_string(k)] = std::move(arr);
        }
        for (const auto& [k, idx] : rs.index_sets) {
            Json arr = Json::array();
            for (int i : idx) arr.push_back(i);
            ij[std::to_string(k)] = std::move(arr);
        }
        for (const auto& [i, js] : rs.j_sets) {
            Json arr = Json::array();
            for (int v : js) arr.push_back(v);
            jj[std::to_string(i)] = std::move(arr);
        }
        j["Lambda_j"] = std::move(lj);
        j["I_j"] = std::move(ij);
        j["J"] = std::move(jj);
    }
    return j;
}

Json nf_bundle(const NormalFormResult& res) {
    Json j;
    j["kind"] = kind_name(res.kind);
    j["field"] = field_name(res.source.field());
    j["achieved_trunc"] = res.achieved_trunc;
    j["source"] = operator_to_json(res.source);
    j["normal_form"] = operator_to_json(res.normal_form);
    if (res.kind == NormalFormKind::MinimalReducible) {
        Json factors = Json::array();
        for (const auto& [lam, r] : res.factors) {
            Json fct;
            fct["lambda"] = lam.to_string();
            fct["r"] = laurent_to_json(r);
            factors.push_back(std::move(fct));
        }
        j["factors"] = std::move(factors);
    }
    j["H"] = operator_to_json(res.conj.H);
    j["K"] = operator_to_json(res.conj.K);
    j["flavor"] = "fuchsian";
    j["resonances"] = resonance_json(res.resonance);
    ConjugacyReport rep = verify_conjugacy(res.source, res.normal_form, res.conj.H, res.conj.K,
                                           EquivalenceFlavor::Fuchsian);
    j["verify"] = report_json(rep);
    return j;
}

std::string nf_text(const NormalFormResult& res) {
    std::ostringstream os;
    os << "kind:        " << kind_name(res.kind) << "\n";
    os << "normal form: " << print_text(res.normal_form) << "\n";
    if (res.kind == NormalFormKind::MinimalReducible) {
        os << "factors:\n";
        for (const auto& [lam, r] : res.factors)
            os << "  (E - (" << lam.to_string() << ")"
               << (r.is_zero() ? "" : " + " + laurent_text(r)) << ")\n";
    }
    os << "H:           " << print_text(res.conj.H) << "\n";
    os << "K:           " << print_text(res.conj.K) << "\n";
    os << "trunc:       " << res.achieved_trunc << "\n";
    ConjugacyReport rep = verify_conjugacy(res.source, res.normal_form, res.conj.H, res.conj.K,
                                           EquivalenceFlavor::Fuchsian);
    os << "verify:      " << report_text(rep) << "\n";
    return os.str();
}

int run_normalize(const Options& opt, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    emit(opt, operator_to_json(L), print_text(L) + "\n");
    return 0;
}

int run_mul(const Options& opt, const std::string& ea, const std::string& eb) {
    AstPtr aa = parse(ea), ab = parse(eb);
    int T = std::max(resolve_trunc(opt, aa), resolve_trunc(opt, ab));
    OperatorSeries r = evaluate(aa, T, opt.field()) * evaluate(ab, T, opt.field());
    emit(opt, operator_to_json(r), print_text(r) + "\n");
    return 0;
}

int run_divrem(const Options& opt, const std::string& el, const std::string& em) {
    AstPtr al = parse(el), am = parse(em);
    int T = std::max(resolve_trunc(opt, al), resolve_trunc(opt, am));
    DivisionResult d = div_rem(evaluate(al, T, opt.field()), evaluate(am, T, opt.field()));
    Json j;
    j["quotient"] = operator_to_json(d.quotient);
    j["remainder"] = operator_to_json(d.remainder);
    j["divisible"] = d.divisible();
    emit(opt, j,
         "quotient:  " + print_text(d.quotient) + "\nremainder: " + print_text(d.remainder) +
             "\ndivisible: " + (d.divisible() ? "yes" : "no") + "\n");
    return 0;
}

int run_gcd(const Options& opt, const std::string& el, const std::string& em) {
    AstPtr al = parse(el), am = parse(em);
    int T = std::max(resolve_trunc(opt, al), resolve_trunc(opt, am));
    OperatorSeries L = evaluate(al, T, opt.field()), M = evaluate(am, T, opt.field());
    BezoutCertificate cert = gcd_bezout(L, M);
    OperatorSeries lhs = cert.U * L + cert.V * M;
    bool identity = (lhs - cert.gcd).is_zero();
    Json j;
    j["gcd"] = operator_to_json(cert.gcd);
    j["U"] = operator_to_json(cert.U);
    j["V"] = operator_to_json(cert.V);
    j["bezout_ok"] = identity;
    emit(opt, j,
         "gcd: " + print_text(cert.gcd) + "\nU:   " + print_text(cert.U) +
             "\nV:   " + print_text(cert.V) +
             "\nU*L + V*M = gcd: " + (identity ? "ok" : "FAILED") + "\n");
    return 0;
}

int run_lcm(const Options& opt, const std::string& el, const std::string& em) {
    AstPtr al = parse(el), am = parse(em);
    int T = std::max(resolve_trunc(opt, al), resolve_trunc(opt, am));
    OperatorSeries r = lcm(evaluate(al, T, opt.field()), evaluate(am, T, opt.field()));
    emit(opt, operator_to_json(r), print_text(r) + "\n");
    return 0;
}

int run_conjugate(const Options& opt, const std::string& el, const std::string& eh) {
    AstPtr al = parse(el), ah = parse(eh);
    int T = std::max(resolve_trunc(opt, al), resolve_trunc(opt, ah));
    OperatorSeries L = evaluate(al, T, opt.field()), H = evaluate(ah, T, opt.field());
    ConjugacyPair pair = conjugate_by(L, H);
    ConjugacyReport rep = verify_conjugacy(L, pair.target, pair.H, pair.K, EquivalenceFlavor::Weyl);
    Json j;
    j["M"] = operator_to_json(pair.target);
    j["K"] = operator_to_json(pair.K);
    j["H"] = operator_to_json(pair.H);
    j["verify"] = report_json(rep);
    emit(opt, j,
         "M: " + print_text(pair.target) + "\nK: " + print_text(pair.K) +
             "\nverify: " + report_text(rep) + "\n");
    return 0;
}

int run_invert_conjugacy(const Options& opt, const std::string& el, const std::string& em,
                         const std::string& eh) {
    AstPtr al = parse(el), am = parse(em), ah = parse(eh);
    int T = std::max({resolve_trunc(opt, al), resolve_trunc(opt, am), resolve_trunc(opt, ah)});
    OperatorSeries L = evaluate(al, T, opt.field());
    OperatorSeries M = evaluate(am, T, opt.field());
    OperatorSeries H = evaluate(ah, T, opt.field());
    auto [V, W] = invert_conjugacy(L, M, H);
    bool ok = (L * V - W * M).is_zero();
    Json j;
    j["V"] = operator_to_json(V);
    j["W"] = operator_to_json(W);
    j["identity_ok"] = ok;
    emit(opt, j,
         "V: " + print_text(V) + "\nW: " + print_text(W) +
             "\nL*V = W*M: " + (ok ? "ok" : "FAILED") + "\n");
    return 0;
}

int run_fuchsian_check(const Options& opt, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    PreFuchsianCheck pre = is_pre_fuchsian(L);
    Json j;
    j["fuchsian"] = is_fuchsian(L);
    j["pre_fuchsian"] = pre.ok;
    if (pre.ok) j["shift"] = pre.shift;
    j["order"] = L.order();
    if (L.kmin() >= 0) j["eulerization"] = poly_text(eulerization(L));
    std::ostringstream os;
    os << "fuchsian:     " << (is_fuchsian(L) ? "yes" : "no") << "\n";
    os << "pre-fuchsian: " << (pre.ok ? "yes (shift " + std::to_string(pre.shift) + ")" : "no")
       << "\n";
    os << "order:        " << L.order() << "\n";
    if (L.kmin() >= 0) os << "euler part:   " << poly_text(eulerization(L)) << "\n";
    emit(opt, j, os.str());
    return 0;
}

int run_resonances(const Options& opt, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    EulerPolynomial p0 = eulerization(L);
    auto roots = maybe_roots(opt);
    ResonanceStructure rs = roots ? resonance_structure(p0, natural_order(*roots))
                                  : resonance_orders(p0);
    Json j = resonance_json(rs);
    std::ostringstream os;
    os << "orders: {";
    bool first = true;
    for (int o : rs.res_orders) {
        os << (first ? "" : ", ") << o;
        first = false;
    }
    os << "}\nN: " << rs.bound << "\n";
    for (const auto& [k, w] : rs.w)
        os << "w_" << k << " = " << poly_text(w) << " (nu = " << rs.nu.at(k) << ")\n";
    emit(opt, j, os.str());
    return 0;
}

int run_nf(const Options& opt, const std::string& kind, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    NormalFormResult res = [&] {
        if (kind == "euler") return eulerize_nonresonant(L);
        if (kind == "poly") return truncate_equiv(L);
        if (kind == "minimal") return minimal_affine_nf(L);
        if (kind == "reducible") return minimal_reducible_nf(L, maybe_roots(opt));
        throw PreconditionError("unknown normal form kind '" + kind +
                                "' (euler|poly|minimal|reducible)");
    }();
    emit(opt, nf_bundle(res), nf_text(res));
    return 0;
}

int run_factor(const Options& opt, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    FactorizationResult res = formal_factorize(L, maybe_roots(opt));
    OperatorSeries prod = OperatorSeries::from_laurent(res.unit);
    for (const auto& [lam, r] : res.factors) {
        OperatorSeries factor = OperatorSeries::from_poly(
            EulerPolynomial(opt.field(), {-lam, FieldScalar::one(opt.field())}), res.achieved_trunc);
        factor = factor + OperatorSeries::from_laurent(r);
        prod = prod * factor;
    }
    bool ok = (prod - L.truncated(prod.trunc())).is_zero();
    Json j;
    j["unit"] = laurent_to_json(res.unit);
    Json factors = Json::array();
    for (const auto& [lam, r] : res.factors) {
        Json fct;
        fct["lambda"] = lam.to_string();
        fct["r"] = laurent_to_json(r);
        factors.push_back(std::move(fct));
    }
    j["factors"] = std::move(factors);
    j["achieved_trunc"] = res.achieved_trunc;
    j["remultiplies"] = ok;
    std::ostringstream os;
    os << "unit: " << laurent_text(res.unit) << "\n";
    for (const auto& [lam, r] : res.factors)
        os << "factor: E - (" << lam.to_string() << ")"
           << (r.is_zero() ? "" : " + " + laurent_text(r)) << "\n";
    os << "re-multiplies: " << (ok ? "ok" : "FAILED") << "\n";
    emit(opt, j, os.str());
    return 0;
}

int run_solve(const Options& opt, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    if (!is_fuchsian(L)) throw PreconditionError("solve requires a Fuchsian operator");
    EulerPolynomial p0 = eulerization(L);
    std::vector<FieldScalar> roots;
    if (auto supplied = maybe_roots(opt)) {
        roots = *supplied;
    } else {
        for (const auto& [lam, mult] : field_roots(p0)) {
            (void)mult;
            roots.push_back(lam);
        }
    }
    std::sort(roots.begin(), roots.end(), FieldScalar::lex_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    bool obstructed = false;
    Json entries = Json::array();
    std::ostringstream os;
    for (const auto& lam : roots) {
        Json e;
        e["lambda"] = lam.to_string();
        try {
            FrobeniusSolution sol = frobenius_solution(L, lam, L.trunc());
            e["ok"] = true;
            e["series"] = laurent_to_json(sol.series);
            os << "lambda = " << lam.to_string() << ": t^(" << lam.to_string() << ") * ("
               << laurent_text(sol.series) << " + O(t^" << sol.trunc + 1 << "))\n";
        } catch (const LogObstruction& ob) {
            e["ok"] = false;
            e["obstruction_order"] = ob.order;
            obstructed = true;
            os << "lambda = " << lam.to_string() << ": log obstruction at order " << ob.order
               << "\n";
        }
        entries.push_back(std::move(e));
    }
    Json j;
    j["solutions"] = std::move(entries);
    emit(opt, j, os.str());
    return obstructed ? 4 : 0;
}

int run_classify(const Options& opt, const std::string& expr) {
    AstPtr ast = parse(expr);
    OperatorSeries L = evaluate(ast, resolve_trunc(opt, ast), opt.field());
    SingularityClass c = classify_apparent(L, L.trunc());
    Json j;
    j["class"] = singularity_name(c);
    emit(opt, j, singularity_name(c) + "\n");
    return 0;
}

int run_verify(const Options& opt, const std::string& path) {
    Json j;
    if (path.empty() || path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) throw PreconditionError("cannot open bundle file '" + path + "'");
        in >> j;
    }
    OperatorSeries source = operator_from_json(j.at("source"));
    const Json& tgt = j.contains("normal_form") ? j.at("normal_form") : j.at("target");
    OperatorSeries target = operator_from_json(tgt);
    OperatorSeries H = operator_from_json(j.at("H"));
    OperatorSeries K = operator_from_json(j.at("K"));
    EquivalenceFlavor flavor = EquivalenceFlavor::Fuchsian;
    if (j.contains("flavor") && j.at("flavor").get<std::string>() == "weyl")
        flavor = EquivalenceFlavor::Weyl;
    ConjugacyReport rep = verify_conjugacy(source, target, H, K, flavor);
    emit(opt, report_json(rep), report_text(rep) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local Weyl-algebra engine for Fuchsian operators at t = 0"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--trunc,-N", opt.trunc, "truncation order (default max(16, 2N+2))");
    app.add_option("--field", opt.field_name, "coefficient field: Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
    app.add_option("--format", opt.format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--roots", opt.roots, "comma-separated roots of the Euler part");

    std::string ea, eb, ec, nf_kind, bundle_path;

    CLI::App* c_normalize = app.add_subcommand("normalize", "parse and reprint an operator");
    c_normalize->add_option("expr", ea)->required();
    CLI::App* c_mul = app.add_subcommand("mul", "noncommutative product");
    c_mul->add_option("A", ea)->required();
    c_mul->add_option("B", eb)->required();
    CLI::App* c_divrem = app.add_subcommand("divrem", "right division with remainder");
    c_divrem->add_option("L", ea)->required();
    c_divrem->add_option("M", eb)->required();
    CLI::App* c_gcd = app.add_subcommand("gcd", "right gcd with Bezout cofactors");
    c_gcd->add_option("L", ea)->required();
    c_gcd->add_option("M", eb)->required();
    CLI::App* c_lcm = app.add_subcommand("lcm", "least common multiple");
    c_lcm->add_option("L", ea)->required();
    c_lcm->add_option("M", eb)->required();
    CLI::App* c_conj = app.add_subcommand("conjugate", "M = lcm(L,H) H^-1 with M H = K L");
    c_conj->add_option("L", ea)->required();
    c_conj->add_option("H", eb)->required();
    CLI::App* c_inv = app.add_subcommand("invert-conjugacy", "V, W with L V = W M");
    c_inv->add_option("L", ea)->required();
    c_inv->add_option("M", eb)->required();
    c_inv->add_option("H", ec)->required();
    CLI::App* c_fuchs = app.add_subcommand("fuchsian-check", "Fuchsian / pre-Fuchsian test");
    c_fuchs->add_option("expr", ea)->required();
    CLI::App* c_res = app.add_subcommand("resonances", "resonance orders of the Euler part");
    c_res->add_option("expr", ea)->required();
    CLI::App* c_nf = app.add_subcommand("nf", "normal forms: euler|poly|minimal|reducible");
    c_nf->add_option("kind", nf_kind)->required();
    c_nf->add_option("expr", ea)->required();
    CLI::App* c_factor = app.add_subcommand("factor", "formal first-order factorization");
    c_factor->add_option("expr", ea)->required();
    CLI::App* c_solve = app.add_subcommand("solve", "Frobenius solutions at the indicial roots");
    c_solve->add_option("expr", ea)->required();
    CLI::App* c_classify = app.add_subcommand("classify", "apparent-singularity class");
    c_classify->add_option("expr", ea)->required();
    CLI::App* c_verify = app.add_subcommand("verify", "check a conjugacy bundle (JSON)");
    c_verify->add_option("bundle", bundle_path, "bundle file (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_normalize->parsed()) return run_normalize(opt, ea);
        if (c_mul->parsed()) return run_mul(opt, ea, eb);
        if (c_divrem->parsed()) return run_divrem(opt, ea, eb);
        if (c_gcd->parsed()) return run_gcd(opt, ea, eb);
        if (c_lcm->parsed()) return run_lcm(opt, ea, eb);
        if (c_conj->parsed()) return run_conjugate(opt, ea, eb);
        if (c_inv->parsed()) return run_invert_conjugacy(opt, ea, eb, ec);
        if (c_fuchs->parsed()) return run_fuchsian_check(opt, ea);
        if (c_res->parsed()) return run_resonances(opt, ea);
        if (c_nf->parsed()) return run_nf(opt, nf_kind, ea);
        if (c_factor->parsed()) return run_factor(opt, ea);
        if (c_solve->parsed()) return run_solve(opt, ea);
        if (c_classify->parsed()) return run_classify(opt, ea);
        if (c_verify->parsed()) return run_verify(opt, bundle_path);
        return 2;
    } catch (const ParseError& e) {
        Json err{{"error", {{"kind", "parse"}, {"message", e.what()}}}};
        if (opt.json()) std::cout << err.dump(2) << "\n";
        else std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const LogObstruction& e) {
        Json err{{"error", {{"kind", "log_obstruction"}, {"message", e.what()}, {"order", e.order}}}};
        if (opt.json()) std::cout << err.dump(2) << "\n";
        else std::cerr << "obstruction: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        Json err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        if (opt.json()) std::cout << err.dump(2) << "\n";
        else std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        // precondition, precision, field mismatch
        Json err{{"error", {{"kind", "precondition"}, {"message", e.what()}}}};
        if (opt.json()) std::cout << err.dump(2) << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
