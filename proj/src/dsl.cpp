#include "fuchsforge/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace fuchsforge {

struct Ast {
    enum class Kind { Rational, ImagUnit, TPow, Eps, Dsym, Add, Sub, Mul, Neg, Pow };
    Kind kind;
    std::string literal;  // Rational
    int tpow = 0;         // TPow
    unsigned power = 0;   // Pow
    AstPtr lhs, rhs;
};

namespace {

std::shared_ptr<Ast> node(Ast::Kind k) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    return a;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    AstPtr run() {
        AstPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    AstPtr expr() {
        AstPtr acc;
        if (accept('-')) {
            auto n = node(Ast::Kind::Neg);
            n->lhs = term();
            acc = n;
        } else {
            acc = term();
        }
        for (;;) {
            if (accept('+')) {
                auto n = node(Ast::Kind::Add);
                n->lhs = acc;
                n->rhs = term();
                acc = n;
            } else if (accept('-')) {
                auto n = node(Ast::Kind::Sub);
                n->lhs = acc;
                n->rhs = term();
                acc = n;
            } else {
                return acc;
            }
        }
    }

    AstPtr term() {
        AstPtr acc = factor();
        while (accept('*')) {
            auto n = node(Ast::Kind::Mul);
            n->lhs = acc;
            n->rhs = factor();
            acc = n;
        }
        return acc;
    }

    AstPtr factor() {
        if (accept('(')) {
            AstPtr inner = expr();
            expect(')');
            return maybe_pow(inner);
        }
        return maybe_pow(atom());
    }

    AstPtr maybe_pow(AstPtr base) {
        if (!accept('^')) return base;
        auto n = node(Ast::Kind::Pow);
        n->lhs = std::move(base);
        n->power = read_uint();
        return n;
    }

    AstPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == 'E') {
            ++pos_;
            return node(Ast::Kind::Eps);
        }
        if (c == 'D') {
            ++pos_;
            return node(Ast::Kind::Dsym);
        }
        if (c == 'i') {
            ++pos_;
            return node(Ast::Kind::ImagUnit);
        }
        if (c == 't') {
            ++pos_;
            auto n = node(Ast::Kind::TPow);
            n->tpow = 1;
            // only t takes a signed exponent, directly at the atom
            std::size_t save = pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                n->tpow = read_int();
            } else {
                pos_ = save;
            }
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(Ast::Kind::Rational);
            n->literal = read_digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                n->literal += "/" + read_digits();
            }
            return n;
        }
        throw ParseError("expected an atom", pos_);
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return s_.substr(start, pos_ - start);
    }

    // exponent magnitudes are capped: truncation headroom is linear in them
    static constexpr long kExponentCap = 100000;

    unsigned read_uint() {
        std::size_t at = pos_;
        std::string d = read_digits();
        if (d.size() > 6 || std::stol(d) > kExponentCap)
            throw ParseError("exponent too large", at);
        return static_cast<unsigned>(std::stoul(d));
    }

    int read_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t at = pos_;
        std::string d = read_digits();
        if (d.size() > 6 || std::stol(d) > kExponentCap)
            throw ParseError("exponent too large", at);
        int v = static_cast<int>(std::stol(d));
        return neg ? -v : v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

// Truncation headroom needed so negative t-powers do not eat into the
// requested precision; clamped so pathological exponent towers are caught
// by the evaluate() budget instead of overflowing.
long reserve_of(const AstPtr& a) {
    constexpr long clamp = 2000000;
    switch (a->kind) {
        case Ast::Kind::Dsym: return 1;
        case Ast::Kind::TPow: return a->tpow < 0 ? -a->tpow : 0;
        case Ast::Kind::Add:
        case Ast::Kind::Sub:
        case Ast::Kind::Mul:
            return std::min(clamp, reserve_of(a->lhs) + reserve_of(a->rhs));
        case Ast::Kind::Neg: return reserve_of(a->lhs);
        case Ast::Kind::Pow:
            return std::min(clamp, static_cast<long>(a->power) * reserve_of(a->lhs));
        default: return 0;
    }
}

OperatorSeries eval_at(const AstPtr& a, int W, Field f) {
    switch (a->kind) {
        case Ast::Kind::Rational: {
            mpq_class q;
            if (q.set_str(a->literal, 10) != 0)
                throw ParseError("bad rational literal", 0);
            if (q.get_den() == 0)
                throw ParseError("zero denominator", 0);
            q.canonicalize();
            return OperatorSeries::from_poly(EulerPolynomial::constant(FieldScalar(f, q)), W);
        }
        case Ast::Kind::ImagUnit:
            return OperatorSeries::from_poly(EulerPolynomial::constant(FieldScalar::i(f)), W);
        case Ast::Kind::TPow:
            return OperatorSeries::graded_term(a->tpow, EulerPolynomial::one(f), W);
        case Ast::Kind::Eps:
            return OperatorSeries::from_poly(EulerPolynomial::eps(f), W);
        case Ast::Kind::Dsym:
            return OperatorSeries::graded_term(-1, EulerPolynomial::eps(f), W);
        case Ast::Kind::Add: return eval_at(a->lhs, W, f) + eval_at(a->rhs, W, f);
        case Ast::Kind::Sub: return eval_at(a->lhs, W, f) - eval_at(a->rhs, W, f);
        case Ast::Kind::Mul: return eval_at(a->lhs, W, f) * eval_at(a->rhs, W, f);
        case Ast::Kind::Neg: return -eval_at(a->lhs, W, f);
        case Ast::Kind::Pow: {
            OperatorSeries base = eval_at(a->lhs, W, f);
            OperatorSeries acc = OperatorSeries::one(f, W);
            for (unsigned k = 0; k < a->power; ++k) acc = acc * base;
            return acc;
        }
    }
    throw InternalError("unhandled AST node");
}

}  // namespace

AstPtr parse(const std::string& text) { return Parser(text).run(); }

OperatorSeries evaluate(const AstPtr& ast, int trunc, Field f) {
    if (trunc < 0) throw PreconditionError("truncation order must be nonnegative");
    long reserve = reserve_of(ast);
    if (reserve > 1000000)
        throw PreconditionError("expression demands too much truncation headroom");
    int W = trunc + static_cast<int>(reserve);
    OperatorSeries r = eval_at(ast, W, f);
    return r.trunc() > trunc ? r.truncated(trunc) : r;
}

OperatorSeries parse_operator(const std::string& text, int trunc, Field f) {
    return evaluate(parse(text), trunc, f);
}

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

// A coefficient rendered as one multiplicative factor of the DSL.
std::string scalar_factor(const FieldScalar& c, bool* negate) {
    *negate = false;
    if (c.is_real()) {
        if (c.re() < 0) {
            *negate = true;
            return rational_text(-c.re());
        }
        return rational_text(c.re());
    }
    std::string s = "(" + rational_text(c.re());
    if (c.im() >= 0)
        s += "+" + rational_text(c.im()) + "*i";
    else
        s += "-" + rational_text(-c.im()) + "*i";
    return s + ")";
}

std::string mono_text(const FieldScalar& c, int deg, bool* negate) {
    std::string coeff = scalar_factor(c, negate);
    std::string e;
    if (deg == 1) e = "E";
    else if (deg >= 2) e = "E^" + std::to_string(deg);
    if (e.empty()) return coeff;
    if (coeff == "1") return e;
    return coeff + "*" + e;
}

}  // namespace

std::string poly_text(const EulerPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        FieldScalar c = p.coeff(d);
        if (c.is_zero()) continue;
        bool neg = false;
        std::string t = mono_text(c, d, &neg);
        if (first) {
            out = (neg ? "-" : "") + t;
            first = false;
        } else {
            out += (neg ? "-" : "+") + t;
        }
    }
    return out;
}

std::string print_text(const OperatorSeries& L) {
    if (L.is_zero()) return "0";
    std::vector<std::string> pieces;
    for (int k = L.kmin(); k <= L.trunc(); ++k) {
        EulerPolynomial p = L.term(k);
        if (p.is_zero()) continue;
        int nonzero = 0;
        for (int d = 0; d <= p.degree(); ++d)
            if (!p.coeff(d).is_zero()) ++nonzero;
        std::string inner = poly_text(p);
        bool single = nonzero == 1;
        std::string piece;
        if (k == 0) {
            piece = single ? inner : "(" + inner + ")";
        } else {
            std::string tp = k == 1 ? "t" : "t^" + std::to_string(k);
            if (p.is_one())
                piece = tp;
            else if (single && inner[0] != '-')
                piece = tp + "*" + inner;
            else
                piece = tp + "*(" + inner + ")";
        }
        pieces.push_back(std::move(piece));
    }
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) {
            out = pieces[i];
        } else if (pieces[i][0] == '-') {
            out += " + (" + pieces[i] + ")";
        } else {
            out += " + " + pieces[i];
        }
    }
    return out;
}

Json operator_to_json(const OperatorSeries& L) {
    Json j;
    j["field"] = field_name(L.field());
    j["kmin"] = L.kmin();
    j["trunc"] = L.trunc();
    Json terms = Json::array();
    for (int k = L.kmin(); k <= L.trunc(); ++k) {
        EulerPolynomial p = L.term(k);
        if (p.is_zero()) continue;
        Json entry;
        entry["k"] = k;
        Json poly = Json::array();
        for (int d = 0; d <= p.degree(); ++d) poly.push_back(p.coeff(d).to_string());
        entry["poly"] = std::move(poly);
        terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
    return j;
}

OperatorSeries operator_from_json(const Json& j) {
    Field f = field_from_name(j.at("field").get<std::string>());
    int trunc = j.at("trunc").get<int>();
    OperatorSeries acc(f, trunc);
    for (const auto& entry : j.at("terms")) {
        int k = entry.at("k").get<int>();
        std::vector<FieldScalar> coeffs;
        for (const auto& c : entry.at("poly"))
            coeffs.push_back(FieldScalar::parse(f, c.get<std::string>()));
        acc = acc + OperatorSeries::graded_term(k, EulerPolynomial(f, std::move(coeffs)), trunc);
    }
    return acc;
}

Json laurent_to_json(const LaurentSeries& s) {
    Json j;
    j["kmin"] = s.valuation();
    j["trunc"] = s.trunc();
    Json coeffs = Json::array();
    for (int k = s.valuation(); k <= s.trunc(); ++k) coeffs.push_back(s.coeff(k).to_string());
    j["coeffs"] = std::move(coeffs);
    return j;
}

LaurentSeries laurent_from_json(Field f, const Json& j) {
    int kmin = j.at("kmin").get<int>();
    int trunc = j.at("trunc").get<int>();
    std::vector<FieldScalar> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(FieldScalar::parse(f, c.get<std::string>()));
    return LaurentSeries(f, kmin, trunc, std::move(coeffs));
}

}  // namespace fuchsforge
