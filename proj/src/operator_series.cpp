#include "fuchsforge/operator_series.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsforge {

OperatorSeries::OperatorSeries(Field f, int kmin, int trunc, std::vector<EulerPolynomial> terms)
    : fld_(f), kmin_(kmin), trunc_(trunc), terms_(std::move(terms)) {
    for (const auto& p : terms_) require_same_field(p.field(), fld_);
    if (static_cast<int>(terms_.size()) > trunc_ - kmin_ + 1)
        terms_.resize(static_cast<std::size_t>(trunc_ - kmin_ + 1), EulerPolynomial::zero(fld_));
    canonicalize();
}

void OperatorSeries::canonicalize() {
    std::size_t lead = 0;
    while (lead < terms_.size() && terms_[lead].is_zero()) ++lead;
    if (lead == terms_.size()) {
        terms_.clear();
        kmin_ = trunc_ + 1;
        return;
    }
    if (lead > 0) {
        terms_.erase(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(lead));
        kmin_ += static_cast<int>(lead);
    }
    terms_.resize(static_cast<std::size_t>(trunc_ - kmin_ + 1), EulerPolynomial::zero(fld_));
}

OperatorSeries OperatorSeries::one(Field f, int trunc) {
    return graded_term(0, EulerPolynomial::one(f), trunc);
}

OperatorSeries OperatorSeries::graded_term(int k, EulerPolynomial p, int trunc) {
    OperatorSeries r(p.field(), trunc);
    if (k > trunc || p.is_zero()) return r;
    r.kmin_ = k;
    r.terms_.assign(static_cast<std::size_t>(trunc - k + 1), EulerPolynomial::zero(r.fld_));
    r.terms_[0] = std::move(p);
    return r;
}

OperatorSeries OperatorSeries::from_laurent(const LaurentSeries& s) {
    OperatorSeries r(s.field(), s.trunc());
    if (s.is_zero()) return r;
    r.kmin_ = s.valuation();
    r.terms_.reserve(static_cast<std::size_t>(s.trunc() - s.valuation() + 1));
    for (int k = s.valuation(); k <= s.trunc(); ++k)
        r.terms_.push_back(EulerPolynomial::constant(s.coeff(k)));
    return r;
}

EulerPolynomial OperatorSeries::term(int k) const {
    if (k > trunc_)
        throw InternalError("operator term requested beyond truncation");
    if (k < kmin_) return EulerPolynomial::zero(fld_);
    return terms_[static_cast<std::size_t>(k - kmin_)];
}

int OperatorSeries::order() const {
    int n = -1;
    for (const auto& p : terms_) n = std::max(n, p.degree());
    return n;
}

int order(const OperatorSeries& L) { return L.order(); }

OperatorSeries OperatorSeries::operator-() const {
    OperatorSeries r = *this;
    for (auto& p : r.terms_) p = -p;
    return r;
}

OperatorSeries operator+(const OperatorSeries& a, const OperatorSeries& b) {
    require_same_field(a.fld_, b.fld_);
    int trunc = std::min(a.trunc_, b.trunc_);
    int kmin = std::min(a.kmin_, b.kmin_);
    if (kmin > trunc) return OperatorSeries(a.fld_, trunc);
    std::vector<EulerPolynomial> t;
    t.reserve(static_cast<std::size_t>(trunc - kmin + 1));
    for (int k = kmin; k <= trunc; ++k) {
        EulerPolynomial pa = k >= a.kmin_ && k <= a.trunc_ ? a.term(k) : EulerPolynomial::zero(a.fld_);
        EulerPolynomial pb = k >= b.kmin_ && k <= b.trunc_ ? b.term(k) : EulerPolynomial::zero(a.fld_);
        t.push_back(pa + pb);
    }
    return OperatorSeries(a.fld_, kmin, trunc, std::move(t));
}

OperatorSeries operator-(const OperatorSeries& a, const OperatorSeries& b) { return a + (-b); }

OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b) {
    require_same_field(a.fld_, b.fld_);
    int trunc = std::min(a.trunc_ + b.kmin_, b.trunc_ + a.kmin_);
    if (a.is_zero() || b.is_zero()) return OperatorSeries(a.fld_, trunc);
    int kmin = a.kmin_ + b.kmin_;
    if (kmin > trunc) return OperatorSeries(a.fld_, trunc);
    std::vector<EulerPolynomial> t(static_cast<std::size_t>(trunc - kmin + 1),
                                   EulerPolynomial::zero(a.fld_));
    for (int i = a.kmin_; i <= a.trunc_; ++i) {
        const EulerPolynomial pa = a.term(i);
        if (pa.is_zero()) continue;
        int jmax = std::min(b.trunc_, trunc - i);
        for (int j = b.kmin_; j <= jmax; ++j) {
            const EulerPolynomial pb = b.term(j);
            if (pb.is_zero()) continue;
            t[static_cast<std::size_t>(i + j - kmin)] += pa.shift(j) * pb;
        }
    }
    return OperatorSeries(a.fld_, kmin, trunc, std::move(t));
}

OperatorSeries OperatorSeries::scaled(const FieldScalar& s) const {
    require_same_field(fld_, s.field());
    if (s.is_zero()) return OperatorSeries(fld_, trunc_);
    OperatorSeries r = *this;
    for (auto& p : r.terms_) p = p.scaled(s);
    return r;
}

OperatorSeries OperatorSeries::shifted_t(int k) const {
    OperatorSeries r = *this;
    r.kmin_ += k;
    r.trunc_ += k;
    return r;
}

OperatorSeries OperatorSeries::truncated(int new_trunc) const {
    if (new_trunc >= trunc_) {
        if (new_trunc > trunc_)
            throw InternalError("cannot extend an operator truncation");
        return *this;
    }
    if (new_trunc < kmin_) return OperatorSeries(fld_, new_trunc);
    std::vector<EulerPolynomial> t(terms_.begin(), terms_.begin() + (new_trunc - kmin_ + 1));
    return OperatorSeries(fld_, kmin_, new_trunc, std::move(t));
}

LaurentSeries OperatorSeries::coefficient_series(int r) const {
    if (is_zero()) return LaurentSeries(fld_, trunc_);
    std::vector<FieldScalar> c;
    c.reserve(terms_.size());
    for (int k = kmin_; k <= trunc_; ++k) c.push_back(term(k).coeff(r));
    return LaurentSeries(fld_, kmin_, trunc_, std::move(c));
}

std::vector<LaurentSeries> OperatorSeries::collected() const {
    int n = order();
    std::vector<LaurentSeries> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) out.push_back(coefficient_series(n - i));
    return out;
}

OperatorSeries OperatorSeries::from_collected(Field f, const std::vector<LaurentSeries>& coeffs) {
    if (coeffs.empty()) throw PreconditionError("empty collected form");
    int n = static_cast<int>(coeffs.size()) - 1;
    int trunc = coeffs[0].trunc();
    int kmin = coeffs[0].trunc() + 1;
    for (const auto& s : coeffs) {
        trunc = std::min(trunc, s.trunc());
        kmin = std::min(kmin, s.valuation());
    }
    OperatorSeries r(f, trunc);
    for (int i = 0; i <= n; ++i) {
        const LaurentSeries& s = coeffs[static_cast<std::size_t>(i)];
        for (int k = s.valuation(); k <= std::min(s.trunc(), trunc); ++k) {
            FieldScalar c = s.coeff(k);
            if (c.is_zero()) continue;
            r = r + graded_term(k, EulerPolynomial::monomial(c, n - i), trunc);
        }
    }
    return r;
}

bool OperatorSeries::agrees_with(const OperatorSeries& o, int through) const {
    if (through > trunc_ || through > o.trunc_)
        throw InternalError("agreement check beyond tracked truncation");
    int lo = std::min(kmin_, o.kmin_);
    for (int k = lo; k <= through; ++k)
        if (term(k) != o.term(k)) return false;
    return true;
}

std::string OperatorSeries::to_string() const {
    if (is_zero()) return "0 + O(t^" + std::to_string(trunc_ + 1) + ")";
    std::ostringstream os;
    bool first = true;
    for (int k = kmin_; k <= trunc_; ++k) {
        if (term(k).is_zero()) continue;
        if (!first) os << " + ";
        if (k != 0) os << "t^" << k << "*";
        os << "[" << term(k).to_string() << "]";
        first = false;
    }
    os << " + O(t^" << trunc_ + 1 << ")";
    return os.str();
}

EulerPolynomial eulerization(const OperatorSeries& L) {
    if (L.kmin() < 0)
        throw PreconditionError("Eulerization requires kmin >= 0 (no pole part)");
    if (L.is_zero() || L.kmin() > 0) return EulerPolynomial::zero(L.field());
    return L.term(0);
}

namespace {

// Stirling numbers of the second kind S(m, s), exact.
std::vector<std::vector<mpz_class>> stirling2_table(int mmax) {
    std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(mmax) + 1);
    for (int m = 0; m <= mmax; ++m) {
        s[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, mpz_class(0));
        s[static_cast<std::size_t>(m)][0] = (m == 0) ? 1 : 0;
        for (int k = 1; k <= m; ++k)
            s[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                (k <= m - 1 ? mpz_class(k * s[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)])
                            : mpz_class(0)) +
                (k - 1 <= m - 1 ? s[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)]
                                : mpz_class(0));
    }
    return s;
}

// Falling factorial eps (eps-1) ... (eps-k+1), equal to t^k d^k.
EulerPolynomial falling_factorial(Field f, int k) {
    EulerPolynomial p = EulerPolynomial::one(f);
    for (int i = 0; i < k; ++i) {
        EulerPolynomial lin(f, {FieldScalar(f, -i), FieldScalar::one(f)});
        p *= lin;
    }
    return p;
}

}  // namespace

std::vector<LaurentSeries> to_d_form(const OperatorSeries& L) {
    Field f = L.field();
    int n = L.order();
    if (L.is_zero()) return {};
    auto s2 = stirling2_table(n);
    // accumulate coefficients of d^s as maps t-power -> scalar
    int trunc_min = L.trunc();  // per-slot truncation is trunc + s
    std::vector<std::vector<FieldScalar>> acc(
        static_cast<std::size_t>(n + 1));  // slot s: powers kmin+... sized lazily
    int kmin = L.kmin();
    int width = L.trunc() - kmin + 1;
    for (int s = 0; s <= n; ++s)
        acc[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(width),
                                                FieldScalar::zero(f));
    for (int k = kmin; k <= L.trunc(); ++k) {
        EulerPolynomial p = L.term(k);
        for (int m = 0; m <= p.degree(); ++m) {
            FieldScalar c = p.coeff(m);
            if (c.is_zero()) continue;
            for (int s = 0; s <= m; ++s) {
                const mpz_class& st = s2[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)];
                if (st == 0) continue;
                // c * t^k * eps^m contributes c*S(m,s) * t^(k+s) d^s
                acc[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - kmin)] +=
                    c * FieldScalar(f, mpq_class(st));
            }
        }
    }
    std::vector<LaurentSeries> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        int s = n - i;  // out[i] multiplies d^(n-i)
        // slot s holds t^(k+s) coefficients indexed by k
        out.push_back(LaurentSeries(f, kmin + s, trunc_min + s,
                                    std::move(acc[static_cast<std::size_t>(s)])));
    }
    return out;
}

OperatorSeries to_euler_form(Field f, const std::vector<LaurentSeries>& d_coeffs) {
    if (d_coeffs.empty() || d_coeffs[0].is_zero())
        throw PreconditionError("zero leading coefficient in d-form");
    int n = static_cast<int>(d_coeffs.size()) - 1;
    int trunc = d_coeffs[0].trunc() - n;
    for (int i = 0; i <= n; ++i) {
        int s = n - i;
        trunc = std::min(trunc, d_coeffs[static_cast<std::size_t>(i)].trunc() - s);
    }
    OperatorSeries r(f, trunc);
    for (int i = 0; i <= n; ++i) {
        const LaurentSeries& a = d_coeffs[static_cast<std::size_t>(i)];
        int s = n - i;
        if (a.is_zero()) continue;
        EulerPolynomial ff = falling_factorial(f, s);
        // a(t) d^s = a(t) t^(-s) * (t^s d^s)
        for (int j = a.valuation(); j <= std::min(a.trunc(), trunc + s); ++j) {
            FieldScalar c = a.coeff(j);
            if (c.is_zero()) continue;
            r = r + OperatorSeries::graded_term(j - s, ff.scaled(c), trunc);
        }
    }
    return r;
}

}  // namespace fuchsforge
