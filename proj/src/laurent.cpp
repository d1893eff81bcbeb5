#include "fuchsforge/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsforge {

LaurentSeries::LaurentSeries(Field f, int kmin, int trunc, std::vector<FieldScalar> coeffs)
    : fld_(f), kmin_(kmin), trunc_(trunc), c_(std::move(coeffs)) {
    for (const auto& c : c_) require_same_field(c.field(), fld_);
    if (static_cast<int>(c_.size()) > trunc_ - kmin_ + 1) c_.resize(trunc_ - kmin_ + 1, FieldScalar::zero(fld_));
    canonicalize();
}

void LaurentSeries::canonicalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        kmin_ = trunc_ + 1;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        kmin_ += static_cast<int>(lead);
    }
    // pad to the full tracked window so coeff() stays O(1)
    c_.resize(static_cast<std::size_t>(trunc_ - kmin_ + 1), FieldScalar::zero(fld_));
}

LaurentSeries LaurentSeries::monomial(FieldScalar c, int k, int trunc) {
    LaurentSeries s(c.field(), trunc);
    if (k > trunc || c.is_zero()) return s;
    s.kmin_ = k;
    s.c_.assign(static_cast<std::size_t>(trunc - k + 1), FieldScalar::zero(s.fld_));
    s.c_[0] = std::move(c);
    return s;
}

FieldScalar LaurentSeries::coeff(int k) const {
    if (k > trunc_)
        throw InternalError("Laurent coefficient requested beyond truncation");
    if (k < kmin_) return FieldScalar::zero(fld_);
    return c_[static_cast<std::size_t>(k - kmin_)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a.fld_, b.fld_);
    int trunc = std::min(a.trunc_, b.trunc_);
    int kmin = std::min(a.kmin_, b.kmin_);
    if (kmin > trunc) return LaurentSeries(a.fld_, trunc);
    std::vector<FieldScalar> c;
    c.reserve(static_cast<std::size_t>(trunc - kmin + 1));
    for (int k = kmin; k <= trunc; ++k) c.push_back(a.coeff(k) + b.coeff(k));
    return LaurentSeries(a.fld_, kmin, trunc, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a.fld_, b.fld_);
    // first untracked order: (Ta+1) + vb from a's side, symmetric for b
    int trunc = std::min(a.trunc_ + b.kmin_, b.trunc_ + a.kmin_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries(a.fld_, trunc);
    int kmin = a.kmin_ + b.kmin_;
    if (kmin > trunc) return LaurentSeries(a.fld_, trunc);  // tracked window empty: zero mod t^(trunc+1)
    std::vector<FieldScalar> c(static_cast<std::size_t>(trunc - kmin + 1), FieldScalar::zero(a.fld_));
    for (int i = a.kmin_; i <= a.trunc_; ++i) {
        FieldScalar ai = a.coeff(i);
        if (ai.is_zero()) continue;
        int jmax = std::min(b.trunc_, trunc - i);
        for (int j = b.kmin_; j <= jmax; ++j) {
            FieldScalar bj = b.coeff(j);
            if (bj.is_zero()) continue;
            c[static_cast<std::size_t>(i + j - kmin)] += ai * bj;
        }
    }
    return LaurentSeries(a.fld_, kmin, trunc, std::move(c));
}

LaurentSeries LaurentSeries::scaled(const FieldScalar& s) const {
    require_same_field(fld_, s.field());
    if (s.is_zero()) return LaurentSeries(fld_, trunc_);
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    r.kmin_ += k;
    r.trunc_ += k;
    return r;
}

LaurentSeries LaurentSeries::truncated(int new_trunc) const {
    if (new_trunc >= trunc_) {
        if (new_trunc > trunc_)
            throw InternalError("cannot extend a Laurent truncation");
        return *this;
    }
    if (new_trunc < kmin_) return LaurentSeries(fld_, new_trunc);
    std::vector<FieldScalar> c(c_.begin(), c_.begin() + (new_trunc - kmin_ + 1));
    return LaurentSeries(fld_, kmin_, new_trunc, std::move(c));
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero())
        throw PreconditionError("cannot invert a series that is zero to its truncation");
    int v = kmin_;
    int rel = trunc_ - v;  // relative precision carried through
    // write *this = t^v * u with u(0) != 0; invert u by the usual recurrence
    FieldScalar u0 = c_[0];
    FieldScalar inv0 = u0.inverse();
    std::vector<FieldScalar> w(static_cast<std::size_t>(rel) + 1, FieldScalar::zero(fld_));
    w[0] = inv0;
    for (int s = 1; s <= rel; ++s) {
        FieldScalar acc = FieldScalar::zero(fld_);
        for (int i = 1; i <= s; ++i) acc += coeff(v + i) * w[static_cast<std::size_t>(s - i)];
        w[static_cast<std::size_t>(s)] = -(acc * inv0);
    }
    return LaurentSeries(fld_, -v, -v + rel, std::move(w));
}

LaurentSeries LaurentSeries::euler_derivative() const {
    LaurentSeries r = *this;
    for (int k = kmin_; k <= trunc_; ++k)
        r.c_[static_cast<std::size_t>(k - kmin_)] =
            r.c_[static_cast<std::size_t>(k - kmin_)] * FieldScalar(fld_, k);
    r.canonicalize();
    return r;
}

LaurentSeries LaurentSeries::exp() const {
    if (!is_zero() && kmin_ < 1)
        throw PreconditionError("exp requires a series with positive valuation");
    int T = trunc_;
    std::vector<FieldScalar> y(static_cast<std::size_t>(std::max(T, 0)) + 1, FieldScalar::zero(fld_));
    y[0] = FieldScalar::one(fld_);
    for (int s = 1; s <= T; ++s) {
        FieldScalar acc = FieldScalar::zero(fld_);
        for (int i = 1; i <= s; ++i) {
            FieldScalar ri = (i <= trunc_ && i >= kmin_) ? coeff(i) : FieldScalar::zero(fld_);
            if (ri.is_zero()) continue;
            acc += FieldScalar(fld_, i) * ri * y[static_cast<std::size_t>(s - i)];
        }
        y[static_cast<std::size_t>(s)] = acc / FieldScalar(fld_, s);
    }
    return LaurentSeries(fld_, 0, std::max(T, 0), std::move(y));
}

bool LaurentSeries::agrees_with(const LaurentSeries& o, int through) const {
    if (through > trunc_ || through > o.trunc_)
        throw InternalError("agreement check beyond tracked truncation");
    int lo = std::min(kmin_, o.kmin_);
    for (int k = lo; k <= through; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    if (is_zero()) return "0 + O(t^" + std::to_string(trunc_ + 1) + ")";
    std::ostringstream os;
    bool first = true;
    for (int k = kmin_; k <= trunc_; ++k) {
        FieldScalar c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (k != 0) os << "*t^" << k;
        first = false;
    }
    os << " + O(t^" << trunc_ + 1 << ")";
    return os.str();
}

}  // namespace fuchsforge
