#include "fuchsforge/field.hpp"

namespace fuchsforge {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field field_from_name(const std::string& name) {
    if (name == "Q") return Field::Q;
    if (name == "Qi") return Field::Qi;
    throw PreconditionError("unknown field '" + name + "' (expected Q or Qi)");
}

void require_same_field(Field a, Field b) {
    if (a != b) throw FieldMismatchError("mixed-field arithmetic (Q vs Qi)");
}

void require_same_field(const FieldScalar& a, const FieldScalar& b) {
    require_same_field(a.field(), b.field());
}

FieldScalar::FieldScalar(Field f, long num, long den) : fld_(f) {
    if (den == 0) throw PreconditionError("zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

FieldScalar::FieldScalar(Field f, mpq_class re, mpq_class im)
    : fld_(f), re_(std::move(re)), im_(std::move(im)) {
    if (f == Field::Q && im_ != 0)
        throw FieldMismatchError("imaginary part in a Q-field scalar");
}

FieldScalar FieldScalar::i(Field f) {
    if (f != Field::Qi) throw FieldMismatchError("the imaginary unit requires field Qi");
    return FieldScalar(f, mpq_class(0), mpq_class(1));
}

bool FieldScalar::is_integer() const {
    return im_ == 0 && re_.get_den() == 1;
}

long FieldScalar::to_integer() const {
    if (!is_integer()) throw PreconditionError("scalar is not an integer: " + to_string());
    if (!re_.get_num().fits_slong_p())
        throw PreconditionError("integer too large for machine word");
    return re_.get_num().get_si();
}

FieldScalar FieldScalar::conj() const { return FieldScalar(fld_, re_, -im_); }

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero scalar");
    mpq_class n = norm();
    return FieldScalar(fld_, re_ / n, -im_ / n);
}

FieldScalar FieldScalar::operator-() const { return FieldScalar(fld_, -re_, -im_); }

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    require_same_field(*this, o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    require_same_field(*this, o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    require_same_field(*this, o);
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    require_same_field(*this, o);
    return *this *= o.inverse();
}

bool FieldScalar::lex_less(const FieldScalar& a, const FieldScalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
}

std::string FieldScalar::to_string() const {
    std::string s = re_.get_str();
    if (fld_ == Field::Qi) {
        if (im_ >= 0)
            s += "+" + im_.get_str() + " i";
        else
            s += "-" + mpq_class(-im_).get_str() + " i";
    }
    return s;
}

FieldScalar FieldScalar::parse(Field f, const std::string& text) {
    auto read_rational = [](const std::string& t) {
        mpq_class q;
        if (q.set_str(t, 10) != 0)
            throw PreconditionError("bad rational literal '" + t + "'");
        if (q.get_den() == 0)
            throw PreconditionError("zero denominator in '" + t + "'");
        q.canonicalize();
        return q;
    };
    std::string body = text;
    bool has_i = false;
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, " i") == 0) {
        has_i = true;
        body.resize(body.size() - 2);
    }
    if (!has_i) return FieldScalar(f, read_rational(body));
    // split "re±im" at the first sign past the leading character
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < body.size(); ++p) {
        if (body[p] == '+' || body[p] == '-') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos)
        throw PreconditionError("bad complex literal '" + text + "'");
    mpq_class re = read_rational(body.substr(0, split));
    mpq_class im = read_rational(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return FieldScalar(f, std::move(re), std::move(im));
}

}  // namespace fuchsforge
