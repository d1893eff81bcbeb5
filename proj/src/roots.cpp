#include "fuchsforge/roots.hpp"

#include <algorithm>

namespace fuchsforge {

namespace {

constexpr std::size_t kDivisorCap = 200000;
constexpr unsigned long kTrialCap = 2000000;

// Trial-division factorization; falls back to a primality test for the
// cofactor and gives up (typed error) on a large composite remainder.
std::map<mpz_class, int> factorize(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (mpz_class d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out[d] += 1;
            n /= d;
        }
        if (d > kTrialCap) {
            if (n == 1) return out;
            if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
                out[n] += 1;
                return out;
            }
            throw PreconditionError(
                "root-candidate enumeration exceeded the factoring budget; "
                "supply the roots explicitly");
        }
    }
    if (n > 1) out[n] += 1;
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t old = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > kDivisorCap)
            throw PreconditionError("too many divisor candidates for exact root search");
    }
    return divs;
}

// Clears denominators: returns integer numerators (re, im) of s * scale.
mpz_class denominator_lcm(const EulerPolynomial& p) {
    mpz_class l = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        FieldScalar c = p.coeff(i);
        mpz_class dr = c.re().get_den(), di = c.im().get_den();
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), dr.get_mpz_t());
        l = g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), di.get_mpz_t());
        l = g;
    }
    return l;
}

int deflate_root(EulerPolynomial& p, const FieldScalar& r) {
    Field f = p.field();
    EulerPolynomial lin(f, {-r, FieldScalar::one(f)});
    int mult = 0;
    while (!p.is_zero() && p.evaluate(r).is_zero()) {
        p = poly_exact_div(p, lin);
        ++mult;
    }
    return mult;
}

// ---- Gaussian integer helpers (for Q(i) root candidates) ----

struct Gint {
    mpz_class re, im;
};

Gint gmul(const Gint& a, const Gint& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class gnorm(const Gint& a) { return a.re * a.re + a.im * a.im; }

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    // nearest integer to a/b, ties toward +infinity; b > 0 assumed
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r >= b) q += 1;
    return q;
}

// Euclidean division in Z[i] with N(r) <= N(b)/2.
Gint gdiv_nearest(const Gint& a, const Gint& b) {
    mpz_class n = gnorm(b);
    Gint num = gmul(a, Gint{b.re, -b.im});
    return {round_div(num.re, n), round_div(num.im, n)};
}

Gint gsub(const Gint& a, const Gint& b) { return {a.re - b.re, a.im - b.im}; }

Gint ggcd(Gint a, Gint b) {
    while (!(b.re == 0 && b.im == 0)) {
        Gint q = gdiv_nearest(a, b);
        Gint r = gsub(a, gmul(q, b));
        a = b;
        b = r;
    }
    return a;
}

bool gdivides(const Gint& d, const Gint& a, Gint* quot) {
    mpz_class n = gnorm(d);
    if (n == 0) return false;
    Gint num = gmul(a, Gint{d.re, -d.im});
    if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t())) return false;
    if (!mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t())) return false;
    if (quot) *quot = {num.re / n, num.im / n};
    return true;
}

// Gaussian prime above a rational prime p = 1 (mod 4): pi = gcd(p, c + i)
// where c^2 = -1 (mod p).
Gint gaussian_prime_above(const mpz_class& p) {
    mpz_class e = (p - 1) / 4;
    for (mpz_class a = 2; a < p; ++a) {
        mpz_class c;
        mpz_powm(c.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        mpz_class c2 = (c * c) % p;
        if (c2 == p - 1) return ggcd(Gint{p, 0}, Gint{c, 1});
    }
    throw InternalError("no square root of -1 found modulo a 1-mod-4 prime");
}

// Divisors of z in Z[i] up to units.
std::vector<Gint> gaussian_divisors(const Gint& z) {
    std::vector<Gint> divs{Gint{1, 0}};
    auto extend = [&divs](const Gint& prime, int max_exp) {
        std::size_t old = divs.size();
        Gint pk{1, 0};
        for (int k = 1; k <= max_exp; ++k) {
            pk = gmul(pk, prime);
            for (std::size_t i = 0; i < old; ++i) divs.push_back(gmul(divs[i], pk));
        }
        if (divs.size() > kDivisorCap)
            throw PreconditionError("too many Gaussian divisor candidates");
    };
    auto exact_exponent = [](Gint v, const Gint& prime) {
        int e = 0;
        Gint q;
        while (gdivides(prime, v, &q)) {
            v = q;
            ++e;
        }
        return e;
    };
    for (const auto& [p, e] : factorize(gnorm(z))) {
        (void)e;
        if (p == 2) {
            extend(Gint{1, 1}, exact_exponent(z, Gint{1, 1}));
        } else if (p % 4 == 3) {
            extend(Gint{p, 0}, exact_exponent(z, Gint{p, 0}));
        } else {
            Gint pi = gaussian_prime_above(p);
            Gint pibar{pi.re, -pi.im};
            extend(pi, exact_exponent(z, pi));
            extend(pibar, exact_exponent(z, pibar));
        }
    }
    return divs;
}

// Numerator content of p (after clearing denominators): returns the integer
// coefficient list scaled by the denominator lcm.
struct IntegerPoly {
    std::vector<Gint> c;  // ascending
};

IntegerPoly clear_denominators(const EulerPolynomial& p) {
    mpz_class l = denominator_lcm(p);
    IntegerPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        FieldScalar s = p.coeff(i);
        out.c.push_back(Gint{s.re().get_num() * (l / s.re().get_den()),
                             s.im().get_num() * (l / s.im().get_den())});
    }
    return out;
}

}  // namespace

std::map<long, int> integer_roots(const EulerPolynomial& p) {
    std::map<long, int> out;
    if (p.is_zero() || p.degree() == 0) return out;
    EulerPolynomial work = p;
    Field f = p.field();
    // root at zero
    int m0 = deflate_root(work, FieldScalar::zero(f));
    if (m0 > 0) out[0] = m0;
    if (work.degree() == 0) return out;
    IntegerPoly ip = clear_denominators(work);
    // an integer root divides both components of the constant coefficient
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ip.c[0].re.get_mpz_t(), ip.c[0].im.get_mpz_t());
    if (g == 0) throw InternalError("vanishing constant term after deflation");
    for (const mpz_class& d : positive_divisors(g)) {
        if (!d.fits_slong_p()) continue;
        for (long sign : {1L, -1L}) {
            long r = sign * d.get_si();
            FieldScalar x(f, r);
            if (!work.evaluate(x).is_zero()) continue;
            int m = deflate_root(work, x);
            if (m > 0) out[r] = m;
        }
    }
    return out;
}

std::vector<std::pair<FieldScalar, int>> field_roots(const EulerPolynomial& p) {
    std::vector<std::pair<FieldScalar, int>> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    Field f = p.field();
    EulerPolynomial work = p;
    int m0 = deflate_root(work, FieldScalar::zero(f));
    if (m0 > 0) roots.push_back({FieldScalar::zero(f), m0});
    if (work.degree() >= 1) {
        IntegerPoly ip = clear_denominators(work);
        const Gint& c0 = ip.c.front();
        const Gint& lead = ip.c.back();
        if (f == Field::Q) {
            for (const mpz_class& num : positive_divisors(c0.re)) {
                for (const mpz_class& den : positive_divisors(lead.re)) {
                    for (int sign : {1, -1}) {
                        mpq_class cand(sign * num, den);
                        cand.canonicalize();
                        FieldScalar x(f, cand);
                        int m = deflate_root(work, x);
                        if (m > 0) roots.push_back({x, m});
                        if (work.degree() == 0) return roots;
                    }
                }
            }
        } else {
            static const Gint units[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            for (const Gint& num : gaussian_divisors(c0)) {
                for (const Gint& den : gaussian_divisors(lead)) {
                    for (const Gint& u : units) {
                        // candidate = u*num / den = u*num*conj(den)/N(den)
                        Gint scaled = gmul(gmul(num, u), Gint{den.re, -den.im});
                        mpq_class re(scaled.re, gnorm(den));
                        mpq_class im(scaled.im, gnorm(den));
                        re.canonicalize();
                        im.canonicalize();
                        FieldScalar x(f, re, im);
                        int m = deflate_root(work, x);
                        if (m > 0) roots.push_back({x, m});
                        if (work.degree() == 0) return roots;
                    }
                }
            }
        }
    }
    return roots;
}

std::optional<std::vector<FieldScalar>> try_split(const EulerPolynomial& p) {
    if (p.is_zero()) return std::nullopt;
    std::vector<FieldScalar> out;
    int total = 0;
    for (const auto& [lam, m] : field_roots(p)) {
        total += m;
        for (int k = 0; k < m; ++k) out.push_back(lam);
    }
    if (total != p.degree()) return std::nullopt;
    return out;
}

}  // namespace fuchsforge
