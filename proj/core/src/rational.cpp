#include "hbmosc/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hbmosc {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("division by zero");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("division by zero");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational rat_normalize(const mpz_class& n, const mpz_class& d) { return Rational(n, d); }
Rational rat_normalize(long n, long d) { return Rational(n, d); }

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class n, d;
        if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        return Rational(n, d);
    }
    // decimal / scientific form
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        exp10 = std::stol(s.substr(epos + 1));
    }
    std::string digits;
    bool neg = false;
    long frac_digits = 0;
    bool seen_point = false;
    for (std::size_t i = 0; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '-' && i == 0) { neg = true; }
        else if (c == '+' && i == 0) {}
        else if (c == '.') {
            if (seen_point) throw std::invalid_argument("bad rational literal: " + s);
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            throw std::invalid_argument("bad rational literal: " + s);
        }
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal: " + s);
    mpz_class n(digits, 10);
    if (neg) n = -n;
    long e = exp10 - frac_digits;
    mpz_class d(1);
    mpz_class ten(10);
    if (e >= 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(e));
        n *= scale;
    } else {
        mpz_pow_ui(d.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-e));
    }
    return Rational(n, d);
}

Rational Rational::abs() const {
    Rational r = *this;
    r.q_ = ::abs(r.q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den().get_mpz_t(), e);
    return r;  // canonical since the input was
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long double Rational::to_long_double() const {
    if (is_zero()) return 0.0L;
    mpz_class n = ::abs(num());
    const mpz_class& d = den();
    // Scale so the integer quotient carries >= 80 significant bits, then fold
    // the scaling back in with ldexpl.
    long nb = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long shift = 80 - (nb - db);
    mpz_class scaled;
    if (shift >= 0) {
        mpz_mul_2exp(scaled.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(shift));
        scaled /= d;
    } else {
        mpz_class dd;
        mpz_mul_2exp(dd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-shift));
        scaled = n / dd;
    }
    long double v = 0.0L;
    // Accumulate 32 bits at a time; quotient has ~80-81 bits.
    mpz_class rest = scaled;
    int chunks = 0;
    while (sgn(rest) != 0) { rest >>= 32; ++chunks; }
    rest = scaled;
    for (int i = chunks - 1; i >= 0; --i) {
        mpz_class part = rest >> (32 * i);
        unsigned long bits = mpz_get_ui(part.get_mpz_t()) & 0xffffffffUL;
        v = v * 4294967296.0L + static_cast<long double>(bits);
        mpz_class back = part << (32 * i);
        rest -= back;
    }
    v = ldexpl(v, static_cast<int>(-shift));
    return sign() < 0 ? -v : v;
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(num().get_mpz_t(), 2) + mpz_sizeinbase(den().get_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

mpz_class pow10z(unsigned long e) {
    mpz_class r, ten(10);
    mpz_pow_ui(r.get_mpz_t(), ten.get_mpz_t(), e);
    return r;
}

// floor(log10(n/d)) for n/d > 0.
long floor_log10(const mpz_class& n, const mpz_class& d) {
    long est = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    // est is within 1 of the truth; fix up by exact comparison.
    auto cmp_pow = [&](long e) {
        // compare n/d with 10^e
        if (e >= 0) return cmp(n, d * pow10z(static_cast<unsigned long>(e)));
        return cmp(n * pow10z(static_cast<unsigned long>(-e)), d);
    };
    long e = est;
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;
    return e;
}

}  // namespace

std::string decimal_string(const Rational& q, unsigned digits) {
    if (digits == 0) digits = 1;
    if (q.is_zero()) return "0";
    std::string sign = q.sign() < 0 ? "-" : "";
    mpz_class n = ::abs(q.num());
    const mpz_class& d = q.den();
    long e = floor_log10(n, d);
    // m = round(n/d * 10^(digits-1-e)), half-up
    long shift = static_cast<long>(digits) - 1 - e;
    mpz_class num2 = n, den2 = d;
    if (shift >= 0) num2 *= pow10z(static_cast<unsigned long>(shift));
    else den2 *= pow10z(static_cast<unsigned long>(-shift));
    mpz_class m = (2 * num2 + den2) / (2 * den2);
    if (m == pow10z(digits)) { m /= 10; ++e; }
    std::string ds = m.get_str();

    if (e >= -5 && e <= 20) {
        std::string out;
        if (e >= 0) {
            if (static_cast<unsigned long>(e) + 1 >= ds.size()) {
                out = ds + std::string(static_cast<unsigned long>(e) + 1 - ds.size(), '0');
            } else {
                out = ds.substr(0, static_cast<unsigned long>(e) + 1) + "." +
                      ds.substr(static_cast<unsigned long>(e) + 1);
            }
        } else {
            out = "0." + std::string(static_cast<unsigned long>(-e) - 1, '0') + ds;
        }
        return sign + out;
    }
    std::string out = ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e);
    return sign + out;
}

std::string decimal_fixed(const Rational& q, unsigned decimals) {
    mpz_class scale = pow10z(decimals);
    mpz_class n = ::abs(q.num());
    const mpz_class& d = q.den();
    mpz_class m = (2 * n * scale + d) / (2 * d);  // round half-up on magnitude
    mpz_class ip = m / scale, fp = m % scale;
    std::string out = (q.sign() < 0 && m != 0 ? "-" : "") + ip.get_str();
    if (decimals > 0) {
        std::string fs = fp.get_str();
        out += "." + std::string(decimals - fs.size(), '0') + fs;
    }
    return out;
}

}  // namespace hbmosc
