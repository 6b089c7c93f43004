#include "hbmosc/unipoly.hpp"

#include <stdexcept>

namespace hbmosc {

UniPoly::UniPoly(std::vector<Rational> coeffs_ascending) : c_(std::move(coeffs_ascending)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, std::size_t var) {
    if (!p.is_univariate_in(var)) throw std::invalid_argument("polynomial is not univariate");
    std::vector<Rational> c(p.degree_in(var) + 1, Rational(0));
    for (const auto& t : p.terms()) c[t.mono[var]] += t.coeff;
    return UniPoly(std::move(c));
}

const Rational& UniPoly::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatInterval UniPoly::eval(const RatInterval& x) const {
    // monomial-wise with tight powers; tighter than interval Horner when the
    // argument straddles zero
    RatInterval acc = RatInterval::point(Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc = acc + c_[i] * x.pow(static_cast<unsigned>(i));
    }
    return acc;
}

long double UniPoly::eval(long double x) const {
    long double acc = 0.0L;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_long_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return zero();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPoly UniPoly::rem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly r = *this;
    const long dd = divisor.degree();
    const Rational& lead = divisor.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        Rational q = r.leading() / lead;
        std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            r.c_[i + shift] -= q * divisor.c_[i];
        r.trim();
    }
    return r;
}

UniPoly UniPoly::deflate(const Rational& root) const {
    if (is_zero()) throw std::invalid_argument("deflating zero polynomial");
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + carry * root;
    }
    if (!carry.is_zero()) throw std::invalid_argument("deflate: not a root");
    return UniPoly(std::move(q));
}

std::pair<Rational, UniPoly> UniPoly::content_primitive() const {
    if (is_zero()) throw std::invalid_argument("content of zero polynomial");
    mpz_class gnum = ::abs(c_[0].num());
    mpz_class lden = c_[0].den();
    for (std::size_t i = 1; i < c_.size(); ++i) {
        mpz_class n = ::abs(c_[i].num());
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c_[i].den().get_mpz_t());
    }
    if (gnum == 0) gnum = 1;
    Rational content(gnum, lden);
    if (leading().sign() < 0) content = -content;
    return {content, scaled(content.inverse())};
}

UniPoly UniPoly::primitive_same_sign() const {
    auto [content, prim] = content_primitive();
    return content.sign() < 0 ? -prim : prim;
}

bool UniPoly::proportional_positive(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (degree() != o.degree()) return false;
    Rational ratio = o.leading() / leading();
    if (ratio.sign() <= 0) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] * ratio != o.c_[i]) return false;
    return true;
}

bool UniPoly::is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational UniPoly::cauchy_root_bound() const {
    if (is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    Rational lead = leading().abs();
    Rational mx(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) mx = std::max(mx, c_[i].abs());
    return Rational(1) + mx / lead;
}

std::string UniPoly::render(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
        if (out.empty()) {
            if (c.sign() < 0) { out += "-"; c = -c; }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (i == 0) out += c.to_string();
        else {
            if (!c.is_one()) out += c.to_string() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    if (x.is_zero()) return y.is_zero() ? y : y.content_primitive().second;
    if (y.is_zero()) return x.content_primitive().second;
    // primitive remainder sequence: strip content each step to keep
    // coefficient growth in check
    x = x.content_primitive().second;
    y = y.content_primitive().second;
    while (!y.is_zero()) {
        UniPoly r = x.rem(y);
        x = y;
        y = r.is_zero() ? r : r.content_primitive().second;
    }
    return x.content_primitive().second;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (p.degree() <= 1) return p.content_primitive().second;
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.content_primitive().second;
    // exact division p / g
    UniPoly q;  // long division, remainder must be zero
    {
        UniPoly r = p;
        std::vector<Rational> qc(static_cast<std::size_t>(p.degree() - g.degree()) + 1, Rational(0));
        const long dd = g.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            Rational f = r.leading() / g.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
            qc[shift] = f;
            UniPoly sub = g.scaled(f);
            std::vector<Rational> shifted(shift, Rational(0));
            shifted.insert(shifted.end(), sub.coeffs().begin(), sub.coeffs().end());
            r = r - UniPoly(std::move(shifted));
        }
        if (!r.is_zero()) throw std::logic_error("squarefree_part: non-exact division");
        q = UniPoly(std::move(qc));
    }
    return q.content_primitive().second;
}

}  // namespace hbmosc
