#include "hbmosc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace hbmosc {

VarListPtr make_vars(std::initializer_list<const char*> names) {
    auto v = std::make_shared<VarList>();
    for (const char* n : names) v->push_back(n);
    return v;
}

VarListPtr make_vars(const std::vector<std::string>& names) {
    return std::make_shared<VarList>(names);
}

VarListPtr hbm_vars(unsigned order) {
    auto v = std::make_shared<VarList>();
    for (unsigned j = 1; j <= order; ++j) v->push_back("a" + std::to_string(2 * j - 1));
    v->push_back("w");
    return v;
}

Monomial Monomial::var(std::size_t arity, std::size_t i, uint32_t e) {
    Monomial m(arity);
    m.e_[i] = e;
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (uint32_t e : e_) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (uint32_t e : e_) if (e) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(e_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Monomial r(e_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // same degree: a > b iff the rightmost nonzero entry of a-b is negative
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

namespace {
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};
}  // namespace

MultiPoly MultiPoly::zero(VarListPtr vars) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    return p;
}

MultiPoly MultiPoly::constant(VarListPtr vars, const Rational& c) {
    MultiPoly p = zero(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(p.arity()), c});
    return p;
}

MultiPoly MultiPoly::variable(VarListPtr vars, std::size_t i) {
    MultiPoly p = zero(std::move(vars));
    p.terms_.push_back({Monomial::var(p.arity(), i), Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(VarListPtr vars, std::vector<Term> terms) {
    std::map<Monomial, Rational, LexGreater> acc;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    MultiPoly p = zero(std::move(vars));
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const MultiPoly::Term& MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    if (ord.kind == OrderKind::Lex) return terms_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
    return terms_[best];
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, unsigned(t.mono[var]));
    return d;
}

Rational MultiPoly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw std::invalid_argument("mismatched ambient variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r = MultiPoly::zero(a.vars_ ? a.vars_ : b.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = lex_compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) r.terms_.push_back(a.terms_[i++]);
        else if (c < 0) r.terms_.push_back(b.terms_[j++]);
        else {
            Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
            ++i; ++j;
        }
    }
    while (i < a.terms_.size()) r.terms_.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) r.terms_.push_back(b.terms_[j++]);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    std::map<Monomial, Rational, LexGreater> acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono * tb.mono;
            Rational c = ta.coeff * tb.coeff;
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    }
    MultiPoly r = MultiPoly::zero(a.vars_ ? a.vars_ : b.vars_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(vars_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return zero(vars_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return r;  // multiplying by a fixed monomial preserves descending lex order
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& repl) const {
    check_compatible(repl);
    MultiPoly out = zero(vars_);
    // cache powers of repl
    std::vector<MultiPoly> powers{constant(vars_, Rational(1))};
    for (const auto& t : terms_) {
        uint32_t e = t.mono[var];
        while (powers.size() <= e) powers.push_back(powers.back() * repl);
        Monomial rest = t.mono;
        rest[var] = 0;
        out += powers[e].times_monomial(rest, t.coeff);
    }
    return out;
}

bool MultiPoly::uses_var(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono[var]) return true;
    return false;
}

bool MultiPoly::is_univariate_in(std::size_t var) const {
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < arity(); ++i)
            if (i != var && t.mono[i]) return false;
    return true;
}

MultiPoly MultiPoly::drop_var(std::size_t var, VarListPtr smaller) const {
    MultiPoly out = zero(std::move(smaller));
    for (const auto& t : terms_) {
        if (t.mono[var]) throw std::invalid_argument("drop_var: variable still in use");
        std::vector<uint32_t> e;
        e.reserve(arity() - 1);
        for (std::size_t i = 0; i < arity(); ++i)
            if (i != var) e.push_back(t.mono[i]);
        out.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    // removing a zero column preserves relative lex order
    return out;
}

MultiPoly MultiPoly::insert_var(std::size_t at, VarListPtr larger) const {
    MultiPoly out = zero(std::move(larger));
    for (const auto& t : terms_) {
        std::vector<uint32_t> e;
        e.reserve(arity() + 1);
        for (std::size_t i = 0; i < arity() + 1; ++i) {
            if (i == at) e.push_back(0);
            else e.push_back(t.mono[i < at ? i : i - 1]);
        }
        out.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    Rational out(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < arity(); ++i)
            if (t.mono[i]) v *= point[i].pow(t.mono[i]);
        out += v;
    }
    return out;
}

RatInterval MultiPoly::eval(const std::vector<RatInterval>& box) const {
    RatInterval out = RatInterval::point(Rational(0));
    for (const auto& t : terms_) {
        RatInterval v = RatInterval::point(t.coeff);
        for (std::size_t i = 0; i < arity(); ++i)
            if (t.mono[i]) v = v * box[i].pow(t.mono[i]);
        out = out + v;
    }
    return out;
}

std::string MultiPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.sign() < 0) { out += "-"; c = -c; }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        std::string monos;
        for (std::size_t v = 0; v < arity(); ++v) {
            if (!t.mono[v]) continue;
            if (!monos.empty()) monos += "*";
            monos += (*vars_)[v];
            if (t.mono[v] > 1) monos += "^" + std::to_string(t.mono[v]);
        }
        if (monos.empty()) out += c.to_string();
        else if (c.is_one()) out += monos;
        else out += c.to_string() + "*" + monos;
    }
    return out;
}

ContentDecomposition content_primitive(const MultiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("content_primitive of zero polynomial");
    const auto& terms = p.terms();
    Monomial mgcd = terms[0].mono;
    for (const auto& t : terms) mgcd = Monomial::gcd(mgcd, t.mono);

    // rational content: gcd of numerators / lcm of denominators
    mpz_class gnum = ::abs(terms[0].coeff.num());
    mpz_class lden = terms[0].coeff.den();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        mpz_class n = ::abs(terms[i].coeff.num());
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), terms[i].coeff.den().get_mpz_t());
    }
    Rational content(gnum, lden);
    // sign: primitive's lex-leading coefficient positive
    if (terms[0].coeff.sign() < 0) content = -content;

    std::vector<MultiPoly::Term> prim;
    prim.reserve(terms.size());
    Rational inv = content.inverse();
    for (const auto& t : terms) prim.push_back({t.mono.divide_by(mgcd), t.coeff * inv});
    ContentDecomposition out;
    out.content = content;
    out.monomial_gcd = mgcd;
    out.primitive = MultiPoly::from_terms(p.vars(), std::move(prim));
    return out;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                      const MonomialOrder& ord) {
    for (const auto& d : divisors)
        if (d.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    std::vector<Monomial> lms;
    std::vector<Rational> lcs;
    lms.reserve(divisors.size());
    for (const auto& d : divisors) {
        const auto& lt = d.leading_term(ord);
        lms.push_back(lt.mono);
        lcs.push_back(lt.coeff);
    }
    MultiPoly rem = MultiPoly::zero(p.vars());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const auto lt = work.leading_term(ord);  // copy: work changes below
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (lms[i].divides(lt.mono)) {
                Monomial q = lt.mono.divide_by(lms[i]);
                work -= divisors[i].times_monomial(q, lt.coeff / lcs[i]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem += MultiPoly::from_terms(p.vars(), {{lt.mono, lt.coeff}});
            work -= MultiPoly::from_terms(p.vars(), {{lt.mono, lt.coeff}});
        }
    }
    return rem;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    VarListPtr vars;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            if (eat('*')) acc = acc * factor();
            else if (eat('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = acc.scaled(d.terms()[0].coeff.inverse());
            } else {
                char c = peek();
                // implicit product before '(' or an identifier
                if (c == '(' || std::isalpha(static_cast<unsigned char>(c)))
                    acc = acc * factor();
                else
                    return acc;
            }
        }
    }

    MultiPoly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        MultiPoly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (eat('(')) {
            MultiPoly e = expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class n(s.substr(start, pos - start), 10);
            return MultiPoly::constant(vars, Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (std::size_t i = 0; i < vars->size(); ++i)
                if ((*vars)[i] == name) return MultiPoly::variable(vars, i);
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }
};

}  // namespace

MultiPoly parse_poly(VarListPtr vars, const std::string& text) {
    Parser p{vars, text};
    MultiPoly out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

bool proportional_positive(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return false;
    Rational ratio = tb[0].coeff / ta[0].coeff;
    if (ratio.sign() <= 0) return false;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].mono != tb[i].mono) return false;
        if (ta[i].coeff * ratio != tb[i].coeff) return false;
    }
    return true;
}

}  // namespace hbmosc
