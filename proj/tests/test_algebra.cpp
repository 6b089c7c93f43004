#include "hbmosc/interval.hpp"
#include "hbmosc/polynomial.hpp"
#include "hbmosc/rational.hpp"
#include "hbmosc/unipoly.hpp"

#include <doctest.h>

#include <random>

using namespace hbmosc;

namespace {

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

Monomial rand_monomial(std::mt19937& rng, std::size_t arity, uint32_t max_exp) {
    std::uniform_int_distribution<uint32_t> e(0, max_exp);
    Monomial m(arity);
    for (std::size_t i = 0; i < arity; ++i) m[i] = e(rng);
    return m;
}

MultiPoly rand_poly(std::mt19937& rng, const VarListPtr& vars, int terms) {
    std::vector<MultiPoly::Term> ts;
    for (int i = 0; i < terms; ++i) ts.push_back({rand_monomial(rng, vars->size(), 3), rand_rational(rng)});
    return MultiPoly::from_terms(vars, std::move(ts));
}

}  // namespace

TEST_CASE("rat_normalize canonical forms") {
    CHECK(rat_normalize(6, -4).to_string() == "-3/2");
    CHECK(rat_normalize(0, 7).to_string() == "0");
    CHECK(rat_normalize(0, 7).den() == 1);
    CHECK(rat_normalize(324, 218).to_string() == "162/109");
    CHECK(rat_normalize(324, 218) == Rational(162, 109));
    CHECK_THROWS_AS(rat_normalize(1, 0), std::domain_error);
    CHECK(Rational(-5, -10) == Rational(1, 2));
    CHECK(Rational(3, -7).den() > 0);
}

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3).pow(3) == Rational(1, 27));
    CHECK((-Rational(5, 3)).abs() == Rational(5, 3));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK(Rational::from_string("1.25") == Rational(5, 4));
    CHECK(Rational::from_string("-0.5") == Rational(-1, 2));
    CHECK(Rational::from_string("1e-3") == Rational(1, 1000));
    CHECK_THROWS(Rational::from_string("abc"));
}

TEST_CASE("decimal rendering is deterministic and correctly rounded") {
    CHECK(decimal_string(Rational(1, 3), 5) == "0.33333");
    CHECK(decimal_string(Rational(2, 3), 5) == "0.66667");
    CHECK(decimal_string(Rational(162, 109), 10) == "1.486238532");
    CHECK(decimal_string(Rational(-1234, 1), 6) == "-1234.00");
    CHECK(decimal_string(Rational(0), 8) == "0");
    CHECK(decimal_fixed(Rational(2805, 1000), 2) == "2.81");
    CHECK(decimal_fixed(Rational(28, 10), 2) == "2.80");
    CHECK(decimal_fixed(-Rational(1138, 100), 2) == "-11.38");
}

TEST_CASE("long double conversion reaches 64-bit significand accuracy") {
    long double third = Rational(1, 3).to_long_double();
    CHECK(fabsl(third - 1.0L / 3.0L) <= 1e-19L);
    Rational big(mpz_class("123456789012345678901234567"), mpz_class("987654321098765"));
    long double expect = 124999998873.7L;
    CHECK(fabsl(big.to_long_double() - expect) / expect <= 1e-3L);
    CHECK(Rational(-7, 4).to_long_double() == -1.75L);
}

TEST_CASE("interval arithmetic is exact and conservative") {
    RatInterval a(Rational(1, 3), Rational(1, 2));
    RatInterval b(Rational(-2), Rational(3));
    CHECK((a + b).lo() == Rational(1, 3) - Rational(2));
    CHECK((a * b).contains(Rational(1, 3) * Rational(3)));
    CHECK_THROWS_AS(a / b, std::domain_error);  // b contains zero
    CHECK(RatInterval(Rational(-1), Rational(2)).pow(2) ==
          RatInterval(Rational(0), Rational(4)));
    CHECK(RatInterval(Rational(-3), Rational(-2)).pow(2) ==
          RatInterval(Rational(4), Rational(9)));
    CHECK(RatInterval(Rational(-3), Rational(2)).abs() == RatInterval(Rational(0), Rational(3)));
    CHECK_THROWS_AS(RatInterval(Rational(2), Rational(1)), std::invalid_argument);
    // membership is preserved by every operation on sampled points
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational x = rand_rational(rng), y = rand_rational(rng);
        RatInterval ix = RatInterval::point(x), iy = RatInterval::point(y);
        CHECK((ix + iy).contains(x + y));
        CHECK((ix * iy).contains(x * y));
        CHECK((ix - iy).contains(x - y));
    }
}

TEST_CASE("pi enclosure brackets the known expansion") {
    RatInterval pi = pi_enclosure(40);
    Rational lo = Rational::from_string("3.14159265358979323846264338327950288419");
    Rational hi = Rational::from_string("3.14159265358979323846264338327950288420");
    CHECK(pi.lo() <= hi);
    CHECK(pi.hi() >= lo);
    CHECK(pi.contains(Rational::from_string("3.14159265358979323846264338327950288419716939937510")));
    CHECK(pi.width() < pow10_inv(40));
}

TEST_CASE("sqrt enclosures") {
    RatInterval r2 = sqrt_enclosure(Rational(2), pow10_inv(25));
    CHECK(r2.width() <= pow10_inv(25));
    CHECK(r2.lo() * r2.lo() <= Rational(2));
    CHECK(r2.hi() * r2.hi() >= Rational(2));
    CHECK(sqrt_enclosure(Rational(9, 4), pow10_inv(5)).is_point());
    CHECK(sqrt_enclosure(Rational(9, 4), pow10_inv(5)).lo() == Rational(3, 2));
    CHECK_THROWS_AS(sqrt_enclosure(Rational(-1), pow10_inv(5)), std::domain_error);
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
    std::mt19937 rng(11);
    for (MonomialOrder ord : {lex_order(), grevlex_order()}) {
        for (int i = 0; i < 400; ++i) {
            Monomial a = rand_monomial(rng, 4, 4), b = rand_monomial(rng, 4, 4),
                     c = rand_monomial(rng, 4, 4);
            // antisymmetry
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            if (ord.compare(a, b) == 0) CHECK(a == b);
            // transitivity
            if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
            // multiplicativity
            if (ord.less(a, b)) CHECK(ord.less(a * c, b * c));
            // 1 minimal
            if (!a.is_one()) CHECK(ord.less(Monomial::one(4), a));
        }
    }
    // textbook grevlex: with x > y > z, y^2 beats x z
    Monomial xz(std::vector<uint32_t>{1, 0, 1}), y2(std::vector<uint32_t>{0, 2, 0});
    CHECK(grevlex_compare(xz, y2) < 0);
    CHECK(lex_compare(xz, y2) > 0);
}

TEST_CASE("poly parse, render, canonical equality") {
    auto vars = make_vars({"a1", "a3", "w"});
    MultiPoly p = parse_poly(vars, "(a1+a3)*(a1-a3)");
    CHECK(p.render() == "a1^2 - a3^2");
    CHECK(parse_poly(vars, "109*w^2 - 162").render() == "109*w^2 - 162");
    CHECK(parse_poly(vars, "a1 + 10*a3") == parse_poly(vars, "10*a3 + a1"));
    CHECK(parse_poly(vars, "1/2*a1 - a1/2").is_zero());
    CHECK_THROWS(parse_poly(vars, "a9 + 1"));
    // explicit product requirement from the rendering contract
    CHECK(parse_poly(vars, "2*a1*w^2").render() == "2*a1*w^2");
}

TEST_CASE("poly ring axioms on random inputs") {
    auto vars = make_vars({"x", "y", "z"});
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        MultiPoly p = rand_poly(rng, vars, 4), q = rand_poly(rng, vars, 4),
                  r = rand_poly(rng, vars, 3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("poly multiplication fixtures") {
    auto vars = make_vars({"a1", "a3", "w"});
    CHECK(parse_poly(vars, "(a1+a3)*(a1-a3)") == parse_poly(vars, "a1^2-a3^2"));
    MultiPoly p = parse_poly(vars, "a1+10*a3");
    CHECK((p * MultiPoly::zero(vars)).is_zero());
    CHECK(parse_poly(vars, "(a1+10*a3)*a1") == parse_poly(vars, "a1^2+10*a1*a3"));
    auto other = make_vars({"u", "v"});
    CHECK_THROWS_AS(p * MultiPoly::variable(other, 0), std::invalid_argument);
}

TEST_CASE("content_primitive fixtures and round trip") {
    auto vars = make_vars({"a1", "a3", "a5", "w"});
    SUBCASE("balance equation with half content") {
        MultiPoly p = parse_poly(vars, "-(w^2*a1/2)*(a1+10*a3)");
        ContentDecomposition cp = content_primitive(p);
        CHECK(cp.content == Rational(-1, 2));
        CHECK(cp.primitive == parse_poly(vars, "a1+10*a3"));
        CHECK(cp.monomial_gcd == Monomial(std::vector<uint32_t>{1, 0, 0, 2}));
    }
    SUBCASE("gcd across three variables") {
        MultiPoly p = parse_poly(vars, "-(w^2/2)*(10*a3+26*a5)*a1");
        ContentDecomposition cp = content_primitive(p);
        CHECK(cp.primitive == parse_poly(vars, "5*a3+13*a5"));
        CHECK(cp.content == Rational(-1));
        CHECK(cp.monomial_gcd == Monomial(std::vector<uint32_t>{1, 0, 0, 2}));
    }
    SUBCASE("single term") {
        ContentDecomposition cp = content_primitive(parse_poly(vars, "7*a1"));
        CHECK(cp.content == Rational(7));
        CHECK(cp.monomial_gcd == Monomial(std::vector<uint32_t>{1, 0, 0, 0}));
        CHECK(cp.primitive == MultiPoly::constant(vars, Rational(1)));
    }
    SUBCASE("zero polynomial is rejected") {
        CHECK_THROWS_AS(content_primitive(MultiPoly::zero(vars)), std::invalid_argument);
    }
    SUBCASE("round trip on random polynomials") {
        std::mt19937 rng(37);
        for (int i = 0; i < 80; ++i) {
            MultiPoly p = rand_poly(rng, vars, 5);
            if (p.is_zero()) continue;
            ContentDecomposition cp = content_primitive(p);
            MultiPoly back = cp.primitive.times_monomial(cp.monomial_gcd, cp.content);
            CHECK(back == p);
            CHECK(cp.primitive.leading_term(lex_order()).coeff.sign() > 0);
            // primitive has coprime integer coefficients
            mpz_class g(0);
            for (const auto& t : cp.primitive.terms()) {
                CHECK(t.coeff.is_integer());
                mpz_class n = ::abs(t.coeff.num());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            }
            CHECK(g == 1);
        }
    }
}

TEST_CASE("normal_form fixtures") {
    auto vars = make_vars({"a1", "a3", "w"});
    MultiPoly d = parse_poly(vars, "a1+10*a3");
    CHECK(normal_form(parse_poly(vars, "a1^2+10*a1*a3"), {d}, lex_order()).is_zero());
    CHECK(normal_form(parse_poly(vars, "a1"), {parse_poly(vars, "a3")}, lex_order()) ==
          parse_poly(vars, "a1"));
    MultiPoly r = normal_form(parse_poly(vars, "a1+a3-1"), {d}, lex_order());
    CHECK(r == parse_poly(vars, "-9*a3-1"));
    // p - r is the quotient times the divisor
    CHECK(parse_poly(vars, "a1+a3-1") - r == d);
    CHECK_THROWS_AS(normal_form(d, {MultiPoly::zero(vars)}, lex_order()), std::invalid_argument);
    // no monomial of the remainder is divisible by a divisor leading monomial
    std::mt19937 rng(41);
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = rand_poly(rng, vars, 5);
        MultiPoly q = rand_poly(rng, vars, 3);
        if (q.is_zero()) continue;
        MultiPoly rem = normal_form(p, {q}, lex_order());
        for (const auto& t : rem.terms())
            CHECK_FALSE(q.leading_term(lex_order()).mono.divides(t.mono));
    }
}

TEST_CASE("substitution and variable bookkeeping") {
    auto vars = make_vars({"a1", "a3", "w"});
    MultiPoly p = parse_poly(vars, "a1^2*w^2 + 10*a1*a3*w^2");
    MultiPoly s = p.substitute(0, parse_poly(vars, "1-a3"));
    CHECK(s == parse_poly(vars, "-9*a3^2*w^2 + 8*a3*w^2 + w^2"));
    CHECK(p.uses_var(0));
    CHECK_FALSE(s.uses_var(0));
    CHECK(p.degree_in(0) == 2);
    CHECK(p.total_degree() == 4);
}

TEST_CASE("unipoly basics") {
    UniPoly p(std::vector<Rational>{Rational(-162), Rational(0), Rational(109)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(1)) == Rational(-53));
    CHECK(p.sign_at(Rational(0)) == -1);
    CHECK(p.sign_at(Rational(2)) == 1);
    CHECK(p.is_even());
    CHECK(p.render() == "109*w^2 - 162");
    CHECK(p.derivative().render() == "218*w");
    CHECK(p.cauchy_root_bound() == Rational(1) + Rational(162, 109));

    UniPoly q(std::vector<Rational>{Rational(-1), Rational(1)});  // t - 1
    CHECK((p.rem(q)).degree() == 0);
    CHECK(p.rem(q).coeff(0) == Rational(-53));  // p(1)
    UniPoly prod = p * q;
    CHECK(prod.deflate(Rational(1)) == p);
    CHECK_THROWS(p.deflate(Rational(1)));

    auto [content, prim] = UniPoly(std::vector<Rational>{Rational(2, 3), Rational(-4, 3)})
                               .content_primitive();
    CHECK(content == Rational(-2, 3));
    CHECK(prim.render("t") == "2*t - 1");
}

TEST_CASE("unipoly gcd and squarefree part") {
    UniPoly t_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
    UniPoly t_plus_2(std::vector<Rational>{Rational(2), Rational(1)});
    UniPoly p = t_minus_1 * t_minus_1 * t_plus_2;
    CHECK(gcd(p, p.derivative()).proportional_positive(t_minus_1));
    CHECK(squarefree_part(p).proportional_positive(t_minus_1 * t_plus_2));
    UniPoly sf(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
    CHECK(squarefree_part(sf) == sf);
    CHECK(gcd(t_minus_1, t_plus_2).degree() == 0);
}

TEST_CASE("interval evaluation of polynomials contains true values") {
    auto vars = make_vars({"x", "y"});
    std::mt19937 rng(53);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = rand_poly(rng, vars, 4);
        Rational x = rand_rational(rng), y = rand_rational(rng);
        Rational exact = p.eval(std::vector<Rational>{x, y});
        Rational pad(1, 100);
        std::vector<RatInterval> box{RatInterval(x - pad, x + pad), RatInterval(y - pad, y + pad)};
        CHECK(p.eval(box).contains(exact));
    }
}
