#include "hbmosc/groebner.hpp"
#include "hbmosc/trigring.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace hbmosc;

namespace {

std::vector<MultiPoly> mini_ideal(const VarListPtr& vars) {
    return {parse_poly(vars, "2-(a1^2+9*a3^2)*w^2"), parse_poly(vars, "a1+10*a3"),
            parse_poly(vars, "a1+a3-1")};
}

// exhaustive Buchberger criterion plus membership of the inputs
void check_is_groebner_basis_of(const GroebnerBasis& basis, const std::vector<MultiPoly>& gens) {
    REQUIRE(!basis.generators.empty());
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.generators.size(); ++j) {
            MultiPoly s = s_polynomial(basis.generators[i], basis.generators[j], basis.order);
            if (!s.is_zero())
                CHECK(normal_form(s, basis.generators, basis.order).is_zero());
        }
    }
    for (const auto& g : gens) CHECK(normal_form(g, basis.generators, basis.order).is_zero());
    // reduced: no generator monomial divisible by another generator's LM
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        const Monomial& lm = basis.generators[i].leading_term(basis.order).mono;
        for (std::size_t j = 0; j < basis.generators.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : basis.generators[j].terms()) CHECK_FALSE(lm.divides(t.mono));
        }
    }
}

}  // namespace

TEST_CASE("s_polynomial fixtures") {
    auto vars = make_vars({"a1", "a3", "w"});
    MultiPoly m1 = parse_poly(vars, "a1^2");
    MultiPoly m2 = parse_poly(vars, "a1*a3");
    CHECK(s_polynomial(m1, m2, lex_order()).is_zero());
    MultiPoly f = parse_poly(vars, "a1+10*a3");
    CHECK(s_polynomial(f, f, lex_order()).is_zero());
    MultiPoly s = s_polynomial(f, parse_poly(vars, "a1+a3-1"), lex_order());
    CHECK(proportional_positive(s, parse_poly(vars, "9*a3+1")));
    CHECK_THROWS_AS(s_polynomial(f, MultiPoly::zero(vars), lex_order()), std::invalid_argument);
}

TEST_CASE("buchberger on the normalized second-order system") {
    auto vars = make_vars({"a1", "a3", "w"});
    GroebnerBasis gb = buchberger(mini_ideal(vars), lex_order());
    REQUIRE(gb.generators.size() == 3);
    // ascending leading monomial: the frequency univariate first
    CHECK(gb.generators[0] == parse_poly(vars, "109*w^2-162"));
    CHECK(gb.generators[1] == parse_poly(vars, "9*a3+1"));
    CHECK(gb.generators[2] == parse_poly(vars, "9*a1-10"));
    check_is_groebner_basis_of(gb, mini_ideal(vars));
}

TEST_CASE("buchberger trivial and error cases") {
    auto vars = make_vars({"a1", "a3", "w"});
    MultiPoly g = parse_poly(vars, "a1-1");
    GroebnerBasis gb = buchberger({g}, lex_order());
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == g);
    CHECK_THROWS_AS(buchberger({}, lex_order()), std::invalid_argument);
    CHECK_THROWS_AS(buchberger({MultiPoly::zero(vars)}, lex_order()), std::invalid_argument);
    // inconsistent system collapses to the unit ideal
    GroebnerBasis unit = buchberger({parse_poly(vars, "a1"), parse_poly(vars, "a1-1")}, lex_order());
    REQUIRE(unit.generators.size() == 1);
    CHECK(unit.generators[0].is_constant());
}

TEST_CASE("buchberger determinism") {
    auto vars = make_vars({"a1", "a3", "w"});
    HbmSystem sys = build_hbm_system(0, 3);
    GroebnerBasis a = buchberger(sys.ideal_equations, lex_order());
    GroebnerBasis b = buchberger(sys.ideal_equations, lex_order());
    CHECK(a.render() == b.render());
    CHECK(a.stats.spairs_processed == b.stats.spairs_processed);
}

TEST_CASE("budget exhaustion raises a structured error") {
    HbmSystem sys = build_hbm_system(0, 3);
    GroebnerBudget tiny;
    tiny.max_spairs = 1;
    try {
        buchberger(sys.ideal_equations, lex_order(), tiny);
        FAIL("expected BudgetExhausted");
    } catch (const BudgetExhausted& e) {
        CHECK(e.stats.spairs_processed >= 1);
    }
    GroebnerBudget tight;
    tight.max_total_coeff_bits = 8;
    CHECK_THROWS_AS(buchberger(sys.ideal_equations, lex_order(), tight), BudgetExhausted);
}

TEST_CASE("eliminate_univariate golden polynomials") {
    SUBCASE("order 3, m 0: the degree-8 generator, coefficient exact") {
        HbmSystem sys = build_hbm_system(0, 3);
        GroebnerBasis gb = buchberger(sys.ideal_equations, lex_order());
        UniPoly g1 = eliminate_univariate(gb);
        REQUIRE(g1.degree() == 8);
        CHECK(g1.coeff(8) == Rational(1553685075));
        CHECK(g1.coeff(6) == Rational(-3692301106L));
        CHECK(g1.coeff(4) == Rational(2143547654L));
        CHECK(g1.coeff(2) == Rational(-402413472L));
        CHECK(g1.coeff(0) == Rational(20301192));
        CHECK(g1.is_even());
        check_is_groebner_basis_of(gb, sys.ideal_equations);
    }
    SUBCASE("order 2, m 1: the second golden degree-8 generator") {
        HbmSystem sys = build_hbm_system(1, 2);
        UniPoly g1 = eliminate_univariate(buchberger(sys.ideal_equations, lex_order()));
        UniPoly expect(std::vector<Rational>{Rational(13824), Rational(0), Rational(-661376),
                                             Rational(0), Rational(5833600), Rational(0),
                                             Rational(-14625556), Rational(0),
                                             Rational(7635411)});
        CHECK(g1.proportional_positive(expect));
        CHECK(g1 == expect);  // primitive integer form is exact
    }
    SUBCASE("normalized mini ideal gives the quadratic") {
        auto vars = make_vars({"a1", "a3", "w"});
        UniPoly g1 = eliminate_univariate(buchberger(mini_ideal(vars), lex_order()));
        CHECK(g1.render() == "109*w^2 - 162");
    }
    SUBCASE("no univariate generator -> structured error") {
        auto vars = make_vars({"a1", "a3", "w"});
        GroebnerBasis gb = buchberger({parse_poly(vars, "a1*w - 1")}, lex_order());
        CHECK_THROWS_WITH_AS(eliminate_univariate(gb),
                             "ideal not zero-dimensional or wrong order", std::runtime_error);
    }
}

TEST_CASE("frequency univariates of the balance ideals are even") {
    for (auto [m, n] : {std::pair<unsigned, unsigned>{0, 2}, {0, 3}, {1, 2}, {2, 2}}) {
        HbmSystem sys = build_hbm_system(m, n);
        UniPoly g1 = eliminate_univariate(buchberger(sys.ideal_equations, lex_order()));
        CHECK(g1.is_even());
        CHECK(g1.coeff(0) != Rational(0));
    }
}

TEST_CASE("order conversion agrees with direct lex computation") {
    for (auto [m, n] : {std::pair<unsigned, unsigned>{0, 2}, {0, 3}, {1, 2}, {2, 2}}) {
        HbmSystem sys = build_hbm_system(m, n);
        GroebnerBasis direct = buchberger(sys.ideal_equations, lex_order());
        GroebnerBasis converted = lex_via_grevlex(sys.ideal_equations);
        CHECK(direct.render() == converted.render());
    }
    // and on the small normalized ideal
    auto vars = make_vars({"a1", "a3", "w"});
    CHECK(lex_via_grevlex(mini_ideal(vars)).render() ==
          buchberger(mini_ideal(vars), lex_order()).render());
}

TEST_CASE("grevlex basis passes the Buchberger criterion too") {
    HbmSystem sys = build_hbm_system(1, 2);
    GroebnerBasis gb = buchberger(sys.ideal_equations, grevlex_order());
    check_is_groebner_basis_of(gb, sys.ideal_equations);
}

TEST_CASE("basis serialization") {
    auto vars = make_vars({"a1", "a3", "w"});
    GroebnerBasis gb = buchberger(mini_ideal(vars), lex_order());
    CHECK(gb.render() == "109*w^2 - 162\n9*a3 + 1\n9*a1 - 10\n");
    nlohmann::json j = nlohmann::json::parse(gb.to_json_string());
    CHECK(j["order"] == "lex");
    REQUIRE(j["generators"].size() == 3);
    CHECK(j["generators"][0][0]["coefficient"] == "109");
    CHECK(j["generators"][0][0]["exponents"] == nlohmann::json::array({0, 0, 2}));
    CHECK(j["variables"] == nlohmann::json::array({"a1", "a3", "w"}));
}
