#include <doctest.h>

#include <random>

#include "bilip/polynomial.hpp"

using namespace bilip;

namespace {

RingPtr ring_xy() { return Ring::make({"x", "y"}); }

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

// Random polynomial generator for round-trip and property tests.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_terms = 6,
                       int max_exp = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    Polynomial f = Polynomial::zero(ring);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m = unit_monomial(ring->arity());
        for (auto& e : m.exponents) e = exp(rng);
        f = f + Polynomial::term(ring, m, make_rational(num(rng), den(rng)));
    }
    return f;
}

Monomial random_mono(std::mt19937_64& rng, int arity, int max_exp = 5) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    Monomial m = unit_monomial(arity);
    for (auto& e : m.exponents) e = exp(rng);
    return m;
}

}  // namespace

TEST_CASE("parse basic polynomials") {
    auto r = ring_xy();
    Polynomial f = parse_polynomial("y^2 - x^3", r);
    CHECK(f.num_terms() == 2);
    CHECK(f.terms().at(mono({0, 2})) == 1);
    CHECK(f.terms().at(mono({3, 0})) == -1);

    CHECK(parse_polynomial("0", r).is_zero());

    auto rx = Ring::make({"x"});
    Polynomial g = parse_polynomial("1/2*x + 1/2*x", rx);
    CHECK(g == Polynomial::variable(rx, 0));
}

TEST_CASE("parse errors carry position and reject implicit multiplication") {
    auto r = ring_xy();
    CHECK_THROWS_AS(parse_polynomial("x + z", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
}

TEST_CASE("order comparisons on textbook examples") {
    auto grevlex = MonomialOrder::grevlex();
    auto lex = MonomialOrder::lex();
    // x^2*y vs x*y^2 under grevlex x>y: equal degree, smaller last exponent wins.
    CHECK(grevlex.compare(mono({2, 1}), mono({1, 2})) > 0);
    // x vs y^2 under lex x>y.
    CHECK(lex.compare(mono({1, 0}), mono({0, 2})) > 0);
    CHECK(grevlex.compare(mono({3, 1}), mono({3, 1})) == 0);
}

TEST_CASE("order axioms hold on random triples") {
    std::mt19937_64 rng(42);
    auto orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                   MonomialOrder::weighted({2, 1, 3}, MonomialOrder::lex()),
                   MonomialOrder::block(1, MonomialOrder::grevlex(), MonomialOrder::grevlex())};
    for (const auto& ord : orders) {
        for (int i = 0; i < 300; ++i) {
            Monomial a = random_mono(rng, 3), b = random_mono(rng, 3), c = random_mono(rng, 3);
            // Totality / antisymmetry.
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            // 1 is minimal.
            Monomial one = unit_monomial(3);
            CHECK(ord.compare(one, a) <= 0);
            // Multiplicativity: a<b => ac<bc.
            if (ord.less(a, b)) CHECK(ord.less(mul(a, c), mul(b, c)));
        }
    }
}

TEST_CASE("arithmetic identities") {
    auto r = ring_xy();
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    Polynomial f = parse_polynomial("3*x^2*y - 1/2*y + 7", r);
    CHECK((f + (-f)).is_zero());
    Polynomial one = Polynomial::constant(r, 1);
    CHECK((x + one) * (x + one) == parse_polynomial("x^2 + 2*x + 1", r));
}

TEST_CASE("leading terms") {
    auto r = ring_xy();
    Polynomial f = parse_polynomial("y^2 - x^3", r);
    auto [m, c] = f.leading_term(MonomialOrder::grevlex());
    CHECK(m == mono({3, 0}));
    CHECK(c == -1);
    auto [ml, cl] = f.leading_term(MonomialOrder::lex());
    CHECK(ml == mono({3, 0}));
    Polynomial five = Polynomial::constant(r, 5);
    auto [mc, cc] = five.leading_term(MonomialOrder::grevlex());
    CHECK(mc.is_unit());
    CHECK(cc == 5);
    CHECK_THROWS_AS(Polynomial::zero(r).leading_term(MonomialOrder::lex()), PreconditionError);
}

TEST_CASE("leading term of product is product of leading terms") {
    std::mt19937_64 rng(7);
    auto r = Ring::make({"x", "y", "z"});
    auto ord = MonomialOrder::grevlex();
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_poly(rng, r), g = random_poly(rng, r);
        if (f.is_zero() || g.is_zero()) continue;
        auto [mf, cf] = f.leading_term(ord);
        auto [mg, cg] = g.leading_term(ord);
        auto [mp, cp] = (f * g).leading_term(ord);
        CHECK(mp == mul(mf, mg));
        CHECK(cp == cf * cg);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("evaluate") {
    auto r = ring_xy();
    Polynomial f = parse_polynomial("y^2 - x^3", r);
    CHECK(f.evaluate({1, 1}) == 0);
    CHECK(f.evaluate({0, 0}) == 0);
    CHECK(parse_polynomial("x + y", r).evaluate({Rational(1, 2), Rational(1, 3)}) ==
          Rational(5, 6));
    CHECK_THROWS_AS(f.evaluate({1}), PreconditionError);
}

TEST_CASE("print-parse round trip on random polynomials") {
    std::mt19937_64 rng(2024);
    auto r = Ring::make({"x", "y", "z"});
    for (int i = 0; i < 1000; ++i) {
        Polynomial f = random_poly(rng, r);
        CHECK(parse_polynomial(f.to_string(), r) == f);
    }
}

TEST_CASE("rational arithmetic agrees with a big-integer oracle") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational x = make_rational(a, b), y = make_rational(c, d);
        // a/b + c/d = (ad + cb) / bd, cross-multiplied through integers.
        Rational sum = x + y;
        CHECK(sum.get_num() * (Integer(b) * d) == (Integer(a) * d + Integer(c) * b) * sum.get_den());
        Rational prod = x * y;
        CHECK(prod.get_num() * (Integer(b) * d) == Integer(a) * c * prod.get_den());
    }
}

TEST_CASE("ring mismatch is rejected") {
    auto r1 = ring_xy();
    auto r2 = Ring::make({"x", "z"});
    CHECK_THROWS_AS(Polynomial::variable(r1, 0) + Polynomial::variable(r2, 0), PreconditionError);
}
