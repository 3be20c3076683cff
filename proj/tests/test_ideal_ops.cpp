#include <doctest.h>

#include <random>

#include "bilip/ideal_ops.hpp"

using namespace bilip;

namespace {

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> g;
    for (const char* s : gens) g.push_back(parse_polynomial(s, r));
    return Ideal(r, std::move(g));
}

Parametrization param_curve(std::initializer_list<const char*> comps,
                            std::vector<std::string> targets) {
    auto rt = Ring::make({"t"});
    Parametrization p;
    p.param_ring = rt;
    for (const char* c : comps) p.components.push_back(parse_polynomial(c, rt));
    p.target_names = std::move(targets);
    return p;
}

}  // namespace

TEST_CASE("eliminate the parameter of a parabola") {
    auto r = Ring::make({"t", "x", "y"});
    Ideal I = ideal_of(r, {"x - t", "y - t^2"});
    Ideal E = eliminate(I, {"t"});
    auto rxy = Ring::make({"x", "y"});
    CHECK(ideal_equal(E, ideal_of(rxy, {"y - x^2"})));
}

TEST_CASE("eliminate nothing is the identity") {
    auto r = Ring::make({"x", "y"});
    Ideal I = ideal_of(r, {"y - x^2"});
    CHECK(ideal_equal(eliminate(I, {}), I));
}

TEST_CASE("eliminate from twisted-style curve, membership oracle") {
    auto r = Ring::make({"t", "x", "y", "z"});
    Ideal I = ideal_of(r, {"x - t", "y - t^3", "z - t^2"});
    Ideal E = eliminate(I, {"t"});
    auto rxyz = Ring::make({"x", "y", "z"});
    CHECK(ideal_membership(parse_polynomial("z - x^2", rxyz), E));
    CHECK(ideal_membership(parse_polynomial("y - x*z", rxyz), E));
}

TEST_CASE("implicitize cusp and parabola") {
    auto cusp = implicitize(param_curve({"t^2", "t^3"}, {"x", "y"}));
    auto rxy = Ring::make({"x", "y"});
    CHECK(ideal_equal(cusp, ideal_of(rxy, {"y^2 - x^3"})));

    auto par = implicitize(param_curve({"t", "t^2"}, {"x", "y"}));
    CHECK(ideal_equal(par, ideal_of(rxy, {"y - x^2"})));

    // Dense image in C^1: zero ideal.
    auto line = implicitize(param_curve({"t"}, {"x"}));
    CHECK(line.generators.empty());
}

TEST_CASE("implicitize output vanishes along the parametrization") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 8);
    auto p = param_curve({"t^2 - t", "t^3 + 1"}, {"x", "y"});
    Ideal I = implicitize(p);
    CHECK(!I.generators.empty());
    for (int i = 0; i < 50; ++i) {
        Rational t = make_rational(num(rng), den(rng));
        auto pt = p.evaluate({t});
        for (const auto& g : I.generators) CHECK(g.evaluate(pt) == 0);
    }
}

TEST_CASE("saturation") {
    auto r = Ring::make({"x", "y"});
    CHECK(ideal_equal(saturate(ideal_of(r, {"x*y"}), parse_polynomial("x", r)),
                      ideal_of(r, {"y"})));
    auto sat = saturate(ideal_of(r, {"x^2"}), parse_polynomial("x", r));
    CHECK(groebner_basis(sat, MonomialOrder::grevlex()).is_unit());
    Ideal I = ideal_of(r, {"y - x^2", "x*y"});
    CHECK(ideal_equal(saturate(I, Polynomial::constant(r, 1)), I));
}

TEST_CASE("saturate is idempotent") {
    auto r = Ring::make({"x", "y"});
    Ideal I = ideal_of(r, {"x^2*y", "x*y^2"});
    Polynomial g = parse_polynomial("x", r);
    Ideal s1 = saturate(I, g);
    CHECK(ideal_equal(saturate(s1, g), s1));
}

TEST_CASE("saturate by an ideal") {
    auto r = Ring::make({"x", "y", "z"});
    Ideal I = ideal_of(r, {"x*y", "x*z"});
    Ideal J = ideal_of(r, {"y", "z"});
    CHECK(ideal_equal(saturate_ideal(I, J), ideal_of(r, {"x"})));
    CHECK(ideal_equal(saturate_ideal(I, ideal_of(r, {"1"})), I));
    auto rx = Ring::make({"x"});
    CHECK(groebner_basis(saturate_ideal(ideal_of(rx, {"x"}), ideal_of(rx, {"x"})),
                         MonomialOrder::grevlex())
              .is_unit());
}

TEST_CASE("intersection") {
    auto r = Ring::make({"x", "y"});
    CHECK(ideal_equal(intersect(ideal_of(r, {"x"}), ideal_of(r, {"y"})), ideal_of(r, {"x*y"})));
    Ideal I = ideal_of(r, {"y - x^2"});
    CHECK(ideal_equal(intersect(I, ideal_of(r, {"1"})), I));
    CHECK(ideal_equal(intersect(ideal_of(r, {"x^2"}), ideal_of(r, {"x"})), ideal_of(r, {"x^2"})));
}

TEST_CASE("intersection is commutative and associative") {
    auto r = Ring::make({"x", "y"});
    Ideal A = ideal_of(r, {"x"});
    Ideal B = ideal_of(r, {"y - x^2"});
    Ideal C = ideal_of(r, {"y"});
    CHECK(ideal_equal(intersect(A, B), intersect(B, A)));
    CHECK(ideal_equal(intersect(intersect(A, B), C), intersect(A, intersect(B, C))));
}

TEST_CASE("homogenize and dehomogenize") {
    auto r = Ring::make({"x", "y"});
    Ideal I = ideal_of(r, {"y - x^2"});
    Ideal H = homogenize(I, "x0");
    auto rh = Ring::make({"x0", "x", "y"});
    CHECK(ideal_equal(H, ideal_of(rh, {"x0*y - x^2"})));
    CHECK(ideal_equal(dehomogenize(H, "x0"), I));
}

TEST_CASE("homogenize-dehomogenize round trip on random small ideals") {
    std::mt19937_64 rng(17);
    auto r = Ring::make({"x", "y"});
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) {
            Polynomial f = Polynomial::zero(r);
            for (int j = 0; j < 3; ++j) {
                Monomial m = unit_monomial(2);
                for (auto& e : m.exponents) e = exp(rng);
                long c = coef(rng);
                if (c) f = f + Polynomial::term(r, m, c);
            }
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        Ideal I(r, gens);
        if (groebner_basis(I, MonomialOrder::grevlex()).is_unit()) continue;
        CHECK(ideal_equal(dehomogenize(homogenize(I, "x0"), "x0"), I));
    }
}

TEST_CASE("radical membership") {
    auto r = Ring::make({"x", "y"});
    CHECK(radical_membership(parse_polynomial("x", r), ideal_of(r, {"x^2"})));
    CHECK(!radical_membership(parse_polynomial("y", r), ideal_of(r, {"x^2"})));
    CHECK(radical_membership(Polynomial::constant(r, 1), ideal_of(r, {"1"})));
}

TEST_CASE("elimination composes over disjoint blocks") {
    auto r = Ring::make({"t", "s", "x", "y"});
    Ideal I = ideal_of(r, {"x - t^2", "y - s", "s - t"});
    Ideal two_step = eliminate(eliminate(I, {"t"}), {"s"});
    Ideal one_step = eliminate(I, {"t", "s"});
    CHECK(ideal_equal(two_step, one_step));
}
