#include <doctest.h>

#include <random>

#include "bilip/invariants.hpp"

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

// Univariate gcd via repeated remainder; used by the squarefree oracle.
Polynomial uni_gcd(Polynomial a, Polynomial b) {
    auto ord = MonomialOrder::grevlex();
    while (!b.is_zero()) {
        std::vector<Polynomial> divs{b};
        Polynomial r = normal_form(a, divs, ord);
        a = b;
        b = r;
    }
    return a;
}

// Number of distinct complex roots of a squarefree polynomial is its degree;
// returns the degree after checking squarefreeness.
int distinct_root_count(const Polynomial& f) {
    REQUIRE(!f.is_zero());
    Polynomial g = uni_gcd(f, f.derivative(0));
    REQUIRE(g.is_constant());  // squarefree: all roots simple
    return f.total_degree();
}

}  // namespace

TEST_CASE("hilbert data: twisted cubic with root-count oracle") {
    auto r = Ring::make({"x", "y", "z"});
    Ideal I = ideal_of(r, {"y - x^2", "z - x^3"});
    HilbertData h = hilbert_data(I);
    CHECK(h.dimension == 1);
    CHECK(h.degree == 3);

    // Oracle: a generic hyperplane a*x + b*y + c*z = d pulls back to a cubic
    // in t along (t, t^2, t^3) with three distinct roots.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coef(1, 50);
    auto rt = Ring::make({"t"});
    Polynomial t = Polynomial::variable(rt, 0);
    for (int i = 0; i < 10; ++i) {
        Polynomial f = t.scaled(coef(rng)) + t.pow(2).scaled(coef(rng)) +
                       t.pow(3).scaled(coef(rng)) - Polynomial::constant(rt, coef(rng));
        CHECK(distinct_root_count(f) == 3);
    }
}

TEST_CASE("hilbert data: conic") {
    auto r = Ring::make({"x", "y"});
    HilbertData h = hilbert_data(ideal_of(r, {"x^2 + y^2 - 1"}));
    CHECK(h.dimension == 1);
    CHECK(h.degree == 2);

    // Oracle: the line y = k*x + c meets the circle where
    // (1+k^2) x^2 + 2kc x + c^2 - 1 = 0; nonzero discriminant gives 2 points.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> coef(2, 40);
    for (int i = 0; i < 10; ++i) {
        Rational k(coef(rng)), c(coef(rng));
        Rational A = 1 + k * k, B = 2 * k * c, C = c * c - 1;
        CHECK(B * B - 4 * A * C != 0);
    }
}

TEST_CASE("hilbert data: single point and zero ideal") {
    auto r = Ring::make({"x", "y", "z"});
    HilbertData h = hilbert_data(ideal_of(r, {"x", "y", "z"}));
    CHECK(h.dimension == 0);
    CHECK(h.degree == 1);

    HilbertData z = hilbert_data(Ideal(r));
    CHECK(z.dimension == 3);
    CHECK(z.degree == 1);

    CHECK_THROWS_AS(hilbert_data(ideal_of(r, {"1"})), PreconditionError);
}

TEST_CASE("degrees of benchmark curves with root-count oracles") {
    // X of the two-curve example: (t, t^3 + t^2, t^5), degree 5.
    auto X = implicitize(param_curve({"t", "t^3 + t^2", "t^5"}, {"x", "y", "z"}));
    CHECK(degree(X) == 5);
    auto rt = Ring::make({"t"});
    Polynomial t = Polynomial::variable(rt, 0);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coef(1, 30);
    for (int i = 0; i < 10; ++i) {
        Polynomial f = t.scaled(coef(rng)) +
                       (t.pow(3) + t.pow(2)).scaled(coef(rng)) +
                       t.pow(5).scaled(coef(rng)) - Polynomial::constant(rt, coef(rng));
        CHECK(distinct_root_count(f) == 5);
    }

    // Monomial curve (t^4, t^5, t^6, t^7): degree 7.
    auto M = implicitize(param_curve({"t^4", "t^5", "t^6", "t^7"}, {"x1", "x2", "x3", "x4"}));
    CHECK(degree(M) == 7);
    for (int i = 0; i < 10; ++i) {
        Polynomial f = t.pow(4).scaled(coef(rng)) + t.pow(5).scaled(coef(rng)) +
                       t.pow(6).scaled(coef(rng)) + t.pow(7).scaled(coef(rng)) -
                       Polynomial::constant(rt, coef(rng));
        CHECK(distinct_root_count(f) == 7);
    }

    auto r3 = Ring::make({"x", "y", "z"});
    CHECK(degree(ideal_of(r3, {"x + y + z - 1"})) == 1);
}

TEST_CASE("tangent cones") {
    auto r = Ring::make({"x", "y"});
    Ideal cusp = ideal_of(r, {"y^2 - x^3"});

    Ideal c0 = tangent_cone(cusp, {0, 0});
    CHECK(ideal_equal(c0, ideal_of(r, {"y^2"})));

    Ideal par = ideal_of(r, {"y - x^2"});
    CHECK(ideal_equal(tangent_cone(par, {0, 0}), ideal_of(r, {"y"})));

    // Smooth point of the cusp: the cone is the tangent line (degree 1).
    // Implicit-function oracle: the Jacobian (-3x^2, 2y) = (-3, 2) at (1,1)
    // has rank 1.
    Ideal c1 = tangent_cone(cusp, {1, 1});
    REQUIRE(c1.generators.size() == 1);
    CHECK(c1.generators.front().total_degree() == 1);

    CHECK_THROWS_AS(tangent_cone(cusp, {1, 2}), PreconditionError);
}

TEST_CASE("tangent cone generators are homogeneous, dimension preserved") {
    auto r = Ring::make({"x", "y", "z"});
    auto X = implicitize(param_curve({"t", "t^3 + t^2", "t^5"}, {"x", "y", "z"}));
    Ideal cone = tangent_cone(X, {0, 0, 0});
    for (const auto& g : cone.generators) CHECK(g.is_homogeneous());
    CHECK(dimension(cone) == dimension(X));
}

TEST_CASE("multiplicity") {
    auto r = Ring::make({"x", "y"});
    Ideal cusp = ideal_of(r, {"y^2 - x^3"});
    CHECK(multiplicity(cusp, {0, 0}) == 2);
    CHECK(multiplicity(cusp, {1, 1}) == 1);  // smooth point
    CHECK(multiplicity(ideal_of(r, {"y - x^2"}), {0, 0}) == 1);

    // Monomial curve: multiplicity at 0 equals the lowest exponent.
    auto M = implicitize(param_curve({"t^4", "t^5", "t^6", "t^7"}, {"x1", "x2", "x3", "x4"}));
    CHECK(multiplicity(M, {0, 0, 0, 0}) == 4);
    CHECK(multiplicity(M, {0, 0, 0, 0}) <= degree(M));
}

TEST_CASE("zariski tangent dimension") {
    auto M = implicitize(param_curve({"t^4", "t^5", "t^6", "t^7"}, {"x1", "x2", "x3", "x4"}));
    CHECK(zariski_tangent_dim(M, {0, 0, 0, 0}) == 4);

    auto r = Ring::make({"x", "y"});
    CHECK(zariski_tangent_dim(ideal_of(r, {"y - x^2"}), {0, 0}) == 1);
    CHECK_THROWS_AS(zariski_tangent_dim(ideal_of(r, {"y - x^2"}), {1, 2}), PreconditionError);
}

TEST_CASE("degree is invariant under unimodular coordinate change") {
    std::mt19937_64 rng(37);
    auto r = Ring::make({"x", "y", "z"});
    auto X = implicitize(param_curve({"t", "t^3 + t^2", "t^5"}, {"x", "y", "z"}));
    std::uniform_int_distribution<long> c(-2, 2);
    for (int trial = 0; trial < 3; ++trial) {
        // Random product of shears is unimodular.
        std::vector<Polynomial> images;
        for (int i = 0; i < 3; ++i) images.push_back(Polynomial::variable(r, i));
        for (int s = 0; s < 4; ++s) {
            int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
            if (i == j) continue;
            images[static_cast<std::size_t>(i)] =
                images[static_cast<std::size_t>(i)] +
                images[static_cast<std::size_t>(j)].scaled(c(rng));
        }
        std::vector<Polynomial> gens;
        for (const auto& g : X.generators) gens.push_back(g.substitute(images));
        CHECK(degree(Ideal(r, gens)) == degree(X));
    }
}
