#include "bilip/invariants.hpp"

#include "bilip/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bilip {

bool on_variety(const Ideal& I, const AffinePoint& p) {
    for (const auto& g : I.generators)
        if (g.evaluate(p) != 0) return false;
    return true;
}

namespace {

using ZPoly = std::vector<Integer>;  // coefficients of t^0, t^1, ...

ZPoly zp_sub_shifted(const ZPoly& a, const ZPoly& b, int shift) {
    ZPoly r = a;
    if (r.size() < b.size() + static_cast<std::size_t>(shift))
        r.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(shift)] -= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Removes generators divisible by another generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_compare(a, b) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < gens.size() && !red; ++j)
            if (i != j && divides(gens[j], gens[i]) && !(gens[j] == gens[i] && j > i)) red = true;
        if (!red) out.push_back(gens[i]);
    }
    return out;
}

std::string key_of(const std::vector<Monomial>& gens) {
    std::ostringstream os;
    for (const auto& m : gens) {
        for (int e : m.exponents) os << e << ',';
        os << ';';
    }
    return os.str();
}

ZPoly numerator_rec(std::vector<Monomial> gens, std::map<std::string, ZPoly>& memo) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {Integer(1)};
    if (gens.size() == 1 && gens.front().is_unit()) return {};

    std::string key = key_of(gens);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Split off the last (grevlex-largest) generator m:
    //   N(I) = N(I') - t^deg(m) * N(I' : m)
    Monomial m = gens.back();
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    std::vector<Monomial> colon;
    colon.reserve(rest.size());
    for (const auto& g : rest) {
        Monomial q = g;
        for (int i = 0; i < q.arity(); ++i)
            q.exponents[i] = std::max(0, g.exponents[i] - m.exponents[i]);
        colon.push_back(std::move(q));
    }
    ZPoly result = zp_sub_shifted(numerator_rec(rest, memo), numerator_rec(colon, memo), m.degree());
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens, int) {
    std::map<std::string, ZPoly> memo;
    return numerator_rec(gens, memo);
}

HilbertData hilbert_data(const Ideal& I, const Budget& budget) {
    int n = I.ring->arity();
    if (I.generators.empty()) return {n, 1};

    GroebnerBasis gb = groebner_basis(I, MonomialOrder::grevlex(), budget);
    if (gb.is_unit()) throw PreconditionError("hilbert_data: unit ideal (empty variety)");

    std::vector<Monomial> lms;
    for (const auto& g : gb.elements) lms.push_back(g.leading_monomial(gb.order));
    ZPoly num = hilbert_numerator(lms, n);

    // N(t) = (1-t)^e * Q(t) with Q(1) != 0; dim = n - e, degree = |Q(1)|.
    int e = 0;
    ZPoly q = num;
    auto eval1 = [](const ZPoly& p) {
        Integer s = 0;
        for (const auto& c : p) s += c;
        return s;
    };
    while (!q.empty() && eval1(q) == 0) {
        // Divide by (1 - t).
        ZPoly d(q.size() - 1);
        Integer carry = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = q[i] + carry;
            carry = d[i];
        }
        q = std::move(d);
        while (!q.empty() && q.back() == 0) q.pop_back();
        ++e;
    }
    Integer deg = eval1(q);
    if (deg < 0) deg = -deg;
    if (deg == 0) deg = 1;
    return {n - e, deg};
}

int dimension(const Ideal& I, const Budget& budget) { return hilbert_data(I, budget).dimension; }
Integer degree(const Ideal& I, const Budget& budget) { return hilbert_data(I, budget).degree; }

Ideal translate_to_origin(const Ideal& I, const AffinePoint& p) {
    const RingPtr& ring = I.ring;
    if (static_cast<int>(p.size()) != ring->arity())
        throw PreconditionError("translate: point length mismatch");
    std::vector<Polynomial> images;
    for (int i = 0; i < ring->arity(); ++i)
        images.push_back(Polynomial::variable(ring, i) +
                         Polynomial::constant(ring, p[static_cast<std::size_t>(i)]));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(g.substitute(images));
    return Ideal(ring, std::move(gens));
}

Ideal tangent_cone(const Ideal& I, const AffinePoint& p, const Budget& budget) {
    if (!on_variety(I, p)) throw PreconditionError("tangent_cone: point not on the variety");
    const RingPtr& ring = I.ring;
    if (I.generators.empty()) return Ideal(ring);

    Ideal at0 = translate_to_origin(I, p);
    std::string h = fresh_names("h_tc", 1, ring->variables()).front();
    Ideal hom = homogenize(at0, h, budget);

    // GB under a graded order in which the homogenizing variable dominates,
    // then the minimal-degree form of each dehomogenized element.
    MonomialOrder ord = MonomialOrder::graded_with_dominant(0, hom.ring->arity());
    GroebnerBasis gb = groebner_basis(hom, ord, budget);

    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements) {
        Polynomial f = transport(dehomogenize(Ideal(hom.ring, {g}), h, budget).generators.front(), ring);
        if (f.is_zero()) continue;
        gens.push_back(f.homogeneous_component(f.min_degree()));
    }
    return Ideal(ring, std::move(gens));
}

Integer multiplicity(const Ideal& I, const AffinePoint& p, const Budget& budget) {
    Ideal cone = tangent_cone(I, p, budget);
    return hilbert_data(cone, budget).degree;
}

int zariski_tangent_dim(const Ideal& I, const AffinePoint& p, const Budget& budget) {
    if (!on_variety(I, p)) throw PreconditionError("zariski_tangent_dim: point not on the variety");
    int n = I.ring->arity();
    if (I.generators.empty()) return n;

    // Differentiate a reduced GB, not the raw generators: the Jacobian must
    // come from a generating set of the full ideal.
    GroebnerBasis gb = groebner_basis(I, MonomialOrder::grevlex(), budget);
    RationalMatrix jac;
    for (const auto& g : gb.elements) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row.push_back(g.derivative(j).evaluate(p));
        jac.push_back(std::move(row));
    }
    return n - matrix_rank(jac);
}

}  // namespace bilip
