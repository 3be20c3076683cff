#include "bilip/ideal_ops.hpp"

#include <algorithm>

namespace bilip {

std::vector<Rational> Parametrization::evaluate(const std::vector<Rational>& t) const {
    std::vector<Rational> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.evaluate(t));
    return out;
}

Polynomial transport(const Polynomial& f, const RingPtr& target) {
    const RingPtr& src = f.ring();
    std::vector<int> map(static_cast<std::size_t>(src->arity()), -1);
    for (int i = 0; i < src->arity(); ++i) {
        auto idx = target->index_of(src->name(i));
        if (idx) map[static_cast<std::size_t>(i)] = *idx;
    }
    Polynomial::TermMap terms;
    for (const auto& [m, c] : f.terms()) {
        Monomial n = unit_monomial(target->arity());
        for (int i = 0; i < m.arity(); ++i) {
            if (m.exponents[i] == 0) continue;
            int j = map[static_cast<std::size_t>(i)];
            if (j < 0)
                throw PreconditionError("transport: variable " + src->name(i) +
                                        " missing from target ring");
            n.exponents[static_cast<std::size_t>(j)] = m.exponents[i];
        }
        terms.emplace(std::move(n), c);
    }
    return Polynomial(target, std::move(terms));
}

Ideal transport(const Ideal& I, const RingPtr& target) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(transport(g, target));
    return Ideal(target, std::move(gens));
}

std::vector<std::string> fresh_names(const std::string& stem, int count,
                                     const std::vector<std::string>& taken) {
    std::vector<std::string> names;
    int suffix = 0;
    while (static_cast<int>(names.size()) < count) {
        std::string cand = stem + std::to_string(suffix++);
        if (std::find(taken.begin(), taken.end(), cand) == taken.end()) names.push_back(cand);
    }
    return names;
}

namespace {

bool uses_only(const Polynomial& f, const std::vector<bool>& allowed) {
    for (const auto& [m, c] : f.terms())
        for (int i = 0; i < m.arity(); ++i)
            if (m.exponents[i] > 0 && !allowed[static_cast<std::size_t>(i)]) return false;
    return true;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::set<std::string>& drop, const Budget& budget) {
    const RingPtr& ring = I.ring;
    for (const auto& v : drop)
        if (!ring->index_of(v)) throw PreconditionError("eliminate: unknown variable " + v);

    std::vector<std::string> dropped, kept;
    for (const auto& v : ring->variables())
        (drop.count(v) ? dropped : kept).push_back(v);
    if (kept.empty()) throw PreconditionError("eliminate: cannot drop every variable");
    RingPtr kept_ring = Ring::make(kept);
    if (dropped.empty()) return transport(I, kept_ring);

    // Reorder so the dropped block comes first, then use a block order.
    std::vector<std::string> reordered = dropped;
    reordered.insert(reordered.end(), kept.begin(), kept.end());
    RingPtr work = Ring::make(reordered);
    Ideal J = transport(I, work);
    MonomialOrder ord = MonomialOrder::block(static_cast<int>(dropped.size()),
                                             MonomialOrder::grevlex(), MonomialOrder::grevlex());
    GroebnerBasis gb = groebner_basis(J, ord, budget);

    std::vector<bool> allowed(static_cast<std::size_t>(work->arity()), false);
    for (std::size_t i = dropped.size(); i < reordered.size(); ++i) allowed[i] = true;

    std::vector<Polynomial> out;
    for (const auto& g : gb.elements)
        if (uses_only(g, allowed)) out.push_back(transport(g, kept_ring));
    return Ideal(kept_ring, std::move(out));
}

Ideal implicitize(const Parametrization& p, const Budget& budget) {
    const auto& params = p.param_ring->variables();
    if (static_cast<int>(p.target_names.size()) != p.ambient_dim())
        throw PreconditionError("implicitize: target name count mismatch");
    std::vector<std::string> all = params;
    for (const auto& t : p.target_names) {
        if (std::find(all.begin(), all.end(), t) != all.end())
            throw PreconditionError("implicitize: target variable clashes with parameter: " + t);
        all.push_back(t);
    }
    RingPtr big = Ring::make(all);
    std::vector<Polynomial> gens;
    for (int i = 0; i < p.ambient_dim(); ++i) {
        auto xi = big->index_of(p.target_names[static_cast<std::size_t>(i)]);
        gens.push_back(Polynomial::variable(big, *xi) -
                       transport(p.components[static_cast<std::size_t>(i)], big));
    }
    return eliminate(Ideal(big, std::move(gens)),
                     std::set<std::string>(params.begin(), params.end()), budget);
}

Ideal saturate(const Ideal& I, const Polynomial& g, const Budget& budget) {
    if (g.is_zero()) throw PreconditionError("saturate: zero polynomial");
    const RingPtr& ring = I.ring;
    std::string w = fresh_names("w_sat", 1, ring->variables()).front();
    std::vector<std::string> all = {w};
    all.insert(all.end(), ring->variables().begin(), ring->variables().end());
    RingPtr big = Ring::make(all);

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators) gens.push_back(transport(f, big));
    gens.push_back(Polynomial::constant(big, 1) -
                   Polynomial::variable(big, 0) * transport(g, big));
    Ideal result = eliminate(Ideal(big, std::move(gens)), {w}, budget);
    return transport(result, ring);
}

Ideal saturate_ideal(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (!same_ring(I.ring, J.ring)) throw PreconditionError("saturate_ideal: ring mismatch");
    if (J.generators.empty()) throw PreconditionError("saturate_ideal: zero ideal divisor");
    bool first = true;
    Ideal acc(I.ring);
    for (const auto& g : J.generators) {
        Ideal s = saturate(I, g, budget);
        acc = first ? s : intersect(acc, s, budget);
        first = false;
    }
    return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (!same_ring(I.ring, J.ring)) throw PreconditionError("intersect: ring mismatch");
    const RingPtr& ring = I.ring;
    // V(I ∩ J) = V(I) ∪ V(J); the zero ideal is the whole space.
    if (I.generators.empty() || J.generators.empty()) return Ideal(ring);

    std::string w = fresh_names("w_int", 1, ring->variables()).front();
    std::vector<std::string> all = {w};
    all.insert(all.end(), ring->variables().begin(), ring->variables().end());
    RingPtr big = Ring::make(all);
    Polynomial t = Polynomial::variable(big, 0);
    Polynomial one_minus_t = Polynomial::constant(big, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators) gens.push_back(t * transport(f, big));
    for (const auto& f : J.generators) gens.push_back(one_minus_t * transport(f, big));
    Ideal result = eliminate(Ideal(big, std::move(gens)), {w}, budget);
    return transport(result, ring);
}

Polynomial homogenize_poly(const Polynomial& f, const RingPtr& target, int var_index) {
    int d = f.total_degree();
    Polynomial lifted = transport(f, target);
    Polynomial::TermMap terms;
    for (const auto& [m, c] : lifted.terms()) {
        Monomial n = m;
        n.exponents[static_cast<std::size_t>(var_index)] += d - m.degree();
        terms.emplace(std::move(n), c);
    }
    return Polynomial(target, std::move(terms));
}

Ideal homogenize(const Ideal& I, const std::string& newvar, const Budget& budget) {
    const RingPtr& ring = I.ring;
    if (ring->index_of(newvar)) throw PreconditionError("homogenize: variable already present");
    std::vector<std::string> all = {newvar};
    all.insert(all.end(), ring->variables().begin(), ring->variables().end());
    RingPtr big = Ring::make(all);

    // Homogenizing an arbitrary generating set does not give the projective
    // closure; a graded-order GB does.
    GroebnerBasis gb = groebner_basis(I, MonomialOrder::grevlex(), budget);
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements) gens.push_back(homogenize_poly(g, big, 0));
    return Ideal(big, std::move(gens));
}

Ideal dehomogenize(const Ideal& I, const std::string& var, const Budget&) {
    const RingPtr& ring = I.ring;
    auto vi = ring->index_of(var);
    if (!vi) throw PreconditionError("dehomogenize: unknown variable " + var);
    std::vector<std::string> rest;
    for (const auto& v : ring->variables())
        if (v != var) rest.push_back(v);
    RingPtr small = Ring::make(rest);

    std::vector<Polynomial> images;
    for (int i = 0; i < ring->arity(); ++i) {
        if (i == *vi)
            images.push_back(Polynomial::constant(small, 1));
        else
            images.push_back(Polynomial::variable(small, *small->index_of(ring->name(i))));
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(g.substitute(images));
    return Ideal(small, std::move(gens));
}

bool radical_membership(const Polynomial& f, const Ideal& I, const Budget& budget) {
    if (!same_ring(f.ring(), I.ring)) throw PreconditionError("radical_membership: ring mismatch");
    if (f.is_zero()) return true;
    const RingPtr& ring = I.ring;
    std::string w = fresh_names("w_rad", 1, ring->variables()).front();
    std::vector<std::string> all = ring->variables();
    all.push_back(w);
    RingPtr big = Ring::make(all);

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(transport(g, big));
    gens.push_back(Polynomial::constant(big, 1) -
                   Polynomial::variable(big, big->arity() - 1) * transport(f, big));
    GroebnerBasis gb = groebner_basis(Ideal(big, std::move(gens)), MonomialOrder::grevlex(), budget);
    return gb.is_unit();
}

}  // namespace bilip
