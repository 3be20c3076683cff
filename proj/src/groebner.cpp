#include "bilip/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace bilip {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
    generators.reserve(gens.size());
    for (auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw PreconditionError("ideal generator ring mismatch");
        if (!g.is_zero()) generators.push_back(std::move(g));
    }
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const MonomialOrder& ord, BudgetGuard* guard) {
    struct Divisor {
        const Polynomial* g;
        Monomial lm;
        Rational lc;
    };
    std::vector<Divisor> divisors;
    divisors.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) throw PreconditionError("normal_form: zero divisor polynomial");
        if (!same_ring(g.ring(), f.ring())) throw PreconditionError("normal_form: ring mismatch");
        auto [m, c] = g.leading_term(ord);
        divisors.push_back({&g, std::move(m), std::move(c)});
    }

    Polynomial p = f;
    Polynomial r = Polynomial::zero(f.ring());
    while (!p.is_zero()) {
        if (guard) guard->tick();
        auto [m, c] = p.leading_term(ord);
        bool divided = false;
        for (const auto& d : divisors) {
            if (divides(d.lm, m)) {
                p = p - mul_term(*d.g, div(m, d.lm), c / d.lc);
                divided = true;
                break;
            }
        }
        if (!divided) {
            r = r + Polynomial::term(f.ring(), m, c);
            p = p - Polynomial::term(f.ring(), m, c);
        }
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    require_same_ring(f, g);
    auto [mf, cf] = f.leading_term(ord);
    auto [mg, cg] = g.leading_term(ord);
    Monomial l = lcm(mf, mg);
    return mul_term(f, div(l, mf), 1 / cf) - mul_term(g, div(l, mg), 1 / cg);
}

namespace {

// Sorts ascending under ord (deterministic output layout).
void sort_basis(std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
}

GroebnerBasis buchberger(const std::vector<Polynomial>& input, const MonomialOrder& ord,
                         const Budget& budget) {
    BudgetGuard guard(budget);

    std::vector<Polynomial> G;
    for (const auto& f : input) {
        if (f.is_zero()) continue;
        G.push_back(f.monic(ord));
    }

    struct Pair {
        int lcm_deg;
        int i, j;
        bool operator<(const Pair& o) const {
            if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
            if (j != o.j) return j < o.j;
            return i < o.i;
        }
    };

    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(g.leading_monomial(ord));

    std::set<Pair> pairs;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.insert({lcm(lms[static_cast<std::size_t>(i)], lms[static_cast<std::size_t>(j)]).degree(), i, j});
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs_for(j);

    std::set<std::pair<int, int>> done;
    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        done.insert({i, j});

        const Monomial& li = lms[static_cast<std::size_t>(i)];
        const Monomial& lj = lms[static_cast<std::size_t>(j)];
        // Buchberger's first criterion: coprime leading monomials.
        if (coprime(li, lj)) continue;
        // Chain criterion: some k with lm(k) | lcm(i,j) and both (i,k), (j,k)
        // already treated.
        Monomial l = lcm(li, lj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!divides(lms[static_cast<std::size_t>(k)], l)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(i, k)) && done.count(key(j, k))) skip = true;
        }
        if (skip) continue;

        guard.tick();
        Polynomial s = s_polynomial(G[static_cast<std::size_t>(i)], G[static_cast<std::size_t>(j)], ord);
        Polynomial r = normal_form(s, G, ord, &guard);
        if (r.is_zero()) continue;
        r = r.monic(ord);
        G.push_back(r);
        lms.push_back(r.leading_monomial(ord));
        push_pairs_for(static_cast<int>(G.size()) - 1);
        // Unit short-circuit: the whole ring.
        if (r.is_constant()) break;
    }

    // Minimize: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < G.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
            if (a == b) continue;
            if (divides(lms[b], lms[a])) {
                if (lms[a] == lms[b] && a < b) continue;  // keep one representative
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(G[a]);
    }

    // Autoreduce: fully reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        Polynomial r = normal_form(minimal[a], others, ord, &guard);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    sort_basis(reduced, ord);

    if (std::any_of(reduced.begin(), reduced.end(),
                    [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); })) {
        RingPtr ring = reduced.front().ring();
        reduced = {Polynomial::constant(ring, 1)};
    }
    return GroebnerBasis{ord, std::move(reduced)};
}

}  // namespace

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord, const Budget& budget) {
    std::string k = ord.key();
    if (I.cache) {
        auto it = I.cache->find(k);
        if (it != I.cache->end()) return it->second;
    }
    GroebnerBasis gb = buchberger(I.generators, ord, budget);
    if (I.cache) I.cache->emplace(k, gb);
    return gb;
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const Budget& budget) {
    if (!same_ring(f.ring(), I.ring)) throw PreconditionError("ideal_membership: ring mismatch");
    if (f.is_zero()) return true;
    if (I.generators.empty()) return false;
    GroebnerBasis gb = groebner_basis(I, MonomialOrder::grevlex(), budget);
    BudgetGuard guard(budget);
    return normal_form(f, gb.elements, gb.order, &guard).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (!same_ring(I.ring, J.ring)) return false;
    GroebnerBasis a = groebner_basis(I, MonomialOrder::grevlex(), budget);
    GroebnerBasis b = groebner_basis(J, MonomialOrder::grevlex(), budget);
    return a.elements == b.elements;
}

}  // namespace bilip
