#include "bilip/lipschitz.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "bilip/sampler.hpp"

namespace bilip {

LinearProjection LinearProjection::make(RationalMatrix m) {
    if (m.empty()) throw PreconditionError("projection: empty matrix");
    std::size_t cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols) throw PreconditionError("projection: ragged matrix");
    LinearProjection p{std::move(m)};
    if (p.rank() != std::min(p.target_dim(), p.source_dim()))
        throw PreconditionError("projection: matrix is rank-deficient");
    return p;
}

AffinePoint AlgebraicMap::image_of(const AffinePoint& p) const {
    Rational d = 1;
    if (denominator) {
        d = denominator->evaluate(p);
        if (d == 0) throw PreconditionError("map undefined at point (denominator vanishes)");
    }
    AffinePoint out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.evaluate(p) / d);
    return out;
}

namespace {

// Exact division; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    MonomialOrder ord = MonomialOrder::grevlex();
    auto [gm, gc] = g.leading_term(ord);
    Polynomial q = Polynomial::zero(f.ring());
    Polynomial r = f;
    while (!r.is_zero()) {
        auto [m, c] = r.leading_term(ord);
        if (!divides(gm, m)) throw PreconditionError("divide_exact: not divisible");
        Polynomial t = Polynomial::term(f.ring(), div(m, gm), c / gc);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

std::vector<Polynomial> images_into(const RingPtr& src, const RingPtr& big,
                                    const std::vector<std::string>& names) {
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(src->arity()));
    for (int i = 0; i < src->arity(); ++i)
        images.push_back(Polynomial::variable(big, *big->index_of(names[static_cast<std::size_t>(i)])));
    return images;
}

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> lists) {
    std::vector<std::string> all;
    for (const auto& l : lists) all.insert(all.end(), l.begin(), l.end());
    return all;
}

}  // namespace

SecantCone secant_cone(const Ideal& I, const Budget& budget) {
    const RingPtr& ring = I.ring;
    int n = ring->arity();
    std::vector<std::string> u_names = fresh_names("u", n, ring->variables());
    std::vector<std::string> a_names = fresh_names("pa", n, u_names);
    std::vector<std::string> b_names = fresh_names("pb", n, u_names);

    RingPtr big = Ring::make(concat({a_names, b_names, u_names}));
    auto a = images_into(ring, big, a_names);
    auto b = images_into(ring, big, b_names);

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) {
        gens.push_back(g.substitute(a));
        gens.push_back(g.substitute(b));
    }
    auto uvar = [&](int i) { return Polynomial::variable(big, 2 * n + i); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            gens.push_back(uvar(i) * (a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)]) -
                           uvar(j) * (a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));

    Ideal J(big, std::move(gens));
    std::vector<Polynomial> diag;
    for (int i = 0; i < n; ++i)
        diag.push_back(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
    J = saturate_ideal(J, Ideal(big, diag), budget);

    std::set<std::string> drop(a_names.begin(), a_names.end());
    drop.insert(b_names.begin(), b_names.end());
    Ideal cone = eliminate(J, drop, budget);
    return SecantCone{cone.ring, cone};
}

SecantCone secant_cone_parametric(const Parametrization& p, const Budget& budget) {
    int n = p.ambient_dim();
    int r = p.param_ring->arity();
    std::vector<std::string> u_names = fresh_names("u", n, p.target_names);
    std::vector<std::string> t_names = p.param_ring->variables();
    std::vector<std::string> s_names = fresh_names("sp", r, concat({t_names, u_names}));

    RingPtr big = Ring::make(concat({t_names, s_names, u_names}));
    auto at_t = images_into(p.param_ring, big, t_names);
    auto at_s = images_into(p.param_ring, big, s_names);

    std::vector<Polynomial> diffs;
    for (const auto& c : p.components)
        diffs.push_back(c.substitute(at_t) - c.substitute(at_s));

    auto uvar = [&](int i) { return Polynomial::variable(big, 2 * r + i); };
    std::vector<Polynomial> cross;
    std::vector<Polynomial> sat_gens;
    if (r == 1) {
        // One-parameter curve: divide out (t - s) exactly, then remove the
        // residual locus where every divided difference vanishes.
        Polynomial t_minus_s = Polynomial::variable(big, 0) - Polynomial::variable(big, 1);
        std::vector<Polynomial> q;
        for (const auto& d : diffs) q.push_back(d.is_zero() ? d : divide_exact(d, t_minus_s));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                cross.push_back(uvar(i) * q[static_cast<std::size_t>(j)] -
                                uvar(j) * q[static_cast<std::size_t>(i)]);
        sat_gens = {t_minus_s};
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                cross.push_back(uvar(i) * diffs[static_cast<std::size_t>(j)] -
                                uvar(j) * diffs[static_cast<std::size_t>(i)]);
        sat_gens = diffs;
    }

    Ideal J(big, std::move(cross));
    std::vector<Polynomial> nonzero_sat;
    for (auto& g : sat_gens)
        if (!g.is_zero()) nonzero_sat.push_back(g);
    if (!nonzero_sat.empty() && !J.generators.empty())
        J = saturate_ideal(J, Ideal(big, nonzero_sat), budget);

    std::set<std::string> drop(t_names.begin(), t_names.end());
    drop.insert(s_names.begin(), s_names.end());
    Ideal cone = eliminate(J, drop, budget);
    return SecantCone{cone.ring, cone};
}

bool projective_empty_intersection(const Ideal& A, const std::vector<Polynomial>& forms,
                                   const Budget& budget) {
    for (const auto& g : A.generators)
        if (!g.is_homogeneous())
            throw PreconditionError("projective_empty_intersection: ideal not homogeneous");
    std::vector<Polynomial> gens = A.generators;
    for (const auto& f : forms) gens.push_back(transport(f, A.ring));
    Ideal T(A.ring, std::move(gens));
    for (int i = 0; i < A.ring->arity(); ++i) {
        if (!radical_membership(Polynomial::variable(A.ring, i), T, budget)) return false;
    }
    return true;
}

std::vector<Polynomial> center_forms(const LinearProjection& M, const RingPtr& u_ring) {
    if (M.source_dim() != u_ring->arity())
        throw PreconditionError("center_forms: dimension mismatch");
    std::vector<Polynomial> forms;
    for (const auto& row : M.rows) {
        Polynomial f = Polynomial::zero(u_ring);
        for (int i = 0; i < u_ring->arity(); ++i)
            f = f + Polynomial::variable(u_ring, i).scaled(row[static_cast<std::size_t>(i)]);
        forms.push_back(std::move(f));
    }
    return forms;
}

Certification certify_projection(const SecantCone& sc, const LinearProjection& M,
                                 const Budget& budget) {
    if (M.injective()) return Certification::BiLipschitz;  // trivial kernel
    return projective_empty_intersection(sc.ideal, center_forms(M, sc.ring), budget)
               ? Certification::BiLipschitz
               : Certification::NotBiLipschitz;
}

Certification certify_projection(const Ideal& I, const LinearProjection& M, const Budget& budget) {
    if (M.source_dim() != I.ring->arity())
        throw PreconditionError("certify_projection: matrix/ring dimension mismatch");
    if (M.injective()) return Certification::BiLipschitz;
    return certify_projection(secant_cone(I, budget), M, budget);
}

Ideal graph_ideal(const AlgebraicMap& f, const Budget& budget) {
    const RingPtr& xr = f.source.ring;
    int m = f.target_dim();
    std::vector<std::string> y_names = fresh_names("y", m, xr->variables());
    RingPtr big = Ring::make(concat({xr->variables(), y_names}));

    std::vector<Polynomial> gens;
    for (const auto& g : f.source.generators) gens.push_back(transport(g, big));
    Polynomial d = f.denominator ? transport(*f.denominator, big) : Polynomial::constant(big, 1);
    for (int j = 0; j < m; ++j) {
        Polynomial yj = Polynomial::variable(big, *big->index_of(y_names[static_cast<std::size_t>(j)]));
        gens.push_back(d * yj - transport(f.components[static_cast<std::size_t>(j)], big));
    }
    Ideal G(big, std::move(gens));
    if (f.denominator) G = saturate(G, d, budget);
    return G;
}

DegreeInvarianceReport verify_degree_invariance(const Ideal& I_X, const AlgebraicMap& f,
                                                const std::optional<Parametrization>& param,
                                                const Budget& budget) {
    int n = I_X.ring->arity();
    int m = f.target_dim();
    Ideal G = graph_ideal(f, budget);
    std::set<std::string> x_names(I_X.ring->variables().begin(), I_X.ring->variables().end());
    Ideal I_Y = eliminate(G, x_names, budget);

    DegreeInvarianceReport report;
    report.deg_X = degree(I_X, budget);
    report.deg_graph = degree(G, budget);
    report.deg_Y = degree(I_Y, budget);

    std::optional<Parametrization> graph_param;
    if (param && !f.denominator) {
        Parametrization gp;
        gp.param_ring = param->param_ring;
        gp.components = param->components;
        for (const auto& c : f.components) gp.components.push_back(c.substitute(param->components));
        gp.target_names = G.ring->variables();
        graph_param = std::move(gp);
    }

    auto x_part_forms = [&](const RingPtr& u_ring) {
        std::vector<Polynomial> v;
        for (int i = 0; i < n; ++i) v.push_back(Polynomial::variable(u_ring, i));
        return v;
    };
    auto y_part_forms = [&](const RingPtr& u_ring) {
        std::vector<Polynomial> v;
        for (int i = 0; i < m; ++i) v.push_back(Polynomial::variable(u_ring, n + i));
        return v;
    };

    try {
        SecantCone sc = graph_param ? secant_cone_parametric(*graph_param, budget)
                                    : secant_cone(G, budget);
        report.certified = projective_empty_intersection(sc.ideal, x_part_forms(sc.ring), budget) &&
                           projective_empty_intersection(sc.ideal, y_part_forms(sc.ring), budget);
    } catch (const BudgetError&) {
        if (!graph_param) throw;
        // Numeric certificate: every sampled secant direction of the graph
        // stays sup-norm-far from both coordinate-projection centers.
        auto cloud = secant_cloud(*graph_param, 2000, 7);
        Rational eps(1, 1000);
        bool ok = !cloud.empty();
        for (const auto& dir : cloud) {
            Rational dx = 0, dy = 0;
            for (int i = 0; i < n; ++i) {
                Rational a = abs(dir[static_cast<std::size_t>(i)]);
                if (a > dx) dx = a;
            }
            for (int i = n; i < n + m; ++i) {
                Rational a = abs(dir[static_cast<std::size_t>(i)]);
                if (a > dy) dy = a;
            }
            if (dx <= eps || dy <= eps) {
                ok = false;
                break;
            }
        }
        report.numeric_certificate = ok;
    }
    return report;
}

MultiplicityInvarianceReport verify_multiplicity_invariance(const Ideal& I_X, const AlgebraicMap& f,
                                                            const AffinePoint& p,
                                                            const Budget& budget) {
    if (!on_variety(I_X, p))
        throw PreconditionError("verify_multiplicity_invariance: point not on the variety");
    int n = I_X.ring->arity();
    int m = f.target_dim();

    Ideal G = graph_ideal(f, budget);
    AffinePoint fp = f.image_of(p);
    AffinePoint gp = p;
    gp.insert(gp.end(), fp.begin(), fp.end());

    std::set<std::string> x_names(I_X.ring->variables().begin(), I_X.ring->variables().end());
    Ideal I_Y = eliminate(G, x_names, budget);

    MultiplicityInvarianceReport report;
    report.mult_X = multiplicity(I_X, p, budget);
    report.mult_graph = multiplicity(G, gp, budget);
    report.mult_Y = multiplicity(I_Y, fp, budget);

    // The proof hinges on the closed tangent cone of the graph avoiding both
    // projection centers at infinity.
    Ideal cone = tangent_cone(G, gp, budget);
    std::vector<Polynomial> xf, yf;
    for (int i = 0; i < n; ++i) xf.push_back(Polynomial::variable(G.ring, i));
    for (int i = 0; i < m; ++i) yf.push_back(Polynomial::variable(G.ring, n + i));
    report.certified = projective_empty_intersection(cone, xf, budget) &&
                       projective_empty_intersection(cone, yf, budget);
    return report;
}

CenterSearchResult random_center_search(const SecantCone& sc, int ambient_dim, int target,
                                        std::uint64_t seed, int attempts, const Budget& budget) {
    if (target >= ambient_dim) {
        // Injective already; pad with zero rows.
        RationalMatrix m(static_cast<std::size_t>(target),
                         std::vector<Rational>(static_cast<std::size_t>(ambient_dim), 0));
        for (int i = 0; i < ambient_dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return {LinearProjection::make(std::move(m)), 0};
    }
    std::mt19937_64 rng(seed);
    for (int a = 1; a <= attempts; ++a) {
        long box = 1 + a / 4;  // growing integer box
        std::uniform_int_distribution<long> dist(-box, box);
        RationalMatrix rows(static_cast<std::size_t>(target),
                            std::vector<Rational>(static_cast<std::size_t>(ambient_dim)));
        for (auto& row : rows)
            for (auto& e : row) e = Rational(dist(rng));
        if (matrix_rank(rows) != target) continue;
        LinearProjection M{std::move(rows)};
        if (certify_projection(sc, M, budget) == Certification::BiLipschitz) return {M, a};
    }
    return {std::nullopt, attempts};
}

CenterSearchResult random_center_search(const Ideal& I, int target, std::uint64_t seed,
                                        int attempts, const Budget& budget) {
    int dim = dimension(I, budget);
    if (target < 2 * dim + 1)
        throw PreconditionError("random_center_search: target below 2*dim+1");
    SecantCone sc = secant_cone(I, budget);
    return random_center_search(sc, I.ring->arity(), target, seed, attempts, budget);
}

Parametrization veronese_parametrization(int r, int d) {
    if (r < 1 || d < 1) throw PreconditionError("veronese: r, d must be >= 1");
    RingPtr params = Ring::make(fresh_names("a", r + 1, {}));

    // All exponent vectors of total degree d in r+1 variables, lex descending.
    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<std::size_t>(r + 1), 0);
    std::function<void(int, int)> gen = [&](int pos, int rem) {
        if (pos == r) {
            cur[static_cast<std::size_t>(pos)] = rem;
            exps.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            gen(pos + 1, rem - e);
        }
    };
    gen(0, d);

    Parametrization p;
    p.param_ring = params;
    for (const auto& e : exps)
        p.components.push_back(Polynomial::term(params, Monomial{e}, 1));
    p.target_names = fresh_names("z", static_cast<int>(exps.size()), params->variables());
    return p;
}

Ideal veronese_cone(int r, int d, const Budget& budget) {
    return implicitize(veronese_parametrization(r, d), budget);
}

NormalityProxyReport normality_proxy_report(int r, int d, int target, std::uint64_t seed,
                                            int attempts, const Budget& budget) {
    Parametrization p = veronese_parametrization(r, d);
    int N1 = p.ambient_dim();  // binomial(r+d, d)
    if (target < 2 * r + 1)
        throw PreconditionError("normality_proxy: target below 2r+1");
    if (target > N1) throw PreconditionError("normality_proxy: target exceeds ambient dimension");

    Ideal cone = veronese_cone(r, d, budget);
    NormalityProxyReport report;
    report.cone_tangent_dim =
        zariski_tangent_dim(cone, AffinePoint(static_cast<std::size_t>(N1), Rational(0)), budget);

    SecantCone sc = secant_cone_parametric(p, budget);
    CenterSearchResult search = random_center_search(sc, N1, target, seed, attempts, budget);
    if (!search.projection) return report;
    report.projection = search.projection;

    // Image ideal through the composed parametrization M o p.
    Parametrization img;
    img.param_ring = p.param_ring;
    for (const auto& row : search.projection->rows) {
        Polynomial c = Polynomial::zero(p.param_ring);
        for (int i = 0; i < N1; ++i)
            c = c + p.components[static_cast<std::size_t>(i)].scaled(row[static_cast<std::size_t>(i)]);
        img.components.push_back(std::move(c));
    }
    img.target_names = fresh_names("v", target, p.param_ring->variables());
    Ideal image = implicitize(img, budget);
    report.image_tangent_dim =
        zariski_tangent_dim(image, AffinePoint(static_cast<std::size_t>(target), Rational(0)), budget);
    return report;
}

}  // namespace bilip
