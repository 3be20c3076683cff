#pragma once

#include <cstdint>
#include <optional>

#include "bilip/invariants.hpp"
#include "bilip/linalg.hpp"

namespace bilip {

// x -> Mx with a full-rank k x n matrix; the projection center is the
// projectivized kernel P(ker M).
struct LinearProjection {
    RationalMatrix rows;

    int target_dim() const { return static_cast<int>(rows.size()); }
    int source_dim() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    int rank() const { return matrix_rank(rows); }
    bool injective() const { return rank() == source_dim(); }

    static LinearProjection make(RationalMatrix m);
};

// Homogeneous ideal (in direction variables) of the affine cone over the
// closure of the secant-direction set of a variety.
struct SecantCone {
    RingPtr ring;
    Ideal ideal;
};

// A map X -> C^m given on the ambient coordinates of X, with an optional
// denominator for rational maps.
struct AlgebraicMap {
    Ideal source;                          // I_X, in the x-ring
    std::vector<Polynomial> components;    // f_1..f_m, in the x-ring
    std::optional<Polynomial> denominator; // shared denominator d, if rational

    int target_dim() const { return static_cast<int>(components.size()); }
    AffinePoint image_of(const AffinePoint& p) const;
};

enum class Certification { BiLipschitz, NotBiLipschitz };

// Secant-direction cone of V(I): pairs of points, cross equations
// u_i(a_j-b_j) = u_j(a_i-b_i), diagonal removed by saturation, points
// eliminated.  Direction variables are named u0..u{n-1}.
SecantCone secant_cone(const Ideal& I, const Budget& budget = {});

// Same cone, computed through a parametrization (far cheaper: only the
// parameter copies are eliminated).  For one-parameter curves the diagonal is
// removed by exact division of each difference by (t - s).
SecantCone secant_cone_parametric(const Parametrization& p, const Budget& budget = {});

// V(A) ∩ V(forms) = emptyset in projective space, i.e. every coordinate lies
// in the radical of A + <forms>.
bool projective_empty_intersection(const Ideal& A, const std::vector<Polynomial>& forms,
                                   const Budget& budget = {});

// Linear forms (Mu)_1..(Mu)_k in the cone's direction variables.
std::vector<Polynomial> center_forms(const LinearProjection& M, const RingPtr& u_ring);

// Exact certificate: bi-Lipschitz iff the center misses the secant cone.
Certification certify_projection(const SecantCone& sc, const LinearProjection& M,
                                 const Budget& budget = {});
Certification certify_projection(const Ideal& I, const LinearProjection& M,
                                 const Budget& budget = {});

// Ideal of the Zariski closure of graph(f) in the x ⊕ y ring; y-variable
// names are generated fresh against the source ring.
Ideal graph_ideal(const AlgebraicMap& f, const Budget& budget = {});

struct DegreeInvarianceReport {
    Integer deg_X, deg_graph, deg_Y;
    bool certified = false;          // both projection centers miss Sigma(graph)
    bool numeric_certificate = false; // fallback: sampled directions only
    bool degrees_equal() const { return deg_X == deg_graph && deg_graph == deg_Y; }
};

// Degree pipeline for an algebraic bi-Lipschitz map: compares deg X, deg of
// the graph, deg of the image.  When `param` parametrizes X and f is
// polynomial, Sigma of the graph is computed parametrically.  If the symbolic
// cone exceeds its budget and a parametrization exists, falls back to the
// numeric secant-cloud certificate (flagged as such).
DegreeInvarianceReport verify_degree_invariance(const Ideal& I_X, const AlgebraicMap& f,
                                                const std::optional<Parametrization>& param = {},
                                                const Budget& budget = {});

struct MultiplicityInvarianceReport {
    Integer mult_X, mult_graph, mult_Y;
    bool certified = false;  // tangent cone of the graph misses both centers
    bool values_equal() const { return mult_X == mult_graph && mult_graph == mult_Y; }
};

MultiplicityInvarianceReport verify_multiplicity_invariance(const Ideal& I_X, const AlgebraicMap& f,
                                                            const AffinePoint& p,
                                                            const Budget& budget = {});

struct CenterSearchResult {
    std::optional<LinearProjection> projection;  // empty = inconclusive
    int attempts_used = 0;
};

// Draws random rational target x n matrices from a growing integer box and
// returns the first one whose center provably misses the secant cone.
// Exhausting `attempts` is inconclusive, never a proof of nonexistence.
CenterSearchResult random_center_search(const SecantCone& sc, int ambient_dim, int target,
                                        std::uint64_t seed, int attempts, const Budget& budget = {});
CenterSearchResult random_center_search(const Ideal& I, int target, std::uint64_t seed,
                                        int attempts, const Budget& budget = {});

// Monomial parametrization of the affine cone over the d-tuple Veronese image
// of P^r, and its toric ideal.
Parametrization veronese_parametrization(int r, int d);
Ideal veronese_cone(int r, int d, const Budget& budget = {});

struct NormalityProxyReport {
    int cone_tangent_dim = 0;
    std::optional<LinearProjection> projection;  // certified, when found
    std::optional<int> image_tangent_dim;
    // Any normality conclusion needs a separate Zariski-main-theorem style
    // argument; this report only witnesses the tangent dimension drop.
};

NormalityProxyReport normality_proxy_report(int r, int d, int target, std::uint64_t seed = 1,
                                            int attempts = 20, const Budget& budget = {});

}  // namespace bilip
