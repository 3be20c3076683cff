#pragma once

#include <vector>

#include "bilip/ideal_ops.hpp"

namespace bilip {

struct HilbertData {
    int dimension = 0;
    Integer degree = 1;
};

using AffinePoint = std::vector<Rational>;

// True iff every generator vanishes at p (exact evaluation).
bool on_variety(const Ideal& I, const AffinePoint& p);

// Dimension and degree of V(I) (degree of the projective closure), read off
// the Hilbert series of the grevlex leading-term ideal.
HilbertData hilbert_data(const Ideal& I, const Budget& budget = {});
int dimension(const Ideal& I, const Budget& budget = {});
Integer degree(const Ideal& I, const Budget& budget = {});

// Homogeneous ideal of the tangent cone of V(I) at p.
Ideal tangent_cone(const Ideal& I, const AffinePoint& p, const Budget& budget = {});

// mult_p V(I) = projective degree of the tangent cone at p.
Integer multiplicity(const Ideal& I, const AffinePoint& p, const Budget& budget = {});

// dim T_p V(I) = arity - rank of the Jacobian of a reduced GB at p.
int zariski_tangent_dim(const Ideal& I, const AffinePoint& p, const Budget& budget = {});

// Translates p to the origin: f(x) -> f(x + p).
Ideal translate_to_origin(const Ideal& I, const AffinePoint& p);

// Numerator of the Hilbert series of S/M for a monomial ideal M, as integer
// coefficients of powers of t (denominator (1-t)^arity).  Exposed for tests.
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens, int arity);

}  // namespace bilip
