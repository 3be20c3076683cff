#pragma once

#include <set>
#include <string>
#include <vector>

#include "bilip/groebner.hpp"

namespace bilip {

// Polynomial map into affine space: components live in the parameter ring;
// target_names are the ambient coordinates of the image space.
struct Parametrization {
    RingPtr param_ring;
    std::vector<Polynomial> components;
    std::vector<std::string> target_names;

    int ambient_dim() const { return static_cast<int>(components.size()); }
    std::vector<Rational> evaluate(const std::vector<Rational>& t) const;
};

// Transports f into `target` by matching variable names.  Every variable that
// actually occurs in f must exist in the target ring.
Polynomial transport(const Polynomial& f, const RingPtr& target);
Ideal transport(const Ideal& I, const RingPtr& target);

// Fresh variable names name0..name{count-1}, avoiding clashes with `taken`.
std::vector<std::string> fresh_names(const std::string& stem, int count,
                                     const std::vector<std::string>& taken);

// Generators of <I> restricted to the subring of kept variables, via a block
// elimination order.  The result lives in the kept-variable ring (original
// relative order); defines the Zariski closure of the coordinate projection.
Ideal eliminate(const Ideal& I, const std::set<std::string>& drop, const Budget& budget = {});

// Ideal of the Zariski closure of the image of p.
Ideal implicitize(const Parametrization& p, const Budget& budget = {});

// I : g^inf via the Rabinowitsch variable.
Ideal saturate(const Ideal& I, const Polynomial& g, const Budget& budget = {});

// I : J^inf as the intersection of the generator-wise saturations.
Ideal saturate_ideal(const Ideal& I, const Ideal& J, const Budget& budget = {});

// <I> ∩ <J> via the auxiliary-variable trick.
Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget = {});

// Homogenizes a Groebner basis of I (so the result defines the projective
// closure); the new variable is prepended to the ring.
Ideal homogenize(const Ideal& I, const std::string& newvar, const Budget& budget = {});
Polynomial homogenize_poly(const Polynomial& f, const RingPtr& target, int var_index);

// Sets `var` = 1 and removes it from the ring.
Ideal dehomogenize(const Ideal& I, const std::string& var, const Budget& budget = {});

// f ∈ sqrt(<I>), by the Rabinowitsch trick.
bool radical_membership(const Polynomial& f, const Ideal& I, const Budget& budget = {});

}  // namespace bilip
