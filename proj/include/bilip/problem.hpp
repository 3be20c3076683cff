#pragma once

#include <optional>
#include <string>

#include "bilip/lipschitz.hpp"

namespace bilip {

// Parsed contents of a .problem file.  Sections:
//   vars x,y,z
//   params t,s
//   ideal:            (polynomial per line, until the next section)
//   map: f1; f2; f3; denom g      (denominator clause optional)
//   matrix: k n       (then k rows of rationals)
//   point: c1, c2, ...
// '#' starts a comment.  A map whose components live in the parameter ring is
// a parametrization; one in the ambient variables is an algebraic map with
// the ideal section (or the zero ideal) as its source.
struct ProblemFile {
    RingPtr vars;
    RingPtr params;
    std::optional<Ideal> ideal;
    std::optional<Parametrization> parametrization;
    std::optional<AlgebraicMap> map;
    std::optional<LinearProjection> matrix;
    std::optional<AffinePoint> point;

    // The ideal if present, otherwise the implicitization of the
    // parametrization.  Throws if neither exists.
    Ideal variety_ideal(const Budget& budget = {}) const;
};

ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

}  // namespace bilip
