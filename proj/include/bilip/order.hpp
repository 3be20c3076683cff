#pragma once

#include <string>
#include <vector>

#include "bilip/ring.hpp"

namespace bilip {

// A total, multiplicative well-order on exponent vectors.  Built from four
// primitives: lex, grevlex, block (elimination) and weighted-with-tiebreak.
// Block and weighted orders nest, which is how the elimination and
// tangent-cone orders are assembled.
class MonomialOrder {
  public:
    enum class Kind { Lex, Grevlex, Block, Weighted };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    // Compares variables [0, split) under `inner`, ties broken by `outer`
    // on the remaining variables.  With split = #eliminated this is the
    // standard elimination order.
    static MonomialOrder block(int split, MonomialOrder inner, MonomialOrder outer);
    // Compares the weight functional first, ties broken by `tiebreak`.
    static MonomialOrder weighted(std::vector<long> weights, MonomialOrder tiebreak);

    // Graded order in which, among monomials of equal total degree, a higher
    // power of variable `var` wins.  Used by the tangent-cone algorithm with
    // `var` the homogenizing variable.
    static MonomialOrder graded_with_dominant(int var, int arity);

    Kind kind() const { return kind_; }
    int block_split() const { return split_; }

    int compare(const Monomial& a, const Monomial& b) const;  // -1, 0, +1
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Stable textual key, used for Groebner-cache identity.
    std::string key() const;

  private:
    MonomialOrder(Kind k) : kind_(k) {}
    int compare_range(const Monomial& a, const Monomial& b, int lo, int hi) const;

    Kind kind_;
    int split_ = 0;
    std::vector<long> weights_;
    std::vector<MonomialOrder> children_;
};

}  // namespace bilip
