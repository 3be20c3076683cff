#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bilip/order.hpp"
#include "bilip/rational.hpp"
#include "bilip/ring.hpp"

namespace bilip {

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable value type; the term map never stores a zero coefficient.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialStorageLess>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, TermMap terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int index, int power = 1);
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;  // -1 for the zero polynomial

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int n) const;

    // Leading term under `ord`; throws PreconditionError on zero input.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;
    Monomial leading_monomial(const MonomialOrder& ord) const;
    Polynomial monic(const MonomialOrder& ord) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    // Substitutes images[i] for variable i; images live in a common ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    Polynomial derivative(int var) const;

    // Sum of the terms of the given total degree.
    Polynomial homogeneous_component(int degree) const;
    int min_degree() const;  // smallest total degree among terms; -1 if zero
    bool is_homogeneous() const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c);
    friend Polynomial mul_term(const Polynomial& f, const Monomial& m, const Rational& c);
};

// f * (c * x^m)
Polynomial mul_term(const Polynomial& f, const Monomial& m, const Rational& c);

void require_same_ring(const Polynomial& a, const Polynomial& b);

// Parses the grammar
//   poly := term (('+'|'-') term)* ; term := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)? ; coeff := int ('/' nat)?
// Whitespace is insignificant; implicit multiplication is a syntax error.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace bilip
