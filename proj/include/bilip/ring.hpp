#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bilip/error.hpp"

namespace bilip {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// An ordered list of distinct variable names.  The list order fixes the
// variable indices used by every monomial order.
class Ring {
  public:
    static RingPtr make(std::vector<std::string> variables);

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::string& name(int i) const { return vars_.at(i); }
    const std::vector<std::string>& variables() const { return vars_; }
    std::optional<int> index_of(const std::string& name) const;

    bool same_as(const Ring& other) const { return vars_ == other.vars_; }

  private:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::vector<std::string> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

// Exponent vector; length always equals the ring arity.
struct Monomial {
    std::vector<int> exponents;

    int arity() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    bool is_unit() const { return degree() == 0; }

    bool operator==(const Monomial& other) const = default;
};

Monomial unit_monomial(int arity);
Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// -1 / 0 / +1 comparison under graded reverse lexicographic order.
int grevlex_compare(const Monomial& a, const Monomial& b);

// Storage order for term maps: grevlex descending, so that begin() is the
// leading term under the default order and printing needs no re-sort.
struct MonomialStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) > 0;
    }
};

}  // namespace bilip
