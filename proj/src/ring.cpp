#include "bilip/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bilip {

RingPtr Ring::make(std::vector<std::string> variables) {
    if (variables.empty()) throw PreconditionError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw PreconditionError("empty variable name");
        if (!seen.insert(v).second) throw PreconditionError("duplicate variable name: " + v);
    }
    return RingPtr(new Ring(std::move(variables)));
}

std::optional<int> Ring::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<int>(it - vars_.begin());
}

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Monomial unit_monomial(int arity) {
    return Monomial{std::vector<int>(static_cast<std::size_t>(arity), 0)};
}

static void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw PreconditionError("monomial arity mismatch");
}

Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r = a;
    for (int i = 0; i < b.arity(); ++i) r.exponents[i] += b.exponents[i];
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (int i = 0; i < a.arity(); ++i)
        if (a.exponents[i] > b.exponents[i]) return false;
    return true;
}

Monomial div(const Monomial& b, const Monomial& a) {
    require_same_arity(a, b);
    Monomial r = b;
    for (int i = 0; i < a.arity(); ++i) {
        r.exponents[i] -= a.exponents[i];
        if (r.exponents[i] < 0) throw PreconditionError("monomial division not exact");
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r = a;
    for (int i = 0; i < b.arity(); ++i) r.exponents[i] = std::max(r.exponents[i], b.exponents[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (int i = 0; i < a.arity(); ++i)
        if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
    return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the last variable where they differ decides; the smaller
    // exponent there is the greater monomial.
    for (int i = a.arity() - 1; i >= 0; --i) {
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] > b.exponents[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace bilip
