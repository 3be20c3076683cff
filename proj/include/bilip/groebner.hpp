#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bilip/polynomial.hpp"

namespace bilip {

// Step/wall-clock limits for the Groebner engine.  Exhaustion raises
// BudgetError, never a wrong answer.
struct Budget {
    long max_steps = 1'000'000;
    double timeout_seconds = 600.0;
};

class BudgetGuard {
  public:
    explicit BudgetGuard(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void tick(long n = 1) {
        steps_ += n;
        if (steps_ > budget_.max_steps)
            throw BudgetError("step budget exceeded (" + std::to_string(budget_.max_steps) + ")");
        if ((steps_ & 0x3ff) == 0) check_clock();
    }
    long steps() const { return steps_; }

  private:
    void check_clock() const {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        if (elapsed.count() > budget_.timeout_seconds)
            throw BudgetError("wall-clock budget exceeded");
    }
    Budget budget_;
    long steps_ = 0;
    std::chrono::steady_clock::time_point start_;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;  // monic, reduced, sorted by order (ascending)

    bool is_unit() const {
        return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
    }
};

// Finite generating set of an ideal; reduced Groebner bases are cached per
// order.  Copies share the cache.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;

    Ideal() = default;
    explicit Ideal(RingPtr r) : ring(std::move(r)) {}
    Ideal(RingPtr r, std::vector<Polynomial> gens);

    bool is_zero_ideal() const { return generators.empty(); }

    mutable std::shared_ptr<std::map<std::string, GroebnerBasis>> cache =
        std::make_shared<std::map<std::string, GroebnerBasis>>();
};

// Remainder of multivariate division of f by G: no monomial of the result is
// divisible by any leading monomial of G.  Divisors are tried in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const MonomialOrder& ord, BudgetGuard* guard = nullptr);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Buchberger with normal pair selection, coprimality and chain criteria.
// Returns the reduced basis; canonical (generator order/scaling independent).
GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord, const Budget& budget = {});

bool ideal_membership(const Polynomial& f, const Ideal& I, const Budget& budget = {});

// Reduced-GB equality under grevlex: same ideal.
bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {});

}  // namespace bilip
