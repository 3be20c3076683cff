#include "bilip/polynomial.hpp"

#include <sstream>

#include "bilip/error.hpp"

namespace bilip {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw PreconditionError("ring mismatch");
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.arity() != ring_->arity()) throw PreconditionError("monomial arity mismatch");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial f(ring);
    Rational q = c;
    q.canonicalize();  // two-argument mpq_class construction does not reduce
    if (q != 0) f.terms_.emplace(unit_monomial(ring->arity()), std::move(q));
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power) {
    if (index < 0 || index >= ring->arity()) throw PreconditionError("variable index out of range");
    if (power < 0) throw PreconditionError("negative exponent");
    Monomial m = unit_monomial(ring->arity());
    m.exponents[static_cast<std::size_t>(index)] = power;
    return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial f(ring);
    if (m.arity() != ring->arity()) throw PreconditionError("monomial arity mismatch");
    Rational q = c;
    q.canonicalize();
    if (q != 0) f.terms_.emplace(std::move(m), std::move(q));
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(*this, g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    require_same_ring(*this, g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(*this, g);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) r.add_term(mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw PreconditionError("negative power");
    Polynomial r = constant(ring_, 1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Polynomial mul_term(const Polynomial& f, const Monomial& m, const Rational& c) {
    Polynomial r(f.ring());
    if (c == 0) return r;
    for (const auto& [mf, cf] : f.terms()) r.terms_.emplace(mul(mf, m), cf * c);
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).first;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    auto [m, c] = leading_term(ord);
    return scaled(1 / c);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->arity())
        throw PreconditionError("evaluation point length mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m.arity(); ++i) {
            for (int k = 0; k < m.exponents[i]; ++k) t *= point[static_cast<std::size_t>(i)];
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->arity())
        throw PreconditionError("substitution image count mismatch");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    Polynomial acc = Polynomial::zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < m.arity(); ++i)
            if (m.exponents[i] > 0) t = t * images[static_cast<std::size_t>(i)].pow(m.exponents[i]);
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->arity()) throw PreconditionError("derivative: bad variable");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponents[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Monomial n = m;
        n.exponents[static_cast<std::size_t>(var)] = e - 1;
        r.add_term(n, c * e);
    }
    return r;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) r.terms_.emplace(m, c);
    return r;
}

int Polynomial::min_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = m.degree();
        if (d < 0 || md < d) d = md;
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || min_degree() == total_degree();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = m.is_unit();
        if (a != 1 || unit) {
            os << bilip::to_string(a);
            if (!unit) os << "*";
        }
        bool firstvar = true;
        for (int i = 0; i < m.arity(); ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << ring_->name(i);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace bilip
