#include "bilip/order.hpp"

#include <sstream>

namespace bilip {

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex); }
MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::Grevlex); }

MonomialOrder MonomialOrder::block(int split, MonomialOrder inner, MonomialOrder outer) {
    if (split < 0) throw PreconditionError("block order: negative split");
    MonomialOrder o(Kind::Block);
    o.split_ = split;
    o.children_.push_back(std::move(inner));
    o.children_.push_back(std::move(outer));
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<long> weights, MonomialOrder tiebreak) {
    MonomialOrder o(Kind::Weighted);
    o.weights_ = std::move(weights);
    o.children_.push_back(std::move(tiebreak));
    return o;
}

MonomialOrder MonomialOrder::graded_with_dominant(int var, int arity) {
    std::vector<long> dom(static_cast<std::size_t>(arity), 0);
    dom[static_cast<std::size_t>(var)] = 1;
    std::vector<long> ones(static_cast<std::size_t>(arity), 1);
    return weighted(std::move(ones), weighted(std::move(dom), grevlex()));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw PreconditionError("order compare: arity mismatch");
    return compare_range(a, b, 0, a.arity());
}

int MonomialOrder::compare_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
    switch (kind_) {
        case Kind::Lex: {
            for (int i = lo; i < hi; ++i)
                if (a.exponents[i] != b.exponents[i])
                    return a.exponents[i] < b.exponents[i] ? -1 : 1;
            return 0;
        }
        case Kind::Grevlex: {
            long da = 0, db = 0;
            for (int i = lo; i < hi; ++i) {
                da += a.exponents[i];
                db += b.exponents[i];
            }
            if (da != db) return da < db ? -1 : 1;
            for (int i = hi - 1; i >= lo; --i)
                if (a.exponents[i] != b.exponents[i])
                    return a.exponents[i] > b.exponents[i] ? -1 : 1;
            return 0;
        }
        case Kind::Block: {
            int mid = lo + split_;
            if (mid > hi) throw PreconditionError("block order split exceeds range");
            if (int c = children_[0].compare_range(a, b, lo, mid)) return c;
            return children_[1].compare_range(a, b, mid, hi);
        }
        case Kind::Weighted: {
            long wa = 0, wb = 0;
            for (int i = lo; i < hi; ++i) {
                long w = weights_.at(static_cast<std::size_t>(i));
                wa += w * a.exponents[i];
                wb += w * b.exponents[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            return children_[0].compare_range(a, b, lo, hi);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Lex: os << "lex"; break;
        case Kind::Grevlex: os << "grevlex"; break;
        case Kind::Block:
            os << "block(" << split_ << ";" << children_[0].key() << ";" << children_[1].key() << ")";
            break;
        case Kind::Weighted:
            os << "w(";
            for (long w : weights_) os << w << ",";
            os << ";" << children_[0].key() << ")";
            break;
    }
    return os.str();
}

}  // namespace bilip
