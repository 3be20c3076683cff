#include <cctype>
#include <string>

#include "bilip/error.hpp"
#include "bilip/polynomial.hpp"

namespace bilip {
namespace {

// Recursive-descent parser for the polynomial grammar.  Implicit
// multiplication ("2x") is rejected.
class PolyParser {
  public:
    PolyParser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        skip_ws();
        Polynomial f = parse_signed_term();
        skip_ws();
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            char op = s_[pos_++];
            Polynomial t = parse_term();
            f = (op == '+') ? f + t : f - t;
            skip_ws();
        }
        if (pos_ != s_.size()) fail("unexpected character");
        return f;
    }

  private:
    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Polynomial parse_signed_term() {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            char op = s_[pos_++];
            Polynomial t = parse_term();
            return op == '-' ? -t : t;
        }
        return parse_term();
    }

    Polynomial parse_term() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected term");
        Polynomial f = Polynomial::constant(ring_, 1);
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (!first) fail("numeric literal only allowed as leading coefficient");
                f = f.scaled(parse_rational());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                f = f * parse_factor();
            } else {
                if (first) fail("expected term");
                break;
            }
            first = false;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size()) fail("dangling '*'");
                continue;
            }
            // Next token must be an operator or end; adjacency means implicit
            // multiplication, which the grammar forbids.
            if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-') fail("expected '+', '-' or '*'");
            break;
        }
        return f;
    }

    Polynomial parse_factor() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        int power = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            power = parse_nat();
        }
        return Polynomial::variable(ring_, *idx, power);
    }

    int parse_nat() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000) fail("exponent too large");
        }
        return static_cast<int>(v);
    }

    Rational parse_rational() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) fail("expected denominator");
            std::string den = s_.substr(dstart, pos_ - dstart);
            if (Integer(den) == 0) fail("zero denominator");
            return rational_from_string(num + "/" + den);
        }
        return rational_from_string(num);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return PolyParser(text, ring).parse();
}

}  // namespace bilip
