#include "cubics/mpoly.hpp"

#include <cctype>

namespace cubics {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarTablePtr& table)
        : text_(text), table_(table), pos_(0) {}

    MPoly run() {
        MPoly result = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return result;
    }

private:
    const std::string& text_;
    const VarTablePtr& table_;
    size_t pos_;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(std::string("expected ") + what, pos_);
    }

    MPoly parse_expr() {
        bool negate = accept('-');
        MPoly result = parse_term();
        if (negate) result = -result;
        while (true) {
            if (accept('+')) result += parse_term();
            else if (accept('-')) result -= parse_term();
            else break;
        }
        return result;
    }

    MPoly parse_term() {
        MPoly result = parse_factor();
        while (accept('*')) result *= parse_factor();
        return result;
    }

    MPoly parse_factor() {
        MPoly base = parse_base();
        if (accept('^')) {
            skip_ws();
            size_t at = pos_;
            long e = parse_uint("nonnegative integer exponent");
            (void)at;
            return base.pow(e);
        }
        return base;
    }

    long parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error(std::string("expected ") + what, pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) throw parse_error("integer too large", pos_);
            ++pos_;
        }
        return v;
    }

    MPoly parse_base() {
        skip_ws();
        size_t at = pos_;
        if (pos_ >= text_.size())
            throw parse_error("expected variable, rational, zeta(n) or '('", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_uint("integer");
            if (accept('/')) {
                skip_ws();
                size_t dpos = pos_;
                long den = parse_uint("positive integer denominator");
                if (den == 0) throw parse_error("zero denominator", dpos);
                Rational q(num, den);
                q.canonicalize();
                return MPoly::constant(table_, CycNum(q));
            }
            return MPoly::constant(table_, CycNum(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "zeta") {
                expect('(', "'(' after zeta");
                skip_ws();
                size_t npos = pos_;
                long n = parse_uint("conductor");
                if (n <= 0) throw parse_error("zeta conductor must be positive", npos);
                expect(')', "')'");
                return MPoly::constant(table_, CycNum::root_of_unity(static_cast<unsigned>(n)));
            }
            auto idx = table_->find(name);
            if (!idx) throw parse_error("unknown variable '" + name + "'", start);
            return MPoly::variable(table_, *idx);
        }
        throw parse_error("expected variable, rational, zeta(n) or '('", at);
    }
};

}  // namespace

MPoly parse_poly(const std::string& text, const VarTablePtr& table) {
    return Parser(text, table).run();
}

}  // namespace cubics
