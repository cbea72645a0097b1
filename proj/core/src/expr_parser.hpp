#ifndef REFLINV_SRC_EXPR_PARSER_HPP
#define REFLINV_SRC_EXPR_PARSER_HPP

// Recursive-descent parser shared by the scalar and polynomial text formats.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-'] digits)?
//   primary := digits | 'E' '(' digits ')' | 'i' | identifier | '(' expr ')'
//
// Identifiers other than E and i are resolved through Traits::variable.

#include <cctype>
#include <string>

#include "reflinv/cyclotomic.hpp"
#include "reflinv/error.hpp"

namespace reflinv::detail {

template <typename Traits>
class ExprParser {
public:
    using Value = typename Traits::Value;

    ExprParser(const std::string &text, const Traits &traits) : text_(text), traits_(traits) {}

    Value parse()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("empty expression");
        }
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, 0, pos_ + 1); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Value d = unary();
                try {
                    v = traits_.divide(v, d);
                } catch (const DivisionByZero &) {
                    pos_ = at;
                    fail("division by zero");
                } catch (const InvalidArgument &e) {
                    pos_ = at;
                    fail(e.what());
                }
            } else {
                return v;
            }
        }
    }

    Value unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Value power()
    {
        Value base = primary();
        if (accept('^')) {
            skip_ws();
            bool negative = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                negative = true;
                ++pos_;
            }
            const std::size_t at = pos_;
            const Integer e = digits();
            if (!e.fits_slong_p() || e > 4096) {
                pos_ = at;
                fail("exponent too large");
            }
            const long ev = negative ? -e.get_si() : e.get_si();
            try {
                return traits_.power(base, ev);
            } catch (const DivisionByZero &) {
                pos_ = at;
                fail("division by zero");
            } catch (const InvalidArgument &ex) {
                pos_ = at;
                fail(ex.what());
            }
        }
        return base;
    }

    Integer digits()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(text_.substr(start, pos_ - start));
    }

    Value primary()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return traits_.constant(Cyclotomic(digits()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string ident = text_.substr(start, pos_ - start);
            if (ident == "E") {
                expect('(');
                const std::size_t at = pos_;
                const Integer m = digits();
                if (m <= 0 || !m.fits_uint_p() || m.get_ui() > cyclotomic_order_cap()) {
                    pos_ = at;
                    fail("cyclotomic order must be a positive integer within the cap");
                }
                expect(')');
                return traits_.constant(Cyclotomic::zeta(static_cast<unsigned>(m.get_ui()), 1));
            }
            if (ident == "i") {
                return traits_.constant(Cyclotomic::zeta(4, 1));
            }
            if (auto v = traits_.variable(ident)) {
                return *v;
            }
            pos_ = start;
            fail("unknown identifier '" + ident + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string &text_;
    const Traits &traits_;
    std::size_t pos_ = 0;
};

} // namespace reflinv::detail

#endif
