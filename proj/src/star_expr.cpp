#include "gengroup/star_expr.hpp"

#include <cctype>
#include <string>

namespace gengroup {

namespace {

constexpr std::string_view kStar = "\xE2\x8B\x86"; // U+22C6

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    FinSeq parse() {
        FinSeq v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ExprError(what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip();
        if (s_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    FinSeq expr() {
        FinSeq acc = operand();
        for (;;) {
            if (accept("+"))
                acc = add(acc, operand());
            else if (accept("*") || accept(kStar))
                acc = star(acc, operand());
            else
                return acc;
        }
    }

    FinSeq call(FinSeq (*fn)(const FinSeq&)) {
        expect("(");
        FinSeq arg = expr();
        expect(")");
        return fn(arg);
    }

    FinSeq literal(char open, char close) {
        const std::size_t start = pos_;
        const std::size_t end = s_.find(close, pos_);
        if (end == std::string_view::npos) fail(std::string("unterminated '") + open + "'");
        pos_ = end + 1;
        try {
            return parse_seq(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
        }
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    FinSeq operand() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FinSeq v = expr();
            expect(")");
            return v;
        }
        if (c == '{') return literal('{', '}');
        if (c == '[') return literal('[', ']');
        const std::string name = identifier();
        if (name == "e") return call(e_g);
        if (name == "inv") return call(inv_g);
        if (name == "f") return call(map_f);
        if (name == "g") return call(map_g);
        if (name == "i") {
            expect("(");
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a positive index");
            const auto digits = s_.substr(start, pos_ - start);
            if (digits.size() > 18) fail("index too large");
            const SeqIndex n = std::stoll(std::string(digits));
            expect(")");
            if (n < 1) fail("basis index must be >= 1");
            return basis(n);
        }
        fail(name.empty() ? "expected an operand" : "unknown function '" + name + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

FinSeq evaluate_star_expression(std::string_view text) { return Parser(text).parse(); }

} // namespace gengroup
