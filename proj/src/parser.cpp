#include "recprs/parser.hpp"

#include <cctype>
#include <sstream>

namespace recprs {

namespace {

std::string format_message(const std::string& message, int line, int column,
                           const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << line << ":" << column << ": " << message;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
        os << ")";
    }
    return os.str();
}

enum class Tok { Int, Slash, X, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

constexpr unsigned kMaxExponent = 10000;
constexpr int kMaxDepth = 512;

const std::vector<std::string> kOperandStart = {"integer", "'x'", "'('", "'+'", "'-'"};

class Parser {
   public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    Polynomial parse() {
        Polynomial p = expr();
        if (cur_.kind != Tok::End) fail("unexpected '" + std::string(cur_.text) + "'", cur_.offset,
                                        {"'+'", "'-'", "'*'", "'^'", "end of input"});
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg, std::size_t offset, std::vector<std::string> expected) const {
        auto [line, col] = position(offset);
        throw SyntaxError(msg, line, col, std::move(expected));
    }

    template <class E>
    [[noreturn]] void fail_as(const std::string& msg, std::size_t offset) const {
        auto [line, col] = position(offset);
        throw E(msg, line, col, {"nonnegative integer"});
    }

    std::pair<int, int> position(std::size_t offset) const {
        int line = 1;
        int col = 1;
        for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, "end of input", src_.size()};
            return;
        }
        const std::size_t start = pos_;
        const char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_ = {Tok::Int, src_.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        Tok kind;
        switch (ch) {
            case '/': kind = Tok::Slash; break;
            case 'x': kind = Tok::X; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: {
                const bool printable = std::isprint(static_cast<unsigned char>(ch)) != 0;
                std::ostringstream os;
                if (printable) {
                    os << "unexpected character '" << ch << "'";
                } else {
                    os << "unexpected byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(ch));
                }
                fail(os.str(), start, {});
            }
        }
        cur_ = {kind, src_.substr(start, 1), start};
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            advance();
            Polynomial rhs = term();
            if (minus) acc -= rhs; else acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (cur_.kind == Tok::Star) {
            advance();
            acc *= unary();
        }
        if (cur_.kind == Tok::Int || cur_.kind == Tok::X || cur_.kind == Tok::LParen)
            fail("implicit multiplication is not allowed", cur_.offset, {"'*'", "'+'", "'-'", "end of input"});
        return acc;
    }

    Polynomial unary() {
        if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            advance();
            Depth guard(*this);
            Polynomial p = unary();
            return minus ? -p : p;
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        while (cur_.kind == Tok::Caret) {
            advance();
            const std::size_t at = cur_.offset;
            const unsigned e = exponent();
            if (base.degree() > 0 && static_cast<long>(base.degree()) * e > static_cast<long>(kMaxExponent))
                fail("polynomial degree exceeds " + std::to_string(kMaxExponent), at, {});
            base = recprs::pow(base, e);
        }
        return base;
    }

    unsigned exponent() {
        if (cur_.kind == Tok::Minus) fail_as<NegativeExponent>("negative exponent", cur_.offset);
        if (cur_.kind != Tok::Int) fail_as<NonIntegerExponent>("exponent must be an integer literal", cur_.offset);
        const Token tok = cur_;
        if (pos_ < src_.size() && (src_[pos_] == '/' || src_[pos_] == '.'))
            fail_as<NonIntegerExponent>("exponent must be an integer", tok.offset);
        if (tok.text.size() > 5 || std::stoul(std::string(tok.text)) > kMaxExponent)
            fail("exponent exceeds " + std::to_string(kMaxExponent), tok.offset, {});
        advance();
        return static_cast<unsigned>(std::stoul(std::string(tok.text)));
    }

    Polynomial primary() {
        switch (cur_.kind) {
            case Tok::Int: {
                Integer num(std::string(cur_.text), 10);
                advance();
                if (cur_.kind != Tok::Slash) return Polynomial::constant(Rational(num));
                advance();
                if (cur_.kind != Tok::Int) fail("malformed rational literal", cur_.offset, {"integer"});
                Integer den(std::string(cur_.text), 10);
                if (den == 0) fail("zero denominator", cur_.offset, {});
                advance();
                return Polynomial::constant(make_rational(num, den));
            }
            case Tok::X:
                advance();
                return Polynomial::x();
            case Tok::LParen: {
                advance();
                Depth guard(*this);
                Polynomial p = expr();
                if (cur_.kind != Tok::RParen)
                    fail("unbalanced parenthesis", cur_.offset, {"')'", "'+'", "'-'", "'*'", "'^'"});
                advance();
                return p;
            }
            default:
                fail(cur_.kind == Tok::End ? "unexpected end of input"
                                           : "unexpected '" + std::string(cur_.text) + "'",
                     cur_.offset, kOperandStart);
        }
    }

    struct Depth {
        explicit Depth(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth) parser.fail("expression nested too deeply", parser.cur_.offset, {});
        }
        ~Depth() { --parser.depth_; }
        Parser& parser;
    };

    std::string_view src_;
    std::size_t pos_ = 0;
    Token cur_{Tok::End, "", 0};
    int depth_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(const std::string& message, int line, int column, std::vector<std::string> expected)
    : Error(format_message(message, line, column, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace recprs
