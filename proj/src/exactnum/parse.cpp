#include "soliton/exactnum/parse.hpp"

#include "soliton/errors.hpp"

#include <cctype>
#include <string>

namespace soliton::exactnum {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse '" + std::string(s_) + "': " + why);
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            const char c = peek();
            if (c == '+') { ++pos_; v += term(); }
            else if (c == '-') { ++pos_; v -= term(); }
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') { ++pos_; v *= unary(); }
            else if (c == '/') { ++pos_; v /= unary(); }
            else if (c == '(' || c == 'n' || std::isdigit(static_cast<unsigned char>(c))) v *= power();
            else return v;
        }
    }

    RatFunc unary() {
        const char c = peek();
        if (c == '-') { ++pos_; return -unary(); }
        if (c == '+') { ++pos_; return unary(); }
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            RatFunc r(1);
            for (unsigned long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    RatFunc primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return v;
        }
        if (c == 'n') {
            ++pos_;
            return RatFunc::n();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rat(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

} // namespace soliton::exactnum
