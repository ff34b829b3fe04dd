#include "eisen/text.hpp"

#include <cctype>

namespace eisen {

std::string format_eisenstein(const EisensteinInt &x)
{
    const bool has_b = sgn(x.b) != 0;
    std::string out;
    if (sgn(x.a) != 0 || !has_b)
        out = x.a.get_str();
    if (!has_b)
        return out;

    Integer mag = abs(x.b);
    if (sgn(x.b) < 0)
        out += '-';
    else if (!out.empty())
        out += '+';
    if (mag != 1)
        out += mag.get_str();
    out += 'w';
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    // Returns an empty view when no digits are present.
    std::string_view digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // Optional '+' or '-'; returns -1, +1, or 0 when absent.
    int sign()
    {
        if (peek() == '+') {
            advance();
            return 1;
        }
        if (peek() == '-') {
            advance();
            return -1;
        }
        return 0;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Integer to_integer(std::string_view digits, int sign)
{
    Integer v(std::string(digits), 10);
    return sign < 0 ? Integer(-v) : v;
}

bool is_w(char c) { return c == 'w' || c == 'W'; }

} // namespace

EisensteinInt parse_eisenstein(std::string_view s)
{
    Cursor c(s);
    c.skip_ws();
    if (c.done())
        throw ParseError("empty Eisenstein integer", c.pos());

    int first_sign = c.sign();
    c.skip_ws();
    std::size_t term_pos = c.pos();
    std::string_view first = c.digits();
    if (is_w(c.peek())) {
        // Pure "Bw" form.
        c.advance();
        c.skip_ws();
        if (!c.done())
            throw ParseError("unexpected trailing input", c.pos());
        Integer b = first.empty() ? Integer(first_sign < 0 ? -1 : 1) : to_integer(first, first_sign);
        return {Integer(0), b};
    }
    if (first.empty())
        throw ParseError("expected digits or 'w'", term_pos);
    Integer a = to_integer(first, first_sign);

    c.skip_ws();
    if (c.done())
        return EisensteinInt(a);

    std::size_t sign_pos = c.pos();
    int second_sign = c.sign();
    if (second_sign == 0)
        throw ParseError("expected '+' or '-'", sign_pos);
    c.skip_ws();
    std::string_view second = c.digits();
    if (!is_w(c.peek()))
        throw ParseError("expected 'w' after imaginary coefficient", c.pos());
    c.advance();
    c.skip_ws();
    if (!c.done())
        throw ParseError("unexpected trailing input", c.pos());
    Integer b = second.empty() ? Integer(second_sign) : to_integer(second, second_sign);
    return {a, b};
}

Integer parse_natural(std::string_view s)
{
    Cursor c(s);
    c.skip_ws();
    if (c.peek() == '+')
        c.advance();
    std::size_t start = c.pos();
    std::string_view d = c.digits();
    if (d.empty())
        throw ParseError("expected a non-negative decimal integer", start);
    c.skip_ws();
    if (!c.done())
        throw ParseError("unexpected trailing input", c.pos());
    return to_integer(d, 1);
}

} // namespace eisen
