#include "blowup/poly_io.hpp"

#include <cctype>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ScenarioError("parse error at column " + std::to_string(pos + 1) + " of \"" +
                            text + "\": " + what);
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Int(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() ||
            (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_'))
            fail("expected an identifier");
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

// term := (integer | factor) ('*' factor)* ; factor := identifier ['^' int]
void parse_term(Cursor& c, const GeneratorTable& table, Coeff mode, int sign,
                GradedPoly& out) {
    Int coeff = sign;
    Monomial mono;
    bool expect_factor = true;
    bool leading = true;
    while (expect_factor) {
        c.skip_ws();
        if (leading && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff *= c.integer();
        } else {
            const std::size_t at = c.pos;
            const std::string name = c.identifier();
            auto it = table.find(name);
            if (it == table.end()) {
                c.pos = at;
                c.fail("unknown generator \"" + name + "\"");
            }
            int exp = 1;
            if (c.peek() == '^') {
                ++c.pos;
                Int e = c.integer();
                if (e < 1 || e > 1000) c.fail("exponent out of range");
                exp = static_cast<int>(e);
            }
            mono = mono.times(Monomial::power(it->second, exp));
        }
        leading = false;
        if (c.peek() == '*') {
            ++c.pos;
            expect_factor = true;
        } else {
            expect_factor = false;
        }
    }
    out += GradedPoly::from_monomial(mono, coeff, mode);
}

} // namespace

GradedPoly parse_poly(const std::string& text, const GeneratorTable& table, Coeff mode) {
    Cursor c{text};
    GradedPoly out(mode);
    if (c.done()) c.fail("empty expression");
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        ++c.pos;
    }
    parse_term(c, table, mode, sign, out);
    while (!c.done()) {
        const char op = c.peek();
        if (op != '+' && op != '-') c.fail("expected '+' or '-'");
        ++c.pos;
        parse_term(c, table, mode, op == '-' ? -1 : 1, out);
    }
    return out;
}

Monomial parse_monomial(const std::string& text, const GeneratorTable& table) {
    const GradedPoly p = parse_poly(text, table, Coeff::integers);
    if (p.term_count() != 1 || !(p.terms().begin()->second == 1))
        throw ScenarioError("expected a single monomial with coefficient 1, got \"" +
                            text + "\"");
    return p.terms().begin()->first;
}

} // namespace blowup
