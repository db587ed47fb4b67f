#include <cctype>
#include <string>

#include "pilab/freepoly.hpp"

namespace pilab {
namespace {

struct PolyParser {
    std::string_view s;
    std::size_t i = 0;
    FieldPtr field;
    bool unital;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    unsigned read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer", i);
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long>(s[i] - '0');
            if (v > 1000000) throw ParseError("integer too large", i);
            ++i;
        }
        return static_cast<unsigned>(v);
    }
    std::string read_ident() {
        skip_ws();
        std::string id;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) id += s[i++];
        return id;
    }

    bool at_factor_start() {
        char c = peek();
        if (c == '(' || c == '[') return true;
        if (c == 'x' || c == 's' || c == 'e' || c == 'g') {
            // one of x<int>, s(, engel(, simple(, g(
            std::size_t save = i;
            std::string id = read_ident();
            bool ok = false;
            if (id == "x")
                ok = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
            else if (id == "s" || id == "engel" || id == "simple" || id == "g")
                ok = peek() == '(';
            i = save;
            return ok;
        }
        return false;
    }

    // true when the '(' at the current position opens a scalar literal such as
    // `(a+1)` rather than a parenthesized expression
    bool paren_is_scalar() {
        if (field->kind() != Field::Kind::Extension) return false;
        std::size_t depth = 0, j = i;
        bool has_gen = false;
        for (; j < s.size(); ++j) {
            char c = s[j];
            if (c == '(') {
                ++depth;
            } else if (c == ')') {
                if (--depth == 0) break;
            } else if (c == 'a') {
                has_gen = true;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '^' || c == '+' ||
                       c == '-' || c == '*' || std::isspace(static_cast<unsigned char>(c))) {
                // still scalar-compatible
            } else {
                return false;
            }
        }
        return has_gen && depth == 0 && j < s.size();
    }

    // scalar := integer | integer '/' integer | 'a' | '(' a-polynomial ')'
    // returns empty optional when the term has no leading scalar
    std::optional<Scalar> try_scalar() {
        skip_ws();
        if (i >= s.size()) return std::nullopt;
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            unsigned num = read_uint();
            if (eat('/')) {
                unsigned den = read_uint();
                if (den == 0) throw ParseError("zero denominator", start);
                return field->from_mpq(mpq_class(num, den));
            }
            return field->from_integer(static_cast<long>(num));
        }
        if (c == 'a' && field->kind() == Field::Kind::Extension) {
            // bare generator; must not swallow a hypothetical identifier
            ++i;
            return field->generator();
        }
        if (c == '(' && paren_is_scalar()) {
            std::size_t start = i++;
            std::size_t depth = 1, j = i;
            while (j < s.size() && depth) {
                if (s[j] == '(') ++depth;
                if (s[j] == ')') --depth;
                ++j;
            }
            std::string inner(s.substr(i, j - 1 - i));
            i = j;
            try {
                return field->parse_scalar(inner);
            } catch (const ParseError& e) {
                throw ParseError("bad scalar literal", start);
            }
        }
        return std::nullopt;
    }

    FreePoly parse_factor() {
        skip_ws();
        std::size_t start = i;
        FreePoly base(field);
        if (eat('(')) {
            base = parse_expr();
            expect(')');
        } else if (eat('[')) {
            std::vector<FreePoly> args;
            args.push_back(parse_expr());
            if (!eat(',')) throw ParseError("bracket needs at least two arguments", i);
            args.push_back(parse_expr());
            while (eat(',')) args.push_back(parse_expr());
            expect(']');
            base = left_normed_bracket(args);
        } else {
            std::string id = read_ident();
            if (id == "x") {
                unsigned idx = read_uint();
                if (idx == 0) throw ParseError("indeterminate index must be >= 1", start);
                base = FreePoly::indeterminate(field, idx);
            } else if (id == "s" || id == "engel" || id == "simple" || id == "g") {
                expect('(');
                unsigned n = read_uint();
                expect(')');
                if (n == 0) throw ParseError("macro argument must be >= 1", start);
                if (id == "s")
                    base = standard_poly(field, n);
                else if (id == "engel")
                    base = engel_poly(field, n);
                else if (id == "simple")
                    base = simple_commutator(field, n);
                else
                    base = derived_commutator(field, n);
            } else {
                throw ParseError(id.empty() ? "expected factor" : "unknown macro '" + id + "'", start);
            }
        }
        while (eat('^')) {
            unsigned e = read_uint();
            if (e == 0) {
                if (!unital)
                    throw ParseError("power 0 denotes the unit monomial; only legal in unital mode", i);
                base = FreePoly::unit(field);
                continue;
            }
            FreePoly acc = base;
            for (unsigned k = 1; k < e; ++k) acc = acc * base;
            base = acc;
        }
        return base;
    }

    FreePoly parse_term() {
        std::optional<Scalar> coeff = try_scalar();
        if (!at_factor_start())
            throw ParseError("expected a factor (indeterminate, parenthesis, bracket, or macro)", i);
        FreePoly prod = parse_factor();
        while (at_factor_start()) prod = prod * parse_factor();
        return coeff ? prod.scaled(*coeff) : prod;
    }

    FreePoly parse_expr() {
        bool neg = false;
        if (peek() == '-') {
            eat('-');
            neg = true;
        } else {
            eat('+');
        }
        FreePoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }
};

}  // namespace

FreePoly parse_poly(std::string_view text, const FieldPtr& field, bool unital) {
    PolyParser p{text, 0, field, unital};
    FreePoly f = p.parse_expr();
    p.skip_ws();
    if (p.i < p.s.size()) throw ParseError("unexpected trailing input", p.i);
    return f;
}

}  // namespace pilab
