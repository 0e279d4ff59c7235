#include "etale/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "etale/error.hpp"

namespace etale {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Recursive descent over a single line; `column0` is the column of text[0].
class ExprParser {
   public:
    ExprParser(std::string_view text, const PolyRing& ring, std::size_t line, std::size_t column0)
        : text_(text), ring_(ring), line_(line), column0_(column0) {}

    MultiPoly parse() {
        skip_space();
        if (pos_ == text_.size()) fail("expected a polynomial");
        MultiPoly f = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return f;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column0_ + pos_, msg); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string integer_literal() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    MultiPoly expr() {
        MultiPoly f = term();
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    MultiPoly term() {
        MultiPoly f = unary();
        while (accept('*')) f *= unary();
        return f;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (!accept('^')) return base;
        std::size_t at = pos_;
        std::string digits = integer_literal();
        mpz_class e(digits);
        if (e > 1000000) {
            pos_ = at;
            fail("exponent " + digits + " is too large");
        }
        return base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }

    MultiPoly atom() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of polynomial");
        const Field& k = ring_.field();
        char c = text_[pos_];
        if (digit(c)) {
            std::size_t at = pos_;
            mpz_class num(integer_literal());
            if (!accept('/')) return MultiPoly::constant(ring_, k.from_integer(num));
            mpz_class den(integer_literal());
            try {
                return MultiPoly::constant(ring_, k.from_fraction(num, den));
            } catch (const Error&) {
                pos_ = at;
                fail("denominator is not invertible in " + k.name());
            }
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            const auto& vars = ring_.variables();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return MultiPoly::variable(ring_, i);
            pos_ = start;
            fail("undeclared variable '" + name + "'");
        }
        if (accept('(')) {
            MultiPoly f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const PolyRing& ring_;
    std::size_t line_;
    std::size_t column0_;
    std::size_t pos_ = 0;
};

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t leading_space(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

Field parse_field(std::string_view spec, std::size_t line, std::size_t column) {
    if (spec == "Q") return Field::rationals();
    if (spec.size() > 4 && spec.substr(0, 3) == "GF(" && spec.back() == ')') {
        std::string_view digits = spec.substr(3, spec.size() - 4);
        bool ok = !digits.empty() && digits.size() <= 19;
        for (char c : digits) ok = ok && digit(c);
        if (ok) {
            std::uint64_t p = std::stoull(std::string(digits));
            if (!is_prime(p)) throw ParseError(line, column + 3, "GF(" + std::string(digits) + "): modulus is not prime");
            if (p > Field::max_modulus)
                throw ParseError(line, column + 3, "GF(" + std::string(digits) + "): modulus is too large");
            return Field::prime(p);
        }
    }
    throw ParseError(line, column, "expected 'Q' or 'GF(p)', found '" + std::string(spec) + "'");
}

std::vector<std::string> parse_vars(std::string_view list, std::size_t line, std::size_t column) {
    std::vector<std::string> vars;
    std::set<std::string> seen;
    std::size_t pos = 0;
    for (;;) {
        pos += leading_space(list.substr(pos));
        std::size_t start = pos;
        if (pos == list.size() || !ident_start(list[pos]))
            throw ParseError(line, column + pos, vars.empty() ? "empty variable list" : "expected a variable name");
        while (pos < list.size() && ident_char(list[pos])) ++pos;
        std::string name(list.substr(start, pos - start));
        if (!seen.insert(name).second) throw ParseError(line, column + start, "duplicate variable '" + name + "'");
        vars.push_back(std::move(name));
        pos += leading_space(list.substr(pos));
        if (pos == list.size()) return vars;
        if (list[pos] != ',') throw ParseError(line, column + pos, "expected ',' between variables");
        ++pos;
    }
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const PolyRing& ring) { return ExprParser(text, ring, 1, 1).parse(); }

AlgebraPresentation parse_input(std::string_view text, MonomialOrder order) {
    std::optional<Field> field;
    std::optional<PolyRing> ring;
    std::vector<MultiPoly> relations;
    bool in_relations = false;
    std::size_t line_no = 0;

    auto handle_relation = [&](std::string_view body, std::size_t column) {
        if (!ring) throw ParseError(line_no, column, "relations need a preceding 'vars' line");
        relations.push_back(ExprParser(body, *ring, line_no, column).parse());
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim_right(line);
        std::size_t indent = leading_space(line);
        if (indent == line.size()) {
            if (end == text.size()) break;
            continue;
        }
        std::string_view body = line.substr(indent);
        std::size_t column = indent + 1;

        auto keyword = [&](std::string_view kw) {
            return body.size() > kw.size() && body.substr(0, kw.size()) == kw &&
                   std::isspace(static_cast<unsigned char>(body[kw.size()]));
        };
        if (!in_relations && keyword("field")) {
            if (field) throw ParseError(line_no, column, "duplicate 'field' line");
            std::size_t off = 5 + leading_space(body.substr(5));
            field = parse_field(body.substr(off), line_no, column + off);
        } else if (!in_relations && (keyword("vars") || body == "vars")) {
            if (!field) throw ParseError(line_no, column, "'vars' must follow a 'field' line");
            if (ring) throw ParseError(line_no, column, "duplicate 'vars' line");
            std::size_t off = 4 + leading_space(body.substr(std::min<std::size_t>(4, body.size())));
            if (off > body.size()) off = body.size();
            std::vector<std::string> vars = parse_vars(body.substr(off), line_no, column + off);
            if (vars.size() > 64) throw ParseError(line_no, column, "at most 64 variables are supported");
            ring.emplace(*field, std::move(vars), order);
        } else if (!in_relations && body.substr(0, 10) == "relations:") {
            if (!ring) throw ParseError(line_no, column, "'relations:' must follow a 'vars' line");
            in_relations = true;
            std::string_view rest = body.substr(10);
            std::size_t skip = leading_space(rest);
            if (skip < rest.size()) handle_relation(rest.substr(skip), column + 10 + skip);
        } else if (in_relations) {
            handle_relation(body, column);
        } else {
            throw ParseError(line_no, column, "expected 'field', 'vars' or 'relations:'");
        }
        if (end == text.size()) break;
    }
    if (!field) throw ParseError(line_no, 1, "missing 'field' line");
    if (!ring) throw ParseError(line_no, 1, "missing 'vars' line");
    return {*ring, std::move(relations)};
}

}  // namespace etale
