#include "qgr/sparse_poly.hpp"

namespace qgr {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

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
    char take() {
        skip_ws();
        if (pos >= text.size()) throw parse_error("unexpected end of polynomial");
        return text[pos++];
    }
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::string read_name(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() && is_name_char(cur.text[cur.pos])) ++cur.pos;
    if (cur.pos == start) throw parse_error("expected a variable name at position " + std::to_string(start));
    return cur.text.substr(start, cur.pos - start);
}

long read_integer(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
    if (cur.pos == start) throw parse_error("expected an integer at position " + std::to_string(start));
    return std::stol(cur.text.substr(start, cur.pos - start));
}

BigRat read_rational(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
    std::string num = cur.text.substr(start, cur.pos - start);
    if (num.empty()) throw parse_error("expected a number at position " + std::to_string(start));
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        size_t dstart = cur.pos;
        while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
        std::string den = cur.text.substr(dstart, cur.pos - dstart);
        if (den.empty()) throw parse_error("expected a denominator at position " + std::to_string(dstart));
        return parse_rat(num + "/" + den);
    }
    return parse_rat(num);
}

}  // namespace

QPoly parse_poly(const std::string& text, const VarTablePtr& vars) {
    Cursor cur{text};
    QPoly out(vars);
    if (cur.done()) throw parse_error("empty polynomial");

    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms");
        }
        first = false;

        BigRat coeff(sign);
        Exponents exps(static_cast<size_t>(vars->arity()), 0);
        bool saw_factor = false;

        // optional numeric coefficient
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff *= read_rational(cur);
            coeff.canonicalize();
            saw_factor = true;
            if (cur.peek() == '*') {
                cur.take();
            } else if (is_name_char(cur.peek()) && !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                throw parse_error("missing '*' between coefficient and variable");
            } else {
                out.add_term(exps, coeff);
                continue;
            }
        }

        while (true) {
            std::string name = read_name(cur);
            auto pos = vars->find(name);
            if (!pos) throw parse_error("unknown variable '" + name + "'");
            int e = 1;
            if (cur.peek() == '^') {
                cur.take();
                e = static_cast<int>(read_integer(cur));
                if (e < 1) throw parse_error("exponent must be positive");
            }
            exps[static_cast<size_t>(*pos)] += e;
            saw_factor = true;
            if (cur.peek() == '*') {
                cur.take();
                continue;
            }
            break;
        }
        if (!saw_factor) throw parse_error("empty term");
        out.add_term(exps, coeff);
    }
    return out;
}

}  // namespace qgr
