#include "qf/expr.hpp"

#include <array>
#include <algorithm>
#include <cctype>

#include "qf/closed_forms.hpp"
#include "qf/power.hpp"

namespace qf {

bool FormExpr::operator==(const FormExpr& rhs) const {
    return kind == rhs.kind && children == rhs.children &&
           literal_entries == rhs.literal_entries && count == rhs.count && power == rhs.power &&
           degree == rhs.degree && generators == rhs.generators;
}

FormExpr FormExpr::literal(std::vector<SquareClass> entries) {
    FormExpr e;
    e.kind = Kind::Literal;
    e.literal_entries = std::move(entries);
    return e;
}

FormExpr FormExpr::hyp() {
    FormExpr e;
    e.kind = Kind::Hyp;
    return e;
}

FormExpr FormExpr::zero() { return FormExpr(); }

FormExpr FormExpr::repeat(BigInt count, FormExpr f) {
    FormExpr e;
    e.kind = Kind::Repeat;
    e.count = std::move(count);
    e.children.push_back(std::move(f));
    return e;
}

FormExpr FormExpr::perp(std::vector<FormExpr> children) {
    FormExpr e;
    e.kind = Kind::Perp;
    e.children = std::move(children);
    return e;
}

FormExpr FormExpr::tensor(std::vector<FormExpr> children) {
    FormExpr e;
    e.kind = Kind::Tensor;
    e.children = std::move(children);
    return e;
}

FormExpr FormExpr::sym(long long k, FormExpr f) {
    FormExpr e;
    e.kind = Kind::Sym;
    e.power = k;
    e.children.push_back(std::move(f));
    return e;
}

FormExpr FormExpr::ext(long long k, FormExpr f) {
    FormExpr e;
    e.kind = Kind::Ext;
    e.power = k;
    e.children.push_back(std::move(f));
    return e;
}

FormExpr FormExpr::trace(long long n, std::optional<std::pair<std::string, std::string>> gens) {
    FormExpr e;
    e.kind = Kind::Trace;
    e.degree = n;
    e.generators = std::move(gens);
    return e;
}

FormExpr FormExpr::trace_residue(long long n,
                                 std::optional<std::pair<std::string, std::string>> gens) {
    FormExpr e = trace(n, std::move(gens));
    e.kind = Kind::TraceResidue;
    return e;
}

namespace {

enum class Tok { End, Int, Ident, ZeroForm, LAngle, RAngle, Comma, Plus, Star, Minus, Caret,
                 LParen, RParen };

struct Token {
    Tok kind;
    std::string text;
    BigInt value;
    int line = 1;
    int col = 1;
};

constexpr std::array<std::string_view, 8> kReservedWords = {"x",  "perp", "tensor", "H",
                                                            "S",  "L",    "TS",     "qS"};

bool is_reserved(std::string_view word) {
    return std::find(kReservedWords.begin(), kReservedWords.end(), word) != kReservedWords.end();
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Int: return "number '" + t.value.str() + "'";
        case Tok::ZeroForm: return "'0form'";
        default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space();
            Token t = next();
            tokens.push_back(t);
            if (t.kind == Tok::End) return tokens;
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++col_;
                ++pos_;
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(line_, col_, message); }

    Token next() {
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char ch = text_[pos_];
        switch (ch) {
            case '<': return punct(t, Tok::LAngle, ch);
            case '>': return punct(t, Tok::RAngle, ch);
            case ',': return punct(t, Tok::Comma, ch);
            case '+': return punct(t, Tok::Plus, ch);
            case '*': return punct(t, Tok::Star, ch);
            case '-': return punct(t, Tok::Minus, ch);
            case '^': return punct(t, Tok::Caret, ch);
            case '(': return punct(t, Tok::LParen, ch);
            case ')': return punct(t, Tok::RParen, ch);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return number(t);
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return word(t);
        fail(std::string("unexpected character '") + ch + "'");
    }

    Token punct(Token& t, Tok kind, char ch) {
        t.kind = kind;
        t.text = std::string(1, ch);
        advance(1);
        return t;
    }

    Token number(Token& t) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance(1);
        std::string digits(text_.substr(start, pos_ - start));
        // "0form" is a single keyword; any other letter glued to a number is an error.
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                    text_[pos_] == '_')) {
            if (digits == "0" && text_.substr(pos_).starts_with("form")) {
                advance(4);
                t.kind = Tok::ZeroForm;
                t.text = "0form";
                return t;
            }
            fail("expected a separator after number '" + digits + "'");
        }
        t.kind = Tok::Int;
        t.text = digits;
        t.value = BigInt(digits);
        return t;
    }

    Token word(Token& t) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            advance(1);
        t.kind = Tok::Ident;
        t.text = std::string(text_.substr(start, pos_ - start));
        return t;
    }

    void advance(std::size_t n) {
        pos_ += n;
        col_ += static_cast<int>(n);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    FormExpr run() {
        FormExpr e = expr();
        expect(Tok::End, "operator or end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& at, const std::string& message) {
        throw ParseError(at.line, at.col, message + ", found " + describe(at));
    }

    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(peek(), "expected " + what);
        return take();
    }

    bool at_ident(std::string_view word) const {
        return peek().kind == Tok::Ident && peek().text == word;
    }

    FormExpr expr() {
        std::vector<FormExpr> terms;
        terms.push_back(term());
        while (peek().kind == Tok::Plus || at_ident("perp")) {
            take();
            terms.push_back(term());
        }
        if (terms.size() == 1) return std::move(terms.front());
        return FormExpr::perp(std::move(terms));
    }

    FormExpr term() {
        std::vector<FormExpr> factors;
        factors.push_back(factor());
        while (peek().kind == Tok::Star || at_ident("tensor")) {
            take();
            factors.push_back(factor());
        }
        if (factors.size() == 1) return std::move(factors.front());
        return FormExpr::tensor(std::move(factors));
    }

    FormExpr factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                Token count = take();
                if (!at_ident("x")) fail(peek(), "expected 'x' after repeat count");
                take();
                return FormExpr::repeat(count.value, factor());
            }
            case Tok::ZeroForm:
                take();
                return FormExpr::zero();
            case Tok::LAngle:
                return literal();
            case Tok::LParen: {
                take();
                FormExpr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident:
                if (t.text == "H") {
                    take();
                    return FormExpr::hyp();
                }
                if (t.text == "S" || t.text == "L") return power_func();
                if (t.text == "TS" || t.text == "qS") return trace_func();
                fail(t, "expected a form");
            default:
                fail(t, "expected a form");
        }
    }

    FormExpr literal() {
        expect(Tok::LAngle, "'<'");
        std::vector<SquareClass> entries;
        entries.push_back(entry());
        while (peek().kind == Tok::Comma) {
            take();
            entries.push_back(entry());
        }
        expect(Tok::RAngle, "'>'");
        return FormExpr::literal(std::move(entries));
    }

    SquareClass entry() {
        SquareClass c;
        if (peek().kind == Tok::Minus) {
            take();
            c = SquareClass::minus_one();
        }
        c = c.times(entry_unit());
        while (peek().kind == Tok::Star) {
            take();
            c = c.times(entry_unit());
        }
        return c;
    }

    SquareClass entry_unit() {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            Token lit = take();
            if (lit.value > 1'000'000'000)
                throw ParseError(lit.line, lit.col, "integer entry too large to factor");
            return SquareClass::of_integer(lit.value.convert_to<long long>());
        }
        if (t.kind == Tok::Ident) {
            Token name = take();
            if (is_reserved(name.text))
                throw ParseError(name.line, name.col,
                                 "reserved word '" + name.text + "' cannot be an atom");
            return SquareClass::single(Atom::named(name.text));
        }
        fail(t, "expected an atom or integer entry");
    }

    FormExpr power_func() {
        Token head = take();
        expect(Tok::Caret, "'^'");
        Token k = expect(Tok::Int, "power");
        if (k.value > 1'000'000) throw ParseError(k.line, k.col, "power too large");
        expect(Tok::LParen, "'('");
        FormExpr body = expr();
        expect(Tok::RParen, "')'");
        long long kk = k.value.convert_to<long long>();
        return head.text == "S" ? FormExpr::sym(kk, std::move(body))
                                : FormExpr::ext(kk, std::move(body));
    }

    FormExpr trace_func() {
        Token head = take();
        expect(Tok::LParen, "'('");
        Token n = expect(Tok::Int, "degree");
        if (n.value > 1'000'000'000) throw ParseError(n.line, n.col, "degree too large");
        std::optional<std::pair<std::string, std::string>> gens;
        if (peek().kind == Tok::Comma) {
            take();
            Token a = expect(Tok::Ident, "atom name");
            expect(Tok::Comma, "','");
            Token b = expect(Tok::Ident, "atom name");
            for (const Token* g : {&a, &b})
                if (is_reserved(g->text))
                    throw ParseError(g->line, g->col,
                                     "reserved word '" + g->text + "' cannot be an atom");
            gens = {a.text, b.text};
        }
        expect(Tok::RParen, "')'");
        long long degree = n.value.convert_to<long long>();
        return head.text == "TS" ? FormExpr::trace(degree, std::move(gens))
                                 : FormExpr::trace_residue(degree, std::move(gens));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string print_node(const FormExpr& e);

std::string print_child(const FormExpr& e, bool parenthesize) {
    std::string body = print_node(e);
    return parenthesize ? "(" + body + ")" : body;
}

std::string print_node(const FormExpr& e) {
    using Kind = FormExpr::Kind;
    switch (e.kind) {
        case Kind::Zero:
            return "0form";
        case Kind::Hyp:
            return "H";
        case Kind::Literal: {
            std::string out = "<";
            for (std::size_t i = 0; i < e.literal_entries.size(); ++i) {
                if (i) out += ",";
                out += e.literal_entries[i].str();
            }
            return out + ">";
        }
        case Kind::Repeat: {
            const FormExpr& body = e.children.front();
            bool parens = body.kind == Kind::Perp || body.kind == Kind::Tensor;
            return to_decimal(e.count) + " x " + print_child(body, parens);
        }
        case Kind::Perp: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " + ";
                out += print_child(e.children[i], e.children[i].kind == Kind::Perp);
            }
            return out;
        }
        case Kind::Tensor: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                const FormExpr& child = e.children[i];
                bool parens = child.kind == Kind::Perp || child.kind == Kind::Tensor;
                if (i) out += " * ";
                out += print_child(child, parens);
            }
            return out;
        }
        case Kind::Sym:
        case Kind::Ext:
            return std::string(e.kind == Kind::Sym ? "S^" : "L^") + std::to_string(e.power) +
                   "(" + print_node(e.children.front()) + ")";
        case Kind::Trace:
        case Kind::TraceResidue: {
            std::string out = e.kind == Kind::Trace ? "TS(" : "qS(";
            out += std::to_string(e.degree);
            if (e.generators) out += "," + e.generators->first + "," + e.generators->second;
            return out + ")";
        }
    }
    return {};
}

TraceParams trace_params(const FormExpr& e) {
    if (e.generators) return TraceParams::make(e.degree, e.generators->first, e.generators->second);
    return TraceParams::make(e.degree);
}

}  // namespace

FormExpr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string print_expr(const FormExpr& e) { return print_node(e); }

DiagonalForm evaluate(const FormExpr& e) {
    using Kind = FormExpr::Kind;
    switch (e.kind) {
        case Kind::Zero:
            return DiagonalForm::zero();
        case Kind::Hyp:
            return DiagonalForm::hyperbolic(1);
        case Kind::Literal: {
            DiagonalForm f;
            for (const SquareClass& c : e.literal_entries) f.add(c, 1);
            return f;
        }
        case Kind::Repeat:
            return evaluate(e.children.front()).repeated(e.count);
        case Kind::Perp: {
            DiagonalForm f;
            for (const FormExpr& child : e.children) f = f.perp(evaluate(child));
            return f;
        }
        case Kind::Tensor: {
            DiagonalForm f = DiagonalForm::unit();
            for (const FormExpr& child : e.children) f = f.tensor(evaluate(child));
            return f;
        }
        case Kind::Sym:
            return symmetric_power(evaluate(e.children.front()), e.power);
        case Kind::Ext:
            return exterior_power(evaluate(e.children.front()), e.power);
        case Kind::Trace:
            return trace_form(trace_params(e));
        case Kind::TraceResidue:
            return trace_params(e).qs();
    }
    return {};
}

}  // namespace qf
