#include "lmu/parser.hpp"

#include <cctype>
#include <vector>

namespace lmu {

namespace {

enum class Tok { Lambda, Mu, Ident, Dot, LBracket, RBracket, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::Lambda: return "'\\'";
        case Tok::Mu: return "'mu'";
        case Tok::Ident: return "identifier";
        case Tok::Dot: return "'.'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "token";
}

bool starts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
    return s.substr(pos, prefix.size()) == prefix;
}

std::vector<Token> lex(std::string_view in) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < in.size() && in[i] != '\n') ++i;
            continue;
        }
        auto single = [&](Tok k, std::size_t len) {
            out.push_back({k, std::string(in.substr(i, len)), {i, i + len}});
            i += len;
        };
        switch (c) {
            case '\\': single(Tok::Lambda, 1); continue;
            case '.': single(Tok::Dot, 1); continue;
            case '[': single(Tok::LBracket, 1); continue;
            case ']': single(Tok::RBracket, 1); continue;
            case '(': single(Tok::LParen, 1); continue;
            case ')': single(Tok::RParen, 1); continue;
            default: break;
        }
        if (starts_with(in, i, "\xCE\xBB")) {  // λ
            single(Tok::Lambda, 2);
            continue;
        }
        if (starts_with(in, i, "\xC2\xB5") || starts_with(in, i, "\xCE\xBC")) {  // µ, μ
            single(Tok::Mu, 2);
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t start = i;
            while (i < in.size() &&
                   (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_'))
                ++i;
            std::string word(in.substr(start, i - start));
            out.push_back({word == "mu" ? Tok::Mu : Tok::Ident, word, {start, i}});
            continue;
        }
        throw ParseError({i, i + 1}, "unexpected character '" + std::string(1, in[i]) + "'");
    }
    out.push_back({Tok::End, "", {in.size(), in.size()}});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Term parse_all() {
        Term t = term();
        expect(Tok::End);
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    const Token& expect(Tok k) {
        if (peek().kind != k)
            throw ParseError(peek().span, std::string("expected ") + describe(k) + ", found " +
                                              describe(peek().kind));
        return toks_[pos_++];
    }

    static bool starts_atom(Tok k) { return k == Tok::Ident || k == Tok::LParen; }

    Term term() {
        switch (peek().kind) {
            case Tok::Lambda: return lam();
            case Tok::Mu: return mu();
            default: return app();
        }
    }

    Term lam() {
        expect(Tok::Lambda);
        std::string x = expect(Tok::Ident).text;
        expect(Tok::Dot);
        return Term::abs(LVarName(x), term());
    }

    Term mu() {
        expect(Tok::Mu);
        std::string a = expect(Tok::Ident).text;
        expect(Tok::Dot);
        expect(Tok::LBracket);
        std::string b = expect(Tok::Ident).text;
        expect(Tok::RBracket);
        return Term::mu(MVarName(a), MVarName(b), term());
    }

    Term atom() {
        if (peek().kind == Tok::Ident) return Term::var(toks_[pos_++].text);
        if (peek().kind == Tok::LParen) {
            ++pos_;
            Term t = term();
            expect(Tok::RParen);
            return t;
        }
        throw ParseError(peek().span, std::string("expected term, found ") + describe(peek().kind));
    }

    Term app() {
        Term acc = atom();
        while (starts_atom(peek().kind)) acc = Term::app(std::move(acc), atom());
        if (peek().kind == Tok::Lambda || peek().kind == Tok::Mu) acc = Term::app(std::move(acc), term());
        return acc;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void print_into(const Term& t, bool tail, std::string& out);

void print_binder_body(const Term& t, bool tail, std::string& out) {
    if (!tail) out += '(';
    if (t.is_abs()) {
        out += '\\';
        out += t.binder().str();
        out += ". ";
    } else {
        out += "mu ";
        out += t.mu_binder().str();
        out += ".[";
        out += t.mu_name().str();
        out += "] ";
    }
    print_into(t.body(), true, out);
    if (!tail) out += ')';
}

void print_into(const Term& t, bool tail, std::string& out) {
    switch (t.kind()) {
        case Kind::Var: out += t.var_name().str(); return;
        case Kind::Abs:
        case Kind::Mu: print_binder_body(t, tail, out); return;
        case Kind::App: {
            out += '(';
            print_into(t.fun(), true, out);
            out += ") ";
            const Term& a = t.arg();
            if (a.is_app()) {
                out += '(';
                print_into(a, true, out);
                out += ')';
            } else {
                print_into(a, tail, out);
            }
            return;
        }
    }
}

}  // namespace

Term parse(std::string_view input) {
    Parser p(lex(input));
    return establish_barendregt(p.parse_all());
}

std::string print(const Term& t) {
    std::string out;
    print_into(t, true, out);
    return out;
}

}  // namespace lmu
