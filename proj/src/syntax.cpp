#include "zlam/syntax.hpp"

#include <cctype>
#include <sstream>

namespace zlam {

namespace {

struct Token {
    enum class Kind { Lambda, Dot, LParen, RParen, Var, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

const char* token_name(Token::Kind k) {
    switch (k) {
    case Token::Kind::Lambda: return "'\\'";
    case Token::Kind::Dot: return "'.'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Var: return "variable";
    case Token::Kind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
        char c = src_[pos_];
        if (c == '\\') { advance(); return {Token::Kind::Lambda, "\\", line, col}; }
        // UTF-8 'λ' is 0xCE 0xBB
        if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
            static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
            advance();
            advance();
            return {Token::Kind::Lambda, "λ", line, col};
        }
        if (c == '.') { advance(); return {Token::Kind::Dot, ".", line, col}; }
        if (c == '(') { advance(); return {Token::Kind::LParen, "(", line, col}; }
        if (c == ')') { advance(); return {Token::Kind::RParen, ")", line, col}; }
        if (c >= 'a' && c <= 'z') {
            std::string text;
            while (pos_ < src_.size() && is_var_char(src_[pos_])) {
                text += src_[pos_];
                advance();
            }
            return {Token::Kind::Var, text, line, col};
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' at " +
                             pos_str(line, col),
                         line, col);
    }

private:
    static bool is_var_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    static std::string pos_str(int line, int col) {
        return std::to_string(line) + ":" + std::to_string(col);
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { bump(); }

    TermPtr parse_all() {
        TermPtr t = parse_term();
        expect(Token::Kind::End);
        return t;
    }

private:
    void bump() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("expected " + expected + ", found " + token_name(tok_.kind) +
                             (tok_.kind == Token::Kind::Var ? " '" + tok_.text + "'" : "") +
                             " at " + std::to_string(tok_.line) + ":" +
                             std::to_string(tok_.column),
                         tok_.line, tok_.column);
    }

    void expect(Token::Kind k) {
        if (tok_.kind != k) fail(token_name(k));
        if (k != Token::Kind::End) bump();
    }

    TermPtr parse_term() {
        if (tok_.kind == Token::Kind::Lambda) return parse_lam();
        return parse_app();
    }

    TermPtr parse_lam() {
        expect(Token::Kind::Lambda);
        std::vector<Name> binders;
        while (tok_.kind == Token::Kind::Var) {
            binders.push_back(tok_.text);
            bump();
        }
        if (binders.empty()) fail("variable");
        expect(Token::Kind::Dot);
        TermPtr body = parse_term();
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
            body = Term::abs(*it, body);
        return body;
    }

    TermPtr parse_app() {
        TermPtr t = parse_atom();
        while (tok_.kind == Token::Kind::Var || tok_.kind == Token::Kind::LParen)
            t = Term::app(t, parse_atom());
        return t;
    }

    TermPtr parse_atom() {
        if (tok_.kind == Token::Kind::Var) {
            TermPtr t = Term::var(tok_.text);
            bump();
            return t;
        }
        if (tok_.kind == Token::Kind::LParen) {
            bump();
            TermPtr t = parse_term();
            expect(Token::Kind::RParen);
            return t;
        }
        fail("variable or '('");
    }

    Lexer lexer_;
    Token tok_{Token::Kind::End, "", 1, 1};
};

// A lam is never an atom, so it needs parens in any application position.
// Applications need parens only in argument position (left-associativity).
void print_rec(const TermPtr& t, bool app_fun, bool app_arg, std::string& out) {
    switch (t->kind()) {
    case Term::Kind::Var:
        out += t->name();
        return;
    case Term::Kind::Abs: {
        bool parens = app_fun || app_arg;
        if (parens) out += '(';
        out += '\\';
        out += t->name();
        out += ". ";
        print_rec(t->body(), false, false, out);
        if (parens) out += ')';
        return;
    }
    case Term::Kind::App: {
        bool parens = app_arg;
        if (parens) out += '(';
        print_rec(t->fun(), true, false, out);
        out += ' ';
        print_rec(t->arg(), false, true, out);
        if (parens) out += ')';
        return;
    }
    }
}

}  // namespace

TermPtr parse(const std::string& src) { return Parser(src).parse_all(); }

std::string print(const TermPtr& t) {
    std::string out;
    print_rec(t, false, false, out);
    return out;
}

std::vector<TermPtr> parse_trace(const std::string& src) {
    std::vector<TermPtr> terms;
    std::istringstream in(src);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        terms.push_back(parse(line));
    }
    return terms;
}

std::string print_trace(const std::vector<TermPtr>& terms) {
    std::string out;
    for (const auto& t : terms) {
        out += print(t);
        out += '\n';
    }
    return out;
}

}  // namespace zlam
