#include "aspc/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <unordered_map>

#include "aspc/error.hpp"

namespace aspc {

namespace {

enum class Tok {
    Ident,     // lowercase identifier
    Variable,  // uppercase identifier
    Number,
    If,        // :-
    Dot,
    Comma,
    Colon,
    LParen,
    RParen,
    LBrace,
    RBrace,
    CmpEq,
    CmpLt,
    CmpLe,
    CmpGt,
    CmpGe,
    AggCount,  // #count
    AggSum,    // #sum
    Not,
    End,
};

struct Token {
    Tok type;
    std::string text;
    long long num = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skipLayout();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.type = Tok::End;
            return t;
        }
        char c = text_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            t.text = readIdent();
            t.type = t.text == "not" ? Tok::Not : Tok::Ident;
            return t;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            t.text = readIdent();
            t.type = Tok::Variable;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            t.type = Tok::Number;
            t.num = readNumber();
            return t;
        }
        switch (c) {
            case '.': take(); t.type = Tok::Dot; return t;
            case ',': take(); t.type = Tok::Comma; return t;
            case '(': take(); t.type = Tok::LParen; return t;
            case ')': take(); t.type = Tok::RParen; return t;
            case '{': take(); t.type = Tok::LBrace; return t;
            case '}': take(); t.type = Tok::RBrace; return t;
            case '=': take(); t.type = Tok::CmpEq; return t;
            case '<':
                take();
                if (peek() == '=') { take(); t.type = Tok::CmpLe; } else t.type = Tok::CmpLt;
                return t;
            case '>':
                take();
                if (peek() == '=') { take(); t.type = Tok::CmpGe; } else t.type = Tok::CmpGt;
                return t;
            case ':':
                take();
                if (peek() == '-') { take(); t.type = Tok::If; } else t.type = Tok::Colon;
                return t;
            case '#': {
                take();
                std::string kw = readIdent();
                if (kw == "count") { t.type = Tok::AggCount; return t; }
                if (kw == "sum") { t.type = Tok::AggSum; return t; }
                fail(t.line, t.col, "unknown aggregate function '#" + kw + "'");
            }
        }
        fail(t.line, t.col, std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] static void fail(int line, int col, const std::string& msg) {
        throw Error(Error::Code::Parse,
                    "parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg,
                    line, col);
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void take() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipLayout() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    std::string readIdent() {
        std::string out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                out += c;
                take();
            } else {
                break;
            }
        }
        return out;
    }

    long long readNumber() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            take();
        }
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            take();
        }
        return neg ? -v : v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    Program run() {
        Program prog;
        while (cur_.type != Tok::End) {
            prog.rules.push_back(statement());
        }
        for (const auto& r : prog.rules) checkRule(r);
        return prog;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        Lexer::fail(cur_.line, cur_.col, msg);
    }

    void expect(Tok t, const char* what) {
        if (cur_.type != t) fail(std::string("expected ") + what);
        advance();
    }

    Term term() {
        Token t = cur_;
        switch (t.type) {
            case Tok::Variable: advance(); return Term::var(t.text);
            case Tok::Ident: advance(); return Term::sym(t.text);
            case Tok::Number: advance(); return Term::number(t.num);
            default: fail("expected term");
        }
    }

    Atom atom() {
        if (cur_.type != Tok::Ident) fail("expected predicate name");
        Atom a;
        a.pred = cur_.text;
        int line = cur_.line, col = cur_.col;
        advance();
        if (cur_.type == Tok::LParen) {
            advance();
            a.args.push_back(term());
            while (cur_.type == Tok::Comma) {
                advance();
                a.args.push_back(term());
            }
            expect(Tok::RParen, "')'");
        }
        noteArity(a, line, col);
        return a;
    }

    void noteArity(const Atom& a, int line, int col) {
        auto [it, fresh] = arity_.emplace(a.pred, a.args.size());
        if (!fresh && it->second != a.args.size())
            throw Error(Error::Code::Arity,
                        "predicate '" + a.pred + "' used with arity " + std::to_string(a.args.size()) +
                            " and " + std::to_string(it->second) + " (at " + std::to_string(line) + ":" +
                            std::to_string(col) + ")",
                        line, col);
    }

    std::optional<Cmp> cmpToken() {
        switch (cur_.type) {
            case Tok::CmpEq: return Cmp::Eq;
            case Tok::CmpLt: return Cmp::Lt;
            case Tok::CmpLe: return Cmp::Le;
            case Tok::CmpGt: return Cmp::Gt;
            case Tok::CmpGe: return Cmp::Ge;
            default: return std::nullopt;
        }
    }

    AggregateElement element(bool closeParen) {
        AggregateElement e;
        e.terms.push_back(term());
        while (cur_.type == Tok::Comma) {
            advance();
            e.terms.push_back(term());
        }
        expect(Tok::Colon, "':'");
        e.conj.push_back(atom());
        while (cur_.type == Tok::Comma) {
            advance();
            if (closeParen && cur_.type == Tok::LParen) {
                // conjunctions inside parens run to the ')', so a '(' cannot start one
                fail("expected atom");
            }
            e.conj.push_back(atom());
        }
        return e;
    }

    Aggregate aggregate() {
        Aggregate agg;
        agg.fun = cur_.type == Tok::AggCount ? AggFun::Count : AggFun::Sum;
        int line = cur_.line, col = cur_.col;
        advance();
        expect(Tok::LBrace, "'{'");
        if (cur_.type == Tok::LParen) {
            // ground-set form: (t,... : conj), (t,... : conj), ...
            while (true) {
                expect(Tok::LParen, "'('");
                AggregateElement e = element(true);
                expect(Tok::RParen, "')'");
                pushElement(agg, std::move(e));
                if (cur_.type != Tok::Comma) break;
                advance();
            }
        } else {
            // symbolic form: one element
            pushElement(agg, element(false));
        }
        expect(Tok::RBrace, "'}'");
        auto c = cmpToken();
        if (!c) fail("expected comparison operator after aggregate");
        agg.cmp = *c;
        advance();
        agg.guard = term();
        if (agg.guard.isSym())
            throw Error(Error::Code::Unsupported,
                        "aggregate guard must be an integer constant or a body variable (at " +
                            std::to_string(line) + ":" + std::to_string(col) + ")",
                        line, col);
        if (agg.fun == AggFun::Sum) {
            for (const auto& e : agg.elements)
                if (e.terms[0].isSym())
                    throw Error(Error::Code::Unsupported,
                                "sum element weight must be an integer (at " + std::to_string(line) +
                                    ":" + std::to_string(col) + ")",
                                line, col);
        }
        return agg;
    }

    static void pushElement(Aggregate& agg, AggregateElement e) {
        for (const auto& have : agg.elements)
            if (have == e) return;  // set semantics
        agg.elements.push_back(std::move(e));
    }

    void bodyItem(Rule& r, int line, int col) {
        if (cur_.type == Tok::Not) {
            advance();
            r.body.push_back(Literal{atom(), false});
        } else if (cur_.type == Tok::AggCount || cur_.type == Tok::AggSum) {
            if (!r.aggregates.empty())
                throw Error(Error::Code::Unsupported,
                            "at most one aggregate per rule (at " + std::to_string(cur_.line) + ":" +
                                std::to_string(cur_.col) + ")",
                            cur_.line, cur_.col);
            r.aggregates.push_back(aggregate());
            if (!r.head.empty())
                throw Error(Error::Code::Unsupported,
                            "aggregates are only supported in constraints (at " + std::to_string(line) +
                                ":" + std::to_string(col) + ")",
                            line, col);
        } else {
            r.body.push_back(Literal{atom(), true});
        }
    }

    Rule statement() {
        Rule r;
        int line = cur_.line, col = cur_.col;
        if (cur_.type == Tok::LBrace) {
            advance();
            r.choice = true;
            r.head.push_back(atom());
            expect(Tok::RBrace, "'}'");
        } else if (cur_.type == Tok::Ident) {
            r.head.push_back(atom());
        } else if (cur_.type != Tok::If) {
            fail("expected rule head, '{' or ':-'");
        }
        if (cur_.type == Tok::If) {
            advance();
            bodyItem(r, line, col);
            while (cur_.type == Tok::Comma) {
                advance();
                bodyItem(r, line, col);
            }
        }
        expect(Tok::Dot, "'.'");
        return r;
    }

    // Safety: every variable must be bound by a positive standard body literal,
    // except that variables inside an aggregate element may instead be bound by
    // that element's conjunction.
    void checkRule(const Rule& r) const {
        std::set<std::string> binders;
        for (const auto& l : r.body)
            if (l.positive)
                for (const auto& t : l.atom.args)
                    if (t.isVar()) binders.insert(t.name);

        auto require = [&](const Term& t, const char* where) {
            if (t.isVar() && !binders.count(t.name))
                throw Error(Error::Code::Safety,
                            std::string("unsafe variable '") + t.name + "' in " + where + " of rule: " +
                                r.toString());
        };

        for (const auto& a : r.head)
            for (const auto& t : a.args) require(t, "head");
        for (const auto& l : r.body)
            if (!l.positive)
                for (const auto& t : l.atom.args) require(t, "negative literal");
        for (const auto& agg : r.aggregates) {
            require(agg.guard, "aggregate guard");
            for (const auto& e : agg.elements) {
                std::set<std::string> local = binders;
                for (const auto& a : e.conj)
                    for (const auto& t : a.args)
                        if (t.isVar()) local.insert(t.name);
                for (const auto& t : e.terms)
                    if (t.isVar() && !local.count(t.name))
                        throw Error(Error::Code::Safety,
                                    "unsafe variable '" + t.name + "' in aggregate element of rule: " +
                                        r.toString());
            }
        }
    }

    Lexer lexer_;
    Token cur_;
    std::unordered_map<std::string, std::size_t> arity_;
};

} // namespace

Program parse(const std::string& text) {
    return Parser(text).run();
}

} // namespace aspc
