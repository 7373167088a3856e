// Core rule-language AST: terms, atoms, literals, aggregates, rules, programs.
#ifndef ASPC_AST_HPP
#define ASPC_AST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace aspc {

// A term is a variable (leading uppercase), a symbolic constant (leading
// lowercase) or an integer constant.
struct Term {
    enum class Kind : std::uint8_t { Var, Sym, Num };

    Kind kind = Kind::Num;
    std::string name;    // Var / Sym
    long long num = 0;   // Num

    static Term var(std::string n) { return Term{Kind::Var, std::move(n), 0}; }
    static Term sym(std::string n) { return Term{Kind::Sym, std::move(n), 0}; }
    static Term number(long long v) { return Term{Kind::Num, {}, v}; }

    bool isVar() const { return kind == Kind::Var; }
    bool isSym() const { return kind == Kind::Sym; }
    bool isNum() const { return kind == Kind::Num; }
    bool isConst() const { return kind != Kind::Var; }

    std::string toString() const;

    friend bool operator==(const Term& a, const Term& b) {
        return a.kind == b.kind && a.num == b.num && a.name == b.name;
    }
    friend bool operator<(const Term& a, const Term& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Kind::Num) return a.num < b.num;
        return a.name < b.name;
    }
};

struct Atom {
    std::string pred;
    std::vector<Term> args;

    std::size_t arity() const { return args.size(); }
    bool isGround() const;
    std::string toString() const;

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.pred == b.pred && a.args == b.args;
    }
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.pred != b.pred) return a.pred < b.pred;
        return a.args < b.args;
    }
};

struct Literal {
    Atom atom;
    bool positive = true;

    Literal complement() const { return Literal{atom, !positive}; }
    std::string toString() const;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.positive == b.positive && a.atom == b.atom;
    }
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.atom != b.atom) return a.atom < b.atom;
        return a.positive < b.positive;
    }
};

// One element of a set term: a tuple of terms plus a conjunction of positive
// standard atoms. A symbolic set is a single element with variables; a ground
// set is a list of variable-free elements.
struct AggregateElement {
    std::vector<Term> terms;
    std::vector<Atom> conj;

    std::string toString() const;

    friend bool operator==(const AggregateElement& a, const AggregateElement& b) {
        return a.terms == b.terms && a.conj == b.conj;
    }
    friend bool operator<(const AggregateElement& a, const AggregateElement& b) {
        if (a.terms != b.terms) return a.terms < b.terms;
        return a.conj < b.conj;
    }
};

enum class AggFun : std::uint8_t { Count, Sum };
enum class Cmp : std::uint8_t { Eq, Lt, Le, Gt, Ge };

const char* toString(AggFun f);
const char* toString(Cmp c);
bool cmpHolds(long long value, Cmp c, long long guard);

struct Aggregate {
    AggFun fun = AggFun::Count;
    std::vector<AggregateElement> elements;
    Cmp cmp = Cmp::Ge;
    Term guard = Term::number(0);

    std::string toString() const;

    friend bool operator==(const Aggregate& a, const Aggregate& b) {
        return a.fun == b.fun && a.cmp == b.cmp && a.guard == b.guard &&
               a.elements == b.elements;
    }
};

// head :- body, aggregates.  Empty head: constraint. Empty body+aggregates:
// fact. `choice` marks the {h} :- body shorthand (head has exactly one atom).
struct Rule {
    std::vector<Atom> head;
    bool choice = false;
    std::vector<Literal> body;
    std::vector<Aggregate> aggregates;

    bool isConstraint() const { return head.empty(); }
    bool isFact() const { return !head.empty() && body.empty() && aggregates.empty() && !choice; }
    std::string toString() const;

    friend bool operator==(const Rule& a, const Rule& b) {
        return a.choice == b.choice && a.head == b.head && a.body == b.body &&
               a.aggregates == b.aggregates;
    }
};

struct Program {
    std::vector<Rule> rules;

    std::string toString() const;  // one rule per line

    friend bool operator==(const Program& a, const Program& b) { return a.rules == b.rules; }
};

std::size_t hashValue(const Term& t);
std::size_t hashValue(const Atom& a);

struct AtomHash {
    std::size_t operator()(const Atom& a) const { return hashValue(a); }
};

} // namespace aspc

#endif
