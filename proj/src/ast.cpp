#include "aspc/ast.hpp"

#include <sstream>

namespace aspc {

std::string Term::toString() const {
    switch (kind) {
        case Kind::Var:
        case Kind::Sym: return name;
        case Kind::Num: return std::to_string(num);
    }
    return {};
}

bool Atom::isGround() const {
    for (const auto& t : args)
        if (t.isVar()) return false;
    return true;
}

std::string Atom::toString() const {
    if (args.empty()) return pred;
    std::string out = pred;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += args[i].toString();
    }
    out += ')';
    return out;
}

std::string Literal::toString() const {
    return positive ? atom.toString() : "not " + atom.toString();
}

std::string AggregateElement::toString() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ',';
        out += terms[i].toString();
    }
    out += " : ";
    for (std::size_t i = 0; i < conj.size(); ++i) {
        if (i) out += ", ";
        out += conj[i].toString();
    }
    return out;
}

const char* toString(AggFun f) {
    return f == AggFun::Count ? "#count" : "#sum";
}

const char* toString(Cmp c) {
    switch (c) {
        case Cmp::Eq: return "=";
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Gt: return ">";
        case Cmp::Ge: return ">=";
    }
    return "=";
}

bool cmpHolds(long long value, Cmp c, long long guard) {
    switch (c) {
        case Cmp::Eq: return value == guard;
        case Cmp::Lt: return value < guard;
        case Cmp::Le: return value <= guard;
        case Cmp::Gt: return value > guard;
        case Cmp::Ge: return value >= guard;
    }
    return false;
}

std::string Aggregate::toString() const {
    std::string out = aspc::toString(fun);
    out += '{';
    if (elements.size() == 1) {
        out += elements[0].toString();
    } else {
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (i) out += ',';
            out += '(';
            out += elements[i].toString();
            out += ')';
        }
    }
    out += "} ";
    out += aspc::toString(cmp);
    out += ' ';
    out += guard.toString();
    return out;
}

std::string Rule::toString() const {
    std::string out;
    if (!head.empty()) {
        if (choice) out += '{';
        out += head[0].toString();
        if (choice) out += '}';
    }
    const bool hasBody = !body.empty() || !aggregates.empty();
    if (hasBody) {
        if (!head.empty()) out += ' ';
        out += ":- ";
        bool first = true;
        for (const auto& l : body) {
            if (!first) out += ", ";
            first = false;
            out += l.toString();
        }
        for (const auto& a : aggregates) {
            if (!first) out += ", ";
            first = false;
            out += a.toString();
        }
    }
    out += '.';
    return out;
}

std::string Program::toString() const {
    std::string out;
    for (const auto& r : rules) {
        out += r.toString();
        out += '\n';
    }
    return out;
}

static std::size_t hashCombine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hashValue(const Term& t) {
    std::size_t h = static_cast<std::size_t>(t.kind);
    if (t.isNum()) return hashCombine(h, std::hash<long long>{}(t.num));
    return hashCombine(h, std::hash<std::string>{}(t.name));
}

std::size_t hashValue(const Atom& a) {
    std::size_t h = std::hash<std::string>{}(a.pred);
    for (const auto& t : a.args) h = hashCombine(h, hashValue(t));
    return h;
}

} // namespace aspc
