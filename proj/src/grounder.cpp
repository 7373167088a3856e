#include "aspc/grounder.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "aspc/error.hpp"

namespace aspc {

namespace {

void collectConstantsFromTerm(const Term& t, std::vector<Term>& out, std::set<Term>& seen) {
    if (t.isVar()) return;
    if (seen.insert(t).second) out.push_back(t);
}

void collectConstantsFromAtom(const Atom& a, std::vector<Term>& out, std::set<Term>& seen) {
    for (const auto& t : a.args) collectConstantsFromTerm(t, out, seen);
}

void collectVars(const Atom& a, std::vector<std::string>& out, std::set<std::string>& seen) {
    for (const auto& t : a.args)
        if (t.isVar() && seen.insert(t.name).second) out.push_back(t.name);
}

using Substitution = std::unordered_map<std::string, Term>;

Term apply(const Term& t, const Substitution& s) {
    if (!t.isVar()) return t;
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
}

Atom apply(const Atom& a, const Substitution& s) {
    Atom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(apply(t, s));
    return out;
}

struct ElementHash {
    std::size_t operator()(const AggregateElement& e) const {
        std::size_t h = 0x12b9b0a1;
        for (const auto& t : e.terms) h = h * 1315423911u + hashValue(t);
        for (const auto& a : e.conj) h = h * 2654435761u + hashValue(a);
        return h;
    }
};

// Rightmost digit fastest; returns false once every digit has wrapped.
bool advanceOdometer(std::vector<std::size_t>& od, std::size_t base) {
    std::size_t i = od.size();
    while (i > 0) {
        --i;
        if (++od[i] < base) return true;
        od[i] = 0;
    }
    return false;
}

// Expands one aggregate under a fixed substitution of the global variables:
// element-local variables range over the whole universe.
Aggregate groundAggregate(const Aggregate& agg, const Substitution& global,
                          const HerbrandUniverse& u) {
    Aggregate out;
    out.fun = agg.fun;
    out.cmp = agg.cmp;
    out.guard = apply(agg.guard, global);
    const bool dedupe = agg.elements.size() > 1;
    std::unordered_set<AggregateElement, ElementHash> seen;
    for (const auto& e : agg.elements) {
        std::vector<std::string> locals;
        {
            std::set<std::string> noted;
            for (const auto& a : e.conj)
                for (const auto& t : a.args)
                    if (t.isVar() && !global.count(t.name) && noted.insert(t.name).second)
                        locals.push_back(t.name);
            for (const auto& t : e.terms)
                if (t.isVar() && !global.count(t.name) && noted.insert(t.name).second)
                    locals.push_back(t.name);
        }
        if (!locals.empty() && u.constants.empty()) continue;
        std::vector<std::size_t> odometer(locals.size(), 0);
        do {
            Substitution s = global;
            for (std::size_t i = 0; i < locals.size(); ++i) s[locals[i]] = u.constants[odometer[i]];
            AggregateElement ground;
            ground.terms.reserve(e.terms.size());
            for (const auto& t : e.terms) ground.terms.push_back(apply(t, s));
            ground.conj.reserve(e.conj.size());
            for (const auto& a : e.conj) ground.conj.push_back(apply(a, s));
            if (!dedupe || seen.insert(ground).second) out.elements.push_back(std::move(ground));
        } while (advanceOdometer(odometer, u.constants.size()));
    }
    return out;
}

} // namespace

bool DependencyGraph::hasCycle() const {
    std::unordered_map<std::string, std::vector<std::string>> adj;
    for (const auto& [from, to] : edges) adj[from].push_back(to);
    std::unordered_map<std::string, int> color;  // 0 new, 1 open, 2 done
    std::vector<std::pair<std::string, std::size_t>> stack;
    for (const auto& v : vertices) {
        if (color[v]) continue;
        stack.push_back({v, 0});
        color[v] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            auto& out = adj[node];
            if (next < out.size()) {
                const std::string& succ = out[next++];
                int c = color[succ];
                if (c == 1) return true;
                if (c == 0) {
                    color[succ] = 1;
                    stack.push_back({succ, 0});
                }
            } else {
                color[node] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

int AtomTable::intern(const Atom& a) {
    auto it = ids_.find(a);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(atoms_.size());
    atoms_.push_back(a);
    ids_.emplace(a, id);
    return id;
}

int AtomTable::idOf(const Atom& a) const {
    auto it = ids_.find(a);
    return it == ids_.end() ? 0 : it->second;
}

HerbrandUniverse herbrandUniverse(const Program& p) {
    HerbrandUniverse u;
    std::set<Term> seen;
    for (const auto& r : p.rules) {
        for (const auto& a : r.head) collectConstantsFromAtom(a, u.constants, seen);
        for (const auto& l : r.body) collectConstantsFromAtom(l.atom, u.constants, seen);
        for (const auto& agg : r.aggregates) {
            for (const auto& e : agg.elements) {
                for (const auto& t : e.terms) collectConstantsFromTerm(t, u.constants, seen);
                for (const auto& a : e.conj) collectConstantsFromAtom(a, u.constants, seen);
            }
            collectConstantsFromTerm(agg.guard, u.constants, seen);
        }
    }
    return u;
}

DependencyGraph dependencyGraph(const Program& p) {
    DependencyGraph g;
    std::set<std::string> verts;
    auto vertex = [&](const std::string& pred) {
        if (verts.insert(pred).second) g.vertices.push_back(pred);
    };
    for (const auto& r : p.rules) {
        for (const auto& a : r.head) vertex(a.pred);
        for (const auto& l : r.body) vertex(l.atom.pred);
        for (const auto& agg : r.aggregates)
            for (const auto& e : agg.elements)
                for (const auto& a : e.conj) vertex(a.pred);
        for (const auto& l : r.body)
            if (l.positive)
                for (const auto& h : r.head) g.edges.insert({l.atom.pred, h.pred});
    }
    return g;
}

bool isRecursive(const Program& p) {
    return dependencyGraph(p).hasCycle();
}

std::vector<std::string> standardVariables(const Rule& r) {
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for (const auto& a : r.head) collectVars(a, vars, seen);
    for (const auto& l : r.body) collectVars(l.atom, vars, seen);
    for (const auto& agg : r.aggregates)
        if (agg.guard.isVar() && seen.insert(agg.guard.name).second) vars.push_back(agg.guard.name);
    return vars;
}

std::vector<Rule> groundRule(const Rule& r, const HerbrandUniverse& u) {
    std::vector<Rule> out;
    std::vector<std::string> vars = standardVariables(r);
    if (!vars.empty() && u.constants.empty()) return out;
    std::vector<std::size_t> odometer(vars.size(), 0);
    do {
        Substitution s;
        for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = u.constants[odometer[i]];
        Rule g;
        g.choice = r.choice;
        g.head.reserve(r.head.size());
        for (const auto& a : r.head) g.head.push_back(apply(a, s));
        g.body.reserve(r.body.size());
        for (const auto& l : r.body) g.body.push_back(Literal{apply(l.atom, s), l.positive});
        for (const auto& agg : r.aggregates) g.aggregates.push_back(groundAggregate(agg, s, u));
        out.push_back(std::move(g));
    } while (advanceOdometer(odometer, u.constants.size()));
    return out;
}

std::uint64_t projectedGroundCount(const Program& p, const HerbrandUniverse& u) {
    const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    for (const auto& r : p.rules) {
        std::uint64_t n = 1;
        std::size_t v = standardVariables(r).size();
        for (std::size_t i = 0; i < v; ++i) {
            std::uint64_t base = u.constants.size();
            if (base == 0) {
                n = 0;
                break;
            }
            if (n > kMax / base) {
                n = kMax;
                break;
            }
            n *= base;
        }
        if (total > kMax - n) return kMax;
        total += n;
    }
    return total;
}

GroundProgram groundProgram(const Program& p, std::uint64_t ruleCap) {
    return groundProgram(p, herbrandUniverse(p), ruleCap);
}

GroundProgram groundProgram(const Program& p, const HerbrandUniverse& u, std::uint64_t ruleCap) {
    std::uint64_t projected = projectedGroundCount(p, u);
    if (projected > ruleCap)
        throw Error(Error::Code::Budget,
                    "grounding budget exceeded: " + std::to_string(projected) + " ground rules > cap " +
                        std::to_string(ruleCap));
    GroundProgram g;
    for (const auto& r : p.rules) {
        auto instances = groundRule(r, u);
        g.rules.insert(g.rules.end(), std::make_move_iterator(instances.begin()),
                       std::make_move_iterator(instances.end()));
    }
    for (const auto& r : g.rules) {
        for (const auto& a : r.head) g.atoms.intern(a);
        for (const auto& l : r.body) g.atoms.intern(l.atom);
        for (const auto& agg : r.aggregates)
            for (const auto& e : agg.elements)
                for (const auto& a : e.conj) g.atoms.intern(a);
    }
    return g;
}

bool isInternalPredicate(const std::string& pred) {
    return !pred.empty() && pred.back() == '~';
}

void desugarGroundChoices(GroundProgram& g) {
    std::vector<Rule> out;
    out.reserve(g.rules.size());
    for (auto& r : g.rules) {
        if (!r.choice) {
            out.push_back(std::move(r));
            continue;
        }
        Atom h = r.head[0];
        Atom comp{h.pred + "~", h.args};
        Rule pick;
        pick.head.push_back(h);
        pick.body = r.body;
        pick.body.push_back(Literal{comp, false});
        Rule drop;
        drop.head.push_back(comp);
        drop.body = r.body;
        drop.body.push_back(Literal{h, false});
        out.push_back(std::move(pick));
        out.push_back(std::move(drop));
    }
    g.rules = std::move(out);
    for (const auto& r : g.rules)
        for (const auto& l : r.body) g.atoms.intern(l.atom);
    for (const auto& r : g.rules)
        for (const auto& a : r.head) g.atoms.intern(a);
}

} // namespace aspc
