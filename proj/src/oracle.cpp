#include "aspc/oracle.hpp"

#include <algorithm>
#include <set>

#include "aspc/error.hpp"

namespace aspc::oracle {

namespace {

bool bodyTrue(const Rule& r, const AtomTable& table, const Interpretation& i) {
    for (const auto& l : r.body) {
        bool truth = i.truth(table.idOf(l.atom));
        if (truth != l.positive) return false;
    }
    for (const auto& agg : r.aggregates)
        if (!evalAggregate(agg, table, i)) return false;
    return true;
}

void requireDesugared(const GroundProgram& g) {
    for (const auto& r : g.rules)
        if (r.choice)
            throw Error(Error::Code::Invalid,
                        "choice rules must be desugared before reference evaluation");
}

} // namespace

Interpretation Interpretation::fromTrueAtoms(const AtomTable& table,
                                             const std::vector<Atom>& trueAtoms) {
    Interpretation i(table.size());
    for (const auto& a : trueAtoms) {
        int id = table.idOf(a);
        if (id == 0)
            throw Error(Error::Code::Invalid, "atom not in table: " + a.toString());
        i.set(id, true);
    }
    return i;
}

AggregateValue evalAggregateValue(const Aggregate& agg, const AtomTable& table,
                                  const Interpretation& i) {
    AggregateValue out;
    for (const auto& e : agg.elements) {
        bool conjTrue = true;
        for (const auto& a : e.conj) {
            if (!i.truth(table.idOf(a))) {
                conjTrue = false;
                break;
            }
        }
        if (conjTrue) out.multiset.push_back(e.terms[0]);
    }
    if (agg.fun == AggFun::Count) {
        out.value = static_cast<long long>(out.multiset.size());
    } else {
        long long sum = 0;
        for (const auto& t : out.multiset) {
            if (!t.isNum())
                throw Error(Error::Code::Invalid,
                            "non-integer weight in sum aggregate: " + t.toString());
            sum += t.num;
        }
        out.value = sum;
    }
    if (!agg.guard.isNum())
        throw Error(Error::Code::Invalid, "aggregate guard is not an integer: " + agg.guard.toString());
    out.holds = cmpHolds(out.value, agg.cmp, agg.guard.num);
    return out;
}

bool evalAggregate(const Aggregate& agg, const AtomTable& table, const Interpretation& i) {
    return evalAggregateValue(agg, table, i).holds;
}

bool isModel(const GroundProgram& g, const Interpretation& i) {
    requireDesugared(g);
    for (const auto& r : g.rules) {
        if (!bodyTrue(r, g.atoms, i)) continue;
        bool headTrue = false;
        for (const auto& a : r.head)
            if (i.truth(g.atoms.idOf(a))) {
                headTrue = true;
                break;
            }
        if (!headTrue) return false;
    }
    return true;
}

GroundProgram flpReduct(const GroundProgram& g, const Interpretation& i) {
    requireDesugared(g);
    GroundProgram out;
    out.atoms = g.atoms;
    for (const auto& r : g.rules)
        if (bodyTrue(r, g.atoms, i)) out.rules.push_back(r);
    return out;
}

bool isStable(const GroundProgram& g, const Interpretation& i) {
    requireDesugared(g);
    if (!isModel(g, i)) return false;
    GroundProgram reduct = flpReduct(g, i);
    std::vector<int> trueIds;
    for (int id = 1; id <= static_cast<int>(g.atoms.size()); ++id)
        if (i.truth(id)) trueIds.push_back(id);
    if (trueIds.size() > 25)
        throw Error(Error::Code::Budget, "stability check too large: " +
                                             std::to_string(trueIds.size()) + " true atoms");
    const std::uint32_t full = trueIds.empty() ? 0u : (1u << trueIds.size()) - 1u;
    // proper subsets of the true atoms
    for (std::uint32_t sub = full; sub-- > 0;) {
        Interpretation cand(g.atoms.size());
        for (std::size_t k = 0; k < trueIds.size(); ++k)
            if (sub & (1u << k)) cand.set(trueIds[k], true);
        if (isModel(reduct, cand)) return false;
    }
    return true;
}

namespace {

// Mask-based evaluator for exhaustive enumeration; bit k covers atom id k+1.
struct MaskRule {
    std::uint32_t posMask = 0;
    std::uint32_t negMask = 0;
    bool bodyImpossible = false;  // positive literal on an atom outside the table
    int headId = 0;               // 0 for constraints
    bool hasAgg = false;
    AggFun fun = AggFun::Count;
    Cmp cmp = Cmp::Ge;
    long long guard = 0;
    std::vector<std::pair<long long, std::uint32_t>> pairs;  // (weight, conj mask)

    bool bodyTrue(std::uint32_t m) const {
        if (bodyImpossible) return false;
        if ((m & posMask) != posMask || (m & negMask) != 0) return false;
        if (!hasAgg) return true;
        long long v = 0;
        for (const auto& [w, conj] : pairs)
            if ((m & conj) == conj) v += w;
        return cmpHolds(v, cmp, guard);
    }
};

MaskRule compileRule(const Rule& r, const AtomTable& table) {
    MaskRule out;
    if (!r.head.empty()) out.headId = table.idOf(r.head[0]);
    for (const auto& l : r.body) {
        int id = table.idOf(l.atom);
        if (id == 0) {
            if (l.positive) out.bodyImpossible = true;
            continue;  // negative literal over an absent atom is always true
        }
        std::uint32_t bit = 1u << (id - 1);
        if (l.positive)
            out.posMask |= bit;
        else
            out.negMask |= bit;
    }
    for (const auto& agg : r.aggregates) {
        out.hasAgg = true;
        out.fun = agg.fun;
        out.cmp = agg.cmp;
        if (!agg.guard.isNum())
            throw Error(Error::Code::Invalid,
                        "aggregate guard is not an integer: " + agg.guard.toString());
        out.guard = agg.guard.num;
        for (const auto& e : agg.elements) {
            long long w = 1;
            if (agg.fun == AggFun::Sum) {
                if (!e.terms[0].isNum())
                    throw Error(Error::Code::Invalid,
                                "non-integer weight in sum aggregate: " + e.terms[0].toString());
                w = e.terms[0].num;
            }
            std::uint32_t conj = 0;
            bool impossible = false;
            for (const auto& a : e.conj) {
                int id = table.idOf(a);
                if (id == 0) {
                    impossible = true;
                    break;
                }
                conj |= 1u << (id - 1);
            }
            if (!impossible) out.pairs.push_back({w, conj});
        }
    }
    return out;
}

} // namespace

std::vector<std::vector<Atom>> enumerateStable(const Program& p, std::size_t atomCap,
                                               std::uint64_t groundCap) {
    GroundProgram g = groundProgram(p, groundCap);
    desugarGroundChoices(g);
    const std::size_t n = g.atoms.size();
    if (n > atomCap)
        throw Error(Error::Code::Budget, "atom cap exceeded: " + std::to_string(n) + " atoms > cap " +
                                             std::to_string(atomCap));
    std::vector<MaskRule> rules;
    rules.reserve(g.rules.size());
    for (const auto& r : g.rules) rules.push_back(compileRule(r, g.atoms));

    auto isModelMask = [&](std::uint32_t m, const std::vector<const MaskRule*>& active) {
        for (const MaskRule* r : active) {
            if (!r->bodyTrue(m)) continue;
            if (r->headId == 0 || !(m & (1u << (r->headId - 1)))) return false;
        }
        return true;
    };

    std::vector<const MaskRule*> all;
    for (const auto& r : rules) all.push_back(&r);

    std::set<std::vector<Atom>> models;
    const std::uint32_t end = n == 0 ? 1u : (1u << n);
    for (std::uint32_t m = 0; m < end; ++m) {
        if (!isModelMask(m, all)) continue;
        std::vector<const MaskRule*> reduct;
        for (const auto& r : rules)
            if (r.bodyTrue(m)) reduct.push_back(&r);
        bool stable = true;
        if (m != 0) {
            // proper submasks of m, largest first, ending with the empty set
            for (std::uint32_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
                if (isModelMask(sub, reduct)) {
                    stable = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (!stable) continue;
        std::vector<Atom> model;
        for (std::size_t k = 0; k < n; ++k)
            if (m & (1u << k)) {
                const Atom& a = g.atoms.atom(static_cast<int>(k) + 1);
                if (!isInternalPredicate(a.pred)) model.push_back(a);
            }
        std::sort(model.begin(), model.end());
        models.insert(std::move(model));
    }
    return {models.begin(), models.end()};
}

} // namespace aspc::oracle
