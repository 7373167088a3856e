// Brute-force reference semantics: aggregate evaluation, model check,
// reduct, stability and exhaustive stable-model enumeration.
#ifndef ASPC_ORACLE_HPP
#define ASPC_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "aspc/ast.hpp"
#include "aspc/grounder.hpp"

namespace aspc::oracle {

inline constexpr std::size_t kDefaultAtomCap = 18;

// Total truth assignment over a ground atom table; ids are 1-based.
class Interpretation {
public:
    explicit Interpretation(std::size_t atomCount) : values_(atomCount + 1, false) {}

    void set(int id, bool v) { values_[static_cast<std::size_t>(id)] = v; }
    bool truth(int id) const { return id > 0 && values_[static_cast<std::size_t>(id)]; }
    std::size_t atomCount() const { return values_.size() - 1; }

    static Interpretation fromTrueAtoms(const AtomTable& table, const std::vector<Atom>& trueAtoms);

private:
    std::vector<bool> values_;
};

struct AggregateValue {
    std::vector<Term> multiset;  // first terms of elements with true conjunction
    long long value = 0;         // count or sum applied to the multiset
    bool holds = false;          // value compared against the guard
};

AggregateValue evalAggregateValue(const Aggregate& agg, const AtomTable& table,
                                  const Interpretation& i);
bool evalAggregate(const Aggregate& agg, const AtomTable& table, const Interpretation& i);

// Rules that still contain choice heads must be desugared first.
bool isModel(const GroundProgram& g, const Interpretation& i);
GroundProgram flpReduct(const GroundProgram& g, const Interpretation& i);
bool isStable(const GroundProgram& g, const Interpretation& i);

// All stable models over the atoms the ground program mentions, projected to
// user-visible predicates. Models and the atoms inside them come out sorted.
std::vector<std::vector<Atom>> enumerateStable(const Program& p,
                                               std::size_t atomCap = kDefaultAtomCap,
                                               std::uint64_t groundCap = kDefaultGroundCap);

} // namespace aspc::oracle

#endif
