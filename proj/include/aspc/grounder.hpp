// Naive instantiation: Herbrand universe, rule grounding, the positive
// dependency graph, and the ground program with its atom table.
#ifndef ASPC_GROUNDER_HPP
#define ASPC_GROUNDER_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "aspc/ast.hpp"

namespace aspc {

inline constexpr std::uint64_t kDefaultGroundCap = 5'000'000;

struct HerbrandUniverse {
    std::vector<Term> constants;  // first-occurrence order, deduplicated
};

struct DependencyGraph {
    std::vector<std::string> vertices;
    std::set<std::pair<std::string, std::string>> edges;  // body pred -> head pred

    bool hasCycle() const;
};

// Dense 1-based ids in first-occurrence order.
class AtomTable {
public:
    int intern(const Atom& a);
    int idOf(const Atom& a) const;  // 0 when absent
    const Atom& atom(int id) const { return atoms_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return atoms_.size() - 1; }

private:
    std::vector<Atom> atoms_{Atom{}};  // slot 0 unused
    std::unordered_map<Atom, int, AtomHash> ids_;
};

struct GroundProgram {
    std::vector<Rule> rules;
    AtomTable atoms;
};

HerbrandUniverse herbrandUniverse(const Program& p);
DependencyGraph dependencyGraph(const Program& p);
bool isRecursive(const Program& p);

// Distinct variables of head, standard body and guard, in occurrence order.
// Aggregate-element variables not bound there are local to their element.
std::vector<std::string> standardVariables(const Rule& r);

std::vector<Rule> groundRule(const Rule& r, const HerbrandUniverse& u);

// Exact number of ground rules naive instantiation will produce (saturating).
std::uint64_t projectedGroundCount(const Program& p, const HerbrandUniverse& u);

GroundProgram groundProgram(const Program& p, std::uint64_t ruleCap = kDefaultGroundCap);
GroundProgram groundProgram(const Program& p, const HerbrandUniverse& u, std::uint64_t ruleCap);

// Rewrites every ground choice rule {h} :- B into the pair
//   h :- B, not h~.    h~ :- B, not h.
// where h~ uses a reserved complement predicate invisible to user programs.
void desugarGroundChoices(GroundProgram& g);

bool isInternalPredicate(const std::string& pred);

} // namespace aspc

#endif
