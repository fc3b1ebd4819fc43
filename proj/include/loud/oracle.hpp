#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loud/bitset.hpp"
#include "loud/cegis.hpp"
#include "loud/grammar.hpp"
#include "loud/universe.hpp"

namespace loud {

// Brute-force reference semantics by exhaustive enumeration. Nothing here
// shares search code with the engine beyond expression evaluation.

// {e | ∃h. ψ(e, h)} by a plain double loop. Throws DomainTooLarge when
// |examples| · |hidden| exceeds `pairCap`.
Bitset oracle_positive_set(const Universe& u, uint64_t pairCap);

// ∃h. ψ(e, h) for a single example.
bool oracle_is_positive(const Universe& u, uint64_t e);

// ⟦φ⟧ over the example domain.
Bitset oracle_interp(const Universe& u, const Expr& phi);

struct OracleProperty {
    ExprPtr ast;
    Bitset truth;
};

// Every derivable property with its truth vector, in grammar order.
std::vector<OracleProperty> oracle_materialize(const Universe& u, const Grammar& g, uint64_t cap);

// Minimal derivable supersets (over) or maximal derivable subsets (under) of `positives`.
std::vector<OracleProperty> oracle_strongest_consequences(const std::vector<OracleProperty>& all,
                                                          const Bitset& positives);
std::vector<OracleProperty> oracle_weakest_implicants(const std::vector<OracleProperty>& all,
                                                      const Bitset& positives);

// Intersection (over) or union (under) of the corresponding oracle set.
Bitset oracle_best_semantics(const std::vector<OracleProperty>& all, const Bitset& positives, Mode mode);
Bitset oracle_best_semantics(const Universe& u, const Grammar& g, Mode mode, uint64_t cap, uint64_t pairCap);

// ⟦ψ⟧ ⊆ ⟦φ⟧ (over) or ⟦φ⟧ ⊆ ⟦ψ⟧ (under).
bool is_sound(const Bitset& positives, const Bitset& phi, Mode mode);

// Intersection (over) or union (under) of the report's property truths.
Bitset combined_semantics(const std::vector<Property>& props, Mode mode, uint64_t numExamples);

struct OracleVerdict {
    bool sound = true;         // every property sound
    bool incomparable = true;  // no property implied by the others
    bool best = true;          // combined semantics equals the oracle's
    bool checkedBest = false;  // false when the grammar or domain was too large
    std::vector<std::string> problems;

    bool ok() const { return sound && incomparable && best; }
};

// Re-checks a report against exhaustive enumeration. The best-semantics
// comparison is skipped (checkedBest = false) for partial reports and for
// grammars above `cap`.
OracleVerdict oracle_check(const Universe& u, const SynthesisReport& r, uint64_t cap, uint64_t pairCap);

}  // namespace loud
