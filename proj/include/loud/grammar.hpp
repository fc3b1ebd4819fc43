#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loud/ast.hpp"
#include "loud/bitset.hpp"
#include "loud/model.hpp"
#include "loud/universe.hpp"

namespace loud {

class GrammarTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Commutative-idempotent normal form: implications become disjunctions,
// nested /\ and \/ are flattened, operands sorted by text and deduplicated,
// boolean constants folded, double negation removed.
ExprPtr normalize(const ExprPtr& e);

struct Property {
    ExprPtr ast;
    std::shared_ptr<const Bitset> truth;  // ⟦φ⟧ over the example domain
    uint64_t rank = 0;                    // canonical index in its space

    std::string text() const;
    bool accepts(uint64_t e) const { return truth->test(e); }
};

// A grammar's derivable properties, in one of two shapes:
//  - List: every property materialized, ordered by (AST size, text);
//  - Macro: all subsets of an atom list of size lo..hi joined by /\ or \/,
//    optionally negated, ordered by (subset size, ascending atom ranks).
// Atoms are ordered by (AST size, text).
struct GrammarSpace {
    enum class Kind : uint8_t { List, Macro };

    Kind kind = Kind::List;
    std::vector<ExprPtr> props;  // List
    Op connective = Op::Or;      // Macro
    std::vector<ExprPtr> atoms;
    int lo = 0, hi = 0;
    bool negated = false;

    uint64_t count() const;
    // AST of the macro property made of the given ascending atom indices.
    ExprPtr macro_property(const std::vector<int>& chosen) const;
    uint64_t macro_rank(const std::vector<int>& chosen) const;
};

GrammarSpace expand_grammar(const Grammar& g, uint64_t cap);

// Visits properties in canonical order until `f` returns false.
// Throws GrammarTooLarge when the space exceeds `cap`.
void enumerate_properties(const GrammarSpace& space, uint64_t cap,
                          const std::function<bool(const ExprPtr&)>& f);
std::vector<ExprPtr> enumerate_properties(const Grammar& g, uint64_t cap);

// Whether a (normalized) property is derivable from the space.
bool derives(const GrammarSpace& space, const ExprPtr& phi);

struct SynthCounters {
    uint64_t calls = 0;
    uint64_t nodes = 0;
};

// A grammar space bound to an example domain: atoms and listed properties
// carry truth vectors, so candidates are judged with bit operations.
class PropertySpace {
public:
    PropertySpace(GrammarSpace g, const Universe& u, uint64_t cap);

    const GrammarSpace& grammar() const { return g_; }
    const Universe& universe() const { return *u_; }

    // Canonically first property accepting every `pos` and rejecting every
    // `neg`; nullopt when none exists.
    std::optional<Property> synthesize(const std::vector<uint64_t>& pos, const std::vector<uint64_t>& neg,
                                       const Deadline* deadline = nullptr) const;

    Property make(ExprPtr ast) const;
    Property top() const;
    Property bottom() const;

    mutable SynthCounters counters;

private:
    std::optional<Property> synth_list(const std::vector<uint64_t>& pos, const std::vector<uint64_t>& neg,
                                       const Deadline* deadline) const;
    std::optional<Property> synth_macro(const std::vector<uint64_t>& pos, const std::vector<uint64_t>& neg,
                                        const Deadline* deadline) const;

    GrammarSpace g_;
    const Universe* u_;
    std::vector<std::shared_ptr<const Bitset>> truths_;  // per prop or per atom
};

}  // namespace loud
