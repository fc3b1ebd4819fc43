#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loud/grammar.hpp"
#include "loud/primitives.hpp"

namespace loud {

enum class Mode : uint8_t { Over, Under };
enum class Status : uint8_t { Best, PartialTimeout };

const char* mode_name(Mode m);
const char* status_name(Status s);

struct ExampleBank {
    ExampleList ePlus;
    ExampleList eMinus;
    std::optional<uint64_t> ePlusMay;
    std::optional<uint64_t> eMinusMay;
    std::optional<Property> phiLast;
    std::optional<Property> current;  // latest candidate, kept for diagnostics
};

struct SynthesisReport {
    std::string problem;
    Mode mode = Mode::Over;
    Status status = Status::Best;
    uint64_t seed = 0;
    std::vector<Property> properties;
    // Candidate under construction when the budget ran out.
    std::optional<Property> inProgress;
    Stats stats;
    int64_t wallMillis = 0;
    uint64_t propertySpaceSize = 0;
};

// One strongest consequence incomparable to ⟦conj⟧; updates `bank`.
Property synth_strongest_consequence(Primitives& prim, const Bitset& conj, Property init, ExampleBank& bank);

// One weakest implicant incomparable to ⟦disj⟧; updates `bank`.
Property synth_weakest_implicant(Primitives& prim, const Bitset& disj, Property init, ExampleBank& bank);

// Drops every property implied by (over) or implying (under) the
// combination of the remaining ones, in list order.
std::vector<Property> prune_comparable(std::vector<Property> props, Mode mode, uint64_t numExamples);

SynthesisReport synth_strongest_conjunction(const Universe& u, const PropertySpace& space, const SearchConfig& cfg);
SynthesisReport synth_weakest_disjunction(const Universe& u, const PropertySpace& space, const SearchConfig& cfg);

// Builds the property space of the grammar used by `mode` and runs it.
// Throws std::invalid_argument when the problem lacks that grammar.
SynthesisReport synthesize_report(const Universe& u, Mode mode, const SearchConfig& cfg);

}  // namespace loud
