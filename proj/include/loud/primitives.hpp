#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "loud/bitset.hpp"
#include "loud/grammar.hpp"
#include "loud/universe.hpp"

namespace loud {

using ExampleList = std::vector<uint64_t>;

struct Stats {
    uint64_t synthesize = 0;
    uint64_t checkImplicationOver = 0;
    uint64_t checkImplicationUnder = 0;
    uint64_t checkStrongest = 0;
    uint64_t checkWeakest = 0;
    uint64_t isSatDiff = 0;
    uint64_t genCandidateNegEx = 0;
    uint64_t checkCandidateNegEx = 0;
    uint64_t genCandidateSpecNegEx = 0;
    uint64_t cegqiInstances = 0;  // instances added to H
    uint64_t cacheHits = 0;
    uint64_t cacheMisses = 0;
    uint64_t hiddenScans = 0;  // full hidden-domain scans by check_candidate_neg_ex
    uint64_t psiEvals = 0;
    uint64_t synthNodes = 0;
    uint64_t maxH = 0;  // largest instance set reached by one CEGQI loop

    std::vector<std::pair<const char*, uint64_t>> items() const;
};

// Hidden instances collected by CEGQI, in insertion order.
class HCache {
public:
    explicit HCache(uint64_t numHidden = 0) : member_(numHidden, 0) {}

    const std::vector<uint64_t>& instances() const { return list_; }
    size_t size() const { return list_.size(); }
    bool contains(uint64_t h) const { return h < member_.size() && member_[h]; }
    bool add(uint64_t h);

private:
    std::vector<uint64_t> list_;
    std::vector<char> member_;
};

struct PrecisionWitness {
    uint64_t example;
    Property property;
};

// The search primitives over one universe and one property space. Results
// are canonical: examples in domain order, properties in grammar order.
// `std::nullopt` plays the role of ⊤ ("check passed") or NONE.
class Primitives {
public:
    Primitives(const Universe& u, const PropertySpace& space, const SearchConfig& cfg, const Deadline* deadline);

    const Universe& universe() const { return u_; }
    const PropertySpace& space() const { return space_; }
    Stats& stats() { return stats_; }
    const Stats& stats() const { return stats_; }
    const HCache& cache() const { return cache_; }

    std::optional<Property> synthesize(const ExampleList& pos, const ExampleList& neg);

    // A positive example rejected by φ.
    std::optional<uint64_t> check_implication_over(const Property& phi);

    // First hidden instance witnessing ψ(e, h); cached instances go first.
    std::optional<uint64_t> check_candidate_neg_ex(uint64_t e);

    // First e >= from in ⟦φ⟧ with ¬ψ(e, h) for every h in H.
    std::optional<uint64_t> gen_candidate_neg_ex(const Property& phi, const HCache& H, uint64_t from = 0);

    // A negative example accepted by φ, found by CEGQI.
    std::optional<uint64_t> check_implication_under(const Property& phi);

    // A property consistent with the examples that rejects one more negative
    // example inside ⟦φ∧⟧ ∩ ⟦φ⟧, found by CEGQI.
    std::optional<PrecisionWitness> check_strongest(const Property& phi, const Bitset& conj, const ExampleList& pos,
                                                    const ExampleList& neg);
    std::optional<std::pair<uint64_t, Property>> gen_candidate_spec_neg_ex(const Property& phi, const Bitset& conj,
                                                                           const ExampleList& pos,
                                                                           const ExampleList& neg, const HCache& H,
                                                                           uint64_t from = 0);

    // A property consistent with the examples that accepts one more positive
    // example outside ⟦φ∨⟧ ∪ ⟦φ⟧.
    std::optional<PrecisionWitness> check_weakest(const Property& phi, const Bitset& disj, const ExampleList& pos,
                                                  const ExampleList& neg);

    // First example in ⟦φ∧⟧ \ ⟦φ⟧.
    std::optional<uint64_t> is_sat_diff(const Bitset& conj, const Property& phi);

    // First positive example in ⟦φ⟧ \ ⟦φ∨⟧.
    std::optional<uint64_t> positive_outside(const Property& phi, const Bitset& disj);

    // ∃h. ψ(e, h), memoized.
    bool is_positive(uint64_t e);

    void tick() {
        if ((++ticks_ & 255) == 0 && deadline_) deadline_->check();
    }

private:
    HCache& instances_for(HCache& local) { return cfg_.hCacheEnabled ? cache_ : local; }
    static Bitset members(const ExampleList& xs, uint64_t n);

    const Universe& u_;
    const PropertySpace& space_;
    SearchConfig cfg_;
    const Deadline* deadline_;
    Stats stats_;
    HCache cache_;
    std::vector<int64_t> witness_;  // -2 unknown, -1 negative, else a witness index
    uint64_t ticks_ = 0;
};

}  // namespace loud
