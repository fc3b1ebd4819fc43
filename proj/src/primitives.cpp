#include "loud/primitives.hpp"

namespace loud {

std::vector<std::pair<const char*, uint64_t>> Stats::items() const {
    return {{"synthesize", synthesize},
            {"checkImplicationOver", checkImplicationOver},
            {"checkImplicationUnder", checkImplicationUnder},
            {"checkStrongest", checkStrongest},
            {"checkWeakest", checkWeakest},
            {"isSatDiff", isSatDiff},
            {"genCandidateNegEx", genCandidateNegEx},
            {"checkCandidateNegEx", checkCandidateNegEx},
            {"genCandidateSpecNegEx", genCandidateSpecNegEx},
            {"cegqiInstances", cegqiInstances},
            {"cacheHits", cacheHits},
            {"cacheMisses", cacheMisses},
            {"hiddenScans", hiddenScans},
            {"psiEvals", psiEvals},
            {"synthNodes", synthNodes},
            {"maxH", maxH}};
}

bool HCache::add(uint64_t h) {
    if (h >= member_.size()) member_.resize(h + 1, 0);
    if (member_[h]) return false;
    member_[h] = 1;
    list_.push_back(h);
    return true;
}

Primitives::Primitives(const Universe& u, const PropertySpace& space, const SearchConfig& cfg,
                       const Deadline* deadline)
    : u_(u),
      space_(space),
      cfg_(cfg),
      deadline_(deadline),
      cache_(u.num_hidden()),
      witness_(u.num_examples(), -2) {}

Bitset Primitives::members(const ExampleList& xs, uint64_t n) {
    Bitset b(n);
    for (uint64_t e : xs) b.set(e);
    return b;
}

std::optional<Property> Primitives::synthesize(const ExampleList& pos, const ExampleList& neg) {
    ++stats_.synthesize;
    const uint64_t before = space_.counters.nodes;
    auto r = space_.synthesize(pos, neg, deadline_);
    stats_.synthNodes += space_.counters.nodes - before;
    return r;
}

bool Primitives::is_positive(uint64_t e) {
    int64_t& w = witness_[e];
    if (w == -2) {
        w = -1;
        for (uint64_t h = 0; h < u_.num_hidden(); ++h) {
            ++stats_.psiEvals;
            if (u_.psi(e, h)) {
                w = static_cast<int64_t>(h);
                break;
            }
        }
    }
    return w >= 0;
}

std::optional<uint64_t> Primitives::check_implication_over(const Property& phi) {
    ++stats_.checkImplicationOver;
    const Bitset outside = ~*phi.truth;
    for (uint64_t e = outside.first(); e < outside.size(); e = outside.next(e + 1)) {
        tick();
        if (is_positive(e)) return e;
    }
    return std::nullopt;
}

std::optional<uint64_t> Primitives::check_candidate_neg_ex(uint64_t e) {
    ++stats_.checkCandidateNegEx;
    if (cfg_.hCacheEnabled) {
        for (uint64_t h : cache_.instances()) {
            ++stats_.psiEvals;
            if (u_.psi(e, h)) {
                ++stats_.cacheHits;
                return h;
            }
        }
    }
    ++stats_.hiddenScans;
    for (uint64_t h = 0; h < u_.num_hidden(); ++h) {
        ++stats_.psiEvals;
        if (u_.psi(e, h)) {
            if (cfg_.hCacheEnabled) ++stats_.cacheMisses;
            witness_[e] = static_cast<int64_t>(h);
            return h;
        }
    }
    witness_[e] = -1;
    return std::nullopt;
}

std::optional<uint64_t> Primitives::gen_candidate_neg_ex(const Property& phi, const HCache& H, uint64_t from) {
    ++stats_.genCandidateNegEx;
    const Bitset& in = *phi.truth;
    for (uint64_t e = in.next(from); e < in.size(); e = in.next(e + 1)) {
        tick();
        bool killed = false;
        for (uint64_t h : H.instances()) {
            ++stats_.psiEvals;
            if (u_.psi(e, h)) {
                killed = true;
                break;
            }
        }
        if (!killed) return e;
    }
    return std::nullopt;
}

std::optional<uint64_t> Primitives::check_implication_under(const Property& phi) {
    ++stats_.checkImplicationUnder;
    HCache local(u_.num_hidden());
    HCache& H = instances_for(local);
    uint64_t from = 0;
    while (true) {
        auto e = gen_candidate_neg_ex(phi, H, from);
        if (!e) return std::nullopt;
        auto h = check_candidate_neg_ex(*e);
        if (!h) return e;
        H.add(*h);
        ++stats_.cegqiInstances;
        stats_.maxH = std::max<uint64_t>(stats_.maxH, H.size());
        from = *e;
    }
}

std::optional<std::pair<uint64_t, Property>> Primitives::gen_candidate_spec_neg_ex(const Property& phi,
                                                                                   const Bitset& conj,
                                                                                   const ExampleList& pos,
                                                                                   const ExampleList& neg,
                                                                                   const HCache& H, uint64_t from) {
    ++stats_.genCandidateSpecNegEx;
    Bitset cand = conj & *phi.truth;
    cand.subtract(members(pos, u_.num_examples()));
    ExampleList negPlus = neg;
    negPlus.push_back(0);
    for (uint64_t e = cand.next(from); e < cand.size(); e = cand.next(e + 1)) {
        tick();
        bool killed = false;
        for (uint64_t h : H.instances()) {
            ++stats_.psiEvals;
            if (u_.psi(e, h)) {
                killed = true;
                break;
            }
        }
        if (killed) continue;
        negPlus.back() = e;
        if (auto p = synthesize(pos, negPlus)) return std::make_pair(e, std::move(*p));
    }
    return std::nullopt;
}

std::optional<PrecisionWitness> Primitives::check_strongest(const Property& phi, const Bitset& conj,
                                                            const ExampleList& pos, const ExampleList& neg) {
    ++stats_.checkStrongest;
    HCache local(u_.num_hidden());
    HCache& H = instances_for(local);
    uint64_t from = 0;
    while (true) {
        auto cand = gen_candidate_spec_neg_ex(phi, conj, pos, neg, H, from);
        if (!cand) return std::nullopt;
        auto h = check_candidate_neg_ex(cand->first);
        if (!h) return PrecisionWitness{cand->first, std::move(cand->second)};
        H.add(*h);
        ++stats_.cegqiInstances;
        stats_.maxH = std::max<uint64_t>(stats_.maxH, H.size());
        from = cand->first;
    }
}

std::optional<PrecisionWitness> Primitives::check_weakest(const Property& phi, const Bitset& disj,
                                                          const ExampleList& pos, const ExampleList& neg) {
    ++stats_.checkWeakest;
    Bitset cand = ~(disj | *phi.truth);
    cand.subtract(members(neg, u_.num_examples()));
    ExampleList posPlus = pos;
    posPlus.push_back(0);
    for (uint64_t e = cand.first(); e < cand.size(); e = cand.next(e + 1)) {
        tick();
        if (!is_positive(e)) continue;
        posPlus.back() = e;
        if (auto p = synthesize(posPlus, neg)) return PrecisionWitness{e, std::move(*p)};
    }
    return std::nullopt;
}

std::optional<uint64_t> Primitives::is_sat_diff(const Bitset& conj, const Property& phi) {
    ++stats_.isSatDiff;
    Bitset d = conj;
    d.subtract(*phi.truth);
    uint64_t e = d.first();
    if (e < d.size()) return e;
    return std::nullopt;
}

std::optional<uint64_t> Primitives::positive_outside(const Property& phi, const Bitset& disj) {
    ++stats_.isSatDiff;
    Bitset d = *phi.truth;
    d.subtract(disj);
    for (uint64_t e = d.first(); e < d.size(); e = d.next(e + 1)) {
        tick();
        if (is_positive(e)) return e;
    }
    return std::nullopt;
}

}  // namespace loud
