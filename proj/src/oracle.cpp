#include "loud/oracle.hpp"

#include <unordered_map>

namespace loud {

Bitset oracle_positive_set(const Universe& u, uint64_t pairCap) {
    const double pairs = static_cast<double>(u.num_examples()) * static_cast<double>(u.num_hidden());
    if (pairs > static_cast<double>(pairCap))
        throw DomainTooLarge("oracle needs " + std::to_string(static_cast<uint64_t>(pairs)) +
                             " (example, hidden) pairs, above the cap of " + std::to_string(pairCap));
    Bitset pos(u.num_examples());
    for (uint64_t e = 0; e < u.num_examples(); ++e)
        if (oracle_is_positive(u, e)) pos.set(e);
    return pos;
}

bool oracle_is_positive(const Universe& u, uint64_t e) {
    for (uint64_t h = 0; h < u.num_hidden(); ++h)
        if (u.psi(e, h)) return true;
    return false;
}

Bitset oracle_interp(const Universe& u, const Expr& phi) { return u.interp(phi); }

std::vector<OracleProperty> oracle_materialize(const Universe& u, const Grammar& g, uint64_t cap) {
    std::vector<OracleProperty> out;
    for (auto& p : enumerate_properties(g, cap)) out.push_back({p, u.interp(*p)});
    return out;
}

namespace {

// Properties whose truth vector is extremal among those passing `keep`.
// `below(a, b)` is the strict order to be extremal in.
template <class Keep, class Below>
std::vector<OracleProperty> extremal(const std::vector<OracleProperty>& all, Keep keep, Below below) {
    std::vector<const Bitset*> classes;
    std::unordered_map<Bitset, size_t, BitsetHash> index;
    std::vector<size_t> cls(all.size(), SIZE_MAX);
    for (size_t i = 0; i < all.size(); ++i) {
        if (!keep(all[i].truth)) continue;
        auto [it, fresh] = index.emplace(all[i].truth, classes.size());
        if (fresh) classes.push_back(&all[i].truth);
        cls[i] = it->second;
    }
    std::vector<bool> extreme(classes.size(), true);
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = 0; b < classes.size() && extreme[a]; ++b)
            if (a != b && below(*classes[b], *classes[a])) extreme[a] = false;
    std::vector<OracleProperty> out;
    for (size_t i = 0; i < all.size(); ++i)
        if (cls[i] != SIZE_MAX && extreme[cls[i]]) out.push_back(all[i]);
    return out;
}

}  // namespace

std::vector<OracleProperty> oracle_strongest_consequences(const std::vector<OracleProperty>& all,
                                                          const Bitset& positives) {
    return extremal(
        all, [&](const Bitset& t) { return positives.subset_of(t); },
        [](const Bitset& b, const Bitset& a) { return b.subset_of(a); });
}

std::vector<OracleProperty> oracle_weakest_implicants(const std::vector<OracleProperty>& all,
                                                      const Bitset& positives) {
    return extremal(
        all, [&](const Bitset& t) { return t.subset_of(positives); },
        [](const Bitset& b, const Bitset& a) { return a.subset_of(b); });
}

Bitset oracle_best_semantics(const std::vector<OracleProperty>& all, const Bitset& positives, Mode mode) {
    if (mode == Mode::Over) {
        Bitset r(positives.size(), true);
        for (auto& p : oracle_strongest_consequences(all, positives)) r &= p.truth;
        return r;
    }
    Bitset r(positives.size(), false);
    for (auto& p : oracle_weakest_implicants(all, positives)) r |= p.truth;
    return r;
}

Bitset oracle_best_semantics(const Universe& u, const Grammar& g, Mode mode, uint64_t cap, uint64_t pairCap) {
    return oracle_best_semantics(oracle_materialize(u, g, cap), oracle_positive_set(u, pairCap), mode);
}

bool is_sound(const Bitset& positives, const Bitset& phi, Mode mode) {
    return mode == Mode::Over ? positives.subset_of(phi) : phi.subset_of(positives);
}

Bitset combined_semantics(const std::vector<Property>& props, Mode mode, uint64_t numExamples) {
    Bitset r(numExamples, mode == Mode::Over);
    for (auto& p : props) {
        if (mode == Mode::Over)
            r &= *p.truth;
        else
            r |= *p.truth;
    }
    return r;
}

OracleVerdict oracle_check(const Universe& u, const SynthesisReport& r, uint64_t cap, uint64_t pairCap) {
    OracleVerdict v;
    const Bitset pos = oracle_positive_set(u, pairCap);
    const uint64_t n = u.num_examples();
    // Re-evaluate rather than trust the engine's cached truth vectors.
    std::vector<Property> props = r.properties;
    for (auto& p : props) {
        p.truth = std::make_shared<const Bitset>(u.interp(*p.ast));
        if (!is_sound(pos, *p.truth, r.mode)) {
            v.sound = false;
            v.problems.push_back("unsound: " + p.text());
        }
    }
    if (props.size() > 1) {
        for (size_t i = 0; i < props.size(); ++i) {
            std::vector<Property> others;
            for (size_t j = 0; j < props.size(); ++j)
                if (j != i) others.push_back(props[j]);
            const Bitset rest = combined_semantics(others, r.mode, n);
            const Bitset& mine = *props[i].truth;
            if (r.mode == Mode::Over ? rest.subset_of(mine) : mine.subset_of(rest)) {
                v.incomparable = false;
                v.problems.push_back("redundant: " + props[i].text());
            }
        }
    }
    if (r.status != Status::Best) return v;
    const LoudProblem& prob = u.problem();
    const auto& g = r.mode == Mode::Over ? prob.grammarOver : prob.grammarUnder;
    if (!g) return v;
    std::vector<OracleProperty> all;
    try {
        all = oracle_materialize(u, *g, cap);
    } catch (const GrammarTooLarge&) {
        return v;
    }
    v.checkedBest = true;
    const Bitset best = oracle_best_semantics(all, pos, r.mode);
    if (combined_semantics(props, r.mode, n) != best) {
        v.best = false;
        v.problems.push_back("combined semantics differs from the oracle's best " +
                             std::string(r.mode == Mode::Over ? "conjunction" : "disjunction"));
    }
    return v;
}

}  // namespace loud
