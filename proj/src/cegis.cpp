#include "loud/cegis.hpp"

#include <stdexcept>

namespace loud {

const char* mode_name(Mode m) { return m == Mode::Over ? "over" : "under"; }
const char* status_name(Status s) { return s == Status::Best ? "Best" : "PartialTimeout"; }

namespace {

ExampleList with(ExampleList xs, const std::optional<uint64_t>& extra) {
    if (extra) xs.push_back(*extra);
    return xs;
}

}  // namespace

Property synth_strongest_consequence(Primitives& prim, const Bitset& conj, Property init, ExampleBank& bank) {
    Property phi = std::move(init);
    bank.phiLast = phi;
    bank.eMinusMay.reset();
    while (true) {
        bank.current = phi;
        if (auto pos = prim.check_implication_over(phi)) {
            bank.ePlus.push_back(*pos);
            if (auto next = prim.synthesize(bank.ePlus, with(bank.eMinus, bank.eMinusMay))) {
                phi = std::move(*next);
            } else {
                phi = *bank.phiLast;
                bank.eMinusMay.reset();
            }
            continue;
        }
        if (bank.eMinusMay) bank.eMinus.push_back(*bank.eMinusMay);
        bank.eMinusMay.reset();
        bank.phiLast = phi;
        auto w = prim.check_strongest(phi, conj, bank.ePlus, bank.eMinus);
        if (!w) return phi;
        bank.eMinusMay = w->example;
        phi = std::move(w->property);
    }
}

Property synth_weakest_implicant(Primitives& prim, const Bitset& disj, Property init, ExampleBank& bank) {
    Property phi = std::move(init);
    bank.phiLast = phi;
    bank.ePlusMay.reset();
    while (true) {
        bank.current = phi;
        if (auto neg = prim.check_implication_under(phi)) {
            bank.eMinus.push_back(*neg);
            if (auto next = prim.synthesize(with(bank.ePlus, bank.ePlusMay), bank.eMinus)) {
                phi = std::move(*next);
            } else {
                phi = *bank.phiLast;
                bank.ePlusMay.reset();
            }
            continue;
        }
        if (bank.ePlusMay) bank.ePlus.push_back(*bank.ePlusMay);
        bank.ePlusMay.reset();
        bank.phiLast = phi;
        auto w = prim.check_weakest(phi, disj, bank.ePlus, bank.eMinus);
        if (!w) return phi;
        bank.ePlusMay = w->example;
        phi = std::move(w->property);
    }
}

std::vector<Property> prune_comparable(std::vector<Property> props, Mode mode, uint64_t numExamples) {
    std::vector<bool> kept(props.size(), true);
    size_t live = props.size();
    for (size_t i = 0; i < props.size() && live > 1; ++i) {
        Bitset others(numExamples, mode == Mode::Over);
        for (size_t j = 0; j < props.size(); ++j) {
            if (j == i || !kept[j]) continue;
            if (mode == Mode::Over)
                others &= *props[j].truth;
            else
                others |= *props[j].truth;
        }
        const bool redundant =
            mode == Mode::Over ? others.subset_of(*props[i].truth) : props[i].truth->subset_of(others);
        if (redundant) {
            kept[i] = false;
            --live;
        }
    }
    std::vector<Property> out;
    for (size_t i = 0; i < props.size(); ++i)
        if (kept[i]) out.push_back(std::move(props[i]));
    return out;
}

SynthesisReport synth_strongest_conjunction(const Universe& u, const PropertySpace& space, const SearchConfig& cfg) {
    Deadline deadline(cfg.timeoutMillis);
    Primitives prim(u, space, cfg, &deadline);
    SynthesisReport r;
    r.problem = u.problem().name;
    r.mode = Mode::Over;
    r.seed = cfg.seed;
    r.propertySpaceSize = space.grammar().count();

    const Bitset all(u.num_examples(), true);
    Bitset conj = all;
    ExampleList ePlus;
    ExampleBank bank;
    try {
        while (true) {
            bank = ExampleBank{};
            bank.ePlus = ePlus;
            Property phi = synth_strongest_consequence(prim, conj, space.top(), bank);
            ePlus = bank.ePlus;
            ExampleList eMinus = bank.eMinus;
            if (eMinus.empty()) {
                auto e = prim.is_sat_diff(conj, phi);
                if (!e) {
                    // An empty conjunction is reported as the final consequence, which equals ⊤ here.
                    if (r.properties.empty()) r.properties.push_back(phi);
                    break;
                }
                eMinus = {*e};
            }
            bank = ExampleBank{};
            bank.ePlus = ePlus;
            bank.eMinus = eMinus;
            phi = synth_strongest_consequence(prim, all, phi, bank);
            ePlus = bank.ePlus;
            conj &= *phi.truth;
            r.properties.push_back(std::move(phi));
            bank.current.reset();
        }
    } catch (const Timeout&) {
        r.status = Status::PartialTimeout;
        r.inProgress = bank.current;
    }
    r.properties = prune_comparable(std::move(r.properties), Mode::Over, u.num_examples());
    r.stats = prim.stats();
    r.wallMillis = deadline.elapsed_ms();
    return r;
}

SynthesisReport synth_weakest_disjunction(const Universe& u, const PropertySpace& space, const SearchConfig& cfg) {
    Deadline deadline(cfg.timeoutMillis);
    Primitives prim(u, space, cfg, &deadline);
    SynthesisReport r;
    r.problem = u.problem().name;
    r.mode = Mode::Under;
    r.seed = cfg.seed;
    r.propertySpaceSize = space.grammar().count();

    const Bitset none(u.num_examples(), false);
    Bitset disj = none;
    ExampleList eMinus;
    ExampleBank bank;
    try {
        while (true) {
            bank = ExampleBank{};
            bank.eMinus = eMinus;
            Property phi = synth_weakest_implicant(prim, disj, space.bottom(), bank);
            eMinus = bank.eMinus;
            ExampleList ePlus = bank.ePlus;
            if (ePlus.empty()) {
                auto e = prim.positive_outside(phi, disj);
                if (!e) {
                    if (r.properties.empty()) r.properties.push_back(phi);
                    break;
                }
                ePlus = {*e};
            }
            bank = ExampleBank{};
            bank.ePlus = ePlus;
            bank.eMinus = eMinus;
            phi = synth_weakest_implicant(prim, none, phi, bank);
            eMinus = bank.eMinus;
            disj |= *phi.truth;
            r.properties.push_back(std::move(phi));
            bank.current.reset();
        }
    } catch (const Timeout&) {
        r.status = Status::PartialTimeout;
        r.inProgress = bank.current;
    }
    r.properties = prune_comparable(std::move(r.properties), Mode::Under, u.num_examples());
    r.stats = prim.stats();
    r.wallMillis = deadline.elapsed_ms();
    return r;
}

SynthesisReport synthesize_report(const Universe& u, Mode mode, const SearchConfig& cfg) {
    const LoudProblem& p = u.problem();
    const auto& g = mode == Mode::Over ? p.grammarOver : p.grammarUnder;
    if (!g) throw std::invalid_argument(std::string("problem '") + p.name + "' has no grammar " + mode_name(mode));
    PropertySpace space(expand_grammar(*g, cfg.enumerationCap), u, cfg.enumerationCap);
    return mode == Mode::Over ? synth_strongest_conjunction(u, space, cfg) : synth_weakest_disjunction(u, space, cfg);
}

}  // namespace loud
