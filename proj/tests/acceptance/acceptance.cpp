// One line per acceptance criterion: "[PASS] <n> <title>: <detail>".
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "loud/bench.hpp"
#include "loud/cegis.hpp"
#include "loud/oracle.hpp"
#include "loud/parser.hpp"
#include "loud/primitives.hpp"

using namespace loud;

namespace {

// Pinned tolerances and budgets.
constexpr int64_t kModhashBudgetMs = 5 * 60 * 1000;
constexpr int64_t kPhiloBudgetMs = 5 * 60 * 1000;
constexpr int64_t kRandomSuiteBudgetMs = 10 * 60 * 1000;
constexpr int kRandomProblems = 200;
constexpr uint64_t kRandomSeed = 20240501;
constexpr uint64_t kMaxGrammarSize = 500;
constexpr uint64_t kMaxHidden = 25;
constexpr uint64_t kModhashHidden = 31;
constexpr uint64_t kPairCap = uint64_t{1} << 32;
// Semantic comparisons are exact: zero differing examples allowed.
constexpr uint64_t kAllowedDiff = 0;

struct Loaded {
    explicit Loaded(const std::string& text)
        : p(std::make_unique<LoudProblem>(parse_problem(text))), u(std::make_unique<Universe>(*p)) {}
    std::unique_ptr<LoudProblem> p;
    std::unique_ptr<Universe> u;
};

Loaded bundled(const std::string& name) { return Loaded(*embedded_problem(name)); }

int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

uint64_t diff(const Bitset& a, const Bitset& b) {
    Bitset x = a;
    x.subtract(b);
    Bitset y = b;
    y.subtract(a);
    return x.count() + y.count();
}

// Every report produced above, re-checked for criterion 9.
struct Produced {
    const Universe* u;
    SynthesisReport r;
};
std::vector<Produced> produced;
std::vector<std::shared_ptr<Loaded>> keepAlive;

SynthesisReport run(const std::shared_ptr<Loaded>& l, Mode m, bool cache = true) {
    SearchConfig cfg = l->p->config;
    cfg.hCacheEnabled = cache;
    SynthesisReport r = synthesize_report(*l->u, m, cfg);
    keepAlive.push_back(l);
    produced.push_back({l->u.get(), r});
    return r;
}

int failures = 0;

void report(int n, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", n, title.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

void guarded(int n, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        report(n, title, ok, detail);
    } catch (const std::exception& e) {
        report(n, title, false, std::string("exception: ") + e.what());
    }
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
}

// Compares the combined semantics of a run against reference formulas.
std::pair<bool, std::string> against_reference(const std::shared_ptr<Loaded>& l, Mode m,
                                               const std::vector<std::string>& formulas, int64_t budgetMs) {
    const int64_t t0 = now_ms();
    SynthesisReport r = run(l, m);
    const int64_t ms = now_ms() - t0;
    const Bitset got = combined_semantics(r.properties, m, l->u->num_examples());
    const uint64_t d = diff(got, reference_semantics(*l->u, formulas, m));
    std::ostringstream os;
    os << status_name(r.status) << ", " << r.properties.size() << " properties, " << d << " of "
       << l->u->num_examples() << " examples differ, " << ms << " ms (budget " << budgetMs << ")";
    return {r.status == Status::Best && d <= kAllowedDiff && ms <= budgetMs, os.str()};
}

// ---------------------------------------------------------------------------
// Random problems for the best-semantics suite.

struct RandomProblem {
    std::string text;
};

std::string random_problem(std::mt19937_64& rng, int id) {
    auto pick = [&](int lo, int hi) { return static_cast<int>(lo + rng() % static_cast<uint64_t>(hi - lo + 1)); };
    const int nfree = pick(1, 3);
    std::vector<std::string> free, hidden;
    std::ostringstream os;
    os << "problem rand" << id << "\nvars {\n";
    for (int i = 0; i < nfree; ++i) {
        const int lo = pick(-2, 1), size = pick(2, 5);
        free.push_back("v" + std::to_string(i));
        os << "    " << free.back() << " : int[" << lo << ".." << lo + size - 1 << "];\n";
    }
    const int shape = pick(0, 2);  // no hidden, one hidden, two hidden
    uint64_t hsize = 1;
    for (int i = 0; i < shape; ++i) {
        const int size = shape == 1 ? pick(2, 5) : pick(2, 5);
        if (hsize * static_cast<uint64_t>(size) > kMaxHidden) break;
        hsize *= static_cast<uint64_t>(size);
        const int lo = pick(-2, 1);
        hidden.push_back("h" + std::to_string(i));
        os << "    exist " << hidden.back() << " : int[" << lo << ".." << lo + size - 1 << "];\n";
    }
    os << "}\n";

    std::vector<std::string> all = free;
    all.insert(all.end(), hidden.begin(), hidden.end());
    auto term = [&]() -> std::string {
        const std::string v = all[rng() % all.size()];
        switch (pick(0, 4)) {
            case 0: return std::to_string(pick(-2, 2));
            case 1: return v + " + " + all[rng() % all.size()];
            case 2: return v + " - " + std::to_string(pick(0, 2));
            case 3: return "mod(" + v + " + " + all[rng() % all.size()] + ", " + std::to_string(pick(2, 3)) + ")";
            default: return v;
        }
    };
    const char* cmps[] = {"<", "<=", "==", "!="};
    auto atom = [&] { return term() + " " + cmps[rng() % 4] + " " + term(); };
    std::string q = atom();
    for (int k = pick(0, 2); k > 0; --k) q = "(" + q + (rng() % 2 ? ") /\\ (" : ") \\/ (") + atom() + ")";
    os << "query { " << q << "; }\n";

    // Grammar atoms over free variables and a few constants.
    std::vector<std::string> items = free;
    for (int k = pick(0, 2); k > 0; --k) items.push_back(std::to_string(pick(-1, 2)));
    std::string ialts;
    for (size_t i = 0; i < items.size(); ++i) ialts += (i ? " | " : "") + items[i];
    std::string ops;
    std::vector<std::string> opPool = {"<", "<=", "==", "!="};
    std::shuffle(opPool.begin(), opPool.end(), rng);
    const int nops = pick(1, 3);
    for (int i = 0; i < nops; ++i) ops += (i ? "|" : "") + opPool[i];
    const int hi = pick(1, 3);
    if (rng() % 4 == 0) {
        // A list-shaped grammar without macros.
        os << "grammar over { S -> AP | AP \\/ AP; AP -> I {" << ops << "} I; I -> " << ialts << "; }\n";
        os << "grammar under { S -> AP | AP /\\ AP; AP -> I {" << ops << "} I; I -> " << ialts << "; }\n";
    } else {
        os << "grammar over { D -> \\/[AP, 0.." << hi << "]; AP -> I {" << ops << "} I; I -> " << ialts << "; }\n";
        os << "grammar under { C -> /\\[AP, 0.." << hi << "]; AP -> I {" << ops << "} I; I -> " << ialts << "; }\n";
    }
    return os.str();
}

}  // namespace

int main() {
    // 1. modhash consequences.
    guarded(1, "modhash over-mode equals the five reference consequences", [] {
        auto l = std::make_shared<Loaded>(bundled("modhash"));
        if (l->u->num_examples() != 15376) return std::make_pair(false, std::string("example domain size mismatch"));
        return against_reference(l, Mode::Over,
                                 {"0 <= y", "y < M", "a == 0 => y == 0", "a == M => y == 0", "a == -M => y == 0"},
                                 kModhashBudgetMs);
    });

    // 2. modhash implicants.
    guarded(2, "modhash under-mode equals the three reference implicants", [] {
        auto l = std::make_shared<Loaded>(bundled("modhash"));
        return against_reference(l, Mode::Under,
                                 {"y == 0", "0 <= a /\\ a < M /\\ a == y",
                                  "0 <= y /\\ y < M /\\ -M < a /\\ a < M /\\ a != 0 /\\ isPrime(M)"},
                                 kModhashBudgetMs);
    });

    // 3. Example classification.
    guarded(3, "modhash example classification", [] {
        Loaded l = bundled("modhash");
        auto idx = [&](int64_t y, int64_t a, int64_t m) {
            return *l.u->example_space().encode({Value::integer(y), Value::integer(a), Value::integer(m)});
        };
        struct Case {
            int64_t y, a, m;
            bool positive;
        };
        const Case cases[] = {{1, 6, 5, true}, {-1, 1, 3, false}, {3, 1, 3, false}, {3, 2, 6, false}};
        bool ok = true;
        std::vector<std::string> out;
        for (auto& c : cases) {
            const bool got = oracle_is_positive(*l.u, idx(c.y, c.a, c.m));
            ok &= got == c.positive;
            out.push_back("(" + std::to_string(c.y) + "," + std::to_string(c.a) + "," + std::to_string(c.m) + ")" +
                          (got ? "+" : "-"));
        }
        return std::make_pair(ok, join(out));
    });

    // 4. CEGQI on 0 <= y < M.
    guarded(4, "check_implication_under(0 <= y < M) returns a verified negative example", [] {
        Loaded l = bundled("modhash");
        SearchConfig cfg = l.p->config;
        PropertySpace space(expand_grammar(*l.p->grammarUnder, cfg.enumerationCap), *l.u, cfg.enumerationCap);
        Primitives prim(*l.u, space, cfg, nullptr);
        const Property phi = space.make(parse_property("0 <= y /\\ y < M", *l.p));
        auto e = prim.check_implication_under(phi);
        if (!e) return std::make_pair(false, std::string("no example returned"));
        bool negative = true;
        for (uint64_t h = 0; h < l.u->num_hidden(); ++h) negative &= !l.u->psi(*e, h);
        const bool inPhi = l.u->interp(*phi.ast).test(*e);
        const uint64_t h = prim.stats().maxH;
        std::ostringstream os;
        os << "e = " << l.u->example_text(*e) << ", negative under all " << l.u->num_hidden()
           << " instances: " << (negative ? "yes" : "no") << ", |H| = " << h << ", satisfies phi: " << inPhi;
        return std::make_pair(negative && inPhi && h <= kModhashHidden && l.u->num_hidden() == kModhashHidden,
                              os.str());
    });

    // 5. Philosophers.
    guarded(5, "philo3 over/under equal the reference properties", [] {
        auto l = std::make_shared<Loaded>(bundled("philo3"));
        const Bitset pos = oracle_positive_set(*l->u, kPairCap);
        // Deadlock is reachable exactly when all preferences agree; otherwise only dl = false is possible.
        uint64_t misclassified = 0;
        const Bitset allSame =
            reference_semantics(*l->u, {"o1 == o2 /\\ o2 == o3"}, Mode::Over);
        const Bitset noDl = reference_semantics(*l->u, {"!dl"}, Mode::Over);
        for (uint64_t e = 0; e < l->u->num_examples(); ++e)
            misclassified += pos.test(e) != (noDl.test(e) || allSame.test(e));
        auto over = against_reference(
            l, Mode::Over,
            {"o1 == 'L' /\\ o2 == 'R' => !dl", "o2 == 'L' /\\ o3 == 'R' => !dl", "o3 == 'L' /\\ o1 == 'R' => !dl"},
            kPhiloBudgetMs);
        auto under = against_reference(
            l, Mode::Under,
            {"o1 == 'L' /\\ o2 == 'L' /\\ o3 == 'L' /\\ dl", "o1 == 'R' /\\ o2 == 'R' /\\ o3 == 'R' /\\ dl", "!dl"},
            kPhiloBudgetMs);
        std::ostringstream os;
        os << l->u->num_examples() << " examples, " << l->u->num_hidden() << " schedules, " << misclassified
           << " misclassified; over: " << over.second << "; under: " << under.second;
        return std::make_pair(misclassified == 0 && l->u->num_hidden() <= 729 && over.first && under.first,
                              os.str());
    });

    // 6. max3.
    guarded(6, "max3 equals the oracle and the listed formulas are sound", [] {
        auto l = std::make_shared<Loaded>(bundled("max3"));
        const Bitset pos = oracle_positive_set(*l->u, kPairCap);
        bool ok = true;
        std::ostringstream os;
        for (Mode m : {Mode::Over, Mode::Under}) {
            SynthesisReport r = run(l, m);
            const Bitset best = oracle_best_semantics(*l->u, m == Mode::Over ? *l->p->grammarOver : *l->p->grammarUnder,
                                                      m, l->p->config.enumerationCap, kPairCap);
            const uint64_t d = diff(combined_semantics(r.properties, m, l->u->num_examples()), best);
            ok &= r.status == Status::Best && d <= kAllowedDiff;
            os << mode_name(m) << ": " << r.properties.size() << " properties, " << d << " differ from oracle; ";
        }
        const std::vector<std::string> overFormulas = {"x2 < o \\/ x1 < o \\/ x2 == x1", "x3 <= o",
                                               "o == x2 \\/ o == x1 \\/ x1 < x3", "o == x2 \\/ o == x3 \\/ x3 < x1",
                                               "x2 < x3 \\/ o == x2 \\/ x2 < x1"};
        const std::vector<std::string> underFormulas = {"x1 == o /\\ x3 <= x1 /\\ x2 <= x1", "x2 == o /\\ x3 <= x2 /\\ x1 <= x2",
                                               "x3 == o /\\ x1 <= x3 /\\ x2 <= x3"};
        int sound = 0;
        for (auto& f : overFormulas) sound += is_sound(pos, l->u->interp(*parse_property(f, *l->p)), Mode::Over);
        for (auto& f : underFormulas) sound += is_sound(pos, l->u->interp(*parse_property(f, *l->p)), Mode::Under);
        os << sound << "/8 listed formulas sound";
        return std::make_pair(ok && sound == 8, os.str());
    });

    // 7. remhash incorrectness.
    guarded(7, "remhash wupo admits a negative output and wpp equals the reference", [] {
        auto wupo = std::make_shared<Loaded>(bundled("remhash-wupo"));
        SynthesisReport r = run(wupo, Mode::Under);
        const Bitset bad = wupo->u->interp(*parse_property("y' < 0", *wupo->p));
        std::string witness;
        for (auto& p : r.properties) {
            const Bitset hit = *p.truth & bad;
            if (hit.any()) {
                witness = p.text() + " admits " + wupo->u->example_text(hit.first());
                break;
            }
        }
        auto wpp = std::make_shared<Loaded>(bundled("remhash-wpp"));
        auto ref = against_reference(wpp, Mode::Under,
                                     {"-M < x /\\ x < 0 /\\ 0 < a /\\ a < M /\\ isPrime(M)",
                                      "0 < x /\\ x < M /\\ -M < a /\\ a < 0 /\\ isPrime(M)"},
                                     kModhashBudgetMs);
        return std::make_pair(r.status == Status::Best && !witness.empty() && ref.first,
                              "wupo " + std::string(status_name(r.status)) + ", " +
                                  (witness.empty() ? "no negative witness" : witness) + "; wpp: " + ref.second);
    });

    // 8. Random best-semantics suite.
    guarded(8, "engine equals oracle best semantics on random problems", [] {
        std::mt19937_64 rng(kRandomSeed);
        const int64_t t0 = now_ms();
        int done = 0, attempts = 0, mismatches = 0, partial = 0;
        std::string firstMismatch;
        while (done < kRandomProblems && attempts < 50 * kRandomProblems) {
            ++attempts;
            const std::string text = random_problem(rng, attempts);
            auto l = std::make_shared<Loaded>(text);
            if (l->u->num_hidden() > kMaxHidden) continue;
            std::vector<OracleProperty> props[2];
            bool fits = true;
            for (int k = 0; k < 2 && fits; ++k) {
                const Grammar& g = k == 0 ? *l->p->grammarOver : *l->p->grammarUnder;
                try {
                    props[k] = oracle_materialize(*l->u, g, kMaxGrammarSize);
                } catch (const GrammarTooLarge&) {
                    fits = false;
                }
            }
            if (!fits) continue;
            const Bitset pos = oracle_positive_set(*l->u, kPairCap);
            for (int k = 0; k < 2; ++k) {
                const Mode m = k == 0 ? Mode::Over : Mode::Under;
                SynthesisReport r = run(l, m);
                partial += r.status != Status::Best;
                const Bitset got = combined_semantics(r.properties, m, l->u->num_examples());
                if (diff(got, oracle_best_semantics(props[k], pos, m)) > kAllowedDiff) {
                    ++mismatches;
                    if (firstMismatch.empty()) firstMismatch = std::string(mode_name(m)) + " on\n" + text;
                }
            }
            ++done;
        }
        const int64_t ms = now_ms() - t0;
        std::ostringstream os;
        os << done << " problems (" << attempts << " generated), " << mismatches << " mismatches, " << partial
           << " partial, " << ms << " ms (budget " << kRandomSuiteBudgetMs << ")";
        if (!firstMismatch.empty()) os << "; first mismatch: " << firstMismatch;
        return std::make_pair(done >= kRandomProblems && mismatches == 0 && partial == 0 && ms <= kRandomSuiteBudgetMs,
                              os.str());
    });

    // 10 runs before 9 so that its reports are re-checked too.
    std::pair<bool, std::string> cache;
    try {
        auto l = std::make_shared<Loaded>(bundled("philo3"));
        uint64_t with = 0, without = 0;
        for (Mode m : {Mode::Over, Mode::Under}) {
            with += run(l, m, true).stats.hiddenScans;
            without += run(l, m, false).stats.hiddenScans;
        }
        std::ostringstream os;
        os << "hidden-domain scans: " << with << " with cache, " << without << " without";
        cache = {with <= without, os.str()};
    } catch (const std::exception& e) {
        cache = {false, std::string("exception: ") + e.what()};
    }

    // 9. Soundness and incomparability of every report above.
    guarded(9, "every emitted property is sound and every Best report incomparable", [] {
        uint64_t props = 0, unsound = 0, redundant = 0;
        std::string first;
        for (auto& pr : produced) {
            const Bitset pos = oracle_positive_set(*pr.u, kPairCap);
            for (auto& p : pr.r.properties) {
                ++props;
                if (!is_sound(pos, pr.u->interp(*p.ast), pr.r.mode)) {
                    ++unsound;
                    if (first.empty()) first = "unsound " + p.text();
                }
            }
            if (pr.r.status != Status::Best) continue;
            for (size_t i = 0; i < pr.r.properties.size() && pr.r.properties.size() > 1; ++i) {
                std::vector<Property> others;
                for (size_t j = 0; j < pr.r.properties.size(); ++j)
                    if (j != i) others.push_back(pr.r.properties[j]);
                const Bitset rest = combined_semantics(others, pr.r.mode, pr.u->num_examples());
                const Bitset mine = pr.u->interp(*pr.r.properties[i].ast);
                const bool red = pr.r.mode == Mode::Over ? rest.subset_of(mine) : mine.subset_of(rest);
                if (red) {
                    ++redundant;
                    if (first.empty()) first = "redundant " + pr.r.properties[i].text();
                }
            }
        }
        std::ostringstream os;
        os << produced.size() << " reports, " << props << " properties, " << unsound << " unsound, " << redundant
           << " redundant";
        if (!first.empty()) os << "; first: " << first;
        return std::make_pair(unsound == 0 && redundant == 0, os.str());
    });

    report(10, "H-cache does not increase hidden-domain scans on philo3", cache.first, cache.second);

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
