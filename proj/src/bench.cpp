#include "loud/bench.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "loud/oracle.hpp"
#include "loud/parser.hpp"

namespace loud {

std::optional<std::string> embedded_problem(const std::string& name) {
    for (auto& p : embedded_problems())
        if (name == p.name) return std::string(p.text);
    return std::nullopt;
}

std::string load_problem_text(const std::string& ref) {
    std::ifstream in(ref, std::ios::binary);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (auto t = embedded_problem(ref)) return *t;
    throw std::runtime_error("cannot open problem '" + ref + "' (not a file or a bundled problem)");
}

std::vector<std::string> bench_pack(const std::string& pack) {
    if (pack == "core") return {"modhash", "remhash-wupo", "remhash-wpp", "philo3", "max2", "max3", "shuffle3", "rg"};
    throw std::invalid_argument("unknown bench pack '" + pack + "' (available: core)");
}

bool BenchResult::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

Bitset reference_semantics(const Universe& u, const std::vector<std::string>& formulas, Mode mode) {
    Bitset r(u.num_examples(), mode == Mode::Over);
    for (auto& f : formulas) {
        const Bitset t = u.interp(*parse_property(f, u.problem()));
        if (mode == Mode::Over)
            r &= t;
        else
            r |= t;
    }
    return r;
}

namespace {

enum class Expect : uint8_t { Reference, Oracle, NegativeWitness };

struct Expectation {
    Mode mode;
    Expect kind;
    std::vector<std::string> formulas;       // Reference: expected semantics; NegativeWitness: the bad-state predicate
    std::vector<std::string> soundFormulas;  // each must be a sound approximation on its own
};

std::vector<Expectation> expectations(const std::string& name) {
    if (name == "modhash")
        return {{Mode::Over,
                 Expect::Reference,
                 {"0 <= y", "y < M", "a == 0 => y == 0", "a == M => y == 0", "a == -M => y == 0"},
                 {}},
                {Mode::Under,
                 Expect::Reference,
                 {"y == 0", "0 <= a /\\ a < M /\\ a == y",
                  "0 <= y /\\ y < M /\\ -M < a /\\ a < M /\\ a != 0 /\\ isPrime(M)"},
                 {}}};
    if (name == "remhash-wupo") return {{Mode::Under, Expect::NegativeWitness, {"y' < 0"}, {}}};
    if (name == "remhash-wpp")
        return {{Mode::Under,
                 Expect::Reference,
                 {"-M < x /\\ x < 0 /\\ 0 < a /\\ a < M /\\ isPrime(M)",
                  "0 < x /\\ x < M /\\ -M < a /\\ a < 0 /\\ isPrime(M)"},
                 {}}};
    if (name == "philo3")
        return {{Mode::Over,
                 Expect::Reference,
                 {"o1 == 'L' /\\ o2 == 'R' => !dl", "o2 == 'L' /\\ o3 == 'R' => !dl", "o3 == 'L' /\\ o1 == 'R' => !dl"},
                 {}},
                {Mode::Under,
                 Expect::Reference,
                 {"o1 == 'L' /\\ o2 == 'L' /\\ o3 == 'L' /\\ dl", "o1 == 'R' /\\ o2 == 'R' /\\ o3 == 'R' /\\ dl", "!dl"},
                 {}}};
    if (name == "max2")
        return {{Mode::Over, Expect::Oracle, {}, {"o == x1 \\/ o == x2", "x2 == x1 \\/ x1 < o \\/ x2 < o"}},
                {Mode::Under, Expect::Oracle, {}, {"o == x1 /\\ x2 < o", "o == x2 /\\ x1 < o"}}};
    if (name == "max3")
        return {{Mode::Over,
                 Expect::Oracle,
                 {},
                 {"x2 < o \\/ x1 < o \\/ x2 == x1", "x3 <= o", "o == x2 \\/ o == x1 \\/ x1 < x3",
                  "o == x2 \\/ o == x3 \\/ x3 < x1", "x2 < x3 \\/ o == x2 \\/ x2 < x1"}},
                {Mode::Under,
                 Expect::Oracle,
                 {},
                 {"x1 == o /\\ x3 <= x1 /\\ x2 <= x1", "x2 == o /\\ x3 <= x2 /\\ x1 <= x2",
                  "x3 == o /\\ x1 <= x3 /\\ x2 <= x3"}}};
    if (name == "shuffle3" || name == "rg")
        return {{Mode::Over, Expect::Oracle, {}, {}}, {Mode::Under, Expect::Oracle, {}, {}}};
    throw std::invalid_argument("no expectations for problem '" + name + "'");
}

std::string count_diff(const Bitset& a, const Bitset& b) {
    Bitset d = a;
    d.subtract(b);
    Bitset e = b;
    e.subtract(a);
    return std::to_string(d.count() + e.count()) + " examples differ";
}

}  // namespace

BenchResult run_bench_problem(const std::string& name, const BenchOptions& opts) {
    const Deadline clock;
    BenchResult out;
    out.problem = name;
    auto text = embedded_problem(name);
    if (!text) throw std::invalid_argument("unknown bundled problem '" + name + "'");
    const LoudProblem p = parse_problem(*text);
    SearchConfig cfg = p.config;
    cfg.hCacheEnabled = opts.hCache;
    if (opts.timeoutMillis) cfg.timeoutMillis = *opts.timeoutMillis;
    const Universe u(p);
    const Bitset pos = oracle_positive_set(u, cfg.oraclePairCap);

    for (const auto& ex : expectations(name)) {
        SynthesisReport r = synthesize_report(u, ex.mode, cfg);
        const std::string tag = mode_name(ex.mode);
        out.checks.push_back({tag + " status Best", r.status == Status::Best, status_name(r.status)});

        const OracleVerdict v = oracle_check(u, r, cfg.enumerationCap, cfg.oraclePairCap);
        auto joined = [](const std::vector<std::string>& xs) {
            std::string s;
            for (auto& x : xs) s += (s.empty() ? "" : "; ") + x;
            return s;
        };
        out.checks.push_back({tag + " sound", v.sound, joined(v.problems)});
        out.checks.push_back({tag + " incomparable", v.incomparable, joined(v.problems)});

        const Bitset got = combined_semantics(r.properties, ex.mode, u.num_examples());
        switch (ex.kind) {
            case Expect::Reference: {
                const Bitset want = reference_semantics(u, ex.formulas, ex.mode);
                out.checks.push_back({tag + " matches reference", got == want, count_diff(got, want)});
                break;
            }
            case Expect::Oracle:
                out.checks.push_back({tag + " matches oracle best", v.checkedBest && v.best,
                                      v.checkedBest ? joined(v.problems) : "oracle could not enumerate the grammar"});
                break;
            case Expect::NegativeWitness: {
                const Bitset bad = u.interp(*parse_property(ex.formulas.at(0), p));
                std::string detail = "no property admits " + ex.formulas[0];
                bool found = false;
                for (auto& prop : r.properties) {
                    const Bitset hit = *prop.truth & bad;
                    if (hit.any()) {
                        found = true;
                        detail = prop.text() + " admits " + u.example_text(hit.first());
                        break;
                    }
                }
                out.checks.push_back({tag + " admits " + ex.formulas[0], found, detail});
                break;
            }
        }
        for (auto& f : ex.soundFormulas) {
            const bool ok = is_sound(pos, u.interp(*parse_property(f, p)), ex.mode);
            out.checks.push_back({tag + " reference formula sound: " + f, ok, ""});
        }
        if (opts.oracleCheck && ex.kind != Expect::Oracle) {
            out.checks.push_back({tag + " oracle best", v.best,
                                  v.checkedBest ? joined(v.problems) : "skipped: grammar above the enumeration cap"});
        }
        out.reports.push_back(std::move(r));
    }
    out.millis = clock.elapsed_ms();
    return out;
}

}  // namespace loud
