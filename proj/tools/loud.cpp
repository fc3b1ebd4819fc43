#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loud/bench.hpp"
#include "loud/cegis.hpp"
#include "loud/oracle.hpp"
#include "loud/parser.hpp"
#include "loud/printer.hpp"
#include "loud/report.hpp"
#include "loud/transformers.hpp"

using namespace loud;

namespace {

struct RunFlags {
    std::string file;
    std::string mode = "auto";
    std::optional<int64_t> timeout;
    std::optional<uint64_t> seed;
    std::string format = "text";
    bool oracleCheck = false;
    bool noHCache = false;
    int threads = 1;
};

std::vector<Mode> modes_for(const LoudProblem& p, const std::string& flag) {
    if (flag == "over") return {Mode::Over};
    if (flag == "under") return {Mode::Under};
    if (flag == "both") return {Mode::Over, Mode::Under};
    if (p.transformer != TransformerKind::None)
        return {transformer_is_over(p.transformer) ? Mode::Over : Mode::Under};
    std::vector<Mode> ms;
    if (p.grammarOver) ms.push_back(Mode::Over);
    if (p.grammarUnder) ms.push_back(Mode::Under);
    return ms;
}

SearchConfig effective_config(const LoudProblem& p, const RunFlags& f) {
    SearchConfig cfg = p.config;
    if (const char* env = std::getenv("LOUD_TIMEOUT_MS")) {
        try {
            cfg.timeoutMillis = std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("LOUD_TIMEOUT_MS is not an integer: ") + env);
        }
    }
    if (f.timeout) cfg.timeoutMillis = *f.timeout;
    if (f.seed) cfg.seed = *f.seed;
    if (f.noHCache) cfg.hCacheEnabled = false;
    if (f.oracleCheck) cfg.oracleCheckEnabled = true;
    cfg.validate();
    return cfg;
}

int cmd_run(const RunFlags& f) {
    const LoudProblem p = parse_problem(load_problem_text(f.file));
    const SearchConfig cfg = effective_config(p, f);
    const Universe u(p);
    bool partial = false;
    nlohmann::ordered_json docs = nlohmann::ordered_json::array();
    for (Mode m : modes_for(p, f.mode)) {
        SynthesisReport r = synthesize_report(u, m, cfg);
        partial |= r.status == Status::PartialTimeout;
        std::optional<OracleVerdict> verdict;
        if (cfg.oracleCheckEnabled) verdict = oracle_check(u, r, cfg.enumerationCap, cfg.oraclePairCap);
        const ReportDocument d = make_document(p, r, verdict);
        if (f.format == "json")
            docs.push_back(to_json(d));
        else
            std::cout << emit_text(d, r.wallMillis);
        if (verdict && !verdict->ok()) {
            if (f.format == "json") std::cout << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
            std::cerr << "error: oracle check failed for " << mode_name(m) << "-mode report\n";
            return 1;
        }
    }
    if (f.format == "json") std::cout << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
    return partial ? 2 : 0;
}

int cmd_oracle(const std::string& file, const std::string& modeFlag, const std::string& format) {
    const LoudProblem p = parse_problem(load_problem_text(file));
    const SearchConfig& cfg = p.config;
    const Universe u(p);
    const Bitset pos = oracle_positive_set(u, cfg.oraclePairCap);
    nlohmann::ordered_json j;
    j["problem"] = p.name;
    j["examples"] = u.num_examples();
    j["positives"] = pos.count();
    for (Mode m : modes_for(p, modeFlag)) {
        const auto& g = m == Mode::Over ? p.grammarOver : p.grammarUnder;
        if (!g) throw std::invalid_argument(std::string("problem has no grammar ") + mode_name(m));
        const auto all = oracle_materialize(u, *g, cfg.enumerationCap);
        const auto best = m == Mode::Over ? oracle_strongest_consequences(all, pos) : oracle_weakest_implicants(all, pos);
        nlohmann::ordered_json props = nlohmann::ordered_json::array();
        for (auto& b : best) props.push_back(pretty(*b.ast));
        nlohmann::ordered_json mj;
        mj["grammarSize"] = all.size();
        mj["properties"] = std::move(props);
        mj["bestSemanticsSize"] = oracle_best_semantics(all, pos, m).count();
        j[mode_name(m)] = std::move(mj);
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "problem " << p.name << ": " << pos.count() << " of " << u.num_examples()
              << " examples are positive\n";
    for (Mode m : modes_for(p, modeFlag)) {
        const auto& mj = j[mode_name(m)];
        std::cout << mode_name(m) << ": " << mj["properties"].size() << " "
                  << (m == Mode::Over ? "strongest consequences" : "weakest implicants") << " among "
                  << mj["grammarSize"].get<uint64_t>() << " properties; best semantics has "
                  << mj["bestSemanticsSize"].get<uint64_t>() << " examples\n";
        for (auto& t : mj["properties"]) std::cout << "  " << t.get<std::string>() << "\n";
    }
    return 0;
}

int cmd_bench(const std::string& pack, const BenchOptions& opts) {
    const auto names = bench_pack(pack);
    size_t passed = 0;
    std::printf("%-14s %-6s %10s\n", "problem", "result", "ms");
    for (const auto& name : names) {
        const BenchResult r = run_bench_problem(name, opts);
        std::printf("%-14s %-6s %10lld\n", name.c_str(), r.pass() ? "PASS" : "FAIL", static_cast<long long>(r.millis));
        for (auto& c : r.checks)
            if (!c.pass) std::printf("    failed: %s (%s)\n", c.name.c_str(), c.detail.c_str());
        passed += r.pass();
        std::fflush(stdout);
    }
    std::printf("%zu/%zu pass\n", passed, names.size());
    return passed == names.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loud: best L-consequences and L-implicants of existential queries"};
    app.require_subcommand(1);

    RunFlags rf;
    auto* run = app.add_subcommand("run", "Synthesize properties for a problem");
    run->add_option("file", rf.file, "Problem file or bundled problem name")->required();
    run->add_option("--mode", rf.mode, "over, under, both, or auto")
        ->check(CLI::IsMember({"over", "under", "both", "auto"}));
    run->add_option("--timeout", rf.timeout, "Budget per mode in milliseconds (0 = none)");
    run->add_option("--seed", rf.seed, "Recorded in the report");
    run->add_option("--format", rf.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    run->add_flag("--oracle-check", rf.oracleCheck, "Validate the result by exhaustive enumeration");
    run->add_flag("--no-h-cache", rf.noHCache, "Do not share hidden instances across CEGQI loops");
    run->add_option("--threads", rf.threads, "Worker threads")->check(CLI::PositiveNumber);
    run->add_flag("--deterministic", "Byte-identical reports for fixed inputs (always on)");

    std::string oracleFile, oracleMode = "auto", oracleFormat = "text";
    auto* oracle = app.add_subcommand("oracle", "Compute the reference answer by brute force");
    oracle->add_option("file", oracleFile, "Problem file or bundled problem name")->required();
    oracle->add_option("--mode", oracleMode, "over, under, both, or auto")
        ->check(CLI::IsMember({"over", "under", "both", "auto"}));
    oracle->add_option("--format", oracleFormat, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string pack;
    BenchOptions bo;
    bool benchNoCache = false;
    std::optional<int64_t> benchTimeout;
    auto* bench = app.add_subcommand("bench", "Run a bundled benchmark pack and check its expectations");
    bench->add_option("pack", pack, "Pack name (core)")->required();
    bench->add_flag("--oracle-check", bo.oracleCheck, "Also compare against the oracle where it is feasible");
    bench->add_flag("--no-h-cache", benchNoCache, "Disable the shared CEGQI instance cache");
    bench->add_option("--timeout", benchTimeout, "Budget per mode in milliseconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(rf);
        if (oracle->parsed()) return cmd_oracle(oracleFile, oracleMode, oracleFormat);
        if (bench->parsed()) {
            bo.hCache = !benchNoCache;
            bo.timeoutMillis = benchTimeout;
            return cmd_bench(pack, bo);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
