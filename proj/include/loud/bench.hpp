#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loud/cegis.hpp"
#include "loud/model.hpp"

namespace loud {

struct EmbeddedProblem {
    const char* name;
    const char* text;
};

// Bundled problems/*.loud files, sorted by name.
const std::vector<EmbeddedProblem>& embedded_problems();
std::optional<std::string> embedded_problem(const std::string& name);

// Reads `ref` as a file path, falling back to a bundled problem name.
// Throws std::runtime_error when neither exists.
std::string load_problem_text(const std::string& ref);

// Problem names of a pack; throws std::invalid_argument for unknown packs.
std::vector<std::string> bench_pack(const std::string& pack);

struct BenchOptions {
    bool oracleCheck = false;
    bool hCache = true;
    std::optional<int64_t> timeoutMillis;
};

struct BenchCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BenchResult {
    std::string problem;
    std::vector<SynthesisReport> reports;
    std::vector<BenchCheck> checks;
    int64_t millis = 0;

    bool pass() const;
};

// Runs a bundled problem in the modes it is checked in and evaluates its
// expectations: soundness and incomparability for every report, plus the
// problem-specific reference semantics.
BenchResult run_bench_problem(const std::string& name, const BenchOptions& opts);

// Evaluates each reference formula over the example domain and combines
// them by ∧ (over) or ∨ (under).
Bitset reference_semantics(const Universe& u, const std::vector<std::string>& formulas, Mode mode);

}  // namespace loud
