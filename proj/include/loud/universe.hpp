#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "loud/bitset.hpp"
#include "loud/eval.hpp"
#include "loud/model.hpp"

namespace loud {

class DomainTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Timeout : public std::runtime_error {
public:
    Timeout() : std::runtime_error("timeout") {}
};

class Deadline {
public:
    Deadline() = default;
    explicit Deadline(int64_t millis)
        : start_(std::chrono::steady_clock::now()), millis_(millis) {}

    bool expired() const {
        return millis_ > 0 && std::chrono::steady_clock::now() - start_ >= std::chrono::milliseconds(millis_);
    }
    void check() const {
        if (expired()) throw Timeout();
    }
    int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    int64_t millis_ = 0;
};

// A problem with its example and hidden domains decoded once, so that
// examples and hidden instances can be addressed by canonical index.
class Universe {
public:
    explicit Universe(const LoudProblem& p, uint64_t maxExamples = 50000000);

    const LoudProblem& problem() const { return *problem_; }
    const Interpreter& interpreter() const { return interp_; }
    const ValuationSpace& example_space() const { return exSpace_; }
    const ValuationSpace& hidden_space() const { return hidSpace_; }

    uint64_t num_examples() const { return examples_.size(); }
    uint64_t num_hidden() const { return hidden_.size(); }
    const Example& example(uint64_t i) const { return examples_[i]; }
    const HiddenInstance& hidden(uint64_t i) const { return hidden_[i]; }

    bool psi(uint64_t e, uint64_t h) const {
        ++psiEvals_;
        const Example& ex = examples_[e];
        return interp_.holds(*problem_->query, Env{ex.data(), static_cast<int>(ex.size()), hidden_[h].data()});
    }

    // ⟦φ⟧ over the example domain; faults raise PropertyFault.
    Bitset interp(const Expr& phi) const;

    std::string example_text(uint64_t e) const;
    std::string hidden_text(uint64_t h) const;

    uint64_t psi_evals() const { return psiEvals_; }

private:
    const LoudProblem* problem_;
    Interpreter interp_;
    ValuationSpace exSpace_, hidSpace_;
    std::vector<Example> examples_;
    std::vector<HiddenInstance> hidden_;
    mutable uint64_t psiEvals_ = 0;
};

}  // namespace loud
