#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loud/ast.hpp"
#include "loud/value.hpp"

namespace loud {

enum class VarKind : uint8_t { Free, Hidden };

struct VarDecl {
    std::string name;
    VarKind kind = VarKind::Free;
    Domain domain;
    SrcLoc loc;
};

struct SearchConfig {
    int propertyDepthBound = 6;
    int loopUnrollBound = 64;
    int recursionDepthBound = 32;
    int64_t timeoutMillis = 20 * 60 * 1000;  // 0 = none
    uint64_t seed = 0;
    bool hCacheEnabled = true;
    bool oracleCheckEnabled = false;
    uint64_t enumerationCap = 100000000;  // GrammarTooLarge above this
    uint64_t oraclePairCap = 100000000;   // DomainTooLarge above this

    void validate() const;
};

struct Rule {
    std::string name;
    std::vector<ExprPtr> alts;
    SrcLoc loc;
};

struct Grammar {
    std::vector<Rule> rules;
    int start = 0;
    int depthBound = 6;

    int find(const std::string& name) const;
    const Rule& start_rule() const { return rules.at(start); }
};

enum class TransformerKind : uint8_t { None, Spo, Wlp, Wupo, Wpp };

const char* transformer_name(TransformerKind k);

struct LoudProblem {
    std::string name;
    std::vector<VarDecl> vars;
    ExprPtr query;
    std::vector<FuncDef> functions;
    std::optional<Grammar> grammarOver;
    std::optional<Grammar> grammarUnder;
    SearchConfig config;
    TransformerKind transformer = TransformerKind::None;

    // Free variables occupy slots [0, nfree); hidden ones follow.
    std::vector<int> free_vars() const;
    std::vector<int> hidden_vars() const;
    int find_var(const std::string& name) const;
    // Environment slot of vars[index].
    int slot_of(int index) const;
    int find_function(const std::string& name) const;
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& msg, SrcLoc loc = {})
        : std::runtime_error(format(msg, loc)), loc_(loc) {}
    SrcLoc loc() const { return loc_; }

private:
    static std::string format(const std::string& msg, SrcLoc loc);
    SrcLoc loc_;
};

// Mixed-radix enumeration of all valuations of a list of variables.
// Variables vary in declaration order with the first one most significant,
// so index order is lexicographic over ascending per-variable values.
class ValuationSpace {
public:
    ValuationSpace() = default;
    explicit ValuationSpace(std::vector<const VarDecl*> vars);

    uint64_t size() const { return size_; }
    size_t arity() const { return values_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Domain& domain(size_t i) const { return domains_[i]; }

    std::vector<Value> decode(uint64_t index) const;
    std::optional<uint64_t> encode(const std::vector<Value>& vals) const;
    // Looks up value positions by variable name; missing names fail.
    std::optional<uint64_t> encode_named(const std::vector<std::pair<std::string, Value>>& kv) const;

private:
    std::vector<std::string> names_;
    std::vector<Domain> domains_;
    std::vector<std::vector<Value>> values_;
    uint64_t size_ = 1;
};

using Example = std::vector<Value>;
using HiddenInstance = std::vector<Value>;

ValuationSpace example_domain(const LoudProblem& p);
ValuationSpace hidden_domain(const LoudProblem& p);

}  // namespace loud
