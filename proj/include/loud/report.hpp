#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "loud/cegis.hpp"
#include "loud/model.hpp"
#include "loud/oracle.hpp"

namespace loud {

inline constexpr int kReportSchema = 1;

struct ReportProperty {
    std::string text;     // pretty form, with `p => q` sugar
    nlohmann::ordered_json ast;  // desugared tree

    bool operator==(const ReportProperty&) const = default;
};

// Postprocessed view of a transformer run, e.g. the wlp disjunction
// obtained by negating every negated-grammar consequence.
struct DerivedResult {
    std::string kind;
    std::vector<std::string> disjuncts;
    std::string text;

    bool operator==(const DerivedResult&) const = default;
};

struct ReportDocument {
    int schema = kReportSchema;
    std::string problem;
    std::string mode;
    std::string status;
    uint64_t seed = 0;
    std::string transformer;  // empty for plain problems
    std::vector<ReportProperty> properties;
    std::vector<std::pair<std::string, uint64_t>> stats;
    std::optional<std::string> inProgress;
    std::optional<DerivedResult> derived;
    std::optional<bool> oracleOk;
    std::vector<std::string> oracleProblems;

    bool operator==(const ReportDocument&) const = default;
};

nlohmann::ordered_json expr_to_json(const Expr& e);

ReportDocument make_document(const LoudProblem& p, const SynthesisReport& r,
                             const std::optional<OracleVerdict>& verdict = std::nullopt);

nlohmann::ordered_json to_json(const ReportDocument& d);
// Throws nlohmann::json::exception on malformed input.
ReportDocument document_from_json(const nlohmann::ordered_json& j);

// Machine form: one JSON object, keys in fixed order, 2-space indent.
std::string emit_json(const ReportDocument& d);
std::string emit_text(const ReportDocument& d, int64_t wallMillis = -1);

}  // namespace loud
