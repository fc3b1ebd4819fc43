#include "loud/model.hpp"

#include <algorithm>

namespace loud {

void SearchConfig::validate() const {
    if (propertyDepthBound < 1) throw ValidationError("propertyDepthBound must be >= 1");
    if (loopUnrollBound < 1) throw ValidationError("loopUnrollBound must be >= 1");
    if (recursionDepthBound < 1) throw ValidationError("recursionDepthBound must be >= 1");
    if (timeoutMillis < 0) throw ValidationError("timeoutMillis must be >= 0");
}

int Grammar::find(const std::string& name) const {
    for (size_t i = 0; i < rules.size(); ++i)
        if (rules[i].name == name) return static_cast<int>(i);
    return -1;
}

const char* transformer_name(TransformerKind k) {
    switch (k) {
        case TransformerKind::None: return "none";
        case TransformerKind::Spo: return "spo";
        case TransformerKind::Wlp: return "wlp";
        case TransformerKind::Wupo: return "wupo";
        case TransformerKind::Wpp: return "wpp";
    }
    return "?";
}

std::vector<int> LoudProblem::free_vars() const {
    std::vector<int> out;
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].kind == VarKind::Free) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> LoudProblem::hidden_vars() const {
    std::vector<int> out;
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].kind == VarKind::Hidden) out.push_back(static_cast<int>(i));
    return out;
}

int LoudProblem::find_var(const std::string& n) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].name == n) return static_cast<int>(i);
    return -1;
}

int LoudProblem::slot_of(int index) const {
    const VarKind kind = vars.at(index).kind;
    int before = 0, nfree = 0;
    for (int i = 0; i < static_cast<int>(vars.size()); ++i) {
        if (vars[i].kind == VarKind::Free) ++nfree;
        if (i < index && vars[i].kind == kind) ++before;
    }
    return kind == VarKind::Free ? before : nfree + before;
}

int LoudProblem::find_function(const std::string& n) const {
    for (size_t i = 0; i < functions.size(); ++i)
        if (functions[i].name == n) return static_cast<int>(i);
    return -1;
}

std::string ValidationError::format(const std::string& msg, SrcLoc loc) {
    if (loc.line <= 0) return msg;
    return std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " + msg;
}

ValuationSpace::ValuationSpace(std::vector<const VarDecl*> vars) {
    for (const VarDecl* v : vars) {
        names_.push_back(v->name);
        domains_.push_back(v->domain);
        values_.push_back(v->domain.enumerate());
        size_ *= values_.back().size();
    }
}

std::vector<Value> ValuationSpace::decode(uint64_t index) const {
    std::vector<Value> out(values_.size());
    for (size_t i = values_.size(); i-- > 0;) {
        const auto& vs = values_[i];
        out[i] = vs[index % vs.size()];
        index /= vs.size();
    }
    return out;
}

std::optional<uint64_t> ValuationSpace::encode(const std::vector<Value>& vals) const {
    if (vals.size() != values_.size()) return std::nullopt;
    uint64_t index = 0;
    for (size_t i = 0; i < values_.size(); ++i) {
        const auto& vs = values_[i];
        auto it = std::lower_bound(vs.begin(), vs.end(), vals[i]);
        if (it == vs.end() || *it != vals[i]) return std::nullopt;
        index = index * vs.size() + static_cast<uint64_t>(it - vs.begin());
    }
    return index;
}

std::optional<uint64_t> ValuationSpace::encode_named(
    const std::vector<std::pair<std::string, Value>>& kv) const {
    std::vector<Value> vals(values_.size());
    std::vector<bool> seen(values_.size(), false);
    for (const auto& [k, v] : kv) {
        auto it = std::find(names_.begin(), names_.end(), k);
        if (it == names_.end()) return std::nullopt;
        size_t i = static_cast<size_t>(it - names_.begin());
        vals[i] = v;
        seen[i] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
    return encode(vals);
}

static ValuationSpace space_of(const LoudProblem& p, VarKind kind) {
    std::vector<const VarDecl*> vs;
    for (const auto& v : p.vars)
        if (v.kind == kind) vs.push_back(&v);
    return ValuationSpace(std::move(vs));
}

ValuationSpace example_domain(const LoudProblem& p) { return space_of(p, VarKind::Free); }
ValuationSpace hidden_domain(const LoudProblem& p) { return space_of(p, VarKind::Hidden); }

}  // namespace loud
