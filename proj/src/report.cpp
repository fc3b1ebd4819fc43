#include "loud/report.hpp"

#include <sstream>

#include "loud/printer.hpp"

namespace loud {

using ojson = nlohmann::ordered_json;

namespace {

const char* op_name(Op op) {
    switch (op) {
        case Op::Neg: return "neg";
        case Op::Not: return "not";
        case Op::Add: return "add";
        case Op::Sub: return "sub";
        case Op::Mul: return "mul";
        case Op::Div: return "div";
        case Op::Rem: return "rem";
        case Op::Eq: return "eq";
        case Op::Ne: return "ne";
        case Op::Lt: return "lt";
        case Op::Le: return "le";
        case Op::Gt: return "gt";
        case Op::Ge: return "ge";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Implies: return "implies";
        case Op::Ite: return "ite";
        case Op::Call: return "call";
        case Op::Index: return "index";
        case Op::ListLit: return "list";
        case Op::Hole: return "hole";
        case Op::ConjMacro: return "conj_macro";
        case Op::DisjMacro: return "disj_macro";
        case Op::Lit:
        case Op::Var: break;
    }
    return "?";
}

ojson value_to_json(const Value& v, bool charLit) {
    switch (v.kind) {
        case TypeTag::Bool: return {{"bool", v.truthy()}};
        case TypeTag::Int:
            if (charLit) return {{"char", std::string(1, static_cast<char>(v.num))}};
            return {{"int", v.num}};
        case TypeTag::List: {
            ojson items = ojson::array();
            for (auto& x : v.items) items.push_back(value_to_json(x, false));
            return {{"list", items}};
        }
    }
    return nullptr;
}

// Desugars implications so that machine output only uses not/and/or.
ExprPtr desugar(const ExprPtr& e) {
    if (e->op == Op::Implies) return mk_nary(Op::Or, {mk_unary(Op::Not, desugar(e->args[0])), desugar(e->args[1])});
    if (e->args.empty()) return e;
    auto copy = std::make_shared<Expr>(*e);
    for (auto& a : copy->args) a = desugar(a);
    return copy;
}

}  // namespace

ojson expr_to_json(const Expr& e) {
    if (e.op == Op::Lit) return value_to_json(e.lit, e.charLit);
    if (e.op == Op::Var) return {{"var", e.name}};
    ojson j;
    j["op"] = op_name(e.op);
    if (e.op == Op::Call) j["fn"] = e.name;
    ojson args = ojson::array();
    for (auto& a : e.args) args.push_back(expr_to_json(*a));
    j["args"] = std::move(args);
    return j;
}

ReportDocument make_document(const LoudProblem& p, const SynthesisReport& r,
                             const std::optional<OracleVerdict>& verdict) {
    ReportDocument d;
    d.problem = r.problem;
    d.mode = mode_name(r.mode);
    d.status = status_name(r.status);
    d.seed = r.seed;
    if (p.transformer != TransformerKind::None) d.transformer = transformer_name(p.transformer);
    for (auto& prop : r.properties) d.properties.push_back({pretty(*prop.ast), expr_to_json(*desugar(prop.ast))});
    for (auto& [k, v] : r.stats.items()) d.stats.emplace_back(k, v);
    d.stats.emplace_back("propertySpaceSize", r.propertySpaceSize);
    if (r.inProgress) d.inProgress = pretty(*r.inProgress->ast);

    if (p.transformer == TransformerKind::Wlp) {
        // Each property is ¬P for a DSL property P; the precondition is the
        // disjunction of the P's.
        DerivedResult w;
        w.kind = "wlp";
        for (auto& prop : r.properties) w.disjuncts.push_back(pretty(*normalize(mk_unary(Op::Not, prop.ast))));
        for (size_t i = 0; i < w.disjuncts.size(); ++i) w.text += (i ? " \\/ " : "") + w.disjuncts[i];
        if (w.disjuncts.empty()) w.text = "false";
        d.derived = std::move(w);
    }
    if (verdict) {
        d.oracleOk = verdict->ok();
        d.oracleProblems = verdict->problems;
    }
    return d;
}

ojson to_json(const ReportDocument& d) {
    ojson j;
    j["schema"] = d.schema;
    j["problem"] = d.problem;
    j["mode"] = d.mode;
    j["status"] = d.status;
    j["seed"] = d.seed;
    if (!d.transformer.empty()) j["transformer"] = d.transformer;
    ojson props = ojson::array();
    for (auto& p : d.properties) props.push_back({{"text", p.text}, {"ast", p.ast}});
    j["properties"] = std::move(props);
    ojson stats = ojson::object();
    for (auto& [k, v] : d.stats) stats[k] = v;
    j["stats"] = std::move(stats);
    if (d.inProgress) j["inProgress"] = *d.inProgress;
    if (d.derived)
        j["derived"] = {{"kind", d.derived->kind}, {"disjuncts", d.derived->disjuncts}, {"text", d.derived->text}};
    if (d.oracleOk) j["oracle"] = {{"ok", *d.oracleOk}, {"problems", d.oracleProblems}};
    return j;
}

ReportDocument document_from_json(const ojson& j) {
    ReportDocument d;
    d.schema = j.at("schema").get<int>();
    if (d.schema != kReportSchema) throw std::invalid_argument("unsupported report schema " + std::to_string(d.schema));
    d.problem = j.at("problem").get<std::string>();
    d.mode = j.at("mode").get<std::string>();
    d.status = j.at("status").get<std::string>();
    d.seed = j.at("seed").get<uint64_t>();
    if (j.contains("transformer")) d.transformer = j.at("transformer").get<std::string>();
    for (auto& p : j.at("properties")) d.properties.push_back({p.at("text").get<std::string>(), p.at("ast")});
    for (auto& [k, v] : j.at("stats").items()) d.stats.emplace_back(k, v.get<uint64_t>());
    if (j.contains("inProgress")) d.inProgress = j.at("inProgress").get<std::string>();
    if (j.contains("derived")) {
        const auto& w = j.at("derived");
        d.derived = DerivedResult{w.at("kind").get<std::string>(), w.at("disjuncts").get<std::vector<std::string>>(),
                                  w.at("text").get<std::string>()};
    }
    if (j.contains("oracle")) {
        d.oracleOk = j.at("oracle").at("ok").get<bool>();
        d.oracleProblems = j.at("oracle").at("problems").get<std::vector<std::string>>();
    }
    return d;
}

std::string emit_json(const ReportDocument& d) { return to_json(d).dump(2); }

std::string emit_text(const ReportDocument& d, int64_t wallMillis) {
    std::ostringstream os;
    os << "problem " << d.problem << " (" << d.mode;
    if (!d.transformer.empty()) os << ", " << d.transformer;
    os << "): " << d.status << "\n";
    const char* tag = d.mode == "over" ? "C" : "I";
    for (size_t i = 0; i < d.properties.size(); ++i) os << "  " << tag << i + 1 << ": " << d.properties[i].text << "\n";
    if (d.properties.empty()) os << "  (no properties)\n";
    if (d.inProgress) os << "  in progress: " << *d.inProgress << "\n";
    if (d.derived) os << "  " << d.derived->kind << ": " << d.derived->text << "\n";
    if (d.oracleOk) {
        os << "  oracle: " << (*d.oracleOk ? "ok" : "FAILED") << "\n";
        for (auto& m : d.oracleProblems) os << "    " << m << "\n";
    }
    os << "  seed " << d.seed;
    for (auto& [k, v] : d.stats)
        if (k == "synthesize" || k == "cegqiInstances" || k == "hiddenScans" || k == "psiEvals") os << ", " << k << " " << v;
    if (wallMillis >= 0) os << ", " << wallMillis << " ms";
    os << "\n";
    return os.str();
}

}  // namespace loud
