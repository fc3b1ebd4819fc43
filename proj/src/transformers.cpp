#include "loud/transformers.hpp"

#include <algorithm>
#include <set>

#include "loud/check.hpp"

namespace loud {

Grammar negate_grammar(const Grammar& g) {
    Grammar out = g;
    std::string name = "NegStart";
    while (out.find(name) >= 0) name += "_";
    auto hole = std::make_shared<Expr>();
    hole->op = Op::Hole;
    hole->name = g.start_rule().name;
    hole->type = Type::boolean();
    Rule r;
    r.name = name;
    r.loc = g.start_rule().loc;
    r.alts.push_back(mk_unary(Op::Not, hole));
    out.rules.push_back(std::move(r));
    out.start = static_cast<int>(out.rules.size()) - 1;
    return out;
}

bool transformer_is_over(TransformerKind k) { return k == TransformerKind::Spo || k == TransformerKind::Wlp; }

namespace {

bool primed(const std::string& n) { return !n.empty() && n.back() == '\''; }

void check_roles(const TransformerSpec& s) {
    if (!s.relation) throw MalformedSpec("transformer needs a relation");
    if (!s.dsl) throw MalformedSpec("transformer needs a grammar");
    std::set<std::string> seen;
    auto claim = [&](const std::string& n, const char* role) {
        bool declared = std::any_of(s.vars.begin(), s.vars.end(), [&](const VarDecl& v) { return v.name == n; });
        if (!declared) throw MalformedSpec(std::string(role) + " '" + n + "' is not declared in vars");
        if (!seen.insert(n).second) throw MalformedSpec("variable '" + n + "' has more than one transformer role");
    };
    for (const auto& n : s.params) {
        claim(n, "param");
        if (primed(n)) throw MalformedSpec("param '" + n + "' must not be primed");
    }
    for (const auto& n : s.inputs) {
        claim(n, "input");
        if (primed(n)) throw MalformedSpec("input '" + n + "' must not be primed");
    }
    for (const auto& n : s.outputs) {
        claim(n, "output");
        if (!primed(n)) throw MalformedSpec("output '" + n + "' must be primed");
    }
    for (const auto& v : s.vars)
        if (!seen.count(v.name)) throw MalformedSpec("variable '" + v.name + "' has no transformer role", v.loc);
}

LoudProblem build(const TransformerSpec& s, bool inputsFree, ExprPtr cond, bool over) {
    check_roles(s);
    LoudProblem p;
    p.name = s.name;
    p.functions = s.functions;
    p.config = s.config;
    p.transformer = s.kind;
    const auto& hiddenNames = inputsFree ? s.outputs : s.inputs;
    for (VarDecl v : s.vars) {
        bool hidden = std::find(hiddenNames.begin(), hiddenNames.end(), v.name) != hiddenNames.end();
        v.kind = hidden ? VarKind::Hidden : VarKind::Free;
        p.vars.push_back(std::move(v));
    }
    p.query = mk_nary(Op::And, {std::move(cond), s.relation});
    if (over) p.grammarOver = s.dsl;
    else p.grammarUnder = s.dsl;
    return p;
}

}  // namespace

LoudProblem encode_spo(const TransformerSpec& s) {
    if (!s.pre) throw MalformedSpec("spo needs a precondition (pre)");
    LoudProblem p = build(s, false, s.pre, true);
    resolve_problem(p);
    return p;
}

LoudProblem encode_wlp(const TransformerSpec& s) {
    if (!s.post) throw MalformedSpec("wlp needs a postcondition (post)");
    LoudProblem p = build(s, true, mk_unary(Op::Not, s.post), true);
    p.grammarOver = negate_grammar(*p.grammarOver);
    resolve_problem(p);
    return p;
}

LoudProblem encode_wupo(const TransformerSpec& s) {
    if (!s.pre) throw MalformedSpec("wupo needs a precondition (pre)");
    LoudProblem p = build(s, false, s.pre, false);
    resolve_problem(p);
    return p;
}

LoudProblem encode_wpp(const TransformerSpec& s) {
    if (!s.post) throw MalformedSpec("wpp needs a postcondition (post)");
    LoudProblem p = build(s, true, s.post, false);
    resolve_problem(p);
    return p;
}

LoudProblem encode(const TransformerSpec& s) {
    switch (s.kind) {
        case TransformerKind::Spo: return encode_spo(s);
        case TransformerKind::Wlp: return encode_wlp(s);
        case TransformerKind::Wupo: return encode_wupo(s);
        case TransformerKind::Wpp: return encode_wpp(s);
        case TransformerKind::None: break;
    }
    throw MalformedSpec("transformer kind is missing");
}

}  // namespace loud
