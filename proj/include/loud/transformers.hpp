#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loud/ast.hpp"
#include "loud/model.hpp"

namespace loud {

class MalformedSpec : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A program relation rel(σ, σ') with optional pre/postconditions. Outputs
// are the primed copies of the state; params stay free in every encoding.
struct TransformerSpec {
    TransformerKind kind = TransformerKind::None;
    std::string name;
    std::vector<VarDecl> vars;
    std::vector<std::string> params, inputs, outputs;
    std::vector<FuncDef> functions;
    ExprPtr relation;
    ExprPtr pre;   // P over params and inputs
    ExprPtr post;  // Q over params and outputs
    std::optional<Grammar> dsl;
    SearchConfig config;
};

// Grammar deriving exactly the negations of `g`'s properties.
Grammar negate_grammar(const Grammar& g);

// Each encoding returns a validated problem.
// spo:  free = params + outputs, hidden = inputs,  query = P ∧ rel, over.
// wlp:  free = params + inputs,  hidden = outputs, query = ¬Q ∧ rel, over on the negated DSL.
// wupo: as spo, under.
// wpp:  free = params + inputs,  hidden = outputs, query = Q ∧ rel, under.
LoudProblem encode_spo(const TransformerSpec& s);
LoudProblem encode_wlp(const TransformerSpec& s);
LoudProblem encode_wupo(const TransformerSpec& s);
LoudProblem encode_wpp(const TransformerSpec& s);
LoudProblem encode(const TransformerSpec& s);

// Whether the problem runs in over-mode by default.
bool transformer_is_over(TransformerKind k);

}  // namespace loud
