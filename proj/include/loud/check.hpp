#pragma once

#include "loud/ast.hpp"
#include "loud/model.hpp"

namespace loud {

// Resolves names to slots and functions, computes types, and validates the
// whole problem: domains, functions, query and grammars. Throws
// ValidationError with the offending location.
void resolve_problem(LoudProblem& p);

// Resolves a boolean expression over the free variables of a resolved
// problem (used for properties supplied from outside a grammar).
ExprPtr resolve_property(const LoudProblem& p, const ExprPtr& e);

// Resolves a boolean expression over all variables (free and hidden).
ExprPtr resolve_query_expr(const LoudProblem& p, const ExprPtr& e);

}  // namespace loud
