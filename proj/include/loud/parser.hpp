#pragma once

#include <string>

#include "loud/ast.hpp"
#include "loud/model.hpp"

namespace loud {

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Parses and validates a problem file. Transformer blocks are encoded into
// the corresponding query problem before validation.
LoudProblem parse_problem(const std::string& text);

// Parses a boolean expression over the free variables of `p` and resolves it.
ExprPtr parse_property(const std::string& text, const LoudProblem& p);

// Parses an expression without resolving names.
ExprPtr parse_expression(const std::string& text);

}  // namespace loud
