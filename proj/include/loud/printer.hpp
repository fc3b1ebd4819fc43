#pragma once

#include <string>

#include "loud/ast.hpp"

namespace loud {

// Plain rendering; used as the canonical sort and dedup key.
std::string to_text(const Expr& e);

// Human rendering: `!p \/ q` is shown as `p => q` when p is an atom or a
// conjunction of atoms and q is a single atom.
std::string pretty(const Expr& e);

}  // namespace loud
