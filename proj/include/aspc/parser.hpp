// Text parser for the rule language. One statement per '.'-terminated rule.
//
//   head :- body.      head.      :- body.      {head} :- body.
//
// Body items are comma separated literals (`not` for negation) and at most
// one aggregate `#count{...} OP guard` / `#sum{...} OP guard` in constraints.
// `%` starts a comment. Parsing validates safety and arity consistency.
#ifndef ASPC_PARSER_HPP
#define ASPC_PARSER_HPP

#include <string>

#include "aspc/ast.hpp"

namespace aspc {

Program parse(const std::string& text);

} // namespace aspc

#endif
