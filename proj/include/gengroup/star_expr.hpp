#pragma once

// Tiny expression language over finitely supported sequences:
//   expr    := operand (op operand)*      evaluated left to right
//   op      := '+' | '*' | '⋆'            addition, generalized product
//   operand := '(' expr ')' | literal | i(n) | e(expr) | inv(expr) | f(expr) | g(expr)
//   literal := "{k:v, ...}" | "[v1, v2, ...]"

#include "gengroup/seqgg.hpp"

#include <stdexcept>
#include <string_view>

namespace gengroup {

class ExprError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

FinSeq evaluate_star_expression(std::string_view text);

} // namespace gengroup
