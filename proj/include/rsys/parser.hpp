#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rsys/ratfunc.hpp"

namespace rsys {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := base ('^' signed-integer)?
//   base    := rational-literal | symbol | '(' expr ')'
//   symbol  := [A-Za-z_][A-Za-z0-9_]*
//   rational-literal := integer ('/' positive-integer)?
// Whitespace is insignificant; '#' starts a comment to end of line.
// New symbols are registered in the table as they appear.
RationalFunction parse_expr(std::string_view text, SymbolTable& tab);

} // namespace rsys
