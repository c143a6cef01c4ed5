#pragma once

#include <string>

#include "jetvar/jetpoly.hpp"

namespace jetvar {

// expr := term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := atom ('^' nat)?
// atom := rational | var | '(' expr ')' | '-' atom
// var := 'x' nat | 'y' nat ('_' '[' digit+ ']')?
// Also accepted: 't' for x1 and 'q<s>_<k>' / 'q<s>' when n = 1; in velocity
// families 'x' nat takes the optional '_[..]' suffix.
FieldPoly parsePoly(const std::string& text, const VariableFamily& fam);

}  // namespace jetvar
