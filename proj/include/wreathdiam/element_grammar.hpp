#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wreathdiam/algebra.hpp"
#include "wreathdiam/wreath.hpp"

// Text syntax for elements of C_q wr C_p:
//
//   element := factor ('*' factor)*
//   factor  := atom ('^' integer)?
//   atom    := 'c' | 'e' digits | 'z' | '1' | '(' element ')'
//            | '(' integer (',' integer)* ')' '@' integer     explicit v c^i
//
// e.g. "e0*c^2", "(1,0,1)@2", "(e0*c)^3". Generator lists are separated by ';'.

namespace wreathdiam {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

WreathElement parse_element(std::string_view text, const GroupParams& params);
std::vector<WreathElement> parse_element_list(std::string_view text, const GroupParams& params);

}  // namespace wreathdiam
