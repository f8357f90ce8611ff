#pragma once

#include <string>
#include <vector>

#include "ringlib/ring.hpp"

namespace rings {

// Parsed ring expression.  The printed form is Ring::name(), which parses
// back to an equal descriptor.
struct RingExpr {
    std::string source;
    RingPtr ring;
};

// Grammar:
//   ring      := product
//   product   := postfix { " x " postfix }
//   postfix   := primary { "[" var "]/(" poly ")" | "[" group "]" }
//   primary   := "Z/" nat | "M" nat "(" ring ")" | "GR(" nat "," nat "," poly ")"
//   group     := "C" nat { "x" "C" nat }
//   poly      := signed terms over a single lowercase variable with "^" powers
RingExpr parse_ring_expr(const std::string& text);

// Element syntax: an integer (meaning n*1), a polynomial / group-ring
// expression in the ring's symbol (the quotient variable, or "g" for a
// one-factor group ring), or "[c0,c1,...]" raw canonical coords.
Element parse_element(const RingPtr& ring, const std::string& text);

// Semicolon-separated generator lists; commas split generators inside one
// list, except within [...] coordinate blocks.
std::vector<std::vector<Element>> parse_chain_spec(const RingPtr& ring,
                                                   const std::string& text);

}  // namespace rings
