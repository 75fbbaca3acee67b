#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "g2rs/pbw.hpp"

namespace g2rs {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Parses the element grammar and normalizes to canonical PBW form.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := INT | var ('^' INT)? | gen ('^' INT)? | '(' expr ')'
//   gen    := 'e1' | 'e2' | 'k1' | 'k2' | 'X1'..'X6'
//   var    := 'r' | 's' | 'l1' | 'l2' | 'g1' | 'g2'
//
// Powers of e- and X-generators must be nonnegative; k-powers may be any
// integer.  '/' divides by a scalar (X- and k-free) subexpression.
AlgebraElement parse_element(std::string_view text);

// Scalar-only parse; the value must lie in the Laurent ring.
LaurentPoly parse_scalar(std::string_view text);

}  // namespace g2rs
