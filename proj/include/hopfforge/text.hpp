#pragma once

#include <string>
#include <string_view>

#include "hopfforge/free_poly.hpp"
#include "hopfforge/tensor.hpp"

namespace hopfforge {

// Polynomial grammar:
//
//   poly   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*'] factor }
//   factor := atom [ '^' integer ]
//   atom   := integer [ '/' integer ] | identifier | '(' poly ')'
//
// Tensor elements are sums of `term (#) term`. Columns in ParseError are
// 1-based offsets into `text`; the line is always 1.
FreePoly parse_poly(std::string_view text, const AlphabetPtr& alphabet,
                    Field field);
TensorPoly parse_tensor(std::string_view text, const AlphabetPtr& alphabet,
                        Field field);
Scalar parse_scalar(std::string_view text, Field field);

// Leading term first. parse_poly(to_string(p)) == p.
std::string to_string(const FreePoly& p);
std::string to_string(const TensorPoly& t);
std::string to_string(const Tensor3& t);

}  // namespace hopfforge
