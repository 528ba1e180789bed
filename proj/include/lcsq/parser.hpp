#pragma once

#include <stdexcept>
#include <string>

#include "lcsq/ncpoly.hpp"

namespace lcsq {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

// Parses the polynomial grammar
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := integer ['*' factors] | factors
//   factors:= factor ('*' factor)*
//   factor := var ['^' posint]
// over n generators. Variables are x,y,z,w for n <= 4 and x1..xn otherwise;
// juxtaposed factors multiply in written order. Whitespace is insignificant.
NcPoly parse_poly(const std::string& text, int n);

}  // namespace lcsq
