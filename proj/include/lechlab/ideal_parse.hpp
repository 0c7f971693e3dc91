#ifndef LECHLAB_IDEAL_PARSE_HPP
#define LECHLAB_IDEAL_PARSE_HPP

#include "lechlab/monomial_ideal.hpp"

#include <optional>
#include <string>

namespace lech {

/// Parse error for ideal literals; distinct from DomainError so the CLI can
/// map it to a usage exit code.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses the JSON ideal literal {"dim": d, "gens": [[e11,...,e1d], ...]}.
MonomialIdeal parseIdealJson(const std::string& text);

/// Parses comma-separated monomials like "x^3, y^4, z^5, x*y*z" with variables
/// drawn from (x,y,z,w,v,u) in order, or "m"/"m^n" (needs dimHint).
/// Without dimHint the dimension is the highest variable mentioned.
MonomialIdeal parseIdealText(const std::string& text, std::optional<int> dimHint = std::nullopt);

}  // namespace lech

#endif
