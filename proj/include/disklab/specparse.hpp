#pragma once

#include "disklab/functions.hpp"
#include "disklab/weights.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace disklab::specparse {

/// Parse failure with the offending position in the input string.
class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Weight mini-language:
///   const:c=1 | std:gamma=0.5,norm=true | exp:c=1,alpha=1,l=1 | dexp:c=1 |
///   logri:alpha=2 | table:file=PATH  (CSV rows "r,omega")
/// followed by modifiers: ~reg ~tilt(beta) ~dot ~flip ~sigma(gamma,p).
weights::RadialWeight parse_weight(const std::string& spec);

/// Function mini-language:
///   poly:1,0,2 (Taylor coefficients, low degree first; entries may be "a+bi")
///   kernel:lambda=0.9,beta=3
///   momker:a=0.9,weight=<weight-spec>,N=400
///   propA:p=1,q=2,weight=<weight-spec> / propB:...
/// A nested weight spec containing commas must be wrapped in braces:
///   momker:a=0.9,weight={std:gamma=1,norm=true},N=400
using ParsedFunction =
    std::variant<functions::AnalyticFunction, functions::MeasurableTestFunction>;
ParsedFunction parse_function(const std::string& spec);

} // namespace disklab::specparse
