#pragma once

#include <map>
#include <string>

#include "hopfrep/hopf.hpp"

namespace hopfrep {

struct ParsedPresentation {
    PresentationPtr presentation;
    HopfPtr hopf;  // null when the file has no coalgebra stanzas
};

/// Parse the presentation DSL:
///
///   # comment
///   gen z zbar a abar
///   order z < zbar < a < abar
///   rule a*z -> q^-1 * z*a
///   coproduct a -> a (x) 1 + z (x) a
///   counit a -> 0
///   antipode a -> -1 * zbar*a
///
/// Scalars are rational Laurent expressions in q ("3/2*q^-1 + 1 + q^2").
/// Errors are positioned ParseError values; with `require_confluent` the
/// parsed presentation must pass the local-confluence check.
ParsedPresentation parse_presentation(const std::string& text, bool require_confluent = true,
                                      int overlap_degree = 4);

/// Parse projection stanzas "pi a -> t" mapping generators of H to elements
/// of B.
std::map<int, AlgebraElement> parse_projection(const std::string& text, const HopfPtr& H,
                                               const HopfPtr& B);

/// Parse a standalone element expression over a presentation.
AlgebraElement parse_element(const std::string& text, const PresentationPtr& p);

}  // namespace hopfrep
