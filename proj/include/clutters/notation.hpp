#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "clutters/clutter.hpp"

namespace clutters {

/// Parse failure with the byte offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Two circuits where one contains the other.
struct AntichainError : std::runtime_error {
  AntichainError(std::string smaller, std::string larger)
      : std::runtime_error("antichain violation: circuit \"" + smaller +
                           "\" is contained in \"" + larger + "\""),
        smaller(std::move(smaller)),
        larger(std::move(larger)) {}
  std::string smaller;
  std::string larger;
};

/// Parses either notation:
///   compact:  "12, 13, 145"         one character per vertex, labels 1-9;
///   extended: "{1 2 13}, {4 5}"     brace-wrapped integer labels.
/// "{}" denotes the empty circuit; an all-whitespace text denotes the
/// clutter with no circuits.  Ground set = the distinct labels present, in
/// increasing numeric order.
std::pair<Clutter, LabeledGround> parse_clutter(const std::string& text);

/// Formats with the given labels: compact when every label is a single
/// character in 1-9, extended otherwise.  Circuits are ordered by their
/// label sequences, so the output reparses to the same clutter.
std::string format_clutter(const Clutter& c, const LabeledGround& labels);
std::string format_clutter(const Clutter& c);

std::string format_face(BitFace f, const LabeledGround& labels);
std::string format_face(BitFace f);

/// Facet list of a complex in the same notation.
std::string format_facets(const SimplicialComplex& d);

}  // namespace clutters
