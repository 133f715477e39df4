#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "pocfrob/classifier.hpp"

namespace pocfrob {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

using ParsedSpec = std::variant<FrobeniusSpec, ComplementSpec>;

/// Grammar (whitespace-insensitive):
///   spec       := frobenius | complement
///   frobenius  := kernel ":" complement
///   kernel     := "H(" p "," k "," r ")"
///   complement := "C" n | "Q" 2^n "xC" m | "M(" a "," b "," g ")"
///               | "SL(2,3)" | "SL(2,5)"
/// Throws ParseError on malformed text, std::domain_error on invariant
/// violations.
ParsedSpec parse_spec(std::string_view text);

/// Canonical renderings (no whitespace): "H(11,1,2):SL(2,5)".
std::string render_spec(const FrobeniusSpec& s);
std::string render_spec(const ComplementSpec& c);

}  // namespace pocfrob
