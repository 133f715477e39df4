#include "pocfrob/spec_text.hpp"

#include <cctype>
#include <limits>

namespace pocfrob {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    std::size_t p = pos_;
    for (char c : token) {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      if (p >= text_.size() || text_[p] != c) return false;
      ++p;
    }
    pos_ = p;
    return true;
  }

  void expect(std::string_view token) {
    if (!try_consume(token))
      throw ParseError(pos_, "expected '" + std::string(token) + "'");
  }

  u64 number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected a number");
    u64 v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const u64 digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<u64>::max() - digit) / 10)
        throw ParseError(pos_, "number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ComplementSpec parse_complement(Lexer& lex) {
  if (lex.try_consume("SL(2,3)")) return ComplementSpec::sl2_3();
  if (lex.try_consume("SL(2,5)")) return ComplementSpec::sl2_5();
  if (lex.try_consume("M(")) {
    const u64 a = lex.number();
    lex.expect(",");
    const u64 b = lex.number();
    lex.expect(",");
    const u64 g = lex.number();
    lex.expect(")");
    ComplementSpec c = ComplementSpec::metacyclic(a, b, g);
    validate(c);
    return c;
  }
  if (lex.try_consume("Q")) {
    const std::size_t at = lex.pos();
    const u64 q = lex.number();
    if (q < 8 || (q & (q - 1)) != 0)
      throw std::domain_error("quaternion order must be a power of two >= 8 (position " +
                              std::to_string(at) + ")");
    u64 n = 0, t = q;
    while (t > 1) {
      t >>= 1;
      ++n;
    }
    lex.expect("xC");
    const u64 m = lex.number();
    ComplementSpec c = ComplementSpec::quat_cyclic(n, m);
    validate(c);
    return c;
  }
  if (lex.try_consume("C")) {
    const u64 n = lex.number();
    ComplementSpec c = ComplementSpec::cyclic(n);
    validate(c);
    return c;
  }
  throw ParseError(lex.pos(), "expected a complement (Cn, Q2^nxCm, M(a,b,g), SL(2,3), SL(2,5))");
}

}  // namespace

ParsedSpec parse_spec(std::string_view text) {
  Lexer lex(text);
  if (lex.try_consume("H(")) {
    const u64 p = lex.number();
    lex.expect(",");
    const u64 k = lex.number();
    lex.expect(",");
    const u64 r = lex.number();
    lex.expect(")");
    lex.expect(":");
    FrobeniusSpec s;
    s.kernel = HomocyclicKernel{p, static_cast<u32>(k), static_cast<u32>(r)};
    if (k > 62 || r > 16) throw std::domain_error("kernel parameters out of range");
    s.complement = parse_complement(lex);
    if (!lex.at_end()) throw ParseError(lex.pos(), "trailing input");
    validate(s);
    return s;
  }
  ComplementSpec c = parse_complement(lex);
  if (!lex.at_end()) throw ParseError(lex.pos(), "trailing input");
  return c;
}

std::string render_spec(const FrobeniusSpec& s) {
  return "H(" + std::to_string(s.kernel.p) + "," + std::to_string(s.kernel.k) + "," +
         std::to_string(s.kernel.r) + "):" + s.complement.text();
}

std::string render_spec(const ComplementSpec& c) { return c.text(); }

}  // namespace pocfrob
