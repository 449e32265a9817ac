#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aspectke/diagnostics.hpp"

namespace aspectke::detail {

enum class Tok {
  Ident, Bang, Wild, ColonColon, Colon, At, Dot, Bar, BarBar, Plus, Star,
  Lt, Gt, Comma, LParen, RParen, LBracket, RBracket, Eq, Semi, LBrace, RBrace,
  Amp, Wedge, Vee, Tilde, End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(Tok kind);

// Throws ParseError on a character that starts no token.
std::vector<Token> tokenize(std::string_view text, const std::string& file);

}  // namespace aspectke::detail
