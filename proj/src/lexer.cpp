#include "lexer.hpp"

#include <cctype>

namespace aspectke::detail {

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Bang: return "'!'";
    case Tok::Wild: return "'_'";
    case Tok::ColonColon: return "'::'";
    case Tok::Colon: return "':'";
    case Tok::At: return "'@'";
    case Tok::Dot: return "'.'";
    case Tok::Bar: return "'|'";
    case Tok::BarBar: return "'||'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Eq: return "'='";
    case Tok::Semi: return "';'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Amp: return "'&'";
    case Tok::Wedge: return "'/\\'";
    case Tok::Vee: return "'\\/'";
    case Tok::Tilde: return "'~'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return ident_start(c) || c == '_' || c == '$'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto emit = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, col});
    advance(len);
  };
  while (i < text.size()) {
    char c = text[i];
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && next == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    if (c == '_' && !ident_char(next)) {
      emit(Tok::Wild, 1);
      continue;
    }
    switch (c) {
      case ':': emit(next == ':' ? Tok::ColonColon : Tok::Colon, next == ':' ? 2 : 1); continue;
      case '|': emit(next == '|' ? Tok::BarBar : Tok::Bar, next == '|' ? 2 : 1); continue;
      case '/':
        if (next == '\\') { emit(Tok::Wedge, 2); continue; }
        break;
      case '\\':
        if (next == '/') { emit(Tok::Vee, 2); continue; }
        break;
      case '!': emit(Tok::Bang, 1); continue;
      case '@': emit(Tok::At, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case '+': emit(Tok::Plus, 1); continue;
      case '*': emit(Tok::Star, 1); continue;
      case '<': emit(Tok::Lt, 1); continue;
      case '>': emit(Tok::Gt, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '[': emit(Tok::LBracket, 1); continue;
      case ']': emit(Tok::RBracket, 1); continue;
      case '=': emit(Tok::Eq, 1); continue;
      case ';': emit(Tok::Semi, 1); continue;
      case '{': emit(Tok::LBrace, 1); continue;
      case '}': emit(Tok::RBrace, 1); continue;
      case '&': emit(Tok::Amp, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      default: break;
    }
    throw ParseError({file, line, col}, {"token"}, "'" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

}  // namespace aspectke::detail
