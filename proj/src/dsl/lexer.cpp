#include "lexer.hpp"

#include <cstdio>

namespace dtspec::dsl {

const char *describe(Tok kind) {
  switch (kind) {
  case Tok::KwDatatype:
    return "'datatype'";
  case Tok::KwWithspec:
    return "'withspec'";
  case Tok::KwAnd:
    return "'and'";
  case Tok::KwOf:
    return "'of'";
  case Tok::Equals:
    return "'='";
  case Tok::Bar:
    return "'|'";
  case Tok::Star:
    return "'*'";
  case Tok::LParen:
    return "'('";
  case Tok::RParen:
    return "')'";
  case Tok::Comma:
    return "','";
  case Tok::TyVar:
    return "type variable";
  case Tok::Ident:
    return "identifier";
  case Tok::ConName:
    return "constructor name";
  case Tok::End:
    return "end of input";
  }
  return "token";
}

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_char(char c) {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

std::string printable(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f)
    return std::string("'") + c + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02X", u);
  return buf;
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      SourcePos start = here();
      if (at_end()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      char c = src_[i_];
      if (c == '\'') {
        advance();
        std::string name = take_ident_tail();
        if (name.empty() || !is_alpha(name.front()))
          throw CompileError("lexical error", start,
                             "expected a type variable name after '''");
        out.push_back({Tok::TyVar, std::move(name), start});
        continue;
      }
      if (is_alpha(c)) {
        std::string word = take_ident_tail();
        out.push_back({classify(word), word, start});
        continue;
      }
      Tok punct;
      switch (c) {
      case '=':
        punct = Tok::Equals;
        break;
      case '|':
        punct = Tok::Bar;
        break;
      case '*':
        punct = Tok::Star;
        break;
      case '(':
        punct = Tok::LParen;
        break;
      case ')':
        punct = Tok::RParen;
        break;
      case ',':
        punct = Tok::Comma;
        break;
      default:
        throw CompileError("lexical error", start,
                           "unexpected character " + printable(c));
      }
      advance();
      out.push_back({punct, std::string(1, c), start});
    }
  }

private:
  static Tok classify(const std::string &word) {
    if (word == "datatype")
      return Tok::KwDatatype;
    if (word == "withspec")
      return Tok::KwWithspec;
    if (word == "and")
      return Tok::KwAnd;
    if (word == "of")
      return Tok::KwOf;
    if (word.front() >= 'A' && word.front() <= 'Z')
      return Tok::ConName;
    return Tok::Ident;
  }

  bool at_end() const { return i_ >= src_.size(); }
  SourcePos here() const { return {line_, col_}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string take_ident_tail() {
    std::string s;
    while (!at_end() && is_ident_char(src_[i_])) {
      s += src_[i_];
      advance();
    }
    return s;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '(' && i_ + 1 < src_.size() && src_[i_ + 1] == '*') {
        SourcePos open = here();
        advance();
        advance();
        for (;;) {
          if (at_end())
            throw CompileError("lexical error", open, "unterminated comment");
          if (src_[i_] == '*' && i_ + 1 < src_.size() && src_[i_ + 1] == ')') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

} // namespace dtspec::dsl
