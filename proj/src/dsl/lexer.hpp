#pragma once

#include "dtspec/diagnostics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dtspec::dsl {

enum class Tok {
  KwDatatype,
  KwWithspec,
  KwAnd,
  KwOf,
  Equals,
  Bar,
  Star,
  LParen,
  RParen,
  Comma,
  TyVar,   // 'a (text holds "a")
  Ident,   // lowercase identifier
  ConName, // uppercase identifier
  End,
};

const char *describe(Tok kind);

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

// Tokenizes the whole input up front. Throws CompileError("lexical error").
std::vector<Token> tokenize(std::string_view source);

} // namespace dtspec::dsl
