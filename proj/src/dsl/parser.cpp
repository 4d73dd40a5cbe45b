#include "dtspec/dsl.hpp"

#include "lexer.hpp"

#include <initializer_list>
#include <set>

namespace dtspec {

using dsl::Tok;
using dsl::Token;

namespace {

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  DeclGroup parse_group() {
    DeclGroup group;
    expect(Tok::KwDatatype);
    auto [params, name, name_pos] = parse_binder();
    group.datatype.pos = name_pos;
    group.datatype.typarams = std::move(params);
    group.datatype.name = std::move(name);
    expect(Tok::Equals);
    group.datatype.clauses = parse_clauses();
    check_root_constructors(group.datatype);

    if (accept(Tok::KwWithspec)) {
      group.specs.push_back(parse_specbind());
      while (accept(Tok::KwAnd))
        group.specs.push_back(parse_specbind());
      if (!at(Tok::End))
        fail({Tok::Star, Tok::Bar, Tok::KwAnd, Tok::End});
    } else if (!at(Tok::End)) {
      fail({Tok::Star, Tok::Bar, Tok::KwWithspec, Tok::End});
    }
    return group;
  }

private:
  struct Binder {
    std::vector<std::string> params;
    std::string name;
    SourcePos pos;
  };

  const Token &peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok k) const { return peek().kind == k; }

  const Token &next() {
    const Token &t = peek();
    if (pos_ < toks_.size() - 1)
      ++pos_;
    return t;
  }

  bool accept(Tok k) {
    if (!at(k))
      return false;
    next();
    return true;
  }

  const Token &expect(Tok k) {
    if (!at(k))
      fail({k});
    return next();
  }

  [[noreturn]] void fail(std::initializer_list<Tok> expected,
                         const std::string &note = "") const {
    std::string msg = expected.size() == 1 ? "expected " : "expected one of ";
    bool first = true;
    for (Tok k : expected) {
      if (!first)
        msg += ", ";
      msg += dsl::describe(k);
      first = false;
    }
    const Token &t = peek();
    msg += " but found ";
    if (t.kind == Tok::End)
      msg += "end of input";
    else if (t.kind == Tok::TyVar)
      msg += "'" + t.text;
    else
      msg += "'" + t.text + "'";
    if (!note.empty())
      msg += " (" + note + ")";
    throw CompileError("syntax error", t.pos, msg);
  }

  std::vector<std::string> parse_tyvar_tuple() {
    // '(' already consumed
    std::vector<std::string> vars;
    if (!at(Tok::TyVar))
      fail({Tok::TyVar}, "nested products and parenthesized types are not "
                         "supported");
    vars.push_back(next().text);
    while (accept(Tok::Comma)) {
      if (!at(Tok::TyVar))
        fail({Tok::TyVar});
      vars.push_back(next().text);
    }
    if (!at(Tok::RParen))
      fail({Tok::Comma, Tok::RParen});
    next();
    return vars;
  }

  Binder parse_binder() {
    Binder b;
    if (at(Tok::TyVar)) {
      b.params.push_back(next().text);
    } else if (accept(Tok::LParen)) {
      b.params = parse_tyvar_tuple();
    }
    if (!at(Tok::Ident)) {
      if (b.params.empty())
        fail({Tok::TyVar, Tok::LParen, Tok::Ident});
      fail({Tok::Ident});
    }
    const Token &id = next();
    b.name = id.text;
    b.pos = id.pos;
    std::set<std::string> seen;
    for (const auto &p : b.params)
      if (!seen.insert(p).second)
        throw CompileError("declaration error", b.pos,
                           "type variable '" + p + " bound twice in '" +
                               b.name + "'");
    return b;
  }

  SpecDecl parse_specbind() {
    SpecDecl spec;
    auto [params, name, name_pos] = parse_binder();
    spec.typarams = std::move(params);
    spec.name = std::move(name);
    spec.pos = name_pos;
    expect(Tok::Equals);
    spec.clauses = parse_clauses();
    for (std::size_t i = 0; i < spec.clauses.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (spec.clauses[i] == spec.clauses[j])
          throw CompileError("declaration error", spec.clauses[i].pos,
                             "duplicate clause for constructor '" +
                                 spec.clauses[i].constructor +
                                 "' in specialization '" + spec.name + "'");
    return spec;
  }

  std::vector<ConClause> parse_clauses() {
    std::vector<ConClause> clauses;
    clauses.push_back(parse_clause());
    while (accept(Tok::Bar))
      clauses.push_back(parse_clause());
    return clauses;
  }

  ConClause parse_clause() {
    if (!at(Tok::ConName))
      fail({Tok::ConName});
    const Token &con = next();
    ConClause clause;
    clause.constructor = con.text;
    clause.pos = con.pos;
    if (accept(Tok::KwOf)) {
      clause.args.push_back(parse_atom());
      while (accept(Tok::Star))
        clause.args.push_back(parse_atom());
    }
    return clause;
  }

  TypeAtom parse_atom() {
    SourcePos start = peek().pos;
    if (at(Tok::TyVar)) {
      std::string var = next().text;
      if (at(Tok::Ident))
        return TypeAtom::unresolved(next().text, {var}, start);
      return TypeAtom::tyvar(var, start);
    }
    if (accept(Tok::LParen)) {
      auto vars = parse_tyvar_tuple();
      if (!at(Tok::Ident))
        fail({Tok::Ident});
      return TypeAtom::unresolved(next().text, std::move(vars), start);
    }
    if (at(Tok::Ident))
      return TypeAtom::unresolved(next().text, {}, start);
    fail({Tok::TyVar, Tok::Ident, Tok::LParen});
  }

  static void check_root_constructors(const DatatypeDecl &decl) {
    std::set<std::string> seen;
    for (const auto &c : decl.clauses)
      if (!seen.insert(c.constructor).second)
        throw CompileError("declaration error", c.pos,
                           "duplicate constructor '" + c.constructor +
                               "' in datatype '" + decl.name + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

DeclGroup parse_declarations(std::string_view source) {
  Parser p(dsl::tokenize(source));
  return p.parse_group();
}

} // namespace dtspec
