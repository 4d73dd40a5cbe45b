#pragma once

// Declaration model for `datatype ... withspec ...` groups, plus the parser
// and pretty-printer for the surface syntax.
//
//   group    ::= "datatype" binder "=" clauses ("withspec" specbind ("and" specbind)*)?
//   specbind ::= binder "=" clauses
//   binder   ::= tvars? ident
//   tvars    ::= tyvar | "(" tyvar ("," tyvar)* ")"
//   clauses  ::= clause ("|" clause)*
//   clause   ::= Con ("of" atom ("*" atom)*)?
//   atom     ::= tyvar | ident | tvars-applied ident
//
// Comments are `(* ... *)` and do not nest.

#include "dtspec/diagnostics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dtspec {

enum class AtomKind {
  TyVar,
  // A lowercase name straight out of the parser. The model resolves it to
  // Base or RecRef once all specialization names are known.
  Unresolved,
  Base,
  RecRef,
};

struct TypeAtom {
  AtomKind kind = AtomKind::Base;
  // Type variable name without the apostrophe, base type name, or the
  // referenced datatype/specialization name.
  std::string name;
  // Type variables the name is applied to, e.g. ["a"] for `'a list`.
  std::vector<std::string> applied;
  SourcePos pos;

  static TypeAtom tyvar(std::string name, SourcePos pos = {});
  static TypeAtom unresolved(std::string name, std::vector<std::string> applied,
                             SourcePos pos = {});
  static TypeAtom base(std::string name, std::vector<std::string> applied = {},
                       SourcePos pos = {});
  static TypeAtom rec_ref(std::string target, std::vector<std::string> applied,
                          SourcePos pos = {});

  bool is_recursive() const { return kind == AtomKind::RecRef; }
};

// Positions are not part of equality.
bool operator==(const TypeAtom &a, const TypeAtom &b);

struct ConClause {
  std::string constructor;
  std::vector<TypeAtom> args; // empty for nullary constructors
  SourcePos pos;
};

bool operator==(const ConClause &a, const ConClause &b);

struct DatatypeDecl {
  std::string name;
  std::vector<std::string> typarams;
  std::vector<ConClause> clauses;
  SourcePos pos;
};

bool operator==(const DatatypeDecl &a, const DatatypeDecl &b);

struct SpecDecl {
  std::string name;
  std::vector<std::string> typarams;
  std::vector<ConClause> clauses;
  SourcePos pos;
};

bool operator==(const SpecDecl &a, const SpecDecl &b);

struct DeclGroup {
  DatatypeDecl datatype;
  std::vector<SpecDecl> specs;
};

bool operator==(const DeclGroup &a, const DeclGroup &b);

// Throws CompileError ("lexical error" / "syntax error" / "declaration
// error") carrying the source position of the offending token.
DeclGroup parse_declarations(std::string_view source);

std::string pretty_print(const DeclGroup &group);

// Surface rendering of a single atom, e.g. `'a list` or `string`.
std::string render_atom(const TypeAtom &atom);

} // namespace dtspec
