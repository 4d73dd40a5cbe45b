#pragma once

// Generic runtime values of a root datatype, used as the semantic oracle for
// specialization membership, enumeration and the formula programs.

#include "dtspec/model.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dtspec {

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct TermArg {
  enum class Kind { BaseLit, TyHole, Sub };

  Kind kind = Kind::TyHole;
  std::string base; // base type name (BaseLit)
  std::string text; // literal text (BaseLit)
  TermPtr sub;

  static TermArg literal(std::string base, std::string text);
  static TermArg hole();
  static TermArg subterm(TermPtr t);
};

class Term {
public:
  Term(std::string constructor, std::vector<TermArg> args);

  const std::string &constructor() const { return constructor_; }
  const std::vector<TermArg> &args() const { return args_; }
  // Maximum constructor nesting; literals and holes contribute nothing.
  int depth() const { return depth_; }

private:
  std::string constructor_;
  std::vector<TermArg> args_;
  int depth_ = 1;
};

TermPtr make_term(std::string constructor, std::vector<TermArg> args = {});

bool operator==(const TermArg &a, const TermArg &b);
bool operator==(const Term &a, const Term &b);
// Structural total order, used for set comparisons in tests.
bool operator<(const Term &a, const Term &b);

struct TermPtrLess {
  bool operator()(const TermPtr &a, const TermPtr &b) const { return *a < *b; }
};

// Fixture syntax: `Or(And(Var("p"), True), False)`. Literals: "text" is a
// string, digits an int, true/false a bool, `?name` the opaque inhabitant of
// base type `name`, `_` the type-parameter hole.
std::string to_text(const Term &t);
std::string to_text(const TermPtr &t);
// Throws std::invalid_argument on malformed fixture text.
TermPtr parse_term(std::string_view text);

// Literal pool used when enumerating a base-type position.
std::vector<TermArg> base_pool(const std::string &base);

// Throws std::invalid_argument if `t` is not a well-formed value of the root
// datatype (unknown constructor, arity or argument-kind mismatch).
void check_well_formed(const SpecSet &set, const Term &t);

// Throws std::invalid_argument for malformed terms or unknown spec names.
bool membership(const SpecSet &set, const Term &t, SpecId s);
bool membership(const SpecSet &set, const Term &t, std::string_view s);

// Every term of depth <= `depth` that belongs to `s`, in clause order and
// then argument-enumeration order (leftmost argument varies slowest).
std::vector<TermPtr> enumerate_terms(const SpecSet &set, SpecId s, int depth);
std::vector<TermPtr> enumerate_terms(const SpecSet &set, std::string_view s,
                                     int depth);

// Upper bound on enumerate_terms(set, s, depth).size(), saturating at
// UINT64_MAX. Exact unless a spec repeats a constructor.
std::uint64_t enumeration_size_bound(const SpecSet &set, SpecId s, int depth);

// Terms of depth <= `depth` grouped by membership profile: profile[s] is
// true iff the terms of the class belong to spec s. Each class carries one
// witness of minimal depth. Membership of C(t1..tn) only depends on the
// profiles of the recursive arguments, so the classes are computed bottom-up
// from witnesses without materializing every term.
struct TermClass {
  std::vector<bool> profile;
  TermPtr witness;
};

std::vector<TermClass> enumerate_classes(const SpecSet &set, int depth);

} // namespace dtspec
