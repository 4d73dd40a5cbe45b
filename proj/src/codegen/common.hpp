#pragma once

#include "dtspec/codegen.hpp"

#include <set>
#include <string>

namespace dtspec::codegen {

inline constexpr const char *kBanner = "(* Generated by dtspec. Do not edit. *)\n";

// Allocates 'a, 'b, ... left to right, skipping the datatype's own type
// parameters. One allocator per value binding.
class FreshVars {
public:
  explicit FreshVars(const std::vector<std::string> &avoid)
      : avoid_(avoid.begin(), avoid.end()) {}

  std::string next();

private:
  std::set<std::string> avoid_;
  int counter_ = 0;
};

class TypeNames {
public:
  TypeNames(const SpecSet &set) : set_(set) {}

  // ('x1, ..., 'var) A<Spec>
  MlType abstract(SpecId s, const std::string &var) const;
  // ('x1, ...) C<Spec>
  MlType concrete(SpecId s) const;
  // Type of a non-recursive argument (base type or type parameter).
  MlType plain(const TypeAtom &atom) const;

  std::vector<MlType> params() const { return tyvar_args(set_.typarams()); }

private:
  const SpecSet &set_;
};

std::string join(const std::vector<std::string> &parts, const std::string &sep);

// "'a", "('a, 'b) " style prefix for a declaration head; empty for none.
std::string params_prefix(const std::vector<std::string> &params);

// "C", "C x1", "C (x1, x2)"
std::string apply_pattern(const std::string &head, std::size_t arity);

// Constructor-function names for a spec: the constructor itself, or
// `Or_1`, `Or_2`, ... when the spec uses a constructor in several clauses.
std::vector<std::string> constructor_function_names(const Specialization &sp);

} // namespace dtspec::codegen
