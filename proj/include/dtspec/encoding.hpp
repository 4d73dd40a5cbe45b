#pragma once

// Phantom encodings of specializations: nested single-field records along
// the root-to-spec path of the hierarchy, applied to the carrier type `t`.
//
//   abstract lit  = {fmla: {lit: 'a}} t
//   concrete lit  = {fmla: {lit: unit}} t
//
// A concrete encoding unifies with an abstract one exactly when the first
// specialization is a subtype of the second.

#include "dtspec/model.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dtspec {

class EncodingType {
public:
  enum class Kind { Var, Unit, Record, Carrier };

  static EncodingType var(std::string name);
  static EncodingType unit();
  static EncodingType record(std::string label, EncodingType inner);
  // Non-phantom type parameters first, phantom last.
  static EncodingType carrier(std::vector<std::string> params,
                              EncodingType phantom);

  Kind kind() const { return kind_; }
  // Variable name (Var) or label (Record).
  const std::string &name() const { return name_; }
  const std::vector<std::string> &params() const { return params_; }
  // Record field or carrier phantom argument.
  const EncodingType &inner() const { return *inner_; }

  bool contains_var() const;
  bool occurs(const std::string &var) const;

  friend bool operator==(const EncodingType &a, const EncodingType &b);

private:
  EncodingType(Kind k, std::string name, std::vector<std::string> params,
               std::shared_ptr<const EncodingType> inner)
      : kind_(k), name_(std::move(name)), params_(std::move(params)),
        inner_(std::move(inner)) {}

  Kind kind_;
  std::string name_;
  std::vector<std::string> params_;
  std::shared_ptr<const EncodingType> inner_;
};

// `{fmla: {lit: 'a}} t`, `('a, {list: 'b}) t`, `unit`, `'a`.
std::string render(const EncodingType &e);

using Substitution = std::map<std::string, EncodingType>;

EncodingType substitute(const Substitution &s, const EncodingType &e);

struct UnifyResult {
  enum class Status { Ok, Clash, OccursCheck };

  Status status = Status::Ok;
  Substitution subst; // most general unifier when ok
  std::string reason; // empty when ok

  explicit operator bool() const { return status == Status::Ok; }
};

// First-order unification over encodings. Labels must agree, Unit matches
// Unit, carriers match componentwise with identical non-phantom parameters.
UnifyResult unify(const EncodingType &a, const EncodingType &b);

// Throws std::invalid_argument for unknown names.
EncodingType encode_abstract(const SpecSet &set, const Hierarchy &h, SpecId s,
                             const std::string &leaf = "a");
EncodingType encode_abstract(const SpecSet &set, const Hierarchy &h,
                             std::string_view s, const std::string &leaf = "a");
EncodingType encode_concrete(const SpecSet &set, const Hierarchy &h, SpecId s);
EncodingType encode_concrete(const SpecSet &set, const Hierarchy &h,
                             std::string_view s);

} // namespace dtspec
