#pragma once

// Generators for the two ML interfaces of a specialization set.
//
// The phantom-types unit (`<Root>.sig` / `<Root>.sml`) exposes, per
// specialization, constructor functions, a destructor and a coercion over a
// single hidden representation. The datatype unit (`<Root>DT.sig` /
// `<Root>DT.sml`) is written purely against the phantom unit and adds one
// unrolling datatype per specialization with inj, prj and map.

#include "dtspec/ml_type.hpp"
#include "dtspec/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dtspec {

struct GeneratedUnit {
  std::string sig_name;    // FMLA
  std::string struct_name; // Fmla
  std::string sig_file;    // Fmla.sig
  std::string struct_file; // Fmla.sml
  std::string sig_text;
  std::string struct_text;
};

struct ValSpec {
  std::string name;
  MlType type;
};

struct TypeAbbrev {
  std::vector<std::string> params;
  std::string name;
  MlType rhs;
};

// Declarations of one substructure of the phantom signature.
struct PhantomSubstructure {
  SpecId spec = kRootSpec;
  std::string name;                 // Lit
  std::vector<ValSpec> constructors; // one per clause, in clause order
  ValSpec dest;
  ValSpec coerce;
};

struct PhantomInterface {
  std::string sig_name;
  std::string struct_name;
  std::vector<std::string> carrier_params; // non-phantom params, phantom last
  std::vector<TypeAbbrev> abstract_types;  // tree preorder
  std::vector<TypeAbbrev> concrete_types;  // declaration order
  std::vector<PhantomSubstructure> substructures;

  const PhantomSubstructure &substructure(const std::string &name) const;
};

PhantomInterface phantom_interface(const SpecSet &set, const Hierarchy &h);
GeneratedUnit gen_phantom(const SpecSet &set, const Hierarchy &h);

// Datatype plan: one unrolling datatype `t'` per specialization, with a type
// variable for every recursive argument position.
struct DtConstructor {
  std::string name;        // primed, e.g. Or'
  std::string source;      // Or
  std::size_t clause = 0;  // index into the spec's clauses
  // Type variable for each argument position; nullopt for non-recursive ones.
  std::vector<std::optional<std::string>> vars;
};

struct DtSpecPlan {
  SpecId spec = kRootSpec;
  std::string substructure; // Dnf
  std::string abbrev;       // DDnf
  std::vector<DtConstructor> constructors;
  std::vector<std::string> vars;     // declaration order
  std::vector<SpecId> var_targets;   // spec referenced at each variable
};

struct DtPlan {
  std::vector<DtSpecPlan> specs; // indexed by SpecId

  const DtSpecPlan &spec(SpecId id) const { return specs.at(id); }
};

// Throws CompileError("codegen error") when priming or variable naming
// collides, which includes specializations that use a constructor in more
// than one clause.
DtPlan plan_datatypes(const SpecSet &set, const Hierarchy &h);

struct DtSubstructure {
  SpecId spec = kRootSpec;
  std::string name;
  ValSpec inj;
  ValSpec prj;
  ValSpec map;
};

struct DatatypeInterface {
  std::string sig_name;    // FMLA_DT
  std::string struct_name; // FmlaDT
  std::vector<DtSubstructure> substructures;

  const DtSubstructure &substructure(const std::string &name) const;
};

DatatypeInterface datatype_interface(const SpecSet &set, const Hierarchy &h,
                                     const DtPlan &plan);
GeneratedUnit gen_dt(const SpecSet &set, const Hierarchy &h,
                     const DtPlan &plan);

// Name helpers shared by both generators.
std::string capitalize(const std::string &s);
std::string abstract_name(const std::string &spec);  // ALit
std::string concrete_name(const std::string &spec);  // CLit
std::string unrolling_name(const std::string &spec); // DLit

} // namespace dtspec
