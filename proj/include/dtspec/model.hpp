#pragma once

// Validated specialization sets and the subtyping hierarchy they induce.

#include "dtspec/dsl.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtspec {

using SpecId = std::size_t;

// The root datatype is always registered first, as the degenerate
// specialization containing every constructor.
inline constexpr SpecId kRootSpec = 0;

struct Specialization {
  std::string name;
  // Atoms are resolved: only TyVar, Base and RecRef appear.
  std::vector<ConClause> clauses;
  SourcePos pos;
};

class SpecSet {
public:
  const DatatypeDecl &root() const { return root_; }
  const std::string &root_name() const { return root_.name; }
  const std::vector<std::string> &typarams() const { return root_.typarams; }

  std::size_t size() const { return specs_.size(); }
  const std::vector<Specialization> &specs() const { return specs_; }
  const Specialization &spec(SpecId id) const { return specs_.at(id); }
  const std::string &name(SpecId id) const { return specs_.at(id).name; }

  std::optional<SpecId> find(std::string_view name) const;
  // Throws std::invalid_argument for names outside the set.
  SpecId id_of(std::string_view name) const;
  // Target of a RecRef atom.
  SpecId target(const TypeAtom &atom) const { return id_of(atom.name); }

  // Index of `constructor` among the root's clauses, if it is one.
  std::optional<std::size_t> root_clause_index(std::string_view constructor) const;

private:
  friend SpecSet validate(const DeclGroup &group);

  DatatypeDecl root_;
  std::vector<Specialization> specs_;
};

// Resolves names and checks every clause against the root datatype.
// Throws CompileError("validation error") positioned at the offending atom,
// clause or declaration.
SpecSet validate(const DeclGroup &group);

// Dense boolean relation over spec ids.
class Preorder {
public:
  Preorder() = default;
  Preorder(std::size_t n, bool init) : n_(n), bits_(n * n, init) {}

  std::size_t size() const { return n_; }
  bool operator()(SpecId a, SpecId b) const { return bits_[a * n_ + b] != 0; }
  void set(SpecId a, SpecId b, bool v) { bits_[a * n_ + b] = v; }

  // Pairs (a, b) with a <= b and a != b, ordered by (a, b).
  std::vector<std::pair<SpecId, SpecId>> strict_pairs() const;

  friend bool operator==(const Preorder &, const Preorder &) = default;

private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

// One refinement step of the simulation check: keeps (a, b) iff every clause
// of `a` is matched by a clause of `b` whose recursive positions are related
// by `rel` and whose other positions are identical.
Preorder refine_simulation(const SpecSet &set, const Preorder &rel);

// Greatest fixpoint of refine_simulation, starting from the full relation.
Preorder compute_subtyping(const SpecSet &set);

class Hierarchy {
public:
  const Preorder &leq() const { return leq_; }
  bool leq(SpecId a, SpecId b) const { return leq_(a, b); }

  std::size_t size() const { return names_.size(); }
  const std::string &name(SpecId id) const { return names_.at(id); }
  SpecId id_of(std::string_view name) const;

  std::optional<SpecId> parent(SpecId id) const { return parent_.at(id); }
  // Root-to-spec sequence, e.g. [fmla, lit, atom].
  const std::vector<SpecId> &path(SpecId id) const { return path_.at(id); }
  // Children in declaration order.
  std::vector<SpecId> children(SpecId id) const;
  // Depth-first, parents before children, siblings in declaration order.
  std::vector<SpecId> preorder() const;

private:
  friend Hierarchy build_tree(const SpecSet &set, const Preorder &leq);

  Preorder leq_;
  std::vector<std::string> names_;
  std::vector<std::optional<SpecId>> parent_;
  std::vector<std::vector<SpecId>> path_;
};

// Throws CompileError("hierarchy error") when two distinct specializations
// simulate each other, or when some specialization has incomparable strict
// supertypes.
Hierarchy build_tree(const SpecSet &set, const Preorder &leq);

// Lowest common ancestor in the tree.
SpecId lub(const Hierarchy &h, SpecId a, SpecId b);
std::string lub(const Hierarchy &h, std::string_view a, std::string_view b);

// Least fixpoint: a spec is inhabited iff some clause has every recursive
// argument inhabited. Indexed by SpecId.
std::vector<bool> check_inhabited(const SpecSet &set);

// DOT digraph, edges child -> parent.
std::string hierarchy_dot(const SpecSet &set, const Hierarchy &h);

struct Analysis {
  SpecSet set;
  Hierarchy hierarchy;
};

// validate + compute_subtyping + build_tree.
Analysis analyze(const DeclGroup &group);

} // namespace dtspec
