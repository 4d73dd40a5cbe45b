#include "dtspec/model.hpp"

#include <stdexcept>

namespace dtspec {

std::vector<std::pair<SpecId, SpecId>> Preorder::strict_pairs() const {
  std::vector<std::pair<SpecId, SpecId>> out;
  for (SpecId a = 0; a < n_; ++a)
    for (SpecId b = 0; b < n_; ++b)
      if (a != b && (*this)(a, b))
        out.emplace_back(a, b);
  return out;
}

namespace {

bool clause_simulated(const SpecSet &set, const ConClause &c,
                      const ConClause &d, const Preorder &rel) {
  if (c.constructor != d.constructor)
    return false;
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    const TypeAtom &a = c.args[i];
    const TypeAtom &b = d.args[i];
    if (a.is_recursive()) {
      if (!rel(set.target(a), set.target(b)))
        return false;
    } else if (!(a == b)) {
      return false;
    }
  }
  return true;
}

bool simulates(const SpecSet &set, SpecId lo, SpecId hi, const Preorder &rel) {
  for (const auto &c : set.spec(lo).clauses) {
    bool matched = false;
    for (const auto &d : set.spec(hi).clauses)
      if (clause_simulated(set, c, d, rel)) {
        matched = true;
        break;
      }
    if (!matched)
      return false;
  }
  return true;
}

} // namespace

Preorder refine_simulation(const SpecSet &set, const Preorder &rel) {
  Preorder out = rel;
  for (SpecId a = 0; a < set.size(); ++a)
    for (SpecId b = 0; b < set.size(); ++b)
      if (rel(a, b) && !simulates(set, a, b, rel))
        out.set(a, b, false);
  return out;
}

Preorder compute_subtyping(const SpecSet &set) {
  Preorder rel(set.size(), true);
  for (;;) {
    // Removing pairs in place only speeds convergence; the greatest
    // fixpoint is the same.
    bool changed = false;
    for (SpecId a = 0; a < set.size(); ++a)
      for (SpecId b = 0; b < set.size(); ++b)
        if (rel(a, b) && !simulates(set, a, b, rel)) {
          rel.set(a, b, false);
          changed = true;
        }
    if (!changed)
      return rel;
  }
}

SpecId Hierarchy::id_of(std::string_view name) const {
  for (SpecId i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  throw std::invalid_argument("unknown specialization '" + std::string(name) +
                              "'");
}

std::vector<SpecId> Hierarchy::children(SpecId id) const {
  std::vector<SpecId> out;
  for (SpecId i = 0; i < parent_.size(); ++i)
    if (parent_[i] == id)
      out.push_back(i);
  return out;
}

std::vector<SpecId> Hierarchy::preorder() const {
  std::vector<SpecId> out;
  std::vector<SpecId> stack{kRootSpec};
  while (!stack.empty()) {
    SpecId s = stack.back();
    stack.pop_back();
    out.push_back(s);
    auto kids = children(s);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

Hierarchy build_tree(const SpecSet &set, const Preorder &leq) {
  const std::size_t n = set.size();
  for (SpecId a = 0; a < n; ++a)
    for (SpecId b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a)) {
        throw CompileError("hierarchy error", set.spec(b).pos,
                           "equivalent specializations '" + set.name(a) +
                               "' and '" + set.name(b) +
                               "' (each simulates the other): merge or "
                               "rename them");
      }

  Hierarchy h;
  h.leq_ = leq;
  h.parent_.assign(n, std::nullopt);
  h.path_.assign(n, {});
  for (SpecId s = 0; s < n; ++s)
    h.names_.push_back(set.name(s));

  for (SpecId s = 0; s < n; ++s) {
    if (s == kRootSpec)
      continue;
    std::vector<SpecId> uppers;
    for (SpecId t = 0; t < n; ++t)
      if (t != s && leq(s, t))
        uppers.push_back(t);
    for (std::size_t i = 0; i < uppers.size(); ++i)
      for (std::size_t j = i + 1; j < uppers.size(); ++j) {
        SpecId u = uppers[i], v = uppers[j];
        if (!leq(u, v) && !leq(v, u))
          throw CompileError(
              "hierarchy error", set.spec(s).pos,
              "hierarchy is not a tree: '" + set.name(s) +
                  "' is a subtype of both '" + set.name(u) + "' and '" +
                  set.name(v) + "', which are incomparable");
      }
    // The strict supertypes form a chain; the parent is its least element.
    SpecId least = uppers.front();
    for (SpecId u : uppers)
      if (leq(u, least))
        least = u;
    h.parent_[s] = least;
  }

  for (SpecId s = 0; s < n; ++s) {
    std::vector<SpecId> rev;
    for (std::optional<SpecId> cur = s; cur; cur = h.parent_[*cur])
      rev.push_back(*cur);
    h.path_[s].assign(rev.rbegin(), rev.rend());
  }
  return h;
}

SpecId lub(const Hierarchy &h, SpecId a, SpecId b) {
  const auto &pa = h.path(a);
  const auto &pb = h.path(b);
  SpecId common = kRootSpec;
  for (std::size_t i = 0; i < pa.size() && i < pb.size() && pa[i] == pb[i]; ++i)
    common = pa[i];
  return common;
}

std::string lub(const Hierarchy &h, std::string_view a, std::string_view b) {
  return h.name(lub(h, h.id_of(a), h.id_of(b)));
}

std::vector<bool> check_inhabited(const SpecSet &set) {
  std::vector<bool> inhabited(set.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (SpecId s = 0; s < set.size(); ++s) {
      if (inhabited[s])
        continue;
      for (const auto &c : set.spec(s).clauses) {
        bool ok = true;
        for (const auto &a : c.args)
          if (a.is_recursive() && !inhabited[set.target(a)])
            ok = false;
        if (ok) {
          inhabited[s] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return inhabited;
}

std::string hierarchy_dot(const SpecSet &set, const Hierarchy &h) {
  std::string out = "digraph \"" + set.root_name() + "\" {\n";
  out += "  \"" + set.root_name() + "\" [label=\"" + set.root_name() +
         " (root)\", shape=box];\n";
  for (SpecId s = 0; s < set.size(); ++s)
    if (auto p = h.parent(s))
      out += "  \"" + set.name(s) + "\" -> \"" + set.name(*p) + "\";\n";
  out += "}\n";
  return out;
}

Analysis analyze(const DeclGroup &group) {
  SpecSet set = validate(group);
  Preorder leq = compute_subtyping(set);
  Hierarchy h = build_tree(set, leq);
  return {std::move(set), std::move(h)};
}

} // namespace dtspec
